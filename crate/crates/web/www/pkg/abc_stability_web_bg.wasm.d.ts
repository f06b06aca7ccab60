/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_hilllevels_free: (a: number, b: number) => void;
export const __wbg_indexcurve_free: (a: number, b: number) => void;
export const __wbg_waveprofile_free: (a: number, b: number) => void;
export const hill_levels: (a: number, b: number, c: number) => [number, number, number];
export const hilllevels_essential_edge: (a: number) => number;
export const hilllevels_levels: (a: number) => [number, number];
export const hilllevels_negative_count: (a: number) => number;
export const index_curve: (a: number, b: number, c: number) => [number, number, number];
export const indexcurve_index_3i: (a: number) => [number, number];
export const indexcurve_lower: (a: number) => [number, number];
export const indexcurve_sign_change: (a: number) => number;
export const indexcurve_upper: (a: number) => [number, number];
export const indexcurve_z: (a: number) => [number, number];
export const wave_profile: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const waveprofile_amplitude_ratio: (a: number) => number;
export const waveprofile_lambda: (a: number) => number;
export const waveprofile_phi: (a: number) => [number, number];
export const waveprofile_psi: (a: number) => [number, number];
export const waveprofile_residual: (a: number) => number;
export const waveprofile_subsonic: (a: number) => number;
export const waveprofile_w: (a: number) => number;
export const waveprofile_x: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
