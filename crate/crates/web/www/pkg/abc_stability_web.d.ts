/* tslint:disable */
/* eslint-disable */

export class HillLevels {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    levels(): Float64Array;
    readonly essential_edge: number;
    readonly negative_count: number;
}

/**
 * `3I` together with its two bounds, all divided by `sqrt(-a)`.
 */
export class IndexCurve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    index_3i(): Float64Array;
    lower(): Float64Array;
    upper(): Float64Array;
    z(): Float64Array;
    /**
     * First sampled sign change of the index, or NaN.
     */
    readonly sign_change: number;
}

export class WaveProfile {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    phi(): Float64Array;
    psi(): Float64Array;
    x(): Float64Array;
    readonly amplitude_ratio: number;
    readonly lambda: number;
    /**
     * Larger of the two sup-norm equation residuals.
     */
    readonly residual: number;
    readonly subsonic: boolean;
    readonly w: number;
}

export function hill_levels(alpha: number, lam: number, q: number): HillLevels;

export function index_curve(z_min: number, z_max: number, points: number): IndexCurve;

/**
 * Sampled wave on `N` points of the shortest admissible domain.
 */
export function wave_profile(a: number, b: number, c: number, eta0: number, plus: boolean, n: number): WaveProfile;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_hilllevels_free: (a: number, b: number) => void;
    readonly __wbg_indexcurve_free: (a: number, b: number) => void;
    readonly __wbg_waveprofile_free: (a: number, b: number) => void;
    readonly hill_levels: (a: number, b: number, c: number) => [number, number, number];
    readonly hilllevels_essential_edge: (a: number) => number;
    readonly hilllevels_levels: (a: number) => [number, number];
    readonly hilllevels_negative_count: (a: number) => number;
    readonly index_curve: (a: number, b: number, c: number) => [number, number, number];
    readonly indexcurve_index_3i: (a: number) => [number, number];
    readonly indexcurve_lower: (a: number) => [number, number];
    readonly indexcurve_sign_change: (a: number) => number;
    readonly indexcurve_upper: (a: number) => [number, number];
    readonly indexcurve_z: (a: number) => [number, number];
    readonly wave_profile: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly waveprofile_amplitude_ratio: (a: number) => number;
    readonly waveprofile_lambda: (a: number) => number;
    readonly waveprofile_phi: (a: number) => [number, number];
    readonly waveprofile_psi: (a: number) => [number, number];
    readonly waveprofile_residual: (a: number) => number;
    readonly waveprofile_subsonic: (a: number) => number;
    readonly waveprofile_w: (a: number) => number;
    readonly waveprofile_x: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
