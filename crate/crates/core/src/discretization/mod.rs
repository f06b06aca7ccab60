//! Periodic Fourier collocation: grids, spectral differentiation and dense
//! operator assembly.

mod assemble;
mod grid;
mod operator;

pub use assemble::{
    assemble_j, assemble_jl, assemble_rotated_m, assemble_scalar_operator, assemble_system_operator_l,
    assemble_tilde_l, smoother_power, spectral_derivative, stack, standing_profile, ScalarOperatorKind,
};
pub use grid::{build_grid, inner_product, Grid};
pub use operator::{BlockStructure, DiscreteOperator, SymmetryTag, SYMMETRY_TOL};
