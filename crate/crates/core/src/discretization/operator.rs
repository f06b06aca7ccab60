use faer::{Mat, Side};
use rustfft::num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, StabilityError};

/// Entries of operators tagged `Symmetric` must agree with their transpose
/// to this level.
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryTag {
    Symmetric,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockStructure {
    Scalar,
    TwoComponent,
}

/// Dense real operator matrix with symmetry metadata.
#[derive(Debug, Clone)]
pub struct DiscreteOperator {
    pub entries: Mat<f64>,
    pub symmetry_tag: SymmetryTag,
    pub block_structure: BlockStructure,
}

impl DiscreteOperator {
    pub fn new(entries: Mat<f64>, symmetry_tag: SymmetryTag, block_structure: BlockStructure) -> Self {
        debug_assert_eq!(entries.nrows(), entries.ncols());
        let mut op = DiscreteOperator {
            entries,
            symmetry_tag,
            block_structure,
        };
        if symmetry_tag == SymmetryTag::Symmetric {
            op.symmetrize();
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        if v.len() != n {
            return Err(StabilityError::LengthMismatch { left: v.len(), right: n });
        }
        let m = &self.entries;
        Ok((0..n)
            .map(|i| (0..n).map(|j| m[(i, j)] * v[j]).sum())
            .collect())
    }

    /// `max |A_ij - A_ji|`.
    pub fn symmetry_defect(&self) -> f64 {
        let m = &self.entries;
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
            }
        }
        worst
    }

    /// `max |A_ij + A_ji|`, zero for antisymmetric matrices.
    pub fn antisymmetry_defect(&self) -> f64 {
        let m = &self.entries;
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((m[(i, j)] + m[(j, i)]).abs());
            }
        }
        worst
    }

    /// Largest absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        let m = &self.entries;
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| m[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    fn symmetrize(&mut self) {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (self.entries[(i, j)] + self.entries[(j, i)]);
                self.entries[(i, j)] = avg;
                self.entries[(j, i)] = avg;
            }
        }
    }

    /// Ascending eigenvalues of a symmetric operator.
    pub fn symmetric_eigenvalues(&self) -> Result<Vec<f64>> {
        if self.symmetry_tag != SymmetryTag::Symmetric {
            return Err(StabilityError::EigensolveFailure(
                "symmetric eigensolve requested for a general operator".into(),
            ));
        }
        let mut values = self
            .entries
            .self_adjoint_eigenvalues(Side::Lower)
            .map_err(|e| StabilityError::EigensolveFailure(format!("{e:?}")))?;
        values.sort_by(f64::total_cmp);
        Ok(values)
    }

    /// Eigenvalues of a general real operator, unordered.
    pub fn general_eigenvalues(&self) -> Result<Vec<Complex64>> {
        let values = self
            .entries
            .eigenvalues()
            .map_err(|e| StabilityError::EigensolveFailure(format!("{e:?}")))?;
        Ok(values.into_iter().map(|z| Complex64::new(z.re, z.im)).collect())
    }
}

/// Assembles `[[a11, a12], [a21, a22]]` from equally sized blocks.
pub(crate) fn block2(a11: &Mat<f64>, a12: &Mat<f64>, a21: &Mat<f64>, a22: &Mat<f64>) -> Mat<f64> {
    let n = a11.nrows();
    Mat::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a11[(i, j)],
        (true, false) => a12[(i, j - n)],
        (false, true) => a21[(i - n, j)],
        (false, false) => a22[(i - n, j - n)],
    })
}

/// `m + diag(d)` in place.
pub(crate) fn add_diagonal(m: &mut Mat<f64>, d: &[f64]) {
    for (i, v) in d.iter().enumerate() {
        m[(i, i)] += v;
    }
}

/// `m * diag(d)`.
pub(crate) fn scale_columns(m: &Mat<f64>, d: &[f64]) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)] * d[j])
}
