use thiserror::Error;

/// Failures raised by the wave constructors, operator assembly and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    /// Parameters or wave data outside the admissible family.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid half-length {half_length} is below the decay margin {required}")]
    GridTooSmall { half_length: f64, required: f64 },

    /// A closed-form coefficient is singular at the requested parameter.
    #[error("pole at {parameter} = {value}")]
    Pole { parameter: &'static str, value: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("residual check failed for {what}: {residual:e} > {tolerance:e}")]
    Residual {
        what: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("solve failed: {0}")]
    SolveFailure(String),

    #[error("right-hand side is not orthogonal to the kernel: defect {defect:e} > {tolerance:e}")]
    KernelDefect { defect: f64, tolerance: f64 },

    #[error("deflated solve is ill-conditioned: residual {residual:e} > {tolerance:e}")]
    IllConditioned { residual: f64, tolerance: f64 },

    #[error("no sign change of the index on [{z_lo}, {z_hi}] (values {f_lo:e}, {f_hi:e})")]
    NoSignChange {
        z_lo: f64,
        z_hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("eigensolver failed: {0}")]
    EigensolveFailure(String),

    #[error("wave speed |w| = {speed} is not below the subsonic bound {bound}")]
    NotSubsonic { speed: f64, bound: f64 },
}

impl StabilityError {
    /// True for errors caused by inadmissible input rather than numerical failure.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            StabilityError::Domain(_)
                | StabilityError::InvalidGrid(_)
                | StabilityError::GridTooSmall { .. }
                | StabilityError::Pole { .. }
                | StabilityError::LengthMismatch { .. }
                | StabilityError::NotSubsonic { .. }
                | StabilityError::NoSignChange { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, StabilityError>;
