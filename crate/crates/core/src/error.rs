use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix has eigenvalue {0:e} below the PSD clamp threshold")]
    NotPositive(f64),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("negative input: {name} = {value}")]
    NegativeInput { name: &'static str, value: f64 },

    #[error("parameter {name} = {value} out of range [0, 1]")]
    ParamOutOfRange { name: &'static str, value: f64 },

    #[error("invalid Kraus channel: {0}")]
    InvalidChannel(String),

    #[error("state is not of X form: entry {entry} has magnitude {magnitude:e}")]
    NotXForm { entry: &'static str, magnitude: f64 },

    #[error("state is not representable in the symmetric Bloch correlation form: {0}")]
    NotRepresentable(String),

    #[error("state is not Bell diagonal (c0 = {0:e})")]
    NotBellDiagonal(f64),

    #[error("closed-form discord outside its domain: a - b = {0}")]
    DomainExceeded(f64),

    #[error("measurement optimizer did not converge after {0} iterations")]
    OptimizerDidNotConverge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange { name, value })
    }
}
