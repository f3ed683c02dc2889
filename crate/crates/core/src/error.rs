//! Error type shared by all engines.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input matrix failed the symplecticity test.
    #[error("matrix is not symplectic: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotSymplectic { residual: f64, tol: f64 },

    /// Path endpoint is `L0`-degenerate where a nondegenerate one is required.
    #[error("L0-degenerate endpoint: smallest singular value of V is {sigma_min:.3e}")]
    DegenerateEndpoint { sigma_min: f64 },

    /// Adjacent phase samples jump by more than pi/2 even after refinement.
    #[error("phase unwrapping failed: step {step:.3} rad at t = {t:.6} after {refinements} refinements")]
    PhaseStepTooLarge {
        step: f64,
        t: f64,
        refinements: usize,
    },

    /// Winding quantity missed an integer by more than the allowed residual.
    #[error("winding residual {residual:.3e} too large for an integer index")]
    NonIntegerWinding { residual: f64 },

    /// Perturbation ladder or epsilon ladder failed to stabilize.
    #[error("{what} did not stabilize over the ladder {ladder:?}")]
    LadderUnstable { what: &'static str, ladder: Vec<f64> },

    /// Galerkin truncation did not stabilize below the cap.
    #[error("relative index did not stabilize by m = {m_max} (history {history:?})")]
    NoStabilization {
        m_max: usize,
        history: Vec<(usize, i64)>,
    },

    /// Quadrature refinement failed to converge to the requested tolerance.
    #[error("quadrature did not converge: change {change:.3e} exceeds {tol:.3e}")]
    QuadratureDiverged { change: f64, tol: f64 },

    /// Newton shooting failed.
    #[error("shooting failed: {0}")]
    ShootingFailed(String),

    /// Integrator exceeded its symplecticity budget even after re-projection.
    #[error("symplecticity drift {drift:.3e} exceeds tolerance {tol:.3e} after re-projection")]
    SymplecticDrift { drift: f64, tol: f64 },

    /// A mathematical identity guaranteed by the theory failed; always a bug
    /// or a broken input, never swallowed.
    #[error("theory invariant violated: {0}")]
    TheoryViolation(String),

    /// Malformed user input (config file, matrix file, CLI parameters).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit code classification: 1 theory failure, 2 usage/parse,
    /// 3 numerical non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TheoryViolation(_) => 1,
            Error::InvalidInput(_) | Error::Json(_) | Error::Unsupported(_) => 2,
            _ => 3,
        }
    }
}
