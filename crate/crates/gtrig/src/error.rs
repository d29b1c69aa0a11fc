//! Error taxonomy for the crate.
//!
//! Every fallible operation returns [`Error`]. The variants separate four
//! situations a caller may want to handle differently:
//!
//! * [`Error::Domain`] — an argument is outside the mathematical domain of
//!   the operation (e.g. `p ≤ 1`, an abscissa outside `(0, π_{p,q}]`).
//! * [`Error::Regime`] — the arguments are individually valid but the
//!   requested statement is only claimed for a restricted parameter regime
//!   (e.g. the two-sided bound check requires `p ≥ 2, q ≥ 2`).
//! * [`Error::Singular`] — evaluation was requested at (or within a guard
//!   window of) a genuine singularity, e.g. the second derivative of
//!   `sin_{p,q}` at `π_{p,q}/2` when `p > 2`.
//! * [`Error::Convergence`] — an iterative kernel (continued fraction,
//!   root bracketing) failed to reach its tolerance within the iteration
//!   budget. With default accuracy settings this indicates a bug or a
//!   pathological input, not a tuning problem.
//! * [`Error::Io`] / [`Error::Parse`] — file output and CSV ingestion.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Arguments valid, but outside the parameter regime the requested
    /// statement is asserted for.
    #[error("regime error: {0}")]
    Regime(String),

    /// Evaluation at (or too close to) a genuine singularity.
    #[error("singular evaluation: {0}")]
    Singular(String),

    /// An iterative kernel exhausted its iteration budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Underlying I/O failure while writing or reading artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed textual input (CSV records).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
