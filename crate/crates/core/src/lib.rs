//! Best constants for the lp operator norms of Hilbert-type kernel matrices
//! `H(alpha, beta) = (i^alpha j^beta / (i+j)^(alpha+beta+1))`, together with the
//! machinery needed to check the inequalities behind them at desk scale:
//!
//! * [`special`] — log-gamma, beta, binomials in the log domain, conjugate
//!   exponent pairs and exact rational arithmetic.
//! * [`kernels`] — entries of `H(alpha, beta)` and of the binomial/beta matrix
//!   `M(alpha, beta)`, plus the entrywise comparison between the two families.
//! * [`norms`] — lower bounds on the operator norm (test vectors and a
//!   nonlinear power iteration on truncations) and the Schur-test upper-bound
//!   certification.
//! * [`series`] — certified enclosures of `sum_m m^lambda / (m+n)^s`, the
//!   series inequality and Euler-Maclaurin checks, and the exact-rational
//!   correction polynomials `D_0..D_5`.
//! * [`monotone`] — the sequence-monotonicity verification chain.
//!
//! Every check reports both sides, the margin and the first violation (if
//! any) through [`CheckReport`], so a failed verdict is auditable rather than
//! a bare boolean.

pub mod kahan;
pub mod kernels;
pub mod monotone;
pub mod norms;
pub mod quad;
pub mod report;
pub mod series;
pub mod special;

pub use kernels::{HomogeneousKernel, KernelParams};
pub use norms::{NormEstimate, SchurReport};
pub use report::CheckReport;
pub use series::{CertifiedValue, DPolyValue, SeriesParams, TailMethod};
pub use special::{ConjugateExponents, ExactRational};

/// Errors reported by the verification and estimation operations.
///
/// Domain errors name the violated constraint so a caller can print it
/// verbatim; they are the only way a precondition failure surfaces.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series diverges: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
