//! Estimation of right-tail probabilities `P(X_1 + ... + X_d > gamma)` for sums of
//! continuous random variables.
//!
//! The core estimator changes variables to L1 polar coordinates `(S, Theta)` with
//! `S = sum(X)` and `Theta = X / S`, then importance-samples the radius from an
//! asymptotic model of the sum density and the angle from a cheap conditional model.
//! The estimate factors as `asymptotic prefactor x Monte Carlo correction`, so the
//! output remains interpretable even deep in the tail.
//!
//! Modules:
//! - [`marginals`]: univariate families (lognormal, Pareto, Weibull, exponential)
//!   with log-space tail arithmetic and truncated sampling.
//! - [`copulas`]: Archimedean copulas (independent, Clayton, Frank, Gumbel-Hougaard,
//!   Ali-Mikhail-Haq) with density, sampling and conditional survival.
//! - [`polar`]: the polar transform, radial/angular models and the IS estimator.
//! - [`baselines`]: crude Monte Carlo, Asmussen-Kroese and exponential tilting.
//! - [`oracle`]: closed-form and quadrature references for validation.
//! - [`harness`]: config-driven experiment runner emitting CSV.
//!
//! Replication loops are data-parallel over fixed-size batches with one RNG
//! substream per batch, so results are reproducible for a fixed seed regardless
//! of thread count. The `parallel` feature (default) runs batches on rayon;
//! without it the same batches run sequentially.

pub mod baselines;
pub mod copulas;
pub mod exec;
pub mod harness;
pub mod marginals;
pub mod oracle;
pub mod polar;
pub mod quad;
pub mod rng;
pub mod solve;
pub mod special;

pub use copulas::{Copula, CopulaFamily, ProblemSpec};
pub use marginals::Marginal;
pub use polar::{AngularModel, EstimatorResult, PolarPoint, RadialModel};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter {name}={value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("probability argument {0} outside (0, 1)")]
    InvalidProbability(f64),
    #[error("non-finite input {0}")]
    NonFiniteInput(f64),
    #[error("truncation point has zero survival mass (log-survival = -inf)")]
    InfeasibleTruncation,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("argument outside the model's validity domain: {0}")]
    DomainError(String),
    #[error("copula argument on the boundary of (0,1)^d")]
    BoundaryArgument,
    #[error("operation unsupported for this family: {0}")]
    Unsupported(String),
    #[error("root finder failed to converge after {0} iterations")]
    RootFind(usize),
    #[error("root is not bracketed on [{0}, {1}]")]
    NotBracketed(f64, f64),
    #[error("quadrature failed to reach tolerance (error {err:.3e} after {neval} evaluations)")]
    Quadrature { err: f64, neval: usize },
    #[error("non-finite likelihood ratio at replicate {replicate}: log-ratio = {log_ratio}")]
    NonFiniteLikelihood { replicate: u64, log_ratio: f64 },
    #[error("degenerate conditioning point (conditional denominator underflows)")]
    DegenerateConditioning,
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
