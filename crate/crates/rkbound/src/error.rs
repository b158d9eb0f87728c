use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point is not a member of {domain}: {detail}")]
    Domain { domain: String, detail: String },

    #[error("domain mismatch: expected {expected}, got {got}")]
    DomainMismatch { expected: String, got: String },

    #[error("principal branch undefined: |arg| = {arg_abs} too close to pi at {context}")]
    Branch { arg_abs: f64, context: String },

    #[error("division by near-zero kernel value |{magnitude:.3e}| at {context}")]
    Division { magnitude: f64, context: String },

    #[error("exp overflow: Re k = {re} exceeds 700")]
    Overflow { re: f64 },

    #[error("degenerate kernel diagonal {value:.3e} at {context}")]
    Degenerate { value: f64, context: String },

    #[error("diagonal value has non-negligible imaginary part {imag:.3e} (evaluator is broken)")]
    NonRealDiagonal { imag: f64 },

    #[error("p-metric radicand {radicand:.6e} is negative beyond the clamp window")]
    NegativeRadicand { radicand: f64 },

    #[error("zeta series failed to reach tolerance {tol:.1e} within {terms} terms")]
    Convergence { tol: f64, terms: usize },

    #[error("zeta pole: |s - 1| = {distance:.3e} below guard")]
    Pole { distance: f64 },

    #[error("sample points are not pairwise distinct (minimum separation {min_sep:.3e})")]
    DuplicatePoints { min_sep: f64 },

    #[error("Gram pseudoinverse dropped {dropped} of {total} eigenvalues; sample is too ill-conditioned")]
    IllConditioned { dropped: usize, total: usize },

    #[error("sample Gram is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NotPsdSample { min_eig: f64 },

    #[error("sequence does not approach the boundary point: {detail}")]
    NotApproaching { detail: String },

    #[error("no anchored boundary family matches the observed limit (best residual {residual:.3e})")]
    NoMatch { residual: f64 },

    #[error("trichotomy inconclusive: {detail}")]
    Inconclusive { detail: String },

    #[error("iteration stalled: horocycle level stopped shrinking for {steps} consecutive steps")]
    Stalled { steps: usize },

    #[error("fixed point encountered at step {step}: |phi(x) - x| = {gap:.3e}")]
    FixedPoint { step: usize, gap: f64 },

    #[error("finite-difference stencil exits the domain at radius {radius}")]
    Stencil { radius: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown catalog label: {0}")]
    UnknownLabel(String),

    #[error("bad argument: {0}")]
    BadArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
