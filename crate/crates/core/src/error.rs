use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("no roots of zero polynomial")]
    ZeroPolynomial,

    #[error("root finding did not converge: {0}")]
    RootsDiverged(String),

    #[error("not divisible: residual max-norm {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotDivisible { residual: f64, tol: f64 },

    #[error("denominator has a zero in the closed unit disk (|z| = {modulus})")]
    DenominatorZeroInDisk { modulus: f64 },

    #[error("q not in the closed unit ball: defect reaches {min_value:.3e} on the boundary grid")]
    NotInBall { min_value: f64 },

    #[error("inner symbol: defect identically zero")]
    InnerSymbol,

    #[error("q is inner: extreme point, no mate")]
    InnerFunction,

    #[error("not a valid nonnegative trig polynomial: {0}")]
    InvalidSpectralSymbol(String),

    #[error("logarithm singular at boundary zero (z = {at})")]
    LogSingular { at: String },

    #[error("kernel undefined: ell exceeds m_j - 1 (lambda = {lambda}, ell = {ell})")]
    KernelUndefined { lambda: String, ell: usize },

    #[error("kernel not analytic: spec inconsistent with mate zeros (residual {residual:.3e})")]
    KernelNotAnalytic { residual: f64 },

    #[error("limit does not stabilize (last increment {increment:.3e})")]
    LimitDiverged { increment: f64 },

    #[error("not analytic to truncation accuracy (tail ratio {tail_ratio:.3e})")]
    NotAnalytic { tail_ratio: f64 },

    #[error("input is not a member of the space (residual {residual:.3e} on the truncation ladder)")]
    NotMember { residual: f64 },

    #[error("membership inconclusive at truncation {trunc} (residual {residual:.3e})")]
    MembershipInconclusive { trunc: usize, residual: f64 },

    #[error("linear solve failed: {0}")]
    SolveFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
