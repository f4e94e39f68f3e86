//! Error types shared across the crate.

use thiserror::Error;

/// Reason a radius quadruple cannot come from any Steiner 4-chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibleKind {
    /// The moment quadratic has no real roots.
    NoRealRoots,
    /// The roots do not split into one positive and one negative curvature.
    SignPattern,
    /// The candidate Soddy pair violates the Pedoe relation (d^2 <= 0).
    PedoeNegative,
}

impl std::fmt::Display for InfeasibleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            InfeasibleKind::NoRealRoots => "no real roots",
            InfeasibleKind::SignPattern => "curvature sign pattern violated",
            InfeasibleKind::PedoeNegative => "Pedoe discriminant not positive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// The requested object does not exist for these parameters.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed or out-of-contract input.
    #[error("input error: {0}")]
    Input(String),

    /// A parameter lies outside its admissible interval.
    #[error("range error: {0}")]
    Range(String),

    /// A numeric guard tripped (e.g. a discriminant more negative than noise).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// No circle tangent to all four chain circles exists within tolerance.
    #[error("no socle: {0}")]
    NoSocle(String),

    /// The tangency system is rank-deficient (degenerate configuration).
    #[error("singular system: degenerate circle configuration")]
    SingularSystem,

    /// A radius quadruple fails the feasibility pipeline.
    #[error("infeasible: {0}")]
    Infeasible(InfeasibleKind),
}

pub type Result<T> = std::result::Result<T, Error>;
