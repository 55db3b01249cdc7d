//! Error type shared by every stage of the pipeline.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("point does not lie on the line at infinity")]
    PointNotAtInfinity,
    #[error("interval refinement budget exhausted before a sign was certified")]
    BudgetExhausted,
    #[error("polynomial is radial about the origin; Milnor set machinery does not apply")]
    NotPrimitive,
    #[error("radius override {0} does not exceed the certified Milnor radius bound")]
    OverrideTooSmall(String),
    #[error("curve meets the sample circle tangentially; radius certificate is invalid")]
    TangentialIntersection,
    #[error("band midpoint kept evaluating to zero after {0} reselections")]
    DegenerateBand(u32),
    #[error("tangency classifiers disagree at arc {0}: Lie tower says {1}, band signs say {2}")]
    ClassifierDisagreement(usize, String, String),
    #[error("series depth {have} cannot certify the requested truncation {need}")]
    DepthInsufficient { need: u32, have: u32 },
    #[error("truncated series too short to read the limit (depth {depth}, need {need})")]
    TruncationAmbiguous { depth: u32, need: u32 },
    #[error("arc count {arcs} does not match half-branch count {branches}")]
    CountMismatch { arcs: usize, branches: usize },
    #[error("arc/branch matching unresolved after radius escalation cap")]
    MatchingUnresolved,
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("total degree {0} exceeds the supported limit {1}")]
    DegreeLimitExceeded(u32, u32),
    #[error("numeric oracle grid too coarse: {0}")]
    ResolutionTooCoarse(String),
    #[error("numeric trace diverged: {0}")]
    TraceDiverged(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
