use alloc::string::String;
use alloc::vec::Vec;

use crate::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Structured failure of a precondition, or an internal invariant breach.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("stacky order {0} is invalid: every stacky order must be at least 2")]
    InvalidOrder(u32),

    #[error("stacky index {index} is out of range: the signature has {count} stacky points")]
    StackyIndex { index: usize, count: usize },

    #[error("classes live on different signatures (stacky orders {left:?} vs {right:?})")]
    SignatureMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("local vector {index} is empty: stacky orders must be at least 2")]
    EmptyLocal { index: usize },

    #[error("class violates degree integrality: degree {degree} minus local correction {correction} is not an integer")]
    Integrality { degree: Rational, correction: Rational },

    #[error("slope is undefined for the zero class")]
    ZeroClass,

    #[error("slope is undefined for negative rank {0}")]
    NegativeRank(i64),

    #[error("class (rank {rank}, degree {degree}) is not heart-effective: need rank > 0, or rank = 0 and degree > 0")]
    NotHeartEffective { rank: i64, degree: Rational },

    #[error("deg(L) = {degree} violates deg(L) ≥ 8g + 4n = {bound}")]
    GeneratorDegree { degree: i64, bound: i64 },

    #[error("H = {0} must be strictly positive")]
    NonPositiveH(Rational),

    #[error("epsilon = {0} must lie strictly between 0 and 1")]
    EpsilonRange(Rational),

    #[error("bound {bound} is too small: need bound ≥ {min}")]
    BoundTooSmall { bound: u32, min: u32 },

    #[error("pieces of a filtered object must have strictly decreasing slopes")]
    UnsortedPieces,

    #[error("dual HN filtrations are taken of vector bundles only; piece {0} is torsion")]
    TorsionPiece(usize),

    #[error("twisting requires a rank-1 class, got rank {0}")]
    TwistRank(i64),

    #[error("the two-sections criterion needs genus g ≥ 1, got g = {0}")]
    GenusZero(u32),

    #[error("quiver has no vertices")]
    EmptyQuiver,

    #[error("arrow {arrow} ({source_vertex} -> {target}) has an endpoint outside 0..{vertices}")]
    ArrowOutOfRange { arrow: usize, source_vertex: usize, target: usize, vertices: usize },

    #[error("quiver has an oriented cycle")]
    CyclicQuiver,

    #[error("quiver is not connected")]
    DisconnectedQuiver,

    #[error("triple {triple:?} is not an orbifold line with deg(ω) < 0 (deg ω = {omega})")]
    NotNegativeFamily { triple: [u32; 3], omega: Rational },

    #[error("{0} is not an ADE type")]
    InvalidAdeType(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
