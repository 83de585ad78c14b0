use thiserror::Error;

/// Errors reported by the library.
///
/// Precondition violations (`NotDominant`, `NotInNegCone`, `NotDeepEnough`,
/// `SkippedNotDominant`) identify the offending weight by its fundamental
/// coordinates. `InternalInconsistency` means an exact-arithmetic identity
/// that must hold mathematically failed to hold; it is never clamped or
/// silently repaired.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Cartan matrix: {reason}")]
    MalformedCartan { reason: String },

    #[error("not a finite-type Cartan matrix: positive-root closure exceeded {bound} roots")]
    NotFiniteType { bound: usize },

    #[error("Weyl group order exceeds the enumeration bound {bound}")]
    WeylTooLarge { bound: u64 },

    #[error("weight {coords:?} is not dominant")]
    NotDominant { coords: Vec<i64> },

    #[error("weight {coords:?} is not in the negative root cone")]
    NotInNegCone { coords: Vec<i64> },

    #[error("chain point skipped: {lam:?} + {mu:?} is not dominant")]
    SkippedNotDominant { lam: Vec<i64>, mu: Vec<i64> },

    #[error("highest weight {lam:?} is not deep enough: adding weight {witness:?} leaves the dominant cone")]
    NotDeepEnough { lam: Vec<i64>, witness: Vec<i64> },

    #[error("chain generator {coords:?} must have every fundamental coordinate positive")]
    BadChainGenerator { coords: Vec<i64> },

    #[error("rank mismatch: expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("internal inconsistency: {reason}")]
    InternalInconsistency { reason: String },
}

impl Error {
    pub(crate) fn internal(reason: impl Into<String>) -> Self {
        Error::InternalInconsistency {
            reason: reason.into(),
        }
    }
}
