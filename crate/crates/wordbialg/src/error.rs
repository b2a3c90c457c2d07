use thiserror::Error;

/// Errors raised across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("word {0} is not packed")]
    NotPacked(String),
    #[error("universe of {needed} words exceeds the cap of {cap}")]
    UniverseCap { needed: u128, cap: u128 },
    #[error("generator {0} ~ {1} relates words with different letter sets")]
    UnequalLetterSets(String, String),
    #[error("word {0} lies outside the closure universe")]
    OutsideUniverse(String),
    #[error("class truncation is not certified stable under extra headroom")]
    UnstableTruncation,
    #[error("degree {degree} exceeds the enumerated length bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("quasi-symmetric function is not symmetric")]
    NotSymmetric,
    #[error("triangular solve left a nonzero residual at {0}")]
    Residual(String),
    #[error("{0} is not a peak composition")]
    NotPeakComposition(String),
    #[error("{0} is not a strict partition")]
    NotStrict(String),
    #[error("permutations of sizes {0} and {1} cannot be multiplied")]
    AmbientMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("presentation {0} is not homogeneous")]
    Inhomogeneous(String),
}

pub type Result<T> = std::result::Result<T, Error>;
