//! Augmentations, linearised complexes, mapping cones and the exactness
//! obstruction.

mod augment;
mod complex;
mod cone;
mod linalg;
mod obstruction;

pub use augment::{
    find_augmentations, find_augmentations_bounded, graded_candidates_by_degree, Augmentation,
    DEFAULT_SEARCH_BOUND,
};
pub use complex::{betti, linearise, BettiVector, GradedComplex};
pub use cone::{cone_feasible, mapping_cone, ChainMap, Feasibility, RecurrenceStep};
pub use linalg::Matrix;
pub use obstruction::{forced_window, not_twist_spun_report, ObstructionReport, Verdict};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("invalid coefficient point mu = {mu}, lambda = {lambda}")]
    InvalidPoint { mu: u32, lambda: u32 },
    #[error("{what}: {needed} exceeds the bound {bound}")]
    Resource {
        what: &'static str,
        bound: u64,
        needed: u128,
    },
    #[error("differential squares to nonzero out of degree {degree}")]
    NotAComplex { degree: i32 },
    #[error("map does not commute with the differentials in degree {degree}")]
    NotAChainMap { degree: i32 },
    #[error("format error: {0}")]
    Format(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not in the product regime: {0}")]
    NotInRegime(String),
}
