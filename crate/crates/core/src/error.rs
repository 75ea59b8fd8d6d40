use thiserror::Error;

use crate::shape::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must weakly decrease: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("inner shape {inner} is not contained in {outer}")]
    InnerNotContained { outer: String, inner: String },
    #[error("expected a rectangular shape")]
    NotRectangular,
    #[error("expected a straight shape")]
    NotStraight,
    #[error("expected a standard tableau")]
    NotStandard,
    #[error("box {0} is not an inner corner")]
    NotInnerCorner(Cell),
    #[error("box {0} lies outside the shape")]
    BoxOutside(Cell),
    #[error("not a valid {kind} tableau")]
    InvalidTableau { kind: &'static str },
    #[error("entry {entry} exceeds ceiling {ceiling}")]
    EntryAboveCeiling { entry: u32, ceiling: u32 },
    #[error("growth window has {have} rows, needs {needed}")]
    WindowTooShort { needed: usize, have: usize },
    #[error("lattice path leaves the growth window")]
    PathLeavesWindow,
    #[error("poset has {0} elements; at most 64 are supported")]
    PosetTooLarge(usize),
    #[error("cover relations contain a cycle")]
    CyclicCovers,
    #[error("cover {0}<{1} is implied by other covers")]
    RedundantCover(usize, usize),
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("poset carries no planar embedding")]
    NoEmbedding,
    #[error("invalid cominuscule family parameters: {0}")]
    InvalidFamily(String),
    #[error("statistic support is not fixed by rotate")]
    NotRotateFixed,
    #[error("labels do not form a linear extension")]
    NotLinearExtension,
    #[error("labels do not form an increasing tableau")]
    NotIncreasing,
    #[error("chain of order ideals does not decode to an increasing tableau")]
    BadEvacuationChain,
    #[error("deficiency {deficiency} exceeds the {size} elements of the poset")]
    DeficiencyTooLarge { deficiency: usize, size: usize },
    #[error("reproduction mismatch: {0}")]
    Reproduction(String),
    #[error("enumeration exceeded the budget of {budget} elements")]
    BudgetExceeded { budget: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
