use crate::ring::ParityClass;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 1..=12")]
    DegreeOutOfRange(u32),

    #[error("modulus {0:#x} is reducible over F2")]
    ReducibleModulus(u32),

    #[error("inversion of zero")]
    ZeroInverse,

    #[error("order {order} does not divide 2^{m} - 1")]
    OrderDoesNotDivide { order: u64, m: u32 },

    #[error("value {value:#x} is not a reduced element for m = {m}")]
    NotReduced { value: u64, m: u32 },

    #[error("operation needs a {required} extension degree, got m = {m}")]
    WrongParityClass { m: u32, required: ParityClass },

    #[error("m = {m} is too large to materialize the unit group (limit m <= {limit})")]
    TooLargeToMaterialize { m: u32, limit: u32 },

    #[error("{what} needs {needed} operations, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error(
        "representatives of class with {nonzero_components} nonzero components disagree: \
         {first} vs {other}"
    )]
    InconsistentClass {
        nonzero_components: u32,
        first: u64,
        other: u64,
    },

    #[error("distribution has no nonzero weight")]
    EmptyDistribution,

    #[error("generator matrix has rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },

    #[error("matrix with {0} rows does not fit the 64-row column packing")]
    TooManyRows(usize),

    #[error("dual distance undefined: the dual code is trivial")]
    DualUndefined,

    #[error("coordinate {0} has an all-zero column")]
    ZeroColumn(usize),

    #[error("coordinate {coordinate} is out of range for length {length}")]
    CoordinateOutOfRange { coordinate: usize, length: usize },

    #[error("recovery relation does not match this scheme")]
    RelationMismatch,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
