use thiserror::Error;

/// Errors produced by the library.
///
/// Variants fall into two groups: domain errors caused by invalid input
/// (bad partitions, words that are not reduced, ...) and internal-consistency
/// errors (`PathDisagreement`, `NonIntegralDivision`) that indicate a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {0:?} is not k-strict: part {1} > k={2} is repeated")]
    NotKStrict(Vec<u32>, u32, u32),
    #[error("bad type marker {ty} for partition {parts:?} with k={k}")]
    BadType { parts: Vec<u32>, k: u32, ty: u8 },
    #[error("k must be positive")]
    ZeroK,
    #[error("partition {0:?} is not weakly decreasing")]
    NotAPartition(Vec<i64>),
    #[error("partition {0:?} is not strict")]
    NotStrict(Vec<u32>),
    #[error("boxes {0:?} and {1:?} cannot be ordered as left/right boxes for k={2}")]
    BoxSides((u32, u32), (u32, u32), u32),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("raising-operator expansion exceeded the budget of {0} visits")]
    ExpansionBudgetExceeded(u64),
    #[error("composition of length {len} does not fit an operator on {nrows} rows")]
    CompositionTooLong { len: usize, nrows: usize },
    #[error("invalid operator pair ({0},{1}) for {2} rows")]
    BadPair(usize, usize, usize),
    #[error("partition has no part equal to k")]
    NoPartEqualK,

    #[error("polynomial shapes differ: (m={0}, ky={1}) vs (m={2}, ky={3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("division by {0} left non-integral coefficients")]
    NonIntegralDivision(String),
    #[error("polynomial is not symmetric in x")]
    NotSymmetric,
    #[error("degree {degree} exceeds the {m} available x variables")]
    InsufficientVariables { degree: u32, m: usize },
    #[error("Schur P expansion left a non-zero residual")]
    NonZeroResidual,
    #[error("polynomial involves y variables")]
    NotXOnly,
    #[error("{ky} y variables requested but k={k}")]
    TooManyYVariables { ky: usize, k: u32 },

    #[error("strip membership tests disagree for {lambda:?} / {mu:?} (k={k})")]
    PathDisagreement { lambda: Vec<u32>, mu: Vec<u32>, k: u32 },
    #[error("{lambda:?} / {mu:?} is not a k'-horizontal strip")]
    NotAStrip { lambda: Vec<u32>, mu: Vec<u32> },
    #[error("partitions are not nested")]
    NotContained,
    #[error("partitions use different k ({0} vs {1})")]
    KMismatch(u32, u32),

    #[error("signed permutation {0:?} is invalid")]
    BadPermutation(Vec<i32>),
    #[error("signed permutation has an odd number of barred entries")]
    NotTypeD,
    #[error("partition {parts:?} does not fit the ({rows} x {cols}) rectangle")]
    DoesNotFit { parts: Vec<u32>, rows: u32, cols: u32 },
    #[error("nilCoxeter expansion exceeded its budget of {0} terms")]
    BudgetExceeded(u64),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<u8>),
    #[error("word {0:?} does not pass through Grassmannian elements of the given shape")]
    NotChainCompatible(Vec<u8>),
    #[error("letter {letter} is out of range for rank {n}")]
    LetterOutOfRange { letter: u8, n: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
