use thiserror::Error;

/// Positions are 1-based: `row` counts from the top of a triangle (or matrix),
/// `pos` counts from the left within that row.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("bottom row must be 1..={n}, found {found:?}")]
    BottomRow { n: usize, found: Vec<u32> },
    #[error("row {row} is not strictly increasing at position {pos}")]
    RowStrict { row: usize, pos: usize },
    #[error("entry ({row},{pos}) breaks the diagonal interlacing with row {}", row + 1)]
    Interlace { row: usize, pos: usize },
    #[error("entry ({row},{pos}) breaks the magog inequalities with row {}", row + 1)]
    MagogCondition { row: usize, pos: usize },
    #[error("entry ({row},{pos}) has value {value} outside {allowed}")]
    Entry { row: usize, pos: usize, value: i64, allowed: &'static str },
    #[error("diagonal partial sums fail for j = {diagonal}, i' = {through_row}")]
    PartialSum { diagonal: usize, through_row: usize },
    #[error("row {row} sums to {sum}, expected 1")]
    RowSum { row: usize, sum: i64 },
    #[error("column {col} sums to {sum}, expected 1")]
    ColumnSum { col: usize, sum: i64 },
    #[error("nonzero entries do not alternate in sign in {line}")]
    Alternation { line: String },
    #[error("paths {first} and {second} share the lattice point ({x},{y})")]
    Intersecting { first: usize, second: usize, x: i64, y: i64 },
    #[error("array is not a plane partition: ({row},{col}) increases")]
    Monotonicity { row: usize, col: usize },
    #[error("plane partition is not a TSSCPP ({0})")]
    NotTsscpp(String),
    #[error("fundamental domain does not close to a TSSCPP: {0}")]
    InconsistentDomain(String),
    #[error("fundamental domain does not produce a magog triangle: {0}")]
    ResultNotMagog(String),
    #[error("boolean triangle row {row} increases, so it is not a permutation triangle")]
    NotPermutationBoolean { row: usize },
    #[error("monotone triangle entry ({row},{pos}) equals neither lower neighbour")]
    NotPermutationMonotone { row: usize, pos: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("pattern of length {pattern} is longer than the permutation ({len})")]
    PatternTooLong { pattern: usize, len: usize },
    #[error("n = {n} exceeds the cap {cap} for {what}")]
    CapExceeded { what: String, n: usize, cap: usize },
    #[error("poset of size {size} exceeds the cap {cap} for {what}")]
    SizeCap { what: &'static str, size: usize, cap: usize },
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
