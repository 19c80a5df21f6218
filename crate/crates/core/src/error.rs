use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(u64, u64),
    #[error("denominator {0:?} does not clear the sequence past degree {1}")]
    NonPolynomial(Vec<u32>, usize),
    #[error("{0} is a perfect square")]
    DSquare(i64),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("prime {0} is not supported here")]
    UnsupportedPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("character index {0} is outside 1..=17")]
    BadIndex(u32),
    #[error("irrational residue in character {0} at ({1},{2})")]
    IrrationalResidue(u32, i64, i64),
    #[error("odd weight {0}")]
    OddWeight(i64),
    #[error("parity mismatch between total {0} and difference {1}")]
    ParityFailure(i64, i64),
    #[error("invalid Young parameters ({0},{1}): need f1 >= f2 >= 0 and f1 = f2 mod 2")]
    BadYoung(i64, i64),
    #[error("invalid weight (k={0}, j={1}): need k >= 3 and j even >= 0")]
    BadWeight(i64, i64),
    #[error("non-integral value {0}")]
    NonIntegral(String),
    #[error("no level-one data for j={0}")]
    UnsupportedJ(i64),
    #[error("level-one table for j={0} has no entry at k={1}")]
    MissingData(i64, i64),
    #[error("level-one table for j={0} is already registered")]
    AlreadyRegistered(i64),
    #[error("Jacobi form dimension for p={0} is not tabulated (p <= 97 only)")]
    MissingJacobiData(u64),
    #[error("negative dimension {0} at p={1}, k={2}, j={3}")]
    NegativeDim(i64, u64, i64, i64),
    #[error("bias f({0},{1}) = {2} is negative")]
    BiasViolation(u64, i64, i64),
    #[error("matrix is not a similitude")]
    NotSimilitude,
    #[error("family {family} has {found} elements, expected {expected}")]
    FamilySizeMismatch {
        family: String,
        found: usize,
        expected: usize,
    },
    #[error("value {0} overflows a 64-bit integer")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("data error: {0}")]
    Data(String),
}
