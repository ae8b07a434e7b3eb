use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {q} exceeds the cap {cap}")]
    FieldTooLarge { q: u128, cap: u64 },
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{what} has a pole at {place}")]
    Pole { what: String, place: String },
    #[error("not an elliptic curve: the discriminant vanishes")]
    Singular,
    #[error("residue field of {place} has {qv} elements, over the cap {cap}")]
    CapExceeded { place: String, qv: u128, cap: u64 },
    #[error("{place} is a place of bad reduction")]
    BadReduction { place: String },
    #[error("Euler product is not the reciprocal of a degree-{n} polynomial (coefficient {index} is {value})")]
    DegreeMismatch { n: usize, index: usize, value: String },
    #[error("conductor degree {0} is below 4, so no L-polynomial of degree deg n - 4 exists")]
    ConductorTooSmall(u64),
    #[error("functional equation fails at coefficient {0}")]
    FunctionalEquation(usize),
    #[error("the curve is constant; its L-function is not a polynomial")]
    ConstantCurve,
    #[error("the curve is isotrivial")]
    Isotrivial,
    #[error("trace {a} violates the Hasse bound for q = {q}")]
    HasseBound { a: i64, q: u64 },
    #[error("characteristic {0} is not supported here")]
    Characteristic(u64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("degree budget exceeded: {0}")]
    DegreeBudget(usize),
    #[error("no good place of residue size under the cap")]
    NoGoodPlace,
    #[error("height reconstruction is ambiguous at entry ({0}, {1})")]
    Reconstruction(usize, usize),
    #[error("torsion test inconclusive: height below tolerance but m*P != O for m = {0}")]
    TorsionInconclusive(u64),
    #[error("Berger data violates a standing hypothesis: {0}")]
    BergerHypothesis(String),
    #[error("unknown catalog entry {0}")]
    UnknownCatalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
