use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("could not parse `{0}`")]
    Parse(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficient {value} has a denominator divisible by {modulus}")]
    DenominatorDivisible { value: String, modulus: u64 },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("word {0} is not a cyclic path")]
    NotCyclic(String),
    #[error("potential is not homogeneous")]
    Inhomogeneous,
    #[error("requested length {requested} exceeds the bound {bound}")]
    LengthBound { requested: usize, bound: usize },
    #[error("wrong quiver: {0}")]
    WrongQuiver(String),
    #[error("not a quartic alternating conifold potential: {0}")]
    NotQuarticConifold(String),
    #[error("zero tensor")]
    ZeroTensor,
    #[error("zero potential")]
    ZeroPotential,
    #[error("unstable point, no image in GIT quotient")]
    Unstable,
    #[error("weight vectors differ")]
    WeightMismatch,
    #[error("weighted point has all coordinates zero")]
    ZeroPoint,
    #[error("degenerate fiber: {0}")]
    DegenerateFiber(String),
    #[error("lambda {0} is a cusp (0, 1 or infinity)")]
    Cusp(String),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("map undefined at this point (all coordinates vanish)")]
    UndefinedImage,
    #[error("representation with nontrivial stabilizer counted; gauge fixing is inconsistent")]
    Stabilizer,
    #[error("need at least {needed} primes, got {got}")]
    InsufficientPrimes { needed: usize, got: usize },
}
