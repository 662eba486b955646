use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument `{0}` must be nonzero")]
    ZeroArgument(&'static str),
    #[error("nome `{name}` has modulus {modulus}, expected < 1")]
    NomeOutOfRange { name: &'static str, modulus: f64 },
    #[error("nomes are degenerate: {0}")]
    DegenerateNomes(String),
    #[error("argument lies within tolerance of the pole p^-{i} q^-{j}")]
    NearPole { i: u32, j: u32 },
    #[error("coordinates are not quarter-integral")]
    NotQuarterIntegral,
    #[error("vector has norm {norm} but {expected} was required")]
    WrongNorm { norm: f64, expected: f64 },
    #[error("vector does not lie in the half lattice")]
    NotInHalfLattice,
    #[error("norm {0} is not supported by the enumeration")]
    UnsupportedNorm(i64),
    #[error("frame size {0} is outside 1..=8")]
    FrameSize(usize),
    #[error("vectors do not form a frame: {0}")]
    NotAFrame(String),
    #[error("frame has no recognised type (phi values {0:?})")]
    Unclassifiable(Vec<f64>),
    #[error("reflection in a null vector")]
    NullRoot,
    #[error("reflection result is not representable in quarter coordinates")]
    NotRepresentable,
    #[error("generator index {index} out of range for a group of rank {rank}")]
    Generator { index: usize, rank: usize },
    #[error("negative Pochhammer length {0}")]
    NegativeLength(i64),
    #[error("series does not terminate at N = {0}")]
    NonTerminating(usize),
    #[error("parameter {index} has modulus {modulus}; the unit circle is not an admissible contour")]
    Inadmissible { index: usize, modulus: f64 },
    #[error("no admissible representative found in the Weyl orbit (best max modulus {best})")]
    NoAdmissibleRepresentative { best: f64 },
    #[error("quadrature did not converge: last relative change {change} at {points} points")]
    QuadratureNotConverged { change: f64, points: usize },
    #[error("balancing condition violated by {0}")]
    Balancing(f64),
    #[error("point is off the domain (distance {0})")]
    OffDomain(f64),
    #[error("a bracket factor `{what}` nearly vanishes ({modulus})")]
    VanishingBracket { what: String, modulus: f64 },
    #[error("level {level} exceeds the supported maximum {max}")]
    LevelTooHigh { level: i64, max: i64 },
    #[error("vector is not in the orbit M")]
    NotInOrbit,
    #[error("translation vector is not orthogonal to c")]
    NotClassical,
    #[error("kappa must be nonzero")]
    ZeroKappa,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
