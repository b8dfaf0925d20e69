use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("binomial coefficient with negative upper index {0}")]
    NegativeBinomial(i64),
    #[error("closed form of T(d, n, x) only exists for d in {{0, 1}}, got d = {0}")]
    UnsupportedDegree(u32),
    #[error("T(d, n, x) is undefined at x = 0")]
    ZeroBase,
    #[error("n must be a positive integer")]
    ZeroIndex,
    #[error("coefficient a must be nonzero")]
    ZeroCoefficient,
    #[error("gamma sum requires p < m (got p = {p}, m = {m})")]
    GammaOrder { p: u32, m: u32 },
    #[error("invalid rational `{0}`")]
    ParseRational(String),
    #[error("invalid polynomial term `{0}`")]
    ParsePolynomial(String),
    #[error("invalid natural number `{0}`")]
    ParseNatural(String),
    #[error("unknown catalog entry `{name}` (available: {available})")]
    UnknownEntry { name: String, available: String },
    #[error("internal zero divisor reached: {0}")]
    Defect(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
