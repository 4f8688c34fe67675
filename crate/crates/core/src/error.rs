use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at z = 0")]
    PoleAtOrigin,
    #[error("series coefficient of z^{0} is not an integer")]
    NonIntegralSeries(usize),
    #[error("degrees must be ≥ 1")]
    InvalidDegree,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("pole at t = z^-{0} is not isolated")]
    DegeneratePole(u32),
    #[error("unknown format: {0}")]
    UnknownFormat(String),
    #[error("malformed result document: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
