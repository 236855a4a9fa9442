use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "wavelength {lambda_um:.4} um outside valid range [{min_um}, {max_um}] um of {material}"
    )]
    OutOfRange {
        material: String,
        lambda_um: f64,
        min_um: f64,
        max_um: f64,
    },

    #[error("unknown material `{0}`")]
    UnknownMaterial(String),

    #[error("no phasematching angle bracketed in (0, 90) deg for this configuration")]
    NoRootInBracket,

    #[error("birth position {0} um does not lie inside a nonlinear segment")]
    BirthOutsideCrystal(f64),

    #[error("stack is not periodic: {0}")]
    NonPeriodicStack(String),

    #[error("invalid stack: {0}")]
    InvalidStack(String),

    #[error("invalid pump: {0}")]
    InvalidPump(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("joint amplitude grid is not square/symmetric ({0})")]
    NonSquareGrid(String),

    #[error("joint amplitude is not normalized (|f|^2 integral = {0})")]
    NotNormalized(f64),

    #[error("crystal and spacer walkoff terms share the same sign; target unreachable with this pair")]
    SameSignWalkoff,

    #[error("interference dip not resolved inside the delay window")]
    DipNotResolved,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
