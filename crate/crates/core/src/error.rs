use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InputError: {0}")]
    Input(String),

    #[error("SizeError: group of order {size} exceeds the cap of {cap}")]
    Size { size: u128, cap: usize },

    /// A coefficient does not respect the residue relations of its factor.
    #[error("WellDefinednessError: {0}")]
    WellDefinedness(String),

    #[error("QuadraticityError: {0}")]
    Quadraticity(String),

    #[error("BilinearityError: {0}")]
    Bilinearity(String),

    /// No module braiding exists on the requested module category.
    #[error("ExistenceError: {0}")]
    Existence(String),

    /// Two independent criteria disagreed.
    #[error("CrossCheckError: {0}")]
    CrossCheck(String),

    #[error("InvariantViolation: {0}")]
    InvariantViolation(String),

    /// The Drinfeld-center route needs a bicharacter presentation.
    #[error("OracleUnavailable: {0}")]
    OracleUnavailable(String),
}

impl Error {
    /// Stable error name, as printed by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Input(_) => "InputError",
            Error::Size { .. } => "SizeError",
            Error::WellDefinedness(_) => "WellDefinednessError",
            Error::Quadraticity(_) => "QuadraticityError",
            Error::Bilinearity(_) => "BilinearityError",
            Error::Existence(_) => "ExistenceError",
            Error::CrossCheck(_) => "CrossCheckError",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::OracleUnavailable(_) => "OracleUnavailable",
        }
    }
}
