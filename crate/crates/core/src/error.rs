use std::fmt;
use std::io;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by estimation, conversion, and serialization operations.
#[derive(Debug)]
pub enum Error {
    /// An argument that must be positive was zero (the payload names it).
    ZeroArgument(&'static str),
    /// `count_records_list` was given an empty slice.
    EmptyList,
    /// An argument fell outside the supported range of an exact operation.
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    /// Logarithm bases below 2 are rejected.
    InvalidBase(u64),
    /// `base^max_power` does not fit in 64-bit integer arithmetic.
    PowerOverflow { base: u64, max_power: u32 },
    /// An integer accumulator would wrap around.
    CountOverflow,
    /// `write_csv` was given no rows.
    NoRows,
    /// An underlying I/O failure.
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroArgument(name) => write!(f, "{name} must be at least 1"),
            Self::EmptyList => write!(f, "sample list must be nonempty"),
            Self::OutOfRange {
                what,
                value,
                min,
                max,
            } => write!(
                f,
                "{what} = {value} is outside the supported range {min}..={max}"
            ),
            Self::InvalidBase(base) => write!(f, "logarithm base must be at least 2, got {base}"),
            Self::PowerOverflow { base, max_power } => {
                write!(f, "{base}^{max_power} overflows 64-bit integer arithmetic")
            }
            Self::CountOverflow => write!(f, "trial count accumulator overflowed"),
            Self::NoRows => write!(f, "no rows to serialize"),
            Self::Io(err) => write!(f, "I/O error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Self::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(err: io::Error) -> Self {
        Self::Io(err)
    }
}
