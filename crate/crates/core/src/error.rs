use core::fmt;

/// Errors raised by the enumeration pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Zero has no index/weight decomposition.
    ZeroInput,
    /// The zero wave vector was given where a class is required.
    ZeroVector,
    /// Domain bound must be at least one.
    EmptyDomain,
    /// Domain bound exceeds what the caller allows.
    DomainTooLarge {
        /// requested bound
        bound: u64,
        /// largest accepted bound
        max: u64,
    },
    /// Quartet fails the resonance or momentum condition.
    NotResonant,
    /// Trident parameters must be at least one.
    InvalidTridentParameter {
        /// offending s
        s: u64,
        /// offending t
        t: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInput => f.write_str("zero has no fourth-power-free decomposition"),
            Error::ZeroVector => f.write_str("the zero wave vector has no class"),
            Error::EmptyDomain => f.write_str("domain bound must be at least 1"),
            Error::DomainTooLarge { bound, max } => {
                write!(f, "domain bound {bound} exceeds the limit {max}")
            }
            Error::NotResonant => f.write_str("quartet is not resonant"),
            Error::InvalidTridentParameter { s, t } => {
                write!(f, "trident parameters must satisfy s, t >= 1 (got s={s}, t={t})")
            }
        }
    }
}

impl core::error::Error for Error {}
