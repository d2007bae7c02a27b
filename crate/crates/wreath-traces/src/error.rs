use thiserror::Error;

/// Errors surfaced by exact arithmetic, group construction, and the
/// enumeration front ends.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(sqrt2, sqrt5)")]
    DivisionByZero,

    #[error("element does not reach 1 within {cap} multiplications")]
    NotFiniteOrder { cap: u32 },

    #[error("angle {k}/{m} outside the supported exact-cosine table")]
    UnsupportedAngle { k: u64, m: u64 },

    #[error("no exact eigenangle for an element of order {order}")]
    UnsupportedOrder { order: u64 },

    #[error("group closure reached {got} elements, expected {expected}")]
    ClosureSize { got: usize, expected: usize },

    #[error("series length mismatch: {left} vs {right} coefficients")]
    SeriesLength { left: usize, right: usize },

    #[error("{what}: requires {required}, allowed {allowed}")]
    ResourceBound {
        what: &'static str,
        required: u128,
        allowed: u128,
    },

    #[error("cannot parse group '{0}': expected Z<n>, D<n>, 2T, 2O or 2I")]
    BadGammaSpec(String),

    #[error("cannot parse marked partition '{input}': {reason}")]
    BadPartition { input: String, reason: String },

    #[error("unknown class label '{label}' (group has {count} classes)")]
    UnknownClass { label: String, count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to: 2 for input that
    /// fails to parse or refer to anything, 3 for refused resource bounds.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceBound { .. } => 3,
            _ => 2,
        }
    }
}
