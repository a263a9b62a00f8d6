use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient mismatch: expected variables x{expected_lo}..x{expected_n}, got x{found_lo}..x{found_n}")]
    AmbientMismatch {
        expected_lo: usize,
        expected_n: usize,
        found_lo: usize,
        found_n: usize,
    },

    #[error("invalid variable range x{lo}..x{n}")]
    InvalidRange { lo: usize, n: usize },

    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },

    #[error("ideal is not strongly stable")]
    NotStronglyStable,

    #[error("the zero ideal has no Hilbert polynomial of the required kind")]
    ZeroIdeal,

    #[error("not the Hilbert polynomial of a graded ideal in {n} variables: {reason}")]
    NotHilbertPolynomial { n: usize, reason: String },

    #[error("invalid b-list: {0}")]
    InvalidBList(String),

    #[error("monomial {0} is not in the universal lex ideal")]
    NotInUniversal(String),

    #[error("monomial {0} is not in the first component of the universal lex ideal")]
    NotInFirstComponent(String),

    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("interval endpoints out of order: {0} is smaller than {1} in the opposite degree lex order")]
    InvalidInterval(String, String),

    #[error("requested {requested} monomials but only {available} are available")]
    SizeOverflow { requested: String, available: String },

    #[error("ideal is not contained in its claimed saturation")]
    NotContained,

    #[error("ladder set of size {0} cannot be completed")]
    UnreachableSize(String),

    /// A checked identity failed. This signals a construction bug.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            reason: reason.into(),
        }
    }

    pub(crate) fn not_hilbert(n: usize, reason: impl Into<String>) -> Self {
        Error::NotHilbertPolynomial {
            n,
            reason: reason.into(),
        }
    }

    /// True for failures of internal identities rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
