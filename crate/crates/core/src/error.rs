use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    Associativity { i: usize, j: usize, k: usize },
    #[error("unit law fails on basis element {0}")]
    UnitLaw(usize),
    #[error("radical is not a two-sided ideal: {0}")]
    RadicalNotIdeal(String),
    #[error("radical is not nilpotent")]
    RadicalNotNilpotent,
    #[error("Hopf axiom violated: {0}")]
    HopfAxiom(String),
    #[error("Hopf datum is not cocommutative")]
    NotCocommutative,
    #[error("algebra has no radical basis")]
    MissingRadical,
    #[error("algebra has no Hopf datum")]
    MissingHopf,
    #[error("objects are defined over different algebras")]
    AlgebraMismatch,
    #[error("not a group multiplication table: {0}")]
    NotAGroup(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("term in degree {degree} is not injective")]
    NotInjective { degree: i64 },
    #[error("degree {0} is outside the available window")]
    DegreeUnavailable(i64),
    #[error("window too small to certify the result: {0}")]
    WindowExhausted(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("operation requires a self-injective algebra")]
    NonSelfInjective,
    #[error("no augmentation: {0}")]
    NoAugmentation(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag used in error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::FieldMismatch { .. } => "field_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Associativity { .. } => "associativity",
            Error::UnitLaw(_) => "unit_law",
            Error::RadicalNotIdeal(_) => "radical_not_ideal",
            Error::RadicalNotNilpotent => "radical_not_nilpotent",
            Error::HopfAxiom(_) => "hopf_axiom",
            Error::NotCocommutative => "not_cocommutative",
            Error::MissingRadical => "missing_radical",
            Error::MissingHopf => "missing_hopf",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::NotAGroup(_) => "not_a_group",
            Error::InvalidModule(_) => "invalid_module",
            Error::InvalidHom(_) => "invalid_hom",
            Error::InvalidComplex(_) => "invalid_complex",
            Error::NotInjective { .. } => "not_injective",
            Error::DegreeUnavailable(_) => "degree_unavailable",
            Error::WindowExhausted(_) => "window_exhausted",
            Error::UnsupportedAlgebra(_) => "unsupported_algebra",
            Error::NonSelfInjective => "non_self_injective",
            Error::NoAugmentation(_) => "no_augmentation",
            Error::InternalConsistency(_) => "internal_consistency",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }

    /// Internal-consistency failures indicate bugs rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalConsistency(_))
    }
}
