use thiserror::Error;

/// Which of the four groupoid axioms a composition table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `(σ⁻¹)⁻¹ = σ`
    I,
    /// associativity of defined composites
    II,
    /// `d(σ) = σ⁻¹σ` defined and left-neutral
    III,
    /// `r(τ) = ττ⁻¹` defined and right-neutral
    IV,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::I => "i",
            Axiom::II => "ii",
            Axiom::III => "iii",
            Axiom::IV => "iv",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("unknown element id `{0}`")]
    UnknownId(String),
    #[error("groupoid axiom ({axiom}) violated: {witness}")]
    AxiomViolation { axiom: Axiom, witness: String },
    #[error("composition table disagrees with d/r: {0}")]
    CompositionDomainMismatch(String),
    #[error("conflicting composition for ({0}, {1})")]
    ConflictingComposition(String, String),
    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),
    #[error("star product is empty: no composable pair")]
    EmptyProduct,
    #[error("subset is empty or references elements outside the groupoid")]
    InvalidSubset,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid scalar `{0}`")]
    InvalidScalar(String),
    #[error("invalid field spec `{0}`")]
    InvalidField(String),

    #[error("grading violation: {0}")]
    GradingViolation(String),
    #[error("multiplication is not associative on basis triple {0}")]
    NotAssociative(String),
    #[error("coefficient algebra is not commutative: {0}")]
    NotCommutative(String),
    #[error("not a central idempotent: {0}")]
    NotCentralIdempotent(String),
    #[error("not an isomorphism of ideals: {0}")]
    NotIsomorphism(String),
    #[error("extension law fails for ({0}, {1})")]
    ExtensionLawFails(String, String),

    #[error("ring is not object unital: {0}")]
    RingNotObjectUnital(String),
    #[error("action is not associative: {0}")]
    ActionNotAssociative(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("configuration mismatch: {0}")]
    ConfigurationMismatch(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unit sets differ: {0}")]
    UnitSetMismatch(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("module is zero")]
    ZeroModule,
    #[error("injectivity over an infinite field needs an explicit ideal list")]
    InfiniteFieldNeedsIdealList,

    #[error("schema error at `{path}`: {message}")]
    SchemaError { path: String, message: String },
    #[error("dangling reference `{0}`")]
    DanglingReference(String),
    #[error("usage error: {0}")]
    UsageError(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable kebab-case name for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateId(_) => "duplicate-id",
            Error::UnknownId(_) => "unknown-id",
            Error::AxiomViolation { .. } => "axiom-violation",
            Error::CompositionDomainMismatch(_) => "composition-domain-mismatch",
            Error::ConflictingComposition(..) => "conflicting-composition",
            Error::NotAGroup(_) => "not-a-group",
            Error::EmptyProduct => "empty-product",
            Error::InvalidSubset => "invalid-subset",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::FieldMismatch(_) => "field-mismatch",
            Error::InvalidScalar(_) => "invalid-scalar",
            Error::InvalidField(_) => "invalid-field",
            Error::GradingViolation(_) => "grading-violation",
            Error::NotAssociative(_) => "not-associative",
            Error::NotCommutative(_) => "not-commutative",
            Error::NotCentralIdempotent(_) => "not-central-idempotent",
            Error::NotIsomorphism(_) => "not-isomorphism",
            Error::ExtensionLawFails(..) => "extension-law-fails",
            Error::RingNotObjectUnital(_) => "ring-not-object-unital",
            Error::ActionNotAssociative(_) => "action-not-associative",
            Error::NotHomogeneous => "not-homogeneous",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::RingMismatch(_) => "ring-mismatch",
            Error::SideMismatch(_) => "side-mismatch",
            Error::ConfigurationMismatch(_) => "configuration-mismatch",
            Error::PreconditionFailed(_) => "precondition-failed",
            Error::UnitSetMismatch(_) => "unit-set-mismatch",
            Error::NotExact(_) => "not-exact",
            Error::ZeroModule => "zero-module",
            Error::InfiniteFieldNeedsIdealList => "infinite-field-needs-ideal-list",
            Error::SchemaError { .. } => "schema-error",
            Error::DanglingReference(_) => "dangling-reference",
            Error::UsageError(_) => "usage-error",
            Error::Io(_) => "io",
        }
    }

    /// `2` for malformed input or invocation, `1` for a domain failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SchemaError { .. } | Error::DanglingReference(_) | Error::UsageError(_) | Error::Io(_) => 2,
            _ => 1,
        }
    }
}
