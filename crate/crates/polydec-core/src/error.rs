use thiserror::Error;

/// Errors raised by the algebra and decomposition routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} does not fit in 32 bits")]
    CharacteristicTooLarge(u64),
    #[error("modulus is reducible over the base field")]
    Reducible,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("extension modulus must have degree at least 2")]
    ModulusDegree,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivideByZero,
    #[error("both operands are zero")]
    BothZero,
    #[error("zero input")]
    ZeroInput,
    #[error("degree {inner} does not divide degree {outer}")]
    DegreeMismatch { outer: usize, inner: usize },
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("polynomial has a term at a non p-power exponent")]
    NotAdditive,
    #[error("factors do not compose to the target")]
    NotADecomposition,
    #[error("search bound exceeded: {0}")]
    SearchBoundExceeded(String),
    #[error("polynomial is not indecomposable")]
    NotIndecomposable,
    #[error("polynomials are not composition-coprime")]
    NotCoprime,
    #[error("kernel basis is linearly dependent over the prime field")]
    DependentBasis,
    #[error("shape product {product} does not match degree {degree}")]
    ProductMismatch { product: usize, degree: usize },
    #[error("requested length {requested} exceeds available length {available}")]
    BadLength { requested: usize, available: usize },
    #[error("polynomial is not completely reducible")]
    NotCompletelyReducible,
    #[error("polynomial is not similarity free")]
    NotSimilarityFree,
    #[error("additive polynomial is not simple")]
    NotSimple,
    #[error("exponent {got} exceeds the supported bound {bound}")]
    ExponentBoundExceeded { got: usize, bound: usize },
    #[error("outer degree {0} is divisible by the characteristic")]
    NotTame(usize),
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("transformation is degenerate")]
    Degenerate,
    #[error("input is constant")]
    ConstantInput,
    #[error("degree quadruple is infeasible")]
    DegreeInfeasible,
    #[error("integer overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
