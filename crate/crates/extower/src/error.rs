use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("operator does not lie in e6: {0}")]
    NotInE6(String),
    #[error("operator does not lie in e7: {0}")]
    NotInE7(String),
    #[error("not an element of sp(3, H^C): {0}")]
    NotSp3(String),
    #[error("not an element of su(3, C^C): {0}")]
    NotSu3(String),
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("Cartan element is not generic: {0}")]
    NonGenericCartanElement(String),
    #[error("characteristic polynomial does not split over Q(i)")]
    NonSplitSpectrum,
    #[error("Killing form is degenerate on the Cartan subalgebra")]
    DegenerateCartanForm,
    #[error("root {0} has no negative partner")]
    UnpairedRoot(String),
    #[error("Cartan matrix entry is not an integer: {0}")]
    NotCrystallographic(String),
    #[error("unknown Dynkin type: {0}")]
    UnknownType(String),
    #[error("invalid Lie algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown algebra {0:?} (expected f4r, e6r, e7r or e8r)")]
    UnknownAlgebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
