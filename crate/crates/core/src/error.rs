use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("residue {k} out of range 1..={max} for modulus {d}", max = d - 1)]
    ResidueOutOfRange { d: u32, k: u32 },
    #[error("tuple needs at least 3 residues, got {0}")]
    TooFewResidues(usize),
    #[error("{s} is not a unit modulo {d}")]
    NotAUnit { d: u32, s: u32 },
    #[error("residue {k} is divisible by the modulus {d}")]
    ZeroResidue { d: u32, k: u64 },
    #[error("operation needs exactly {expected} residues, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("invalid index {index} for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("cyclotomic polynomial construction for d={0} left a nonzero remainder")]
    ReductionRemainder(u32),
    #[error("coefficient overflow in exact arithmetic")]
    Overflow,
    #[error("principal minor u_{j} disagrees with its closed form for {tuple}, s={s}")]
    ClosedFormMismatch { tuple: String, s: u32, j: usize },
    #[error("non-integral matrix entry met during group closure")]
    NonIntegral,
    #[error("cannot parse fraction {0:?}")]
    ParseFraction(String),
}
