use thiserror::Error;

/// Errors raised by ring, polynomial, sequence and recurrence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring is not a field")]
    NotAField,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidModulus(String),
    #[error("unknown ring {0:?}: expected int, rat or mod:P")]
    UnknownRing(String),
    #[error("cannot parse {input:?} as an element of {ring}")]
    Parse { input: String, ring: String },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("singular system: determinant is zero")]
    SingularSystem,
    #[error("matrix must be square with a matching right-hand side")]
    Shape,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    ZeroDegree,
    #[error("root {0} has zero multiplicity")]
    ZeroMultiplicity(String),
    #[error("root {0} listed more than once")]
    DuplicateRoot(String),
    #[error("root {root}: claimed multiplicity {claimed}, computed {computed}")]
    MultiplicityMismatch {
        root: String,
        claimed: usize,
        computed: usize,
    },
    #[error(
        "characteristic polynomial does not split over the ring; leftover factor has degree {0}"
    )]
    NotAllRootsInK(usize),
    #[error("prefix too short: need {needed} terms, have {available}")]
    InsufficientPrefix { needed: usize, available: usize },
    #[error("lowering order {steps} exceeds sequence order {order}")]
    OutOfRange { steps: usize, order: usize },
    #[error("initial segment must have exactly {expected} terms, got {got}")]
    BadInitLength { expected: usize, got: usize },
    #[error("sequence violates the recurrence at index {0}")]
    MembershipViolation(usize),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
