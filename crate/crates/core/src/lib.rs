//! Exact solving, verification and evaluation of linear recurrences with
//! constant coefficients over entire rings.
//!
//! The machinery is built on divided (Hasse) derivatives, so closed-form
//! solution bases stay valid in positive characteristic, where the familiar
//! `i^a alpha^i` solutions break down. Over rings that are not fields the
//! crate also certifies how far a solution is from the span of the basis.
//!
//! Module map:
//! - [`ring`]: the [`Ring`] trait and the rings `Z`, `Q`, `F_p`
//! - [`linalg`]: fraction-free determinants and solves
//! - [`poly`]: polynomials, synthetic division, root multiplicities
//! - [`hasse`]: divided derivatives and their identities
//! - [`seq`]: sequence prefixes, shifts, the pairing with polynomials
//! - [`recurrence`]: membership, extension, solution bases, representations
//! - [`fastval`]: N-th term via `x^N mod p`

pub mod error;
pub mod fastval;
pub mod hasse;
pub mod linalg;
pub mod poly;
pub mod recurrence;
pub mod ring;
pub mod sample;
pub mod seq;

pub use error::{Error, Result};
pub use fastval::{term, ModPowContext};
pub use hasse::{
    binomial_in_ring, check_commutator, check_composition, check_leibniz, divided_derivative,
    divided_derivative_taylor, BinomialTable,
};
pub use linalg::{determinant, fraction_solve, FractionSolution};
pub use poly::{Poly, RootCheck, RootData};
pub use recurrence::{
    build_basis, casoratian_det, check_membership, extend, represent, Membership, RecurrenceSpec,
    Representation, SolutionBasis,
};
pub use ring::{Fraction, Integers, PrimeField, Rationals, Ring, RingDescriptor};
pub use sample::RandomElement;
pub use seq::{
    basis_seq_prefix, check_seq_commutator, geometric_prefix, lower, BasisSeq, PrefixSeq,
};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
