//! Random elements, polynomials and recurrences for property sweeps and
//! benchmarks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::poly::{Poly, RootData};
use crate::recurrence::RecurrenceSpec;
use crate::ring::{Integers, PrimeField, Rationals, Ring};
use crate::seq::PrefixSeq;

/// Draws small random elements of a ring.
///
/// `bound` caps the magnitude of integer numerators and denominators; prime
/// fields ignore it and sample uniformly.
pub trait RandomElement: Ring {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G, bound: i64) -> Self::Elem;

    fn random_nonzero<G: Rng + ?Sized>(&self, rng: &mut G, bound: i64) -> Self::Elem {
        loop {
            let a = self.random_elem(rng, bound);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }
}

impl RandomElement for Integers {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G, bound: i64) -> BigInt {
        BigInt::from(rng.random_range(-bound..=bound))
    }
}

impl RandomElement for Rationals {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G, bound: i64) -> BigRational {
        let num = rng.random_range(-bound..=bound);
        let den = rng.random_range(1..=bound.max(1));
        BigRational::new(num.into(), den.into())
    }
}

impl RandomElement for PrimeField {
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G, _bound: i64) -> u64 {
        rng.random_range(0..self.modulus())
    }
}

/// A random characteristic polynomial that splits over the ring: returns the
/// roots and the recurrence `Π (x - alpha_u)^{mu_u}` of degree `1..=max_degree`.
pub fn random_split_spec<R, G>(
    ring: &R,
    rng: &mut G,
    max_degree: usize,
    bound: i64,
) -> (RootData<R>, RecurrenceSpec<R>)
where
    R: RandomElement,
    G: Rng + ?Sized,
{
    let degree = rng.random_range(1..=max_degree.max(1));
    let mut entries: Vec<(R::Elem, usize)> = Vec::new();
    for _ in 0..degree {
        let alpha = ring.random_elem(rng, bound);
        match entries.iter_mut().find(|(beta, _)| *beta == alpha) {
            Some((_, mu)) => *mu += 1,
            None => entries.push((alpha, 1)),
        }
    }
    let roots = RootData::new(ring, entries).expect("roots are distinct by construction");
    let spec = RecurrenceSpec::new(Poly::from_roots(ring.clone(), &roots)).expect("monic");
    (roots, spec)
}

/// A random monic recurrence of degree `1..=max_degree` with small
/// coefficients; it need not split.
pub fn random_spec<R, G>(ring: &R, rng: &mut G, max_degree: usize, bound: i64) -> RecurrenceSpec<R>
where
    R: RandomElement,
    G: Rng + ?Sized,
{
    let degree = rng.random_range(1..=max_degree.max(1));
    let mut coeffs: Vec<R::Elem> = (0..degree).map(|_| ring.random_elem(rng, bound)).collect();
    coeffs.push(ring.one());
    RecurrenceSpec::new(Poly::new(ring.clone(), coeffs)).expect("monic")
}

pub fn random_poly<R, G>(ring: &R, rng: &mut G, max_degree: usize, bound: i64) -> Poly<R>
where
    R: RandomElement,
    G: Rng + ?Sized,
{
    let len = rng.random_range(0..=max_degree + 1);
    Poly::new(
        ring.clone(),
        (0..len).map(|_| ring.random_elem(rng, bound)).collect(),
    )
}

pub fn random_prefix<R, G>(ring: &R, rng: &mut G, len: usize, bound: i64) -> PrefixSeq<R>
where
    R: RandomElement,
    G: Rng + ?Sized,
{
    PrefixSeq::new(
        ring.clone(),
        (0..len).map(|_| ring.random_elem(rng, bound)).collect(),
    )
}
