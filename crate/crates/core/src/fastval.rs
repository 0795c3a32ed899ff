//! N-th term of a recurrence in `O(n^2 log N)` ring operations.
//!
//! For a solution `s` of `p(L) s = 0` and any polynomial `q`,
//! `<s, p q> = <p(L) s, q> = 0`, so pairing `s` with `x^N` only depends on
//! `x^N mod p`. Hence `s_N = <s, x^N mod p>`, which needs just the first `n`
//! terms.
//!
//! Multiplication is schoolbook; an FFT product would slot in behind
//! [`ModPowContext::mul_mod`].

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::recurrence::RecurrenceSpec;
use crate::ring::Ring;
use crate::seq::PrefixSeq;

/// Arithmetic in `k[x] / (p)` for a fixed monic `p`.
#[derive(Debug, Clone)]
pub struct ModPowContext<R: Ring> {
    spec: RecurrenceSpec<R>,
    /// `x^n ≡ Σ tail_j x^j`, i.e. the negated lower coefficients of `p`.
    tail: Vec<R::Elem>,
}

impl<R: Ring> ModPowContext<R> {
    pub fn new(spec: &RecurrenceSpec<R>) -> Self {
        let ring = spec.ring();
        let n = spec.order();
        let tail = spec.char_poly().coeffs()[..n]
            .iter()
            .map(|c| ring.neg(c))
            .collect();
        ModPowContext {
            spec: spec.clone(),
            tail,
        }
    }

    pub fn spec(&self) -> &RecurrenceSpec<R> {
        &self.spec
    }

    fn order(&self) -> usize {
        self.tail.len()
    }

    /// Folds every coefficient of degree `>= n` back down, leaving a vector
    /// of exactly `n` coefficients.
    fn reduce_in_place(&self, coeffs: &mut Vec<R::Elem>) {
        let ring = self.spec.ring();
        let n = self.order();
        for k in (n..coeffs.len()).rev() {
            let top = std::mem::replace(&mut coeffs[k], ring.zero());
            if ring.is_zero(&top) {
                continue;
            }
            for (j, t) in self.tail.iter().enumerate() {
                let slot = &mut coeffs[k - n + j];
                *slot = ring.add(slot, &ring.mul(&top, t));
            }
        }
        coeffs.resize(n, ring.zero());
    }

    /// `q mod p` as a dense residue of length `n`.
    fn residue(&self, q: &Poly<R>) -> Vec<R::Elem> {
        let mut coeffs = q.coeffs().to_vec();
        self.reduce_in_place(&mut coeffs);
        coeffs
    }

    fn mul_residues(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let ring = self.spec.ring();
        let n = self.order();
        let mut prod = vec![ring.zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if ring.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = ring.add(&prod[i + j], &ring.mul(x, y));
            }
        }
        self.reduce_in_place(&mut prod);
        prod
    }

    fn mul_x_residue(&self, a: &mut Vec<R::Elem>) {
        let ring = self.spec.ring();
        a.insert(0, ring.zero());
        self.reduce_in_place(a);
    }

    fn to_poly(&self, coeffs: Vec<R::Elem>) -> Poly<R> {
        Poly::new(self.spec.ring().clone(), coeffs)
    }

    /// `q mod p`
    pub fn reduce(&self, q: &Poly<R>) -> Result<Poly<R>> {
        if q.ring() != self.spec.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(self.to_poly(self.residue(q)))
    }

    /// `a · b mod p`
    pub fn mul_mod(&self, a: &Poly<R>, b: &Poly<R>) -> Result<Poly<R>> {
        let (a, b) = (self.reduce(a)?, self.reduce(b)?);
        let mut ra = a.into_coeffs();
        let mut rb = b.into_coeffs();
        let zero = self.spec.ring().zero();
        ra.resize(self.order(), zero.clone());
        rb.resize(self.order(), zero);
        Ok(self.to_poly(self.mul_residues(&ra, &rb)))
    }

    /// `x^N mod p`, by left-to-right square and multiply.
    pub fn polymod_pow(&self, exp: &BigUint) -> Poly<R> {
        let ring = self.spec.ring();
        let mut acc = vec![ring.zero(); self.order()];
        acc[0] = ring.one();
        for bit in (0..exp.bits()).rev() {
            acc = self.mul_residues(&acc, &acc);
            if exp.bit(bit) {
                self.mul_x_residue(&mut acc);
            }
        }
        self.to_poly(acc)
    }

    /// `s_N` for the solution with first terms `init`.
    pub fn term(&self, init: &PrefixSeq<R>, exp: &BigUint) -> Result<R::Elem> {
        let n = self.order();
        if init.len() != n {
            return Err(Error::BadInitLength {
                expected: n,
                got: init.len(),
            });
        }
        init.pairing(&self.polymod_pow(exp))
    }
}

/// `s_N` for the solution of `spec` with first terms `init`.
pub fn term<R: Ring>(
    spec: &RecurrenceSpec<R>,
    init: &PrefixSeq<R>,
    exp: &BigUint,
) -> Result<R::Elem> {
    ModPowContext::new(spec).term(init, exp)
}
