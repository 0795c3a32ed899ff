//! Dense univariate polynomials over an entire ring, with division by linear
//! factors, root multiplicities and factorization against a supplied root
//! list.
//!
//! Coefficients are stored lowest degree first and trailing zeros are always
//! trimmed, so the zero polynomial has no coefficients.

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, coeffs)
    }

    /// Parses coefficient strings, lowest degree first.
    pub fn parse<S: AsRef<str>>(ring: R, coeffs: &[S]) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|c| ring.parse_elem(c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, coeffs))
    }

    /// Coefficient strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| self.ring.format_elem(c))
            .collect()
    }

    pub fn zero(ring: R) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Poly {
            ring,
            coeffs: vec![one],
        }
    }

    /// `c · x^deg`
    pub fn monomial(ring: R, c: R::Elem, deg: usize) -> Self {
        let mut coeffs = vec![ring.zero(); deg];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    /// The linear factor `x - alpha`.
    pub fn linear(ring: R, alpha: &R::Elem) -> Self {
        let coeffs = vec![ring.neg(alpha), ring.one()];
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.ring.is_one(c))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let r = &self.ring;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => r.add(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::new(r.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Poly {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let r = &self.ring;
        let mut coeffs = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = r.add(&coeffs[i + j], &r.mul(a, b));
            }
        }
        Ok(Self::new(r.clone(), coeffs))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Multiplication by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.ring.zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut sq = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq).expect("same ring");
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq).expect("same ring");
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, alpha: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, alpha), c))
    }

    /// Divides a monic polynomial by `x - alpha`, returning the monic quotient
    /// and the remainder `p(alpha)`.
    ///
    /// Runs the synthetic recurrence `d_i = alpha·d_{i-1} + c_i` over the
    /// coefficients from the top down.
    pub fn divide_linear(&self, alpha: &R::Elem) -> Result<(Self, R::Elem)> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        if self.degree() == Some(0) {
            return Err(Error::ZeroDegree);
        }
        let r = &self.ring;
        let mut top_down = self.coeffs.iter().rev();
        let mut d = top_down.next().cloned().expect("nonzero");
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        for c in top_down {
            quotient.push(d.clone());
            d = r.add(&r.mul(alpha, &d), c);
        }
        quotient.reverse();
        Ok((Self::new(r.clone(), quotient), d))
    }

    /// Largest `m` with `(x - alpha)^m` dividing `self`, and the cofactor `r`
    /// with `r(alpha) != 0`.
    ///
    /// Repeated synthetic division rather than derivative tests, which break
    /// down in positive characteristic.
    pub fn multiplicity(&self, alpha: &R::Elem) -> Result<(usize, Self)> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut m = 0;
        let mut rest = self.clone();
        while rest.degree() > Some(0) {
            let (q, rem) = rest.divide_linear(alpha)?;
            if !self.ring.is_zero(&rem) {
                break;
            }
            m += 1;
            rest = q;
        }
        Ok((m, rest))
    }

    /// Peels every claimed `(alpha, mu)` off the polynomial. The polynomial
    /// has all its roots in the ring exactly when the leftover factor is 1.
    pub fn validate_roots(&self, roots: &RootData<R>) -> Result<RootCheck<R>> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut rest = self.clone();
        for (alpha, claimed) in roots.iter() {
            let (computed, cofactor) = rest.multiplicity(alpha)?;
            if computed != *claimed {
                return Err(Error::MultiplicityMismatch {
                    root: self.ring.format_elem(alpha),
                    claimed: *claimed,
                    computed,
                });
            }
            rest = cofactor;
        }
        Ok(RootCheck {
            all_roots_in_k: rest.degree() == Some(0),
            remainder: rest,
        })
    }

    /// `Π (x - alpha_u)^{mu_u}`
    pub fn from_roots(ring: R, roots: &RootData<R>) -> Self {
        roots
            .iter()
            .fold(Self::one(ring.clone()), |acc, (alpha, mu)| {
                acc.mul(&Self::linear(ring.clone(), alpha).pow(*mu as u32))
                    .expect("same ring")
            })
    }
}

/// Distinct roots with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData<R: Ring> {
    entries: Vec<(R::Elem, usize)>,
}

impl<R: Ring> RootData<R> {
    pub fn new(ring: &R, entries: Vec<(R::Elem, usize)>) -> Result<Self> {
        for (i, (alpha, mu)) in entries.iter().enumerate() {
            if *mu == 0 {
                return Err(Error::ZeroMultiplicity(ring.format_elem(alpha)));
            }
            if entries[..i].iter().any(|(beta, _)| beta == alpha) {
                return Err(Error::DuplicateRoot(ring.format_elem(alpha)));
            }
        }
        Ok(RootData { entries })
    }

    pub fn empty() -> Self {
        RootData {
            entries: Vec::new(),
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (R::Elem, usize)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ mu_u`
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, mu)| mu).sum()
    }
}

/// Result of [`Poly::validate_roots`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCheck<R: Ring> {
    pub all_roots_in_k: bool,
    pub remainder: Poly<R>,
}
