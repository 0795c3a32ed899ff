//! Sequences over `k`, realized as finite prefixes `s_0 .. s_{m-1}`.
//!
//! Sequences pair with polynomials through `<s, Σ c_i x^i> = Σ c_i s_i`.
//! Under this pairing multiplication by `x` is adjoint to the left shift `L`
//! (drop the first term) and `δ^n` is adjoint to `D^n`, with
//! `(D^n s)_i = C(i, n) s_{i-n}`. Applying `L` shortens a prefix by one term;
//! every other operation preserves length.

use crate::error::{Error, Result};
use crate::hasse::choose;
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixSeq<R: Ring> {
    ring: R,
    terms: Vec<R::Elem>,
}

impl<R: Ring> PrefixSeq<R> {
    pub fn new(ring: R, terms: Vec<R::Elem>) -> Self {
        PrefixSeq { ring, terms }
    }

    pub fn from_i64s(ring: R, terms: &[i64]) -> Self {
        let terms = terms.iter().map(|&t| ring.from_i64(t)).collect();
        PrefixSeq { ring, terms }
    }

    pub fn parse<S: AsRef<str>>(ring: R, terms: &[S]) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|t| ring.parse_elem(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PrefixSeq { ring, terms })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|t| self.ring.format_elem(t))
            .collect()
    }

    pub fn zeros(ring: R, len: usize) -> Self {
        let terms = vec![ring.zero(); len];
        PrefixSeq { ring, terms }
    }

    /// Rebuilds a prefix from its pairings with the monomials `x^i`.
    pub fn from_monomial_pairings<F>(ring: R, len: usize, mut pairing: F) -> Self
    where
        F: FnMut(&Poly<R>) -> R::Elem,
    {
        let terms = (0..len)
            .map(|i| pairing(&Poly::monomial(ring.clone(), ring.one(), i)))
            .collect();
        PrefixSeq { ring, terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn terms(&self) -> &[R::Elem] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<R::Elem> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&R::Elem> {
        self.terms.get(i)
    }

    pub fn truncate(&self, len: usize) -> Self {
        PrefixSeq {
            ring: self.ring.clone(),
            terms: self.terms[..len.min(self.terms.len())].to_vec(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let terms = self.terms.iter().map(|t| self.ring.mul(t, c)).collect();
        PrefixSeq {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(PrefixSeq {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Termwise sum on the common prefix.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    /// Termwise difference on the common prefix.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    /// `<s, p> = Σ c_i s_i`.
    pub fn pairing(&self, p: &Poly<R>) -> Result<R::Elem> {
        if self.ring != *p.ring() {
            return Err(Error::RingMismatch);
        }
        let needed = p.coeffs().len();
        if needed > self.terms.len() {
            return Err(Error::InsufficientPrefix {
                needed,
                available: self.terms.len(),
            });
        }
        Ok(self.ring.dot(p.coeffs().iter().zip(&self.terms)))
    }

    /// `L^n s`: `(L^n s)_i = s_{i+n}`.
    pub fn shift(&self, n: usize) -> Result<Self> {
        if n > self.terms.len() {
            return Err(Error::InsufficientPrefix {
                needed: n,
                available: self.terms.len(),
            });
        }
        Ok(PrefixSeq {
            ring: self.ring.clone(),
            terms: self.terms[n..].to_vec(),
        })
    }

    /// `(L - alpha) s`, one term shorter. An empty prefix stays empty.
    pub fn shift_sub(&self, alpha: &R::Elem) -> Self {
        let r = &self.ring;
        let terms = self
            .terms
            .windows(2)
            .map(|w| r.sub(&w[1], &r.mul(alpha, &w[0])))
            .collect();
        PrefixSeq {
            ring: r.clone(),
            terms,
        }
    }

    /// `D^n s`: `(D^n s)_i = C(i, n) s_{i-n}`, zero for `i < n`.
    pub fn divided_adjoint(&self, n: usize) -> Self {
        let r = &self.ring;
        let terms = (0..self.terms.len())
            .map(|i| {
                if i < n {
                    r.zero()
                } else {
                    r.mul(&r.from_int(&choose(i, n)), &self.terms[i - n])
                }
            })
            .collect();
        PrefixSeq {
            ring: r.clone(),
            terms,
        }
    }
}

/// First `len` terms of `s(alpha)`, `s(alpha)_i = alpha^i`.
pub fn geometric_prefix<R: Ring>(ring: &R, alpha: &R::Elem, len: usize) -> PrefixSeq<R> {
    let mut terms = Vec::with_capacity(len);
    let mut power = ring.one();
    for _ in 0..len {
        let next = ring.mul(&power, alpha);
        terms.push(power);
        power = next;
    }
    PrefixSeq::new(ring.clone(), terms)
}

/// The sequence `s(alpha, n)` with `s(alpha, n)_i = C(i, n) alpha^{i-n}`
/// (zero for `i < n`).
///
/// In characteristic zero this is `i^n alpha^i` up to a change of basis; in
/// characteristic `p` only this divided form still solves the recurrences
/// with repeated roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSeq<R: Ring> {
    pub alpha: R::Elem,
    pub order: usize,
}

impl<R: Ring> BasisSeq<R> {
    pub fn new(alpha: R::Elem, order: usize) -> Self {
        BasisSeq { alpha, order }
    }

    pub fn term(&self, ring: &R, i: usize) -> R::Elem {
        if i < self.order {
            return ring.zero();
        }
        let power = ring.pow(&self.alpha, (i - self.order) as u64);
        ring.mul(&ring.from_int(&choose(i, self.order)), &power)
    }

    pub fn prefix(&self, ring: &R, len: usize) -> PrefixSeq<R> {
        let n = self.order;
        let mut terms = vec![ring.zero(); n.min(len)];
        let mut power = ring.one();
        for i in n..len {
            terms.push(ring.mul(&ring.from_int(&choose(i, n)), &power));
            power = ring.mul(&power, &self.alpha);
        }
        PrefixSeq::new(ring.clone(), terms)
    }
}

/// First `len` terms of `s(alpha, n)`.
pub fn basis_seq_prefix<R: Ring>(ring: &R, seq: &BasisSeq<R>, len: usize) -> PrefixSeq<R> {
    seq.prefix(ring, len)
}

/// Checks `(L - alpha) D^n s - D^n (L - alpha) s == D^{n-1} s` on the
/// first `len(s) - 1` terms, with `D^{-1} = 0`.
pub fn check_seq_commutator<R: Ring>(s: &PrefixSeq<R>, alpha: &R::Elem, n: usize) -> bool {
    let lhs = s
        .divided_adjoint(n)
        .shift_sub(alpha)
        .sub(&s.shift_sub(alpha).divided_adjoint(n))
        .expect("same ring");
    let len = lhs.len();
    let rhs = match n {
        0 => PrefixSeq::zeros(s.ring().clone(), len),
        _ => s.divided_adjoint(n - 1).truncate(len),
    };
    lhs == rhs
}

/// Applies `(L - alpha)` `steps` times to `s(alpha, order)` and returns the
/// first `len` terms. Equals `s(alpha, order - steps)`.
pub fn lower<R: Ring>(
    ring: &R,
    alpha: &R::Elem,
    order: usize,
    steps: usize,
    len: usize,
) -> Result<PrefixSeq<R>> {
    if steps > order {
        return Err(Error::OutOfRange { steps, order });
    }
    let mut s = BasisSeq::new(alpha.clone(), order).prefix(ring, len + steps);
    for _ in 0..steps {
        s = s.shift_sub(alpha);
    }
    Ok(s)
}
