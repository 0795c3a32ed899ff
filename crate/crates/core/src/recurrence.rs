//! Linear recurrences with constant coefficients.
//!
//! A monic `p(x) = x^n + c_1 x^{n-1} + ... + c_n` encodes the relation
//! `s_i + c_1 s_{i-1} + ... + c_n s_{i-n} = 0` for all `i >= n`; its
//! solutions are exactly the kernel of `p(L)`. When `p` splits over the ring
//! as `Π (x - alpha_u)^{mu_u}`, the sequences `s(alpha_u, a)` with
//! `a < mu_u` are free generators of a submodule `S` of that kernel. Over a
//! field `S` is the whole kernel; over a general entire ring every solution
//! only lands in `S` after multiplication by a nonzero ring element, which
//! [`represent`] computes and certifies.

use crate::error::{Error, Result};
use crate::linalg::{determinant, fraction_solve};
use crate::poly::{Poly, RootData};
use crate::ring::{Fraction, Ring};
use crate::seq::{BasisSeq, PrefixSeq};

/// A recurrence given by its monic characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec<R: Ring> {
    char_poly: Poly<R>,
}

impl<R: Ring> RecurrenceSpec<R> {
    pub fn new(char_poly: Poly<R>) -> Result<Self> {
        if !char_poly.is_monic() {
            return Err(Error::NotMonic);
        }
        if char_poly.degree() == Some(0) {
            return Err(Error::ZeroDegree);
        }
        Ok(RecurrenceSpec { char_poly })
    }

    pub fn char_poly(&self) -> &Poly<R> {
        &self.char_poly
    }

    pub fn ring(&self) -> &R {
        self.char_poly.ring()
    }

    /// The order `n = deg p`.
    pub fn order(&self) -> usize {
        self.char_poly.coeffs().len() - 1
    }

    /// `c_k`, the coefficient of `x^{n-k}`; `c_0 = 1`.
    pub fn coefficient(&self, k: usize) -> R::Elem {
        self.char_poly.coeff(self.order() - k)
    }
}

/// Outcome of [`check_membership`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    pub ok: bool,
    pub first_violation: Option<usize>,
}

/// Verifies the recurrence at every index `n <= i < len(s)`.
pub fn check_membership<R: Ring>(spec: &RecurrenceSpec<R>, s: &PrefixSeq<R>) -> Result<Membership> {
    if spec.ring() != s.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = spec.ring();
    let p = spec.char_poly.coeffs();
    let first_violation = s
        .terms()
        .windows(p.len())
        .position(|w| !ring.is_zero(&ring.dot(p.iter().zip(w))))
        .map(|start| start + spec.order());
    Ok(Membership {
        ok: first_violation.is_none(),
        first_violation,
    })
}

/// The unique solution starting with `init` (exactly `n` terms), truncated
/// to `target_len`.
pub fn extend<R: Ring>(
    spec: &RecurrenceSpec<R>,
    init: &PrefixSeq<R>,
    target_len: usize,
) -> Result<PrefixSeq<R>> {
    let n = spec.order();
    if init.len() != n {
        return Err(Error::BadInitLength {
            expected: n,
            got: init.len(),
        });
    }
    if spec.ring() != init.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = spec.ring();
    let lower = &spec.char_poly.coeffs()[..n];
    let mut terms = init.terms().to_vec();
    terms.reserve(target_len.saturating_sub(n));
    while terms.len() < target_len {
        let window = &terms[terms.len() - n..];
        let next = ring.neg(&ring.dot(lower.iter().zip(window)));
        terms.push(next);
    }
    terms.truncate(target_len);
    Ok(PrefixSeq::new(ring.clone(), terms))
}

/// The generators `s(alpha_u, a)`, `0 <= a < mu_u`, in root order then
/// derivative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionBasis<R: Ring> {
    spec: RecurrenceSpec<R>,
    roots: RootData<R>,
    elements: Vec<BasisSeq<R>>,
    casoratian: R::Elem,
}

impl<R: Ring> SolutionBasis<R> {
    pub fn spec(&self) -> &RecurrenceSpec<R> {
        &self.spec
    }

    pub fn roots(&self) -> &RootData<R> {
        &self.roots
    }

    pub fn elements(&self) -> &[BasisSeq<R>] {
        &self.elements
    }

    /// Determinant of the leading `n × n` block of the basis sequences.
    pub fn casoratian(&self) -> &R::Elem {
        &self.casoratian
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Builds the solution basis of a recurrence whose characteristic
/// polynomial splits over the ring with the given roots.
pub fn build_basis<R: Ring>(
    spec: &RecurrenceSpec<R>,
    roots: &RootData<R>,
) -> Result<SolutionBasis<R>> {
    let ring = spec.ring();
    let check = spec.char_poly.validate_roots(roots)?;
    if !check.all_roots_in_k {
        return Err(Error::NotAllRootsInK(check.remainder.degree().unwrap_or(0)));
    }
    let elements: Vec<BasisSeq<R>> = roots
        .iter()
        .flat_map(|(alpha, mu)| (0..*mu).map(move |a| BasisSeq::new(alpha.clone(), a)))
        .collect();

    let n = spec.order();
    for e in &elements {
        let membership = check_membership(spec, &e.prefix(ring, 3 * n))?;
        if let Some(i) = membership.first_violation {
            return Err(Error::InternalInvariantBroken(format!(
                "s({}, {}) violates the recurrence at index {i}",
                ring.format_elem(&e.alpha),
                e.order
            )));
        }
    }
    let casoratian = determinant(ring, &casoratian_matrix(ring, &elements, n))?;
    if ring.is_zero(&casoratian) {
        return Err(Error::InternalInvariantBroken(
            "basis sequences are linearly dependent".into(),
        ));
    }
    Ok(SolutionBasis {
        spec: spec.clone(),
        roots: roots.clone(),
        elements,
        casoratian,
    })
}

/// `M[i][j] = (basis_j)_i` for `i < n`.
fn casoratian_matrix<R: Ring>(ring: &R, elements: &[BasisSeq<R>], n: usize) -> Vec<Vec<R::Elem>> {
    let columns: Vec<PrefixSeq<R>> = elements.iter().map(|e| e.prefix(ring, n)).collect();
    (0..n)
        .map(|i| columns.iter().map(|c| c.terms()[i].clone()).collect())
        .collect()
}

/// Determinant of the matrix of the first `n` terms of the basis sequences,
/// recomputed from scratch.
pub fn casoratian_det<R: Ring>(basis: &SolutionBasis<R>) -> Result<R::Elem> {
    let ring = basis.spec.ring();
    determinant(
        ring,
        &casoratian_matrix(ring, &basis.elements, basis.spec.order()),
    )
}

/// Coordinates of a solution with respect to a [`SolutionBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<R: Ring> {
    /// Reduced coordinates over the fraction field, one per basis element.
    pub coords: Vec<Fraction<R>>,
    /// Clearing element `d`: `d · s` lies in the span of the basis.
    pub denominator: R::Elem,
    /// `d · coords`, exact ring elements.
    pub scaled: Vec<R::Elem>,
}

impl<R: Ring> Representation<R> {
    pub fn is_integral(&self, ring: &R) -> bool {
        self.coords.iter().all(|c| c.is_integral(ring))
    }
}

/// Expresses a solution in the basis.
///
/// The clearing element is the Casoratian determinant, reduced to 1 over a
/// field. The identity `d · s_i = Σ (d · coord_j) (basis_j)_i` is replayed
/// over the whole prefix before returning.
pub fn represent<R: Ring>(basis: &SolutionBasis<R>, s: &PrefixSeq<R>) -> Result<Representation<R>> {
    let spec = &basis.spec;
    let ring = spec.ring();
    let n = spec.order();
    if s.len() < n {
        return Err(Error::InsufficientPrefix {
            needed: n,
            available: s.len(),
        });
    }
    if let Some(i) = check_membership(spec, s)?.first_violation {
        return Err(Error::MembershipViolation(i));
    }

    let matrix = casoratian_matrix(ring, &basis.elements, n);
    let solved = fraction_solve(ring, &matrix, &s.terms()[..n]).map_err(|e| match e {
        Error::SingularSystem => {
            Error::InternalInvariantBroken("Casoratian of a valid basis vanished".into())
        }
        other => other,
    })?;

    let (denominator, scaled) = if ring.is_field() {
        let coords = solved
            .solution
            .iter()
            .map(|c| c.numerator().clone())
            .collect();
        (ring.one(), coords)
    } else {
        (solved.det, solved.scaled)
    };

    let columns: Vec<PrefixSeq<R>> = basis
        .elements
        .iter()
        .map(|e| e.prefix(ring, s.len()))
        .collect();
    for (i, term) in s.terms().iter().enumerate() {
        let rebuilt = ring.dot(scaled.iter().zip(columns.iter().map(|c| &c.terms()[i])));
        if ring.mul(&denominator, term) != rebuilt {
            return Err(Error::InternalInvariantBroken(format!(
                "representation replay failed at index {i}"
            )));
        }
    }

    Ok(Representation {
        coords: solved.solution,
        denominator,
        scaled,
    })
}
