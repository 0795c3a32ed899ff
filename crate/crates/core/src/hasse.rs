//! Divided (Hasse) derivatives on `k[x]`.
//!
//! `δ^n p` is the coefficient of `y^n` in `p(x + y)`. On monomials this gives
//! `δ^n x^i = C(i, n) x^{i-n}`, where the binomial is computed in `Z` and
//! only then mapped into the ring, so nothing ever divides by a factorial and
//! the operators make sense in every characteristic.
//!
//! Binomials are indexed here the way the derivative formulas use them:
//! `bico(a, b) = C(a + b, b)`, extended by zero whenever `a` or `b` is
//! negative.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::poly::Poly;
use crate::ring::Ring;

/// Rows of Pascal's triangle, grown on demand.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

/// Rows above this size are not cached; lookups fall back to a product
/// formula.
const TABLE_LIMIT: usize = 512;

impl Default for BinomialTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BinomialTable {
    pub fn new() -> Self {
        BinomialTable {
            rows: vec![vec![BigInt::one()]],
        }
    }

    fn grow_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    /// `C(n, k)`, zero when `k > n`.
    pub fn choose(&mut self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        if n > TABLE_LIMIT {
            return choose_by_product(n, k);
        }
        self.grow_to(n);
        self.rows[n][k].clone()
    }

    /// `bico(a, b) = C(a + b, b)`, zero if either index is negative.
    pub fn bico(&mut self, a: i64, b: i64) -> BigInt {
        if a < 0 || b < 0 {
            return BigInt::zero();
        }
        self.choose((a + b) as usize, b as usize)
    }

    /// Number of cached rows.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Row `n` of the triangle, if cached.
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }
}

fn choose_by_product(n: usize, k: usize) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * BigInt::from(n - k + j) / BigInt::from(j);
    }
    acc
}

thread_local! {
    static TABLE: RefCell<BinomialTable> = RefCell::new(BinomialTable::new());
}

/// `C(n, k)` from this thread's private table.
pub fn choose(n: usize, k: usize) -> BigInt {
    TABLE.with(|t| t.borrow_mut().choose(n, k))
}

/// Image of `bico(a, b) = C(a + b, b)` under `Z -> k`.
pub fn binomial_in_ring<R: Ring>(ring: &R, a: i64, b: i64) -> R::Elem {
    let z = TABLE.with(|t| t.borrow_mut().bico(a, b));
    ring.from_int(&z)
}

/// `δ^n p`, computed coefficientwise: the coefficient of `x^{i-n}` is
/// `C(i, n) c_i`.
pub fn divided_derivative<R: Ring>(p: &Poly<R>, n: usize) -> Poly<R> {
    let ring = p.ring();
    if p.coeffs().len() <= n {
        return Poly::zero(ring.clone());
    }
    let coeffs = p.coeffs()[n..]
        .iter()
        .enumerate()
        .map(|(j, c)| ring.mul(&ring.from_int(&choose(j + n, n)), c))
        .collect();
    Poly::new(ring.clone(), coeffs)
}

/// `δ^n p` straight from the definition: expand `p(x + y)` by Horner's rule
/// in `x + y` and read off the coefficient of `y^n`.
///
/// Uses only ring additions, no binomials; kept as an independent check on
/// [`divided_derivative`].
pub fn divided_derivative_taylor<R: Ring>(p: &Poly<R>, n: usize) -> Poly<R> {
    let ring = p.ring();
    let d = match p.degree() {
        Some(d) if d >= n => d,
        _ => return Poly::zero(ring.clone()),
    };
    // grid[j][i] is the coefficient of x^i y^j
    let mut grid: Vec<Vec<R::Elem>> = vec![vec![ring.zero(); d + 1]; d + 1];
    for c in p.coeffs().iter().rev() {
        // multiply by (x + y)
        for j in (0..=d).rev() {
            for i in (0..=d).rev() {
                let from_x = if i > 0 {
                    grid[j][i - 1].clone()
                } else {
                    ring.zero()
                };
                let from_y = if j > 0 {
                    grid[j - 1][i].clone()
                } else {
                    ring.zero()
                };
                grid[j][i] = ring.add(&from_x, &from_y);
            }
        }
        grid[0][0] = ring.add(&grid[0][0], c);
    }
    Poly::new(ring.clone(), grid.swap_remove(n))
}

/// Leibniz rule: `δ^n(fg) == Σ_{i+j=n} δ^i f · δ^j g`.
pub fn check_leibniz<R: Ring>(f: &Poly<R>, g: &Poly<R>, n: usize) -> Result<bool> {
    let lhs = divided_derivative(&f.mul(g)?, n);
    let mut rhs = Poly::zero(f.ring().clone());
    for i in 0..=n {
        let term = divided_derivative(f, i).mul(&divided_derivative(g, n - i))?;
        rhs = rhs.add(&term)?;
    }
    Ok(lhs == rhs)
}

/// Composition rule: `δ^n(δ^m p) == bico(m, n) · δ^{n+m} p`.
pub fn check_composition<R: Ring>(p: &Poly<R>, n: usize, m: usize) -> bool {
    let lhs = divided_derivative(&divided_derivative(p, m), n);
    let factor = binomial_in_ring(p.ring(), m as i64, n as i64);
    let rhs = divided_derivative(p, n + m).scale(&factor);
    lhs == rhs
}

/// Commutator with multiplication by `x`: `δ^n(x p) - x δ^n(p) == δ^{n-1} p`,
/// where `δ^{-1} = 0`.
pub fn check_commutator<R: Ring>(p: &Poly<R>, n: usize) -> bool {
    let lhs = divided_derivative(&p.mul_x(), n)
        .sub(&divided_derivative(p, n).mul_x())
        .expect("same ring");
    let rhs = match n {
        0 => Poly::zero(p.ring().clone()),
        _ => divided_derivative(p, n - 1),
    };
    lhs == rhs
}
