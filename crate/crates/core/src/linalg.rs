//! Fraction-free (Bareiss) elimination over an entire ring.
//!
//! Every intermediate entry is a minor of the input, so all divisions are
//! exact in the ring and no fraction arithmetic is needed until the very end.

use crate::error::{Error, Result};
use crate::ring::{Fraction, Ring};

/// Solution of a square system over the fraction field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionSolution<R: Ring> {
    /// Reduced coordinates; each denominator divides `det`.
    pub solution: Vec<Fraction<R>>,
    /// Determinant of the coefficient matrix.
    pub det: R::Elem,
    /// `det · solution`, exact ring elements.
    pub scaled: Vec<R::Elem>,
}

/// Forward elimination in place on `rows` (n rows, `width >= n` columns).
/// Returns the permuted determinant and whether an odd number of swaps
/// occurred, or `None` when the leading n×n block is singular.
fn eliminate<R: Ring>(ring: &R, rows: &mut [Vec<R::Elem>], n: usize) -> Option<(R::Elem, bool)> {
    let width = rows.first().map_or(0, Vec::len);
    let mut prev = ring.one();
    let mut odd = false;
    for k in 0..n {
        let pivot = (k..n).find(|&r| !ring.is_zero(&rows[r][k]))?;
        if pivot != k {
            rows.swap(pivot, k);
            odd = !odd;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let t = ring.sub(
                    &ring.mul(&rows[k][k], &rows[i][j]),
                    &ring.mul(&rows[i][k], &rows[k][j]),
                );
                rows[i][j] = ring
                    .divide_exact(&t, &prev)
                    .expect("Bareiss quotient is exact in an entire ring");
            }
            rows[i][k] = ring.zero();
        }
        prev = rows[k][k].clone();
    }
    Some((prev, odd))
}

fn check_square<R: Ring>(matrix: &[Vec<R::Elem>]) -> Result<usize> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::Shape);
    }
    Ok(n)
}

/// Determinant of a square matrix.
pub fn determinant<R: Ring>(ring: &R, matrix: &[Vec<R::Elem>]) -> Result<R::Elem> {
    let n = check_square::<R>(matrix)?;
    let mut rows = matrix.to_vec();
    Ok(match eliminate(ring, &mut rows, n) {
        None => ring.zero(),
        Some((d, false)) => d,
        Some((d, true)) => ring.neg(&d),
    })
}

/// Solves `matrix · x = rhs` over the fraction field of `ring`.
pub fn fraction_solve<R: Ring>(
    ring: &R,
    matrix: &[Vec<R::Elem>],
    rhs: &[R::Elem],
) -> Result<FractionSolution<R>> {
    let n = check_square::<R>(matrix)?;
    if rhs.len() != n {
        return Err(Error::Shape);
    }
    let mut rows: Vec<Vec<R::Elem>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut row = row.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let (permuted_det, odd) = eliminate(ring, &mut rows, n).ok_or(Error::SingularSystem)?;

    // Back substitution for y = D·x, D the permuted determinant; y is integral
    // by Cramer's rule so each quotient is exact.
    let mut y = vec![ring.zero(); n];
    for i in (0..n).rev() {
        let mut acc = ring.mul(&permuted_det, &rows[i][n]);
        for j in i + 1..n {
            acc = ring.sub(&acc, &ring.mul(&rows[i][j], &y[j]));
        }
        y[i] = ring.divide_exact(&acc, &rows[i][i])?;
    }

    let (det, scaled) = if odd {
        (
            ring.neg(&permuted_det),
            y.iter().map(|v| ring.neg(v)).collect(),
        )
    } else {
        (permuted_det, y)
    };
    let solution = scaled
        .iter()
        .map(|v| Fraction::new(ring, v, &det))
        .collect::<Result<Vec<_>>>()?;
    Ok(FractionSolution {
        solution,
        det,
        scaled,
    })
}
