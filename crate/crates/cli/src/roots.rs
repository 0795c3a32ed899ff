//! Exhaustive root search over small prime fields. The library itself never
//! searches for roots; this only helps prepare the `roots` entry of a
//! problem file.

use hasserec::{Poly, PrimeField, Ring, RingDescriptor};
use serde::Serialize;

use crate::problem::{ElemText, ProblemFile};
use crate::{Failure, Output};

/// Largest modulus (exclusive) accepted by `find-roots`.
pub const SEARCH_LIMIT: u64 = 1 << 20;

/// Roots in increasing order with their multiplicities.
pub type Roots = Vec<(u64, usize)>;

/// Every root of `p` in `F_p` with its multiplicity, plus the rootless
/// cofactor.
pub fn search(p: &Poly<PrimeField>) -> hasserec::Result<(Roots, Poly<PrimeField>)> {
    let field = *p.ring();
    let mut rest = p.clone();
    let mut found = Vec::new();
    for alpha in 0..field.modulus() {
        if rest.degree() == Some(0) {
            break;
        }
        if !field.is_zero(&rest.eval(&alpha)) {
            continue;
        }
        let (mu, cofactor) = rest.multiplicity(&alpha)?;
        found.push((alpha, mu));
        rest = cofactor;
    }
    Ok((found, rest))
}

#[derive(Serialize)]
struct RootsReport {
    roots: Vec<(ElemText, usize)>,
    all_roots_in_k: bool,
    remainder: Vec<String>,
}

pub fn find_roots(file: &ProblemFile) -> Result<Output, Failure> {
    let RingDescriptor::PrimeField(p) = &file.ring else {
        return Err(Failure::Invalid(
            "find-roots only searches prime fields".into(),
        ));
    };
    let field = PrimeField::new(p)?;
    if field.modulus() >= SEARCH_LIMIT {
        return Err(Failure::Invalid(format!(
            "find-roots needs a modulus below {SEARCH_LIMIT}"
        )));
    }
    let coeffs: Vec<&str> = file.char_poly.iter().map(|c| c.0.as_str()).collect();
    let poly = Poly::parse(field, &coeffs)?;
    if !poly.is_monic() {
        return Err(hasserec::Error::NotMonic.into());
    }
    let (found, rest) = search(&poly)?;
    let report = RootsReport {
        roots: found
            .into_iter()
            .map(|(a, mu)| (ElemText(a.to_string()), mu))
            .collect(),
        all_roots_in_k: rest.degree() == Some(0),
        remainder: rest.to_strings(),
    };
    Ok(Output::ok(
        serde_json::to_string(&report).expect("serializable"),
    ))
}
