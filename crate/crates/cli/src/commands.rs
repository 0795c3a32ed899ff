use hasserec::{
    build_basis, check_membership, divided_derivative, extend as extend_seq,
    represent as represent_seq, BasisSeq, BigUint, Integers, Poly, PrefixSeq, PrimeField,
    Rationals, Ring, RingDescriptor,
};
use serde::Serialize;

use crate::problem::{to_texts, ElemText, Problem, ProblemFile};
use crate::{Failure, Output};

/// Above this index `term` over Z or Q needs `--allow-big`.
const BIG_INDEX: u64 = 100_000;

/// Runs `$body` with `$ring` bound to the concrete ring named by `$desc`.
macro_rules! with_ring {
    ($desc:expr, |$ring:ident| $body:expr) => {
        match $desc {
            RingDescriptor::Integers => {
                let $ring = Integers;
                $body
            }
            RingDescriptor::Rationals => {
                let $ring = Rationals;
                $body
            }
            RingDescriptor::PrimeField(p) => {
                let $ring = PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn require<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T, Failure> {
    field
        .as_ref()
        .ok_or_else(|| Failure::Invalid(format!("problem file has no `{name}`")))
}

#[derive(Serialize)]
struct CheckReport {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<usize>,
}

fn violation(index: usize) -> Output {
    Output {
        line: json(&CheckReport {
            ok: false,
            violation: Some(index),
        }),
        code: 2,
    }
}

pub fn check(file: &ProblemFile) -> Result<Output, Failure> {
    with_ring!(&file.ring, |ring| {
        let p = Problem::parse(ring, file)?;
        let seq = require(&p.seq, "seq")?;
        let m = check_membership(&p.spec, seq)?;
        Ok(match m.first_violation {
            Some(i) => violation(i),
            None => Output::ok(json(&CheckReport {
                ok: true,
                violation: None,
            })),
        })
    })
}

pub fn extend(file: &ProblemFile, to: usize) -> Result<Output, Failure> {
    with_ring!(&file.ring, |ring| {
        let p = Problem::parse(ring, file)?;
        let seq = extend_seq(&p.spec, require(&p.init, "init")?, to)?;
        let mut out = file.clone();
        out.seq = Some(to_texts(seq.to_strings()));
        Ok(Output::ok(json(&out)))
    })
}

#[derive(Serialize)]
struct BasisEntry {
    alpha: String,
    order: usize,
    prefix: Vec<String>,
}

#[derive(Serialize)]
struct BasisReport {
    basis: Vec<BasisEntry>,
    casoratian: String,
}

pub fn basis(file: &ProblemFile, len: Option<usize>) -> Result<Output, Failure> {
    with_ring!(&file.ring, |ring| {
        let p = Problem::parse(ring, file)?;
        let basis = build_basis(&p.spec, require(&p.roots, "roots")?)?;
        let len = len.unwrap_or(2 * p.spec.order());
        let entries = basis
            .elements()
            .iter()
            .map(|e| BasisEntry {
                alpha: p.ring.format_elem(&e.alpha),
                order: e.order,
                prefix: e.prefix(&p.ring, len).to_strings(),
            })
            .collect();
        Ok(Output::ok(json(&BasisReport {
            basis: entries,
            casoratian: p.ring.format_elem(basis.casoratian()),
        })))
    })
}

#[derive(Serialize)]
struct RepresentReport {
    coords: Vec<String>,
    denominator: String,
}

pub fn represent(file: &ProblemFile) -> Result<Output, Failure> {
    with_ring!(&file.ring, |ring| {
        let p = Problem::parse(ring, file)?;
        let basis = build_basis(&p.spec, require(&p.roots, "roots")?)?;
        let seq = match (&p.seq, &p.init) {
            (Some(seq), _) => seq,
            (None, Some(init)) => init,
            (None, None) => {
                return Err(Failure::Invalid(
                    "problem file has no `seq` or `init`".into(),
                ))
            }
        };
        match represent_seq(&basis, seq) {
            Ok(rep) => Ok(Output::ok(json(&RepresentReport {
                coords: rep.coords.iter().map(|c| c.format(&p.ring)).collect(),
                denominator: p.ring.format_elem(&rep.denominator),
            }))),
            Err(hasserec::Error::MembershipViolation(i)) => Ok(violation(i)),
            Err(e) => Err(e.into()),
        }
    })
}

#[derive(Serialize)]
struct TermReport {
    term: String,
}

pub fn term(file: &ProblemFile, index: &BigUint, allow_big: bool) -> Result<Output, Failure> {
    let unbounded_growth = !matches!(file.ring, RingDescriptor::PrimeField(_));
    if unbounded_growth && !allow_big && *index > BigUint::from(BIG_INDEX) {
        return Err(Failure::Usage(format!(
            "N > {BIG_INDEX} over {} can produce huge output; pass --allow-big",
            file.ring
        )));
    }
    with_ring!(&file.ring, |ring| {
        let p = Problem::parse(ring, file)?;
        let value = hasserec::term(&p.spec, require(&p.init, "init")?, index)?;
        Ok(Output::ok(json(&TermReport {
            term: p.ring.format_elem(&value),
        })))
    })
}

pub fn hasse(desc: &RingDescriptor, coeffs: &[ElemText], order: usize) -> Result<Output, Failure> {
    let coeffs: Vec<&str> = coeffs.iter().map(|c| c.0.as_str()).collect();
    with_ring!(desc, |ring| {
        let p = Poly::parse(ring, &coeffs)?;
        Ok(Output::ok(json(
            &divided_derivative(&p, order).to_strings(),
        )))
    })
}

pub fn basis_seq(
    desc: &RingDescriptor,
    alpha: &str,
    order: usize,
    len: usize,
) -> Result<Output, Failure> {
    with_ring!(desc, |ring| {
        let alpha = ring.parse_elem(alpha)?;
        let prefix: PrefixSeq<_> = BasisSeq::new(alpha, order).prefix(&ring, len);
        Ok(Output::ok(json(&prefix.to_strings())))
    })
}
