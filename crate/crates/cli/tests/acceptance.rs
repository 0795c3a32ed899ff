//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every sweep is seeded, so reruns check the same instances.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::Instant;

use hasserec::sample::{random_poly, random_prefix, random_spec, random_split_spec, RandomElement};
use hasserec::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f(p: u64) -> PrimeField {
    PrimeField::with_modulus(p).unwrap()
}

/// Runs `body` once per acceptance ring; `seed` differs per ring.
macro_rules! for_each_ring {
    (|$ring:ident, $label:ident, $seed:ident| $body:expr) => {{
        let mut summary = Vec::new();
        {
            let ($ring, $label, $seed) = (Integers, "Z", 1u64);
            summary.push($body?);
        }
        {
            let ($ring, $label, $seed) = (Rationals, "Q", 2u64);
            summary.push($body?);
        }
        for (p, $seed) in [(2u64, 3u64), (3, 4), (97, 5)] {
            let $ring = f(p);
            let $label = format!("F{p}");
            let $label = $label.as_str();
            summary.push($body?);
        }
        Ok::<String, String>(summary.join(", "))
    }};
}

// 1. Hasse identities

fn hasse_identities<R: RandomElement>(ring: R, label: &str, seed: u64) -> Outcome {
    const TRIALS: usize = 300;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..TRIALS {
        let f = random_poly(&ring, &mut rng, 10, 20);
        let g = random_poly(&ring, &mut rng, 10, 20);
        let n = rng.random_range(0..=12);
        let m = rng.random_range(0..=12);
        ensure(check_leibniz(&f, &g, n).map_err(|e| e.to_string())?, || {
            format!("{label} trial {t}: Leibniz fails for n = {n}")
        })?;
        ensure(check_composition(&f, n, m), || {
            format!("{label} trial {t}: composition fails for n = {n}, m = {m}")
        })?;
        ensure(check_commutator(&f, n), || {
            format!("{label} trial {t}: commutator fails for n = {n}")
        })?;
        ensure(
            divided_derivative(&f, n) == divided_derivative_taylor(&f, n),
            || {
                format!(
                    "{label} trial {t}: coefficientwise and Taylor derivatives differ for n = {n}"
                )
            },
        )?;
    }
    Ok(format!("{label} {TRIALS}x4"))
}

fn criterion_hasse() -> Outcome {
    for_each_ring!(|ring, label, seed| hasse_identities(ring, label, seed))
}

// 2. Adjoint identity

fn adjoint<R: RandomElement>(ring: R, label: &str, seed: u64) -> Outcome {
    const TRIALS: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
    for t in 0..TRIALS {
        let len = rng.random_range(1..=20);
        let s = random_prefix(&ring, &mut rng, len, 50);
        let n = rng.random_range(0..=8);
        let i = rng.random_range(0..len);
        let xi = Poly::monomial(ring.clone(), ring.one(), i);
        let lhs = s
            .divided_adjoint(n)
            .pairing(&xi)
            .map_err(|e| e.to_string())?;
        let rhs = s
            .pairing(&divided_derivative(&xi, n))
            .map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || {
            format!("{label} trial {t}: n = {n}, i = {i}")
        })?;
    }
    Ok(format!("{label} {TRIALS}"))
}

fn criterion_adjoint() -> Outcome {
    for_each_ring!(|ring, label, seed| adjoint(ring, label, seed))
}

// 3. Divided basis in positive characteristic

fn char_p_basis(p: u64, roots: &[(u64, usize)]) -> Outcome {
    let field = f(p);
    let roots = RootData::new(&field, roots.to_vec()).map_err(|e| e.to_string())?;
    let spec = RecurrenceSpec::new(Poly::from_roots(field, &roots)).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for (alpha, mu) in roots.iter() {
        for a in 0..*mu {
            let s = BasisSeq::new(*alpha, a).prefix(&field, 50);
            let m = check_membership(&spec, &s).map_err(|e| e.to_string())?;
            ensure(m.ok, || {
                format!("F{p}: s({alpha}, {a}) violates at {:?}", m.first_violation)
            })?;
        }
        let control = BasisSeq::new(*alpha, *mu).prefix(&field, 50);
        let m = check_membership(&spec, &control).map_err(|e| e.to_string())?;
        let index = m
            .first_violation
            .ok_or_else(|| format!("F{p}: control s({alpha}, {mu}) was accepted"))?;
        notes.push(format!("s({alpha},{mu}) rejected at {index}"));
    }
    Ok(format!("F{p} [{}]", notes.join("; ")))
}

fn criterion_char_p() -> Outcome {
    let a = char_p_basis(2, &[(1, 4)])?;
    let b = char_p_basis(3, &[(1, 3), (2, 2)])?;
    Ok(format!("{a}, {b}"))
}

// 4. Freeness

fn freeness<R: RandomElement>(ring: R, label: &str, seed: u64) -> Outcome {
    const TRIALS: usize = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(200 + seed);
    for t in 0..TRIALS {
        let (roots, spec) = random_split_spec(&ring, &mut rng, 8, 3);
        let basis = build_basis(&spec, &roots).map_err(|e| e.to_string())?;
        let det = casoratian_det(&basis).map_err(|e| e.to_string())?;
        ensure(!ring.is_zero(&det), || {
            format!("{label} trial {t}: singular Casoratian")
        })?;
    }
    Ok(format!("{label} {TRIALS}"))
}

fn criterion_freeness() -> Outcome {
    for_each_ring!(|ring, label, seed| freeness(ring, label, seed))
}

// 5. Torsion certificate over Z

fn replay(
    rep: &Representation<Integers>,
    basis: &SolutionBasis<Integers>,
    s: &PrefixSeq<Integers>,
) -> Result<(), String> {
    for (i, si) in s.terms().iter().enumerate() {
        let rebuilt: BigInt = rep
            .scaled
            .iter()
            .zip(basis.elements())
            .map(|(c, e)| c * e.term(&Integers, i))
            .sum();
        ensure(&rep.denominator * si == rebuilt, || {
            format!("replay fails at i = {i}")
        })?;
    }
    Ok(())
}

fn criterion_torsion() -> Outcome {
    let z = Integers;
    let spec = RecurrenceSpec::new(Poly::from_i64s(z, &[3, -4, 1])).map_err(|e| e.to_string())?;
    let roots = RootData::new(&z, vec![(BigInt::from(1), 1), (BigInt::from(3), 1)])
        .map_err(|e| e.to_string())?;
    let basis = build_basis(&spec, &roots).map_err(|e| e.to_string())?;
    let s = extend(&spec, &PrefixSeq::from_i64s(z, &[0, 1]), 40).map_err(|e| e.to_string())?;
    let rep = represent(&basis, &s).map_err(|e| e.to_string())?;
    let coords: Vec<String> = rep.coords.iter().map(|c| c.format(&z)).collect();
    ensure(coords == ["-1/2", "1/2"], || format!("coords {coords:?}"))?;
    ensure(rep.denominator == BigInt::from(2), || {
        format!("d = {}", rep.denominator)
    })?;
    ensure(rep.scaled == [BigInt::from(-1), BigInt::from(1)], || {
        format!("d·coords {:?}", rep.scaled)
    })?;
    replay(&rep, &basis, &s)?;

    let mut rng = ChaCha8Rng::seed_from_u64(300);
    const TRIALS: usize = 50;
    for t in 0..TRIALS {
        let (roots, spec) = random_split_spec(&z, &mut rng, 6, 4);
        let basis = build_basis(&spec, &roots).map_err(|e| e.to_string())?;
        let n = spec.order();
        let init = random_prefix(&z, &mut rng, n, 20);
        let s = extend(&spec, &init, 4 * n).map_err(|e| e.to_string())?;
        let rep = represent(&basis, &s).map_err(|e| format!("trial {t}: {e}"))?;
        for (c, scaled) in rep.coords.iter().zip(&rep.scaled) {
            let cleared = c
                .scale_to_ring(&z, &rep.denominator)
                .map_err(|e| format!("trial {t}: {e}"))?;
            ensure(&cleared == scaled, || {
                format!("trial {t}: d·coord mismatch")
            })?;
        }
        replay(&rep, &basis, &s).map_err(|e| format!("trial {t}: {e}"))?;
    }
    Ok(format!(
        "(x-1)(x-3) coords (-1/2, 1/2) d = 2 on 40 terms; {TRIALS} random members"
    ))
}

// 6. Exact representation over fields

fn field_span(p: u64, seed: u64) -> Outcome {
    const TRIALS: usize = 100;
    let field = f(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..TRIALS {
        let (roots, spec) = random_split_spec(&field, &mut rng, 8, 0);
        let basis = build_basis(&spec, &roots).map_err(|e| e.to_string())?;
        let len = 3 * spec.order() + 10;
        let init = random_prefix(&field, &mut rng, spec.order(), 0);
        let s = extend(&spec, &init, len).map_err(|e| e.to_string())?;
        let rep = represent(&basis, &s).map_err(|e| format!("F{p} trial {t}: {e}"))?;
        ensure(rep.denominator == 1, || {
            format!("F{p} trial {t}: d = {}", rep.denominator)
        })?;
        let mut rebuilt = PrefixSeq::zeros(field, len);
        for (c, e) in rep.scaled.iter().zip(basis.elements()) {
            rebuilt = rebuilt
                .add(&e.prefix(&field, len).scale(c))
                .map_err(|e| e.to_string())?;
        }
        ensure(rebuilt == s, || {
            format!("F{p} trial {t}: reconstruction differs")
        })?;
    }
    Ok(format!("F{p} {TRIALS}"))
}

fn criterion_field_span() -> Outcome {
    Ok(format!("{}, {}", field_span(5, 400)?, field_span(97, 401)?))
}

// 7. Fast evaluation

fn fast_vs_iteration<R: RandomElement>(ring: R, label: &str, seed: u64) -> Outcome {
    const SPECS: usize = 50;
    const MAX_INDEX: usize = 5000;
    let mut rng = ChaCha8Rng::seed_from_u64(500 + seed);
    for t in 0..SPECS {
        // Coefficients in {-1, 0, 1} keep the iterates over Z and Q to a
        // few thousand digits at N = 5000.
        let spec = random_spec(&ring, &mut rng, 8, 1);
        let init = random_prefix(&ring, &mut rng, spec.order(), 5);
        let full = extend(&spec, &init, MAX_INDEX + 1).map_err(|e| e.to_string())?;
        let ctx = ModPowContext::new(&spec);
        for (i, expected) in full.terms().iter().enumerate() {
            let got = ctx
                .term(&init, &BigUint::from(i))
                .map_err(|e| e.to_string())?;
            ensure(&got == expected, || format!("{label} spec {t}: N = {i}"))?;
        }
    }
    Ok(format!("{label} {SPECS}"))
}

fn criterion_fastval() -> Outcome {
    let sweep = for_each_ring!(|ring, label, seed| fast_vs_iteration(ring, label, seed))?;

    let fib =
        RecurrenceSpec::new(Poly::from_i64s(Integers, &[-1, -1, 1])).map_err(|e| e.to_string())?;
    let init = PrefixSeq::from_i64s(Integers, &[0, 1]);
    let iterated = extend(&fib, &init, 51).map_err(|e| e.to_string())?;
    for (n, known) in [(10usize, 55u64), (50, 12_586_269_025)] {
        let fast = term(&fib, &init, &BigUint::from(n)).map_err(|e| e.to_string())?;
        ensure(
            fast == BigInt::from(known) && &fast == iterated.get(n).unwrap(),
            || format!("Fibonacci term({n}) = {fast}"),
        )?;
    }

    let field = f(97);
    let mut rng = ChaCha8Rng::seed_from_u64(600);
    let mut coeffs: Vec<u64> = (0..64).map(|_| field.random_elem(&mut rng, 0)).collect();
    coeffs.push(1);
    let spec = RecurrenceSpec::new(Poly::new(field, coeffs)).map_err(|e| e.to_string())?;
    let init = random_prefix(&field, &mut rng, 64, 0);
    let start = Instant::now();
    term(&spec, &init, &BigUint::from(10u64).pow(18)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 1.0, || {
        format!("F97 n = 64, N = 10^18 took {elapsed:.3}s")
    })?;

    Ok(format!(
        "{sweep}; Fibonacci 10, 50; F97 n=64 N=10^18 in {elapsed:.3}s"
    ))
}

// 8. CLI round trip

fn cli(args: &[&str], stdin: &str) -> Result<(i32, Vec<u8>), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hasserec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_cli() -> Outcome {
    let problems = [
        r#"{"ring":"int","char_poly":["-1","-1","1"],"init":["0","1"]}"#,
        r#"{"ring":"int","char_poly":[3,-4,1],"roots":[["1",1],["3",1]],"init":[0,1]}"#,
        r#"{"ring":"rat","char_poly":["1/2","-3/2","1"],"init":["1/3","-2"]}"#,
        r#"{"ring":{"mod":3},"char_poly":[2,1,2,1,2,1],"init":[0,1,2,0,1]}"#,
        r#"{"ring":"mod:97","char_poly":[5,0,0,96,1],"init":[1,2,3,4]}"#,
    ];
    for problem in problems {
        let (code, extended) = cli(&["extend", "--file", "-", "--to", "60"], problem)?;
        ensure(code == 0, || format!("extend exited {code} on {problem}"))?;
        let extended = String::from_utf8(extended).map_err(|e| e.to_string())?;
        let (code, checked) = cli(&["check", "--file", "-"], &extended)?;
        ensure(code == 0, || format!("check exited {code} on {problem}"))?;

        let (_, again) = cli(&["extend", "--file", "-", "--to", "60"], problem)?;
        ensure(again == extended.as_bytes(), || {
            format!("extend output changed on {problem}")
        })?;
        let (_, checked_again) = cli(&["check", "--file", "-"], &extended)?;
        ensure(checked_again == checked, || {
            format!("check output changed on {problem}")
        })?;
    }
    Ok(format!("{} problem files", problems.len()))
}

fn main() {
    let criteria: [Check; 8] = [
        ("1 Hasse identities", criterion_hasse),
        ("2 adjoint identity", criterion_adjoint),
        ("3 divided basis in characteristic p", criterion_char_p),
        ("4 Casoratian freeness", criterion_freeness),
        ("5 torsion certificate", criterion_torsion),
        ("6 field representation", criterion_field_span),
        ("7 fast evaluation", criterion_fastval),
        ("8 CLI round trip", criterion_cli),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} ({secs:.2}s): {detail}"),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {name} ({secs:.2}s): {reason}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
