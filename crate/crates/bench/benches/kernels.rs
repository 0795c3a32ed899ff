use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hasserec::sample::{random_prefix, RandomElement};
use hasserec::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn prime_field_spec(
    order: usize,
    seed: u64,
) -> (RecurrenceSpec<PrimeField>, PrefixSeq<PrimeField>) {
    let field = PrimeField::with_modulus(97).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<u64> = (0..order).map(|_| field.random_elem(&mut rng, 0)).collect();
    coeffs.push(1);
    let spec = RecurrenceSpec::new(Poly::new(field, coeffs)).unwrap();
    let init = random_prefix(&field, &mut rng, order, 0);
    (spec, init)
}

fn bench_term(c: &mut Criterion) {
    let mut group = c.benchmark_group("term F97 N=10^18");
    let exp = BigUint::from(10u64).pow(18);
    for order in [8, 32, 64, 128] {
        let (spec, init) = prime_field_spec(order, order as u64);
        let ctx = ModPowContext::new(&spec);
        group.bench_with_input(BenchmarkId::from_parameter(order), &exp, |b, exp| {
            b.iter(|| ctx.term(&init, black_box(exp)).unwrap())
        });
    }
    group.finish();

    let fib = RecurrenceSpec::new(Poly::from_i64s(Integers, &[-1, -1, 1])).unwrap();
    let init = PrefixSeq::from_i64s(Integers, &[0, 1]);
    let ctx = ModPowContext::new(&fib);
    let mut group = c.benchmark_group("term Fibonacci over Z");
    for n in [1_000u32, 10_000, 100_000] {
        group.bench_with_input(
            BenchmarkId::from_parameter(n),
            &BigUint::from(n),
            |b, exp| b.iter(|| ctx.term(&init, black_box(exp)).unwrap()),
        );
    }
    group.finish();
}

fn bench_divided_derivative(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let coeffs = (0..=200)
        .map(|_| Integers.random_elem(&mut rng, 1000))
        .collect();
    let p = Poly::new(Integers, coeffs);
    let mut group = c.benchmark_group("divided derivative deg 200");
    group.bench_function("coefficientwise", |b| {
        b.iter(|| divided_derivative(black_box(&p), 50))
    });
    group.bench_function("taylor", |b| {
        b.iter(|| divided_derivative_taylor(black_box(&p), 50))
    });
    group.finish();
}

fn represent_case<R: RandomElement>(
    c: &mut Criterion,
    ring: R,
    label: &str,
    roots: Vec<(R::Elem, usize)>,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let roots = RootData::new(&ring, roots).unwrap();
    let spec = RecurrenceSpec::new(Poly::from_roots(ring.clone(), &roots)).unwrap();
    let basis = build_basis(&spec, &roots).unwrap();
    let init = random_prefix(&ring, &mut rng, spec.order(), 20);
    let s = extend(&spec, &init, 4 * spec.order()).unwrap();
    c.bench_function(&format!("represent {label} order {}", spec.order()), |b| {
        b.iter(|| represent(&basis, black_box(&s)).unwrap())
    });
}

fn bench_represent(c: &mut Criterion) {
    let z = |a: i64| BigInt::from(a);
    represent_case(
        c,
        Integers,
        "Z",
        vec![(z(-2), 2), (z(1), 3), (z(3), 1), (z(5), 2)],
    );
    let field = PrimeField::with_modulus(97).unwrap();
    represent_case(c, field, "F97", vec![(1, 3), (2, 2), (5, 3)]);
}

criterion_group!(
    benches,
    bench_term,
    bench_divided_derivative,
    bench_represent
);
criterion_main!(benches);
