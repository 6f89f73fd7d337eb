//! Benchmarks for the hot kernels: cyclotomic arithmetic, Buchberger runs,
//! normal-form reduction and point-ideal intersection.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sympow_bench::{hesse_ring, nonic, point_ideals, quartic_generators};
use sympow_core::points::{dual_hesse_config, symbolic_power};
use sympow_core::{buchberger, CycloElement, Field, Ideal, TermOrder};

fn bench_cyclo_mul(c: &mut Criterion) {
    let a = CycloElement::new(
        sympow_core::Rational::from_frac(355, 113).unwrap(),
        sympow_core::Rational::from_frac(-22, 7).unwrap(),
    );
    let b = CycloElement::new(
        sympow_core::Rational::from_frac(-617, 241).unwrap(),
        sympow_core::Rational::from_frac(89, 55).unwrap(),
    );
    c.bench_function("cyclo_mul", |bench| {
        bench.iter(|| black_box(&a).mul(black_box(&b)))
    });
}

fn bench_buchberger_quartics(c: &mut Criterion) {
    let ring = hesse_ring();
    let gens = quartic_generators();
    c.bench_function("buchberger_hesse_quartics", |bench| {
        bench.iter(|| {
            buchberger(&ring, black_box(&gens), TermOrder::Grevlex, &Default::default()).unwrap()
        })
    });
}

fn bench_normal_form_vs_square(c: &mut Criterion) {
    let ring = hesse_ring();
    let radical = Ideal::new(&ring, quartic_generators()).unwrap();
    let square = radical.power(2).unwrap();
    let gb = square.groebner(TermOrder::Grevlex).unwrap();
    let f = nonic();
    c.bench_function("normal_form_nonic_vs_square", |bench| {
        bench.iter(|| gb.normal_form(black_box(&f)).unwrap())
    });
}

fn bench_intersection(c: &mut Criterion) {
    let ideals = point_ideals(4);
    c.bench_function("intersect_four_point_ideals", |bench| {
        bench.iter(|| Ideal::intersect_many(black_box(&ideals)).unwrap())
    });
}

fn bench_symbolic_cube(c: &mut Criterion) {
    let config = dual_hesse_config();
    let mut group = c.benchmark_group("heavy");
    group.sample_size(10);
    group.bench_function("symbolic_cube_dual_hesse", |bench| {
        bench.iter(|| symbolic_power(black_box(&config), 3).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_cyclo_mul,
    bench_buchberger_quartics,
    bench_normal_form_vs_square,
    bench_intersection,
    bench_symbolic_cube
);
criterion_main!(benches);
