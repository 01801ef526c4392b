use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qsylv_bench::{quaternions, regular_problems, singular_problems};
use qsylv_core::{oracle, solve, sqrt, Tolerance};

const TOL: Tolerance = Tolerance::DEFAULT;

fn arithmetic(c: &mut Criterion) {
    let qs = quaternions(1024, 1);
    c.bench_function("mul 1024", |b| {
        b.iter(|| qs.windows(2).map(|w| w[0] * w[1]).fold(0.0, |acc, q| acc + q.w))
    });
    c.bench_function("sqrt 1024", |b| {
        b.iter(|| {
            for q in &qs {
                black_box(sqrt(*q, TOL).unwrap());
            }
        })
    });
}

fn solvers(c: &mut Criterion) {
    let singular = singular_problems(256, 2);
    let regular = regular_problems(256, 3);
    c.bench_function("solve singular 256", |b| {
        b.iter(|| {
            for p in &singular {
                black_box(solve(*p, TOL).unwrap());
            }
        })
    });
    c.bench_function("solve regular 256", |b| {
        b.iter(|| {
            for p in &regular {
                black_box(solve(*p, TOL).unwrap());
            }
        })
    });
    c.bench_function("oracle nullspace 256", |b| {
        b.iter(|| {
            for p in &singular {
                black_box(oracle::nullspace(&oracle::sylvester_matrix(p.a, p.b), TOL));
            }
        })
    });
}

criterion_group!(benches, arithmetic, solvers);
criterion_main!(benches);
