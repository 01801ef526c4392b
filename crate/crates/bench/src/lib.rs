//! Deterministic inputs shared by the criterion benches.

use qsylv_core::{Quaternion, SylvesterProblem, Tolerance};

/// Small linear congruential sequence mapped into `[-1, 1)`.
fn lcg(state: &mut u64) -> f64 {
    *state = state
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    ((*state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
}

pub fn quaternions(n: usize, seed: u64) -> Vec<Quaternion> {
    let mut s = seed;
    (0..n)
        .map(|_| Quaternion::new(lcg(&mut s), lcg(&mut s), lcg(&mut s), lcg(&mut s)))
        .collect()
}

/// Problems with similar coefficients `b = p^-1 a p`, half of them solvable.
pub fn singular_problems(n: usize, seed: u64) -> Vec<SylvesterProblem> {
    let qs = quaternions(3 * n, seed);
    qs.chunks_exact(3)
        .enumerate()
        .map(|(k, w)| {
            let (a, p, x0) = (w[0], w[1], w[2]);
            let b = p.inv(Tolerance::DEFAULT).unwrap() * a * p;
            let c = if k % 2 == 0 { a * x0 - x0 * b } else { x0 };
            SylvesterProblem::new(a, b, c)
        })
        .collect()
}

pub fn regular_problems(n: usize, seed: u64) -> Vec<SylvesterProblem> {
    let qs = quaternions(3 * n, seed);
    qs.chunks_exact(3)
        .map(|w| SylvesterProblem::new(w[0], w[1] * 2.0, w[2]))
        .collect()
}
