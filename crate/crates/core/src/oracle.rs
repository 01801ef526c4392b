//! Real 4x4 embedding of `x -> a x - x b`, with Gaussian elimination.
//!
//! This module is a verification backend. It reads quaternion components
//! but never calls quaternion multiplication or any of the analytic solvers.

use std::ops::{Mul, Sub};

use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

pub type Vec4 = [f64; 4];

/// Row-major 4x4 real matrix; rows and columns follow `(w, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealMatrix4(pub [[f64; 4]; 4]);

impl RealMatrix4 {
    pub const ZERO: RealMatrix4 = RealMatrix4([[0.0; 4]; 4]);

    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        RealMatrix4(m)
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t[j][i] = *v;
            }
        }
        RealMatrix4(t)
    }

    pub fn apply(&self, v: Vec4) -> Vec4 {
        let mut out = [0.0; 4];
        for (o, row) in out.iter_mut().zip(&self.0) {
            *o = row.iter().zip(&v).map(|(m, x)| m * x).sum();
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn rank(&self, tol: Tolerance) -> usize {
        4 - nullspace(self, tol).len()
    }
}

impl Mul for RealMatrix4 {
    type Output = RealMatrix4;

    fn mul(self, rhs: RealMatrix4) -> RealMatrix4 {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        RealMatrix4(m)
    }
}

impl Sub for RealMatrix4 {
    type Output = RealMatrix4;

    fn sub(self, rhs: RealMatrix4) -> RealMatrix4 {
        let mut m = self.0;
        for (row, r) in m.iter_mut().zip(&rhs.0) {
            for (v, s) in row.iter_mut().zip(r) {
                *v -= s;
            }
        }
        RealMatrix4(m)
    }
}

/// Matrix of `x -> a x`.
pub fn left_embed(a: Quaternion) -> RealMatrix4 {
    let [w, x, y, z] = a.to_array();
    RealMatrix4([
        [w, -x, -y, -z],
        [x, w, -z, y],
        [y, z, w, -x],
        [z, -y, x, w],
    ])
}

/// Matrix of `x -> x b`.
pub fn right_embed(b: Quaternion) -> RealMatrix4 {
    let [w, x, y, z] = b.to_array();
    RealMatrix4([
        [w, -x, -y, -z],
        [x, w, z, -y],
        [y, -z, w, x],
        [z, y, -x, w],
    ])
}

/// Matrix of `x -> a x - x b`.
pub fn sylvester_matrix(a: Quaternion, b: Quaternion) -> RealMatrix4 {
    left_embed(a) - right_embed(b)
}

/// Row-reduced form of an augmented system.
struct Echelon {
    rows: [[f64; 5]; 4],
    /// `pivots[r]` is the pivot column of row `r`.
    pivots: Vec<usize>,
}

/// Gauss-Jordan elimination with partial pivoting. Columns whose best
/// remaining pivot falls below `tol.rel * max|m|` are treated as free.
fn reduce(m: &RealMatrix4, rhs: Vec4, tol: Tolerance) -> Echelon {
    let mut rows = [[0.0; 5]; 4];
    for (r, row) in rows.iter_mut().enumerate() {
        row[..4].copy_from_slice(&m.0[r]);
        row[4] = rhs[r];
    }
    let threshold = tol.rel * m.max_abs();
    let mut pivots = Vec::with_capacity(4);
    let mut r = 0;
    for col in 0..4 {
        if r == 4 {
            break;
        }
        let (best, best_abs) = (r..4)
            .map(|i| (i, rows[i][col].abs()))
            .fold((r, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if best_abs <= threshold || best_abs == 0.0 {
            continue;
        }
        rows.swap(r, best);
        let pivot = rows[r][col];
        for v in rows[r].iter_mut() {
            *v /= pivot;
        }
        for i in 0..4 {
            if i != r {
                let f = rows[i][col];
                if f != 0.0 {
                    for j in 0..5 {
                        rows[i][j] -= f * rows[r][j];
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    Echelon { rows, pivots }
}

fn dot(u: &Vec4, v: &Vec4) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn norm(v: &Vec4) -> f64 {
    dot(v, v).sqrt()
}

/// Modified Gram-Schmidt with one re-orthogonalisation pass. Vectors that
/// collapse below `cutoff` relative to their original length are dropped.
pub fn orthonormalize(vectors: &[Vec4], cutoff: f64) -> Vec<Vec4> {
    let mut out: Vec<Vec4> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let original = norm(v);
        if original == 0.0 {
            continue;
        }
        let mut u = *v;
        for _ in 0..2 {
            for e in &out {
                let d = dot(&u, e);
                for (ui, ei) in u.iter_mut().zip(e) {
                    *ui -= d * ei;
                }
            }
        }
        let n = norm(&u);
        if n > cutoff * original {
            out.push(u.map(|x| x / n));
        }
    }
    out
}

/// Orthonormal basis of the nullspace of `m`; empty when `m` has full rank.
pub fn nullspace(m: &RealMatrix4, tol: Tolerance) -> Vec<Vec4> {
    let ech = reduce(m, [0.0; 4], tol);
    let free: Vec<usize> = (0..4).filter(|c| !ech.pivots.contains(c)).collect();
    let raw: Vec<Vec4> = free
        .iter()
        .map(|&f| {
            let mut v = [0.0; 4];
            v[f] = 1.0;
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.rows[r][f];
            }
            v
        })
        .collect();
    orthonormalize(&raw, 1e-8)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Consistency {
    /// A particular solution (free variables set to zero).
    Solution(Vec4),
    /// No solution; `residual` is `min |m x - rhs|` over all `x`.
    Inconsistent { residual: f64 },
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Consistency::Solution(_))
    }
}

/// Distance from `rhs` to the column space of `m`, i.e. the norm of the
/// projection of `rhs` onto the nullspace of `m^T`.
pub fn range_residual(m: &RealMatrix4, rhs: Vec4, tol: Tolerance) -> f64 {
    nullspace(&m.transpose(), tol)
        .iter()
        .map(|e| dot(&rhs, e).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Solves `m x = rhs`, or reports the minimum residual when no `x` exists.
/// The system counts as consistent when that minimum residual is at most
/// `tol.abs + tol.rel * (|rhs| + |m|_F |x|)`.
pub fn solve_or_refute(m: &RealMatrix4, rhs: Vec4, tol: Tolerance) -> Consistency {
    let ech = reduce(m, rhs, tol);
    let mut x = [0.0; 4];
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.rows[r][4];
    }
    let residual = range_residual(m, rhs, tol);
    let scale = norm(&rhs) + m.frobenius() * norm(&x);
    if residual <= tol.threshold(scale) {
        Consistency::Solution(x)
    } else {
        Consistency::Inconsistent { residual }
    }
}

/// Largest distance from a vector of `a` to `span(b)`, in both directions.
/// Both inputs must be orthonormal. Returns infinity on dimension mismatch.
pub fn span_distance(a: &[Vec4], b: &[Vec4]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let one_way = |from: &[Vec4], onto: &[Vec4]| {
        from.iter()
            .map(|v| {
                let mut r = *v;
                for e in onto {
                    let d = dot(v, e);
                    for (ri, ei) in r.iter_mut().zip(e) {
                        *ri -= d * ei;
                    }
                }
                norm(&r)
            })
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}
