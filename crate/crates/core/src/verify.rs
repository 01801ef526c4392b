//! Cross-checks analytic solution sets against the real-embedding oracle.

use serde::Serialize;

use crate::oracle;
use crate::quaternion::Quaternion;
use crate::sylvester::{SolutionSet, SylvesterProblem};
use crate::tolerance::Tolerance;

/// Relative threshold for comparing residuals and spans with the oracle.
pub const AGREEMENT_REL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheck {
    pub agrees: bool,
    /// Nullspace dimension of the embedded operator.
    pub oracle_dimension: usize,
    pub oracle_consistent: bool,
    /// Largest scale-relative residual over the particular point and
    /// `particular + basis[i]`.
    pub max_relative_residual: f64,
    /// Mutual projection distance between the analytic and oracle kernels.
    pub span_distance: f64,
}

/// Residual `|a x - x b - c|` for the particular point and each
/// `particular + basis[i]`, maximised. `None` for an empty set.
pub fn max_residual(p: &SylvesterProblem, set: &SolutionSet) -> Option<f64> {
    let x0 = set.particular()?;
    let points = std::iter::once(x0).chain(set.basis().iter().map(|e| x0 + *e));
    Some(points.map(|x| p.residual(x).norm()).fold(0.0, f64::max))
}

fn max_relative_residual(p: &SylvesterProblem, set: &SolutionSet) -> f64 {
    let Some(x0) = set.particular() else {
        return 0.0;
    };
    std::iter::once(x0)
        .chain(set.basis().iter().map(|e| x0 + *e))
        .map(|x| {
            let scale = p.residual_scale(x);
            let r = p.residual(x).norm();
            if scale > 0.0 {
                r / scale
            } else {
                r
            }
        })
        .fold(0.0, f64::max)
}

pub fn cross_check(p: &SylvesterProblem, set: &SolutionSet, tol: Tolerance) -> CrossCheck {
    let m = oracle::sylvester_matrix(p.a, p.b);
    let kernel = oracle::nullspace(&m, tol);
    let consistent = oracle::solve_or_refute(&m, p.c.to_array(), tol).is_consistent();
    let basis: Vec<_> = set.basis().iter().map(|e| e.to_array()).collect();
    let span_distance = oracle::span_distance(&basis, &kernel);
    let residual = max_relative_residual(p, set);

    let agrees = match set {
        SolutionSet::Empty => !consistent,
        SolutionSet::Unique(_) | SolutionSet::Affine { .. } => {
            consistent
                && kernel.len() == basis.len()
                && span_distance <= AGREEMENT_REL
                && residual <= AGREEMENT_REL
        }
    };
    CrossCheck {
        agrees,
        oracle_dimension: kernel.len(),
        oracle_consistent: consistent,
        max_relative_residual: residual,
        span_distance,
    }
}

/// Convenience for a single candidate solution.
pub fn oracle_residual(p: &SylvesterProblem, x: Quaternion) -> f64 {
    let m = oracle::sylvester_matrix(p.a, p.b);
    let y = m.apply(x.to_array());
    let c = p.c.to_array();
    y.iter().zip(c).map(|(u, v)| (u - v).powi(2)).sum::<f64>().sqrt()
}
