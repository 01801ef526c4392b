//! Closed-form solution sets for `a x - x b = c`.
//!
//! The map `f(x) = a x - x b` is singular exactly when `a` and `b` are
//! similar nonreal quaternions (two-dimensional kernel) or equal reals
//! (`f = 0`). In every other case `f` is invertible and
//!
//! ```text
//! (a^2 - 2 Re(b) a + |b|^2) x = a c - c conj(b)
//! ```
//!
//! determines the unique solution.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::oracle;
use crate::quaternion::Quaternion;
use crate::relations::{least_aligned_unit, similar_parts};
use crate::roots::product_root_unchecked;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// `f` is invertible.
    Regular,
    /// Similar nonreal coefficients; two-dimensional kernel.
    SingularNonreal,
    /// Equal real coefficients; `f` vanishes identically.
    RealEqual,
    /// Distinct real coefficients; `f(x) = (a - b) x`.
    RealDistinct,
}

impl Classification {
    pub fn is_singular(self) -> bool {
        matches!(self, Classification::SingularNonreal | Classification::RealEqual)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SylvesterProblem {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
}

impl SylvesterProblem {
    pub fn new(a: Quaternion, b: Quaternion, c: Quaternion) -> Self {
        Self { a, b, c }
    }

    pub fn homogeneous(a: Quaternion, b: Quaternion) -> Self {
        Self::new(a, b, Quaternion::ZERO)
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite()
    }

    /// `a x - x b - c`.
    pub fn residual(&self, x: Quaternion) -> Quaternion {
        self.a * x - x * self.b - self.c
    }

    /// Scale against which residuals are judged: `|a| |x| + |c|`.
    pub fn residual_scale(&self, x: Quaternion) -> f64 {
        self.a.norm().max(self.b.norm()) * x.norm() + self.c.norm()
    }

    pub fn satisfied_by(&self, x: Quaternion, tol: Tolerance) -> bool {
        tol.is_negligible(self.residual(x).norm(), self.residual_scale(x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolutionKind {
    Empty,
    Unique,
    Affine,
}

/// Every solution of a Sylvester equation, as an affine real subspace.
#[derive(Debug, Clone, PartialEq)]
pub enum SolutionSet {
    Empty,
    Unique(Quaternion),
    /// `particular + span(basis)`, with an orthonormal basis of 1 to 4 vectors.
    Affine {
        particular: Quaternion,
        basis: Vec<Quaternion>,
    },
}

impl SolutionSet {
    pub fn kind(&self) -> SolutionKind {
        match self {
            SolutionSet::Empty => SolutionKind::Empty,
            SolutionSet::Unique(_) => SolutionKind::Unique,
            SolutionSet::Affine { .. } => SolutionKind::Affine,
        }
    }

    pub fn particular(&self) -> Option<Quaternion> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Unique(x) => Some(*x),
            SolutionSet::Affine { particular, .. } => Some(*particular),
        }
    }

    pub fn basis(&self) -> &[Quaternion] {
        match self {
            SolutionSet::Affine { basis, .. } => basis,
            _ => &[],
        }
    }

    /// Real dimension of the set; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            SolutionSet::Empty => None,
            _ => Some(self.basis().len()),
        }
    }

    /// `particular + sum(coeffs[i] * basis[i])`. Missing coefficients count
    /// as zero and extra ones are ignored.
    pub fn point(&self, coeffs: &[f64]) -> Option<Quaternion> {
        let mut x = self.particular()?;
        for (e, t) in self.basis().iter().zip(coeffs) {
            x += *e * *t;
        }
        Some(x)
    }
}

pub fn classify(a: Quaternion, b: Quaternion, tol: Tolerance) -> Classification {
    match (tol.is_real(a), tol.is_real(b)) {
        (true, true) => {
            if tol.approx_eq(a.re(), b.re()) {
                Classification::RealEqual
            } else {
                Classification::RealDistinct
            }
        }
        (false, false) if similar_parts(a, b, tol) => Classification::SingularNonreal,
        _ => Classification::Regular,
    }
}

fn require(
    a: Quaternion,
    b: Quaternion,
    tol: Tolerance,
    allowed: &[Classification],
    op: &str,
) -> Result<Classification> {
    let class = classify(a, b, tol);
    if allowed.contains(&class) {
        Ok(class)
    } else {
        domain(format!("{op} does not apply to coefficients a = {a}, b = {b} ({class:?})"))
    }
}

/// Replaces `a`, `b` by their imaginary parts; the real parts cancel for
/// similar coefficients, so the solution set is unchanged.
pub fn reduce_to_pure(p: SylvesterProblem, tol: Tolerance) -> Result<SylvesterProblem> {
    require(p.a, p.b, tol, &[Classification::SingularNonreal], "reduce_to_pure")?;
    Ok(SylvesterProblem::new(p.a.im(), p.b.im(), p.c))
}

/// Unique solution in the regular regime (including distinct real
/// coefficients, where it reduces to `c / (a - b)`).
pub fn solve_regular(p: SylvesterProblem, tol: Tolerance) -> Result<SolutionSet> {
    require(
        p.a,
        p.b,
        tol,
        &[Classification::Regular, Classification::RealDistinct],
        "solve_regular",
    )?;
    let (a, b, c) = (p.a, p.b, p.c);
    let poly = a * a - a * (2.0 * b.re()) + Quaternion::from_real(b.norm_sqr());
    let rhs = a * c - c * b.conj();
    let inv = poly.inv(tol).map_err(|_| {
        Error::Domain(format!(
            "a^2 - 2 Re(b) a + |b|^2 = {poly} is not invertible for a = {a}, b = {b}"
        ))
    })?;
    Ok(SolutionSet::Unique(inv * rhs))
}

/// `x = Im(a) q + q Im(b)`; every homogeneous solution arises this way.
pub fn homogeneous_general(
    a: Quaternion,
    b: Quaternion,
    q: Quaternion,
    tol: Tolerance,
) -> Result<Quaternion> {
    require(a, b, tol, &[Classification::SingularNonreal], "homogeneous_general")?;
    Ok(a.im() * q + q * b.im())
}

/// Orthonormalises `generators` in order, dropping vectors that collapse
/// below `rel` of their original length.
fn gram_schmidt(generators: &[Quaternion], rel: f64) -> Vec<Quaternion> {
    let mut out: Vec<Quaternion> = Vec::new();
    for g in generators {
        let len = g.norm();
        let mut v = *g;
        for _ in 0..2 {
            for e in &out {
                v -= *e * v.dot(*e);
            }
        }
        let n = v.norm();
        if len > 0.0 && n > rel * len {
            out.push(v / n);
        }
    }
    out
}

/// Orthonormal basis of the plane of pure quaternions orthogonal to `axis`.
fn orthogonal_plane(axis: Quaternion) -> Vec<Quaternion> {
    let n = axis.normalized().unwrap_or(Quaternion::I).im();
    let u = least_aligned_unit(n);
    let u1 = (u - n * u.dot_im(n)).normalized().unwrap_or(Quaternion::J);
    let u2 = n.cross_im(u1);
    vec![u1, u2]
}

fn oracle_kernel(a: Quaternion, b: Quaternion, tol: Tolerance) -> Vec<Quaternion> {
    oracle::nullspace(&oracle::sylvester_matrix(a, b), tol)
        .into_iter()
        .map(Quaternion::from_array)
        .collect()
}

/// Kernel of `f` as an affine set through the origin.
///
/// For similar nonreal coefficients the kernel is spanned by
/// `sqrt(Im a conj(Im b))` and `Im(a + b)`. When `Im a = -Im b` the second
/// generator vanishes and the kernel is the plane of pure quaternions
/// orthogonal to `Im a`.
pub fn homogeneous_basis(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<SolutionSet> {
    let class = require(
        a,
        b,
        tol,
        &[Classification::SingularNonreal, Classification::RealEqual],
        "homogeneous_basis",
    )?;
    if class == Classification::RealEqual {
        return Ok(SolutionSet::Affine {
            particular: Quaternion::ZERO,
            basis: vec![Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K],
        });
    }
    let (ia, ib) = (a.im(), b.im());
    let sum = ia + ib;
    let scale = ia.norm().max(ib.norm());
    let basis = if tol.is_negligible(sum.norm(), scale) {
        orthogonal_plane(ia)
    } else {
        let root = product_root_unchecked(ia, ib.conj()).unwrap_or(Quaternion::ZERO);
        let basis = gram_schmidt(&[root, sum], tol.rel.sqrt());
        if basis.len() == 2 {
            basis
        } else {
            log::warn!(
                "kernel generators for a = {a}, b = {b} are degenerate; using the real-embedding nullspace"
            );
            oracle_kernel(a, b, tol)
        }
    };
    Ok(SolutionSet::Affine {
        particular: Quaternion::ZERO,
        basis,
    })
}

/// `a c = c conj(b)`, the solvability condition for singular coefficients.
/// A zero right-hand side is always solvable; equal real coefficients with
/// nonzero `c` never are.
pub fn inhomogeneous_solvable(p: SylvesterProblem, tol: Tolerance) -> Result<bool> {
    let class = require(
        p.a,
        p.b,
        tol,
        &[Classification::SingularNonreal, Classification::RealEqual],
        "inhomogeneous_solvable",
    )?;
    if tol.is_zero(p.c) {
        return Ok(true);
    }
    if class == Classification::RealEqual {
        return Ok(false);
    }
    let (lhs, rhs) = solvability_sides(p);
    Ok(tol.is_negligible((lhs - rhs).norm(), p.a.norm() * p.c.norm()))
}

/// Both sides `(a c, c conj(b))` of the solvability condition.
pub fn solvability_sides(p: SylvesterProblem) -> (Quaternion, Quaternion) {
    (p.a * p.c, p.c * p.b.conj())
}

/// `x = Im(a) (q - c) / (4 |Im a|^2) + (q + c) Im(b) / (4 |Im b|^2)`.
pub fn inhomogeneous_general(p: SylvesterProblem, q: Quaternion, tol: Tolerance) -> Result<Quaternion> {
    if !inhomogeneous_solvable(p, tol)? {
        return domain(format!(
            "a x - x b = c has no solution for a = {}, b = {}, c = {}",
            p.a, p.b, p.c
        ));
    }
    require(p.a, p.b, tol, &[Classification::SingularNonreal], "inhomogeneous_general")?;
    Ok(general_particular(p, q))
}

fn general_particular(p: SylvesterProblem, q: Quaternion) -> Quaternion {
    let (ia, ib) = (p.a.im(), p.b.im());
    ia * ((q - p.c) / (4.0 * ia.norm_sqr())) + ((q + p.c) / (4.0 * ib.norm_sqr())) * ib
}

/// All solutions for singular coefficients; `Empty` when unsolvable.
pub fn inhomogeneous_solution_set(p: SylvesterProblem, tol: Tolerance) -> Result<SolutionSet> {
    let class = require(
        p.a,
        p.b,
        tol,
        &[Classification::SingularNonreal, Classification::RealEqual],
        "inhomogeneous_solution_set",
    )?;
    if tol.is_zero(p.c) {
        return homogeneous_basis(p.a, p.b, tol);
    }
    if class == Classification::RealEqual || !inhomogeneous_solvable(p, tol)? {
        return Ok(SolutionSet::Empty);
    }
    let (ia, ib) = (p.a.im(), p.b.im());
    // c Im(b - a) / (4 |Im a|^2) only solves the equation when Im a = -Im b;
    // otherwise fall back to the q = 0 member of the general solution.
    let candidate = p.c * (ib - ia) / (4.0 * ia.norm_sqr());
    let particular = if p.satisfied_by(candidate, tol) {
        candidate
    } else {
        general_particular(p, Quaternion::ZERO)
    };
    let basis = match homogeneous_basis(p.a, p.b, tol)? {
        SolutionSet::Affine { basis, .. } => basis,
        other => return Err(Error::Internal(format!("unexpected kernel {other:?}"))),
    };
    Ok(SolutionSet::Affine { particular, basis })
}

/// Classifies and dispatches to the matching closed form.
pub fn solve(p: SylvesterProblem, tol: Tolerance) -> Result<SolutionSet> {
    if !p.is_finite() {
        return Err(Error::NonFinite("problem"));
    }
    let set = match classify(p.a, p.b, tol) {
        Classification::Regular | Classification::RealDistinct => solve_regular(p, tol)?,
        Classification::SingularNonreal | Classification::RealEqual => {
            inhomogeneous_solution_set(p, tol)?
        }
    };
    let finite = set.particular().is_none_or(Quaternion::is_finite)
        && set.basis().iter().all(|e| e.is_finite());
    if !finite {
        return Err(Error::NonFinite("solution"));
    }
    Ok(set)
}
