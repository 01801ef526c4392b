//! Quaternion square roots.
//!
//! A nonreal or positive real `a` has exactly the two roots
//! `± sqrt|a| p/|p|` with `p = a + |a|`. A negative real has infinitely many:
//! every pure quaternion of norm `sqrt|a|`.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootKind {
    PairRoots,
    PureSphere,
}

/// The square roots of a nonzero quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootSet {
    /// `{principal, -principal}`; the principal root has positive real part.
    Pair(Quaternion),
    /// All pure quaternions of norm `radius`. The canonical representative
    /// is `radius * i`.
    PureSphere { radius: f64 },
}

impl RootSet {
    pub fn kind(&self) -> RootKind {
        match self {
            RootSet::Pair(_) => RootKind::PairRoots,
            RootSet::PureSphere { .. } => RootKind::PureSphere,
        }
    }

    pub fn principal(&self) -> Quaternion {
        match *self {
            RootSet::Pair(p) => p,
            RootSet::PureSphere { radius } => Quaternion::I * radius,
        }
    }

    pub fn radius(&self) -> Option<f64> {
        match *self {
            RootSet::Pair(_) => None,
            RootSet::PureSphere { radius } => Some(radius),
        }
    }

    /// `principal` and its negation.
    pub fn representatives(&self) -> [Quaternion; 2] {
        let p = self.principal();
        [p, -p]
    }

    /// Whether `r` belongs to the set under `tol`.
    pub fn contains(&self, r: Quaternion, tol: Tolerance) -> bool {
        match *self {
            RootSet::Pair(p) => tol.approx_eq_quat(r, p) || tol.approx_eq_quat(r, -p),
            RootSet::PureSphere { radius } => {
                tol.is_negligible(r.re(), radius) && tol.approx_eq(r.im_norm(), radius)
            }
        }
    }
}

/// `λ0 + λ1 a = sqrt(a)` (principal branch) for nonreal `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearFormCoeffs {
    pub lambda0: f64,
    pub lambda1: f64,
}

impl LinearFormCoeffs {
    pub fn apply(&self, a: Quaternion) -> Quaternion {
        Quaternion::from_real(self.lambda0) + a * self.lambda1
    }
}

/// Real part of `a + |a|`, computed without cancellation when `Re a < 0`.
fn shifted_real_part(a: Quaternion, norm: f64) -> f64 {
    if a.re() >= 0.0 {
        a.re() + norm
    } else {
        let im = a.im_norm();
        // |a| + Re a = |Im a|^2 / (|a| - Re a)
        (im / (norm - a.re())) * im
    }
}

fn is_negative_real(a: Quaternion, tol: Tolerance) -> bool {
    tol.is_real(a) && a.re() < 0.0
}

pub fn sqrt(a: Quaternion, tol: Tolerance) -> Result<RootSet> {
    let norm = a.norm();
    if norm <= tol.abs || norm == 0.0 {
        return Err(Error::ZeroInput);
    }
    if is_negative_real(a, tol) {
        return Ok(RootSet::PureSphere { radius: norm.sqrt() });
    }
    let p = Quaternion::from_real(shifted_real_part(a, norm)) + a.im();
    let dir = p.normalized().ok_or_else(|| {
        Error::Internal(format!("degenerate root direction for {a}"))
    })?;
    Ok(RootSet::Pair(dir * norm.sqrt()))
}

/// Coefficients with `λ1 = sqrt|a| / |a + |a||` and `λ0 = λ1 |a|`.
pub fn linear_form(a: Quaternion, tol: Tolerance) -> Result<LinearFormCoeffs> {
    if tol.is_real(a) {
        return domain(format!("linear form requires a nonreal quaternion, got {a}"));
    }
    let norm = a.norm();
    let shifted = Quaternion::from_real(shifted_real_part(a, norm)) + a.im();
    let lambda1 = norm.sqrt() / shifted.norm();
    Ok(LinearFormCoeffs {
        lambda0: lambda1 * norm,
        lambda1,
    })
}

/// `a (b + conj a) / |b + conj a|`, sign-fixed to a positive real part.
///
/// No precondition checks; callers guarantee `|a| = |b|` and that the
/// denominator is well away from zero.
pub(crate) fn product_root_unchecked(a: Quaternion, b: Quaternion) -> Option<Quaternion> {
    let shift = b + a.conj();
    let n = shift.norm();
    if n == 0.0 {
        return None;
    }
    let r = a * (shift / n);
    Some(if r.re() < 0.0 { -r } else { r })
}

fn check_product_preconditions(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<()> {
    if !tol.approx_eq(a.norm(), b.norm()) {
        return domain(format!(
            "product root requires equal norms, got |a| = {} and |b| = {}",
            a.norm(),
            b.norm()
        ));
    }
    let ab = a * b;
    if tol.is_real(ab) {
        return domain(format!("product {a} * {b} = {ab} is real"));
    }
    Ok(())
}

/// Square roots of `a b` for equal-norm `a`, `b` with nonreal product.
pub fn sqrt_product(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<RootSet> {
    check_product_preconditions(a, b, tol)?;
    product_root_unchecked(a, b)
        .map(RootSet::Pair)
        .ok_or_else(|| Error::Internal(format!("b + conj(a) vanished for {a}, {b}")))
}

/// Right-hand form `(a + conj b) b / |a + conj b|`, sign-fixed like
/// [`sqrt_product`].
pub fn sqrt_product_right(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<RootSet> {
    check_product_preconditions(a, b, tol)?;
    let shift = a + b.conj();
    let r = (shift / shift.norm()) * b;
    Ok(RootSet::Pair(if r.re() < 0.0 { -r } else { r }))
}

/// `sqrt(ab) = λ0 + λ1 ab` with `λ1 = 1/|a + conj b|`, `λ0 = λ1 |a| |b|`.
pub fn product_linear_form(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<LinearFormCoeffs> {
    check_product_preconditions(a, b, tol)?;
    let lambda1 = 1.0 / (a + b.conj()).norm();
    Ok(LinearFormCoeffs {
        lambda0: lambda1 * a.norm() * b.norm(),
        lambda1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Tolerance = Tolerance::DEFAULT;
    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;

    fn close(a: Quaternion, b: Quaternion) -> bool {
        (a - b).norm() <= 1e-14 * (1.0 + a.norm().max(b.norm()))
    }

    #[test]
    fn positive_real() {
        let r = sqrt(Quaternion::from_real(4.0), T).unwrap();
        assert_eq!(r, RootSet::Pair(Quaternion::from_real(2.0)));
    }

    #[test]
    fn negative_real() {
        let r = sqrt(Quaternion::from_real(-9.0), T).unwrap();
        assert_eq!(r, RootSet::PureSphere { radius: 3.0 });
        assert_eq!(r.principal(), I * 3.0);
        let s = r.principal();
        assert_eq!(s * s, Quaternion::from_real(-9.0));
        let other = Quaternion::pure(1.0, 2.0, 2.0);
        assert!(r.contains(other, T));
        assert_eq!(other * other, Quaternion::from_real(-9.0));
    }

    #[test]
    fn nonreal_examples() {
        let a = Quaternion::new(3.0, 4.0, 0.0, 0.0);
        let r = sqrt(a, T).unwrap().principal();
        assert!(close(r, Quaternion::new(2.0, 1.0, 0.0, 0.0)), "{r}");
        assert!(close(r * r, a));

        let r = sqrt(I, T).unwrap().principal();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(close(r, Quaternion::new(h, h, 0.0, 0.0)), "{r}");
        assert!(close(r * r, I));
    }

    #[test]
    fn zero_input() {
        assert_eq!(sqrt(Quaternion::ZERO, T), Err(Error::ZeroInput));
    }

    #[test]
    fn near_negative_real_is_accurate() {
        // Eq. p = a + |a| cancels catastrophically here without the rewrite.
        for eps in [1e-9, 1e-7, 1e-5] {
            let a = Quaternion::new(-4.0, eps, -eps, 0.5 * eps);
            let r = sqrt(a, T).unwrap();
            assert_eq!(r.kind(), RootKind::PairRoots);
            let p = r.principal();
            assert!((p * p - a).norm() <= 1e-14 * a.norm(), "eps {eps}");
            assert!(p.re() > 0.0);
        }
        // Below the nonreal threshold the input is treated as negative real.
        let a = Quaternion::new(-4.0, 1e-13, 0.0, 0.0);
        assert_eq!(sqrt(a, T).unwrap().kind(), RootKind::PureSphere);
    }

    #[test]
    fn linear_form_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let c = linear_form(I, T).unwrap();
        assert!((c.lambda0 - h).abs() < 1e-15 && (c.lambda1 - h).abs() < 1e-15);

        let a = Quaternion::new(3.0, 4.0, 0.0, 0.0);
        let c = linear_form(a, T).unwrap();
        let l1 = 5f64.sqrt() / 80f64.sqrt();
        assert!((c.lambda1 - l1).abs() < 1e-15);
        assert!((c.lambda0 - 5.0 * l1).abs() < 1e-15);
        assert!(close(c.apply(a), Quaternion::new(2.0, 1.0, 0.0, 0.0)));

        let c = linear_form(J * 2.0, T).unwrap();
        assert_eq!(c.lambda0, c.lambda1 * 2.0);

        assert!(linear_form(Quaternion::from_real(4.0), T).is_err());
    }

    #[test]
    fn product_root_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let r = sqrt_product(I, J, T).unwrap().principal();
        assert!(close(r, Quaternion::new(h, 0.0, 0.0, h)), "{r}");
        assert!(close(r * r, K));
        assert!(matches!(sqrt_product(I, I, T), Err(Error::Domain(_))));
        assert!(matches!(sqrt_product(I, J * 2.0, T), Err(Error::Domain(_))));

        let a = Quaternion::new(1.0, 1.0, 0.0, 0.0) * h;
        let b = Quaternion::new(1.0, 0.0, 1.0, 0.0) * h;
        let left = sqrt_product(a, b, T).unwrap().principal();
        let right = sqrt_product_right(a, b, T).unwrap().principal();
        let direct = sqrt(a * b, T).unwrap().principal();
        assert!(close(left, direct) && close(right, direct));
    }
}
