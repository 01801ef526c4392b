//! Numeric comparison policy shared by every predicate in the crate.

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Relative threshold plus absolute floor.
///
/// Two reals compare equal when `|u - v| <= abs + rel * max(|u|, |v|)`.
/// A value is negligible at scale `s` when `|u| <= abs + rel * s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        rel: 1e-10,
        abs: 1e-14,
    };

    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if !(rel.is_finite() && rel > 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "relative threshold must be positive and finite, got {rel}"
            )));
        }
        if !(abs.is_finite() && abs >= 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "absolute floor must be non-negative and finite, got {abs}"
            )));
        }
        Ok(Self { rel, abs })
    }

    #[inline]
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }

    #[inline]
    pub fn is_negligible(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.threshold(scale)
    }

    #[inline]
    pub fn approx_eq(&self, u: f64, v: f64) -> bool {
        (u - v).abs() <= self.threshold(u.abs().max(v.abs()))
    }

    /// Component-wise closeness measured by the norm of the difference,
    /// at the scale of the larger norm.
    pub fn approx_eq_quat(&self, p: Quaternion, q: Quaternion) -> bool {
        (p - q).norm() <= self.threshold(p.norm().max(q.norm()))
    }

    /// `norm(im q) > abs + rel * norm(q)`.
    #[inline]
    pub fn is_nonreal(&self, q: Quaternion) -> bool {
        q.im_norm() > self.threshold(q.norm())
    }

    #[inline]
    pub fn is_real(&self, q: Quaternion) -> bool {
        !self.is_nonreal(q)
    }

    #[inline]
    pub fn is_zero(&self, q: Quaternion) -> bool {
        q.norm() <= self.abs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(Tolerance::new(0.0, 0.0).is_err());
        assert!(Tolerance::new(-1e-3, 0.0).is_err());
        assert!(Tolerance::new(1e-3, -1.0).is_err());
        assert!(Tolerance::new(f64::NAN, 0.0).is_err());
        assert!(Tolerance::new(1e-3, 0.0).is_ok());
    }

    #[test]
    fn comparison_rule() {
        let tol = Tolerance::new(1e-3, 0.0).unwrap();
        assert!(tol.approx_eq(1000.0, 1000.9));
        assert!(!tol.approx_eq(1000.0, 1001.1));
        assert!(tol.is_negligible(0.5, 1000.0));
        assert!(!tol.is_negligible(1.5, 1000.0));
    }

    #[test]
    fn nonreal_is_scale_invariant() {
        let tol = Tolerance::DEFAULT;
        let q = Quaternion::new(1.0, 1e-9, 0.0, 0.0);
        assert!(tol.is_nonreal(q));
        assert!(tol.is_nonreal(q * 1e8));
        let r = Quaternion::new(1.0, 1e-12, 0.0, 0.0);
        assert!(tol.is_real(r));
        assert!(tol.is_real(r * 1e8));
    }
}
