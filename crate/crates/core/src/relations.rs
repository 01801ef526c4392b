//! Commutation, anticommutation and similarity of quaternions.
//!
//! For nonreal `a`, `b` the commutator is `ab - ba = 2 (Im a x Im b)`, so
//! commuting is the same as having parallel imaginary parts. Nonreal `a`, `b`
//! are similar (`p^-1 a p = b` for some nonzero `p`) exactly when their real
//! parts and norms agree.

use crate::error::{domain, Error, Result};
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

/// `ab = ba` under `tol`. Real inputs commute with everything.
pub fn commutes(a: Quaternion, b: Quaternion, tol: Tolerance) -> bool {
    if tol.is_real(a) || tol.is_real(b) {
        return true;
    }
    let scale = a.im_norm() * b.im_norm();
    tol.is_negligible(a.cross_im(b).norm(), scale)
}

/// `ab = -ba` under `tol`: both pure with orthogonal imaginary parts.
pub fn anticommutes(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<bool> {
    require_nonreal(a, "a", tol)?;
    require_nonreal(b, "b", tol)?;
    Ok(tol.is_negligible(a.re(), a.norm())
        && tol.is_negligible(b.re(), b.norm())
        && tol.is_negligible(a.dot_im(b), a.norm() * b.norm()))
}

/// Similarity of two nonreal quaternions: equal real parts and equal norms.
///
/// Real parts are compared at the scale of the larger norm, so a tiny real
/// part carrying rounding noise from `p^-1 a p` still matches.
pub fn is_similar(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<bool> {
    require_nonreal(a, "a", tol)?;
    require_nonreal(b, "b", tol)?;
    Ok(similar_parts(a, b, tol))
}

pub(crate) fn similar_parts(a: Quaternion, b: Quaternion, tol: Tolerance) -> bool {
    let scale = a.norm().max(b.norm());
    tol.is_negligible(a.re() - b.re(), scale) && tol.approx_eq(a.norm(), b.norm())
}

/// A nonzero `p` with `a p = p b` for similar nonreal `a`, `b`.
///
/// `p = Im a + Im b` unless the imaginary parts cancel, in which case
/// `p = Im a q - q Im a` with `q` the unit among `i`, `j`, `k` least aligned
/// with `Im a`.
pub fn similarity_witness(a: Quaternion, b: Quaternion, tol: Tolerance) -> Result<Quaternion> {
    if !is_similar(a, b, tol)? {
        return domain(format!("{a} and {b} are not similar"));
    }
    let (ia, ib) = (a.im(), b.im());
    let sum = ia + ib;
    if !tol.is_negligible(sum.norm(), ia.norm().max(ib.norm())) {
        return Ok(sum);
    }
    let q = least_aligned_unit(ia);
    let p = ia * q - q * ia;
    if tol.is_negligible(p.norm(), ia.norm()) {
        return Err(Error::Internal(format!(
            "no witness candidate for opposite imaginary parts of {a} and {b}"
        )));
    }
    Ok(p)
}

/// The element of `{i, j, k}` maximising `|Im v x u|`, ties broken in that order.
pub(crate) fn least_aligned_unit(v: Quaternion) -> Quaternion {
    let mut best = Quaternion::I;
    let mut best_norm = v.cross_im(best).norm();
    for u in [Quaternion::J, Quaternion::K] {
        let n = v.cross_im(u).norm();
        if n > best_norm {
            best = u;
            best_norm = n;
        }
    }
    best
}

fn require_nonreal(q: Quaternion, name: &str, tol: Tolerance) -> Result<()> {
    if tol.is_real(q) {
        return domain(format!("operand `{name}` = {q} is real; a nonreal quaternion is required"));
    }
    Ok(())
}
