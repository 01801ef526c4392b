//! Real quaternions stored as `(w, x, y, z)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// `w + x i + y j + z k`.
///
/// Components are always finite: the checked constructors reject NaN and
/// infinities, and deserialization goes through the same check.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawQuaternion")]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Deserialize)]
struct RawQuaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl TryFrom<RawQuaternion> for Quaternion {
    type Error = Error;

    fn try_from(raw: RawQuaternion) -> Result<Self> {
        Quaternion::try_new(raw.w, raw.x, raw.y, raw.z)
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    /// Unchecked constructor. Callers passing untrusted data should use
    /// [`Quaternion::try_new`].
    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn try_new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let q = Self::new(w, x, y, z);
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::NonFinite("quaternion"))
        }
    }

    #[inline]
    pub const fn from_real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn pure(x: f64, y: f64, z: f64) -> Self {
        Self::new(0.0, x, y, z)
    }

    #[inline]
    pub const fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    #[inline]
    pub const fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Real (scalar) part.
    #[inline]
    pub fn re(self) -> f64 {
        self.w
    }

    /// Imaginary (vector) part as a pure quaternion.
    #[inline]
    pub fn im(self) -> Quaternion {
        Self::pure(self.x, self.y, self.z)
    }

    #[inline]
    pub fn conj(self) -> Quaternion {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Euclidean norm, computed with `hypot` to avoid premature overflow.
    #[inline]
    pub fn norm(self) -> f64 {
        self.w.hypot(self.x).hypot(self.y.hypot(self.z))
    }

    #[inline]
    pub fn im_norm(self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    /// Euclidean inner product of the four components.
    #[inline]
    pub fn dot(self, other: Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Dot product of the imaginary parts viewed as 3-vectors.
    #[inline]
    pub fn dot_im(self, other: Quaternion) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Cross product of the imaginary parts, returned as a pure quaternion.
    #[inline]
    pub fn cross_im(self, other: Quaternion) -> Quaternion {
        Self::pure(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    /// `conj(q) / |q|^2`.
    pub fn inv(self, tol: Tolerance) -> Result<Quaternion> {
        let n = self.norm();
        if n <= tol.abs || n == 0.0 {
            return Err(Error::DivisionByZero {
                operand: self.to_string(),
            });
        }
        // Scale first so that |q|^2 cannot underflow or overflow.
        let u = self / n;
        Ok(u.conj() / n)
    }

    /// `q / |q|`; `None` for the zero quaternion.
    pub fn normalized(self) -> Option<Quaternion> {
        let n = self.norm();
        (n > 0.0).then(|| self / n)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// `Re a Re b - Im a . Im b + Re a Im b + Re b Im a + Im a x Im b`.
    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let cross = self.cross_im(rhs);
        Quaternion::new(
            self.w * rhs.w - self.dot_im(rhs),
            self.w * rhs.x + rhs.w * self.x + cross.x,
            self.w * rhs.y + rhs.w * self.y + cross.y,
            self.w * rhs.z + rhs.w * self.z + cross.z,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        *self = *self + rhs;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, rhs: Quaternion) {
        *self = *self - rhs;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;

    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Quaternion::from_real(w)
    }
}

impl fmt::Display for Quaternion {
    /// Full-precision term form, e.g. `1-2i+0.5k`; parses back bit-exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_terms(*self, crate::text::format_shortest))
    }
}
