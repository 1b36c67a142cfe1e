use std::ops::Mul;

use super::{ImaginaryUnit, Quaternion};
use crate::error::{Error, Result};

/// Minimum separation of two units for the two-slice system to be solved.
pub const DISTINCT_UNITS: f64 = 1e-10;

/// A 2x2 quaternionic matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QMatrix2 {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl QMatrix2 {
    pub const fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        QMatrix2 { a, b, c, d }
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        QMatrix2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        QMatrix2::real(1.0, 0.0, 0.0, 1.0)
    }

    /// `[[0, -1], [1, 0]]`; squares to minus the identity.
    pub fn sigma() -> Self {
        QMatrix2::real(0.0, -1.0, 1.0, 0.0)
    }

    /// `p1 * identity + p2 * sigma`.
    pub fn from_column(p1: Quaternion, p2: Quaternion) -> Self {
        QMatrix2::new(p1, -p2, p2, p1)
    }

    /// Product with the column `(v1, v2)^T`.
    pub fn apply(&self, v: [Quaternion; 2]) -> [Quaternion; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    /// Product of the row `(r1, r2)` with this matrix.
    pub fn row_apply(&self, r: [Quaternion; 2]) -> [Quaternion; 2] {
        [r[0] * self.a + r[1] * self.c, r[0] * self.b + r[1] * self.d]
    }

    /// First column, i.e. the product with `e1 = (1, 0)^T`.
    pub fn first_column(&self) -> [Quaternion; 2] {
        [self.a, self.c]
    }

    pub fn entries(&self) -> [Quaternion; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn max_abs_diff(&self, other: &QMatrix2) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(x, y)| (*x - y).norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for QMatrix2 {
    type Output = QMatrix2;
    fn mul(self, o: QMatrix2) -> QMatrix2 {
        QMatrix2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// Inverse of `[[1, J], [1, K]]`:
/// `[[-K (J-K)^-1, -J (K-J)^-1], [(J-K)^-1, (K-J)^-1]]`.
pub fn vandermonde2_inverse(j: ImaginaryUnit, k: ImaginaryUnit) -> Result<QMatrix2> {
    let (jq, kq) = (j.as_quaternion(), k.as_quaternion());
    let gap = (jq - kq).norm();
    if !(gap > DISTINCT_UNITS) {
        return Err(Error::DegenerateSlicePair(gap));
    }
    let jk = (jq - kq).inv()?;
    let kj = (kq - jq).inv()?;
    Ok(QMatrix2::new(-(kq * jk), -(jq * kj), jk, kj))
}
