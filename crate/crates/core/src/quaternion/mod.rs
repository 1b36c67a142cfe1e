//! Quaternion arithmetic, the sphere of imaginary units and the slice embedding.
//!
//! A quaternion is stored as `w + x i + y j + z k`. Imaginary units are the
//! purely imaginary quaternions of norm one; every such `I` spans a complex
//! plane `C_I` and `x + y i` embeds into it as `x + y I`.

mod matrix;
mod sphere;

pub use matrix::{vandermonde2_inverse, QMatrix2};
pub use sphere::sphere_sample;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Norm below which [`Quaternion::inv`] refuses to divide.
pub const INVERSE_FLOOR: f64 = 1e-300;

/// Relative cutoff under which a component counts as real.
pub const REAL_CUTOFF: f64 = 1e-10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    /// `re + im * unit`, the image of a complex number in the plane of `unit`.
    pub fn from_complex(c: Complex64, unit: ImaginaryUnit) -> Self {
        Quaternion::real(c.re) + unit.as_quaternion() * c.im
    }

    pub fn re(self) -> f64 {
        self.w
    }

    /// Imaginary part `x i + y j + z k`.
    pub fn im(self) -> Quaternion {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    pub fn im_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product on `R^4`.
    pub fn dot(self, other: Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inv(self) -> Result<Self> {
        let n = self.norm();
        if !(n > INVERSE_FLOOR) {
            return Err(Error::ZeroDivision(n));
        }
        Ok(self.conj().scale(1.0 / self.norm_sqr()))
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl From<[f64; 4]> for Quaternion {
    fn from(a: [f64; 4]) -> Self {
        Quaternion::new(a[0], a[1], a[2], a[3])
    }
}

/// Serialized form; `-0.0` is written as `0.0`.
impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.to_array().map(|x| x + 0.0)
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Quaternion::real(w)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl MulAssign for Quaternion {
    fn mul_assign(&mut self, o: Quaternion) {
        *self = *self * o;
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<It: Iterator<Item = Quaternion>>(iter: It) -> Quaternion {
        iter.fold(Quaternion::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.w, self.x, self.y, self.z)
    }
}

/// Parses the text form `w+xi+yj+zk`.
///
/// Terms may appear in any order and may be omitted; a bare unit such as
/// `-k` has coefficient one. Exponents (`1e-3j`) are accepted.
impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse quaternion {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let bytes = text.as_bytes();
        let mut q = Quaternion::ZERO;
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                pos += 1;
            }
            // mantissa and optional exponent
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.') {
                pos += 1;
            }
            if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') && pos > start {
                pos += 1;
                if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                    pos += 1;
                }
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
            }
            let number = &text[start..pos];
            let unit = bytes.get(pos).copied();
            let coef = match number {
                "" | "+" => 1.0,
                "-" => -1.0,
                n => n.parse::<f64>().map_err(|_| bad())?,
            };
            match unit {
                Some(b'i') => {
                    q.x += coef;
                    pos += 1;
                }
                Some(b'j') => {
                    q.y += coef;
                    pos += 1;
                }
                Some(b'k') => {
                    q.z += coef;
                    pos += 1;
                }
                Some(b'+') | Some(b'-') | None => {
                    if matches!(number, "" | "+" | "-") {
                        return Err(bad());
                    }
                    q.w += coef;
                }
                _ => return Err(bad()),
            }
            if pos == start {
                return Err(bad());
            }
        }
        Ok(q)
    }
}

/// An element of the sphere `S = { I : I^2 = -1 }`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    pub const I: ImaginaryUnit = ImaginaryUnit(Quaternion::I);
    pub const J: ImaginaryUnit = ImaginaryUnit(Quaternion::J);
    pub const K: ImaginaryUnit = ImaginaryUnit(Quaternion::K);

    /// Tolerance on `|u^2 + 1|` accepted by [`ImaginaryUnit::new`].
    pub const TOLERANCE: f64 = 1e-12;

    /// Accepts `u` only if `u^2 = -1` within [`ImaginaryUnit::TOLERANCE`].
    pub fn new(u: Quaternion) -> Result<Self> {
        let defect = (u * u + Quaternion::ONE).norm();
        if defect <= Self::TOLERANCE && u.is_finite() {
            Ok(ImaginaryUnit(u))
        } else {
            Err(Error::InvalidUnit(format!("{u} (|u^2 + 1| = {defect:e})")))
        }
    }

    /// Normalizes the imaginary part of `u`.
    pub fn from_direction(u: Quaternion) -> Result<Self> {
        let n = u.im_norm();
        if !(n > 1e-300) || !n.is_finite() {
            return Err(Error::InvalidUnit(format!("{u} has no imaginary direction")));
        }
        Ok(ImaginaryUnit(u.im().scale(1.0 / n)))
    }

    pub fn as_quaternion(self) -> Quaternion {
        self.0
    }

    pub fn distance(self, other: ImaginaryUnit) -> f64 {
        (self.0 - other.0).norm()
    }

    pub fn approx_eq(self, other: ImaginaryUnit, tol: f64) -> bool {
        self.distance(other) <= tol
    }
}

impl Neg for ImaginaryUnit {
    type Output = ImaginaryUnit;
    fn neg(self) -> ImaginaryUnit {
        ImaginaryUnit(-self.0)
    }
}

impl From<ImaginaryUnit> for Quaternion {
    fn from(u: ImaginaryUnit) -> Quaternion {
        u.0
    }
}

impl From<ImaginaryUnit> for [f64; 4] {
    fn from(u: ImaginaryUnit) -> Self {
        u.0.to_array()
    }
}

/// JSON units are validated loosely (decimal round-off) and then renormalized.
impl TryFrom<[f64; 4]> for ImaginaryUnit {
    type Error = Error;

    fn try_from(a: [f64; 4]) -> Result<Self> {
        let q = Quaternion::from(a);
        if q.w.abs() > 1e-6 || (q.norm() - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidUnit(format!("{q}")));
        }
        // Already a unit to rounding: keep the bits so output round-trips.
        if q.w == 0.0 {
            if let Ok(u) = ImaginaryUnit::new(q) {
                return Ok(u);
            }
        }
        ImaginaryUnit::from_direction(q)
    }
}

impl FromStr for ImaginaryUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: Quaternion = s.parse()?;
        ImaginaryUnit::try_from(q.to_array())
    }
}

impl fmt::Display for ImaginaryUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A point of `C_I^n`: `n` coordinate pairs `(x, y)` and the unit `I`, or
/// `None` for a point of `R^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicePoint {
    coords: Vec<(f64, f64)>,
    unit: Option<ImaginaryUnit>,
}

impl SlicePoint {
    pub fn real(xs: &[f64]) -> Self {
        SlicePoint { coords: xs.iter().map(|&x| (x, 0.0)).collect(), unit: None }
    }

    /// The image of `z` under `x + y i -> x + y I`.
    pub fn on_slice(z: &[Complex64], unit: ImaginaryUnit) -> Self {
        SlicePoint { coords: z.iter().map(|c| (c.re, c.im)).collect(), unit: Some(unit) }
    }

    /// Fails if some `y` is non-zero while `unit` is `None`.
    pub fn new(coords: Vec<(f64, f64)>, unit: Option<ImaginaryUnit>) -> Result<Self> {
        if unit.is_none() && coords.iter().any(|&(_, y)| y != 0.0) {
            return Err(Error::InvalidInput("real slice point with non-zero imaginary part".into()));
        }
        Ok(SlicePoint { coords, unit })
    }

    /// Recovers the slice point of a tuple of quaternions sharing one plane.
    pub fn from_quaternions(q: &[Quaternion]) -> Result<Self> {
        match frak_i(q)? {
            None => Ok(SlicePoint::real(&q.iter().map(|c| c.w).collect::<Vec<_>>())),
            Some(unit) => {
                let u = unit.as_quaternion();
                let coords = q.iter().map(|c| (c.w, c.im().dot(u))).collect();
                Ok(SlicePoint { coords, unit: Some(unit) })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }

    pub fn unit(&self) -> Option<ImaginaryUnit> {
        self.unit
    }

    pub fn is_real(&self) -> bool {
        self.unit.is_none() || self.coords.iter().all(|&(_, y)| y == 0.0)
    }

    /// Preimage in `C^n` with respect to the stored unit.
    pub fn complex_coords(&self) -> Vec<Complex64> {
        self.coords.iter().map(|&(x, y)| Complex64::new(x, y)).collect()
    }

    pub fn to_quaternions(&self) -> Vec<Quaternion> {
        self.coords
            .iter()
            .map(|&(x, y)| match self.unit {
                Some(u) => Quaternion::real(x) + u.as_quaternion() * y,
                None => Quaternion::real(x),
            })
            .collect()
    }

    /// The representation whose unit is the extractor's choice: the first
    /// non-zero `y` is made positive (`x + y I = x + (-y)(-I)`), real points
    /// drop their unit.
    pub fn canonical(&self) -> SlicePoint {
        let first = self.coords.iter().find(|&&(_, y)| y != 0.0).map(|&(_, y)| y);
        match (self.unit, first) {
            (Some(u), Some(y)) if y < 0.0 => SlicePoint {
                coords: self.coords.iter().map(|&(x, y)| (x, -y)).collect(),
                unit: Some(-u),
            },
            (Some(u), Some(_)) => SlicePoint { coords: self.coords.clone(), unit: Some(u) },
            _ => SlicePoint { coords: self.coords.iter().map(|&(x, _)| (x, 0.0)).collect(), unit: None },
        }
    }
}

/// The unit extractor on `H_s^n`: `None` for points of `R^n`, otherwise the
/// normalized imaginary part of the first non-real component.
pub fn frak_i(q: &[Quaternion]) -> Result<Option<ImaginaryUnit>> {
    let is_real = |c: &Quaternion| c.im_norm() <= REAL_CUTOFF * (1.0 + c.norm());
    let Some(lead) = q.iter().find(|c| !is_real(c)) else {
        return Ok(None);
    };
    let unit = ImaginaryUnit::from_direction(*lead)?;
    let u = unit.as_quaternion();
    for c in q {
        let im = c.im();
        let off_plane = (im - u * im.dot(u)).norm();
        if off_plane > REAL_CUTOFF * (1.0 + c.norm()) {
            return Err(Error::NotInSliceCone(off_plane));
        }
    }
    Ok(Some(unit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn defining_relations() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, -Quaternion::ONE);
        assert_eq!(j * i, -k);
        let q = Quaternion::new(1.5, -2.0, 0.25, 3.0);
        assert_eq!(q * Quaternion::ONE, q);
        let one_plus_i = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(one_plus_i * one_plus_i.conj(), Quaternion::real(2.0));
    }

    #[test]
    fn inverses() {
        let a = Quaternion::new(1.0, 1.0, 0.0, 0.0).inv().unwrap();
        assert!(close(a, Quaternion::new(0.5, -0.5, 0.0, 0.0), 1e-15));
        assert_eq!(Quaternion::I.inv().unwrap(), -Quaternion::I);
        assert_eq!(Quaternion::real(2.0).inv().unwrap(), Quaternion::real(0.5));
        assert!(matches!(Quaternion::ZERO.inv(), Err(Error::ZeroDivision(_))));
        let q = Quaternion::new(0.3, -1.2, 2.0, 0.7);
        assert!(close(q * q.inv().unwrap(), Quaternion::ONE, 1e-12));
    }

    #[test]
    fn text_form() {
        let q: Quaternion = "1+2i-3j+0.5k".parse().unwrap();
        assert_eq!(q, Quaternion::new(1.0, 2.0, -3.0, 0.5));
        assert_eq!("-k".parse::<Quaternion>().unwrap(), -Quaternion::K);
        assert_eq!("i".parse::<Quaternion>().unwrap(), Quaternion::I);
        assert_eq!("2.5".parse::<Quaternion>().unwrap(), Quaternion::real(2.5));
        assert_eq!("1e-3j".parse::<Quaternion>().unwrap(), Quaternion::new(0.0, 0.0, 1e-3, 0.0));
        assert_eq!("3 - 2k".parse::<Quaternion>().unwrap(), Quaternion::new(3.0, 0.0, 0.0, -2.0));
        assert!("1+x".parse::<Quaternion>().is_err());
        assert!("".parse::<Quaternion>().is_err());
        let q = Quaternion::new(-1.0, 0.0, 2.5, -0.125);
        assert_eq!(q.to_string().parse::<Quaternion>().unwrap(), q);
    }

    #[test]
    fn json_form() {
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[1.0,2.0,3.0,4.0]");
        let u: ImaginaryUnit = serde_json::from_str("[0,0.6,0.8,0]").unwrap();
        assert!(close(u.as_quaternion(), Quaternion::new(0.0, 0.6, 0.8, 0.0), 1e-15));
        assert!(serde_json::from_str::<ImaginaryUnit>("[1,0,0,0]").is_err());
    }

    #[test]
    fn unit_construction() {
        assert!(ImaginaryUnit::new(Quaternion::J).is_ok());
        assert!(ImaginaryUnit::new(Quaternion::new(0.0, 1.0, 1.0, 0.0)).is_err());
        let u = ImaginaryUnit::from_direction(Quaternion::new(5.0, 1.0, 1.0, 1.0)).unwrap();
        let sq = u.as_quaternion() * u.as_quaternion();
        assert!(close(sq, -Quaternion::ONE, 1e-12));
    }

    #[test]
    fn unit_extractor() {
        assert_eq!(frak_i(&[Quaternion::real(3.0), Quaternion::real(5.0)]).unwrap(), None);
        let u = frak_i(&[Quaternion::real(5.0), Quaternion::new(3.0, 0.0, 0.0, -2.0)]).unwrap().unwrap();
        assert_eq!(u.as_quaternion(), -Quaternion::K);
        let u = frak_i(&[Quaternion::new(1.0, 0.0, 2.0, 0.0), Quaternion::real(7.0)]).unwrap().unwrap();
        assert_eq!(u.as_quaternion(), Quaternion::J);
        let err = frak_i(&[Quaternion::new(0.0, 1.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, 1.0, 0.0)]);
        assert!(matches!(err, Err(Error::NotInSliceCone(_))));
        // opposite orientations share the plane
        let u = frak_i(&[Quaternion::new(0.0, 0.0, 2.0, 0.0), Quaternion::new(1.0, 0.0, -3.0, 0.0)]).unwrap();
        assert_eq!(u.unwrap().as_quaternion(), Quaternion::J);
    }

    #[test]
    fn slice_points() {
        let p = SlicePoint::from_quaternions(&[Quaternion::new(1.0, 0.0, -2.0, 0.0)]).unwrap();
        assert_eq!(p.coords(), &[(1.0, 2.0)]);
        assert_eq!(p.unit().unwrap().as_quaternion(), -Quaternion::J);
        let flipped = SlicePoint::on_slice(&[Complex64::new(1.0, -2.0)], ImaginaryUnit::J).canonical();
        assert_eq!(flipped, p);
        assert_eq!(flipped.to_quaternions(), vec![Quaternion::new(1.0, 0.0, -2.0, 0.0)]);
        assert!(SlicePoint::new(vec![(1.0, 1.0)], None).is_err());
        assert!(SlicePoint::on_slice(&[Complex64::new(2.0, 0.0)], ImaginaryUnit::I).canonical().unit().is_none());
    }
}
