use num_complex::Complex64;

use super::poly::SlicePolynomial;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::stem::StemValue;

/// Default truncation order.
pub const DEFAULT_TRUNCATION: usize = 64;

/// Evaluation is refused at or beyond this fraction of the radius.
pub const RADIUS_FRACTION: f64 = 0.95;

/// A truncated one-variable power series `sum (q - c)^m a_m` about a real centre.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicePowerSeries {
    center: f64,
    radius: f64,
    coeffs: Vec<Quaternion>,
}

impl SlicePowerSeries {
    pub fn new(center: f64, radius: f64, coeffs: Vec<Quaternion>) -> Result<Self> {
        if !(radius > 0.0) || !center.is_finite() {
            return Err(Error::InvalidInput(format!("series with centre {center} and radius {radius}")));
        }
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput("series needs finite coefficients".into()));
        }
        Ok(SlicePowerSeries { center, radius, coeffs })
    }

    /// Re-expands a one-variable polynomial about `center`.
    pub fn from_polynomial(p: &SlicePolynomial, center: f64, radius: f64) -> Result<Self> {
        if p.dim() != 1 {
            return Err(Error::IncompatibleDomains("series are one-variable".into()));
        }
        let a = p.coeffs_1d();
        let mut out = vec![Quaternion::ZERO; a.len().max(1)];
        // q^k = sum_j C(k, j) c^(k-j) (q - c)^j
        for (k, &ak) in a.iter().enumerate() {
            let mut binom = 1.0;
            for j in 0..=k {
                out[j] += ak * (binom * center.powi((k - j) as i32));
                binom *= (k - j) as f64 / (j + 1) as f64;
            }
        }
        SlicePowerSeries::new(center, radius, out)
    }

    /// Pads the coefficient list with zeros up to `len`.
    pub fn padded(mut self, len: usize) -> SlicePowerSeries {
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Quaternion::ZERO);
        }
        self
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn max_imag_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im_norm()).fold(0.0, f64::max)
    }

    pub fn realified(&self) -> SlicePowerSeries {
        let coeffs = self.coeffs.iter().map(|c| Quaternion::real(c.w)).collect();
        SlicePowerSeries { coeffs, ..self.clone() }
    }

    pub fn stem_at(&self, z: &[Complex64]) -> Result<StemValue> {
        let [z] = z else {
            return Err(Error::InvalidInput("series are one-variable".into()));
        };
        let w = z - self.center;
        if w.norm() >= RADIUS_FRACTION * self.radius {
            return Err(Error::OutOfDomain(format!(
                "|z - {}| = {} is not below {} times the radius {}",
                self.center,
                w.norm(),
                RADIUS_FRACTION,
                self.radius
            )));
        }
        let mut s = StemValue::ZERO;
        let mut pow = Complex64::new(1.0, 0.0);
        for c in &self.coeffs {
            s += StemValue::constant(*c).mul_complex(pow);
            pow *= w;
        }
        Ok(s)
    }

    /// Cauchy product truncated to the shorter coefficient list.
    pub fn star(&self, other: &SlicePowerSeries) -> Result<SlicePowerSeries> {
        if self.center != other.center {
            return Err(Error::IncompatibleDomains(format!(
                "series centred at {} and {}",
                self.center, other.center
            )));
        }
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![Quaternion::ZERO; len];
        for (j, a) in self.coeffs.iter().take(len).enumerate() {
            for (k, b) in other.coeffs.iter().take(len - j).enumerate() {
                out[j + k] += *a * *b;
            }
        }
        SlicePowerSeries::new(self.center, self.radius.min(other.radius), out)
    }

    pub fn conj(&self) -> SlicePowerSeries {
        SlicePowerSeries { coeffs: self.coeffs.iter().map(|c| c.conj()).collect(), ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        // 1 / (1 - q) about 0
        let s = SlicePowerSeries::new(0.0, 1.0, vec![Quaternion::ONE; DEFAULT_TRUNCATION]).unwrap();
        let z = Complex64::new(0.1, 0.2);
        let v = s.stem_at(&[z]).unwrap();
        let exact = 1.0 / (1.0 - z);
        assert!((v.f1.w - exact.re).abs() < 1e-12 && (v.f2.w - exact.im).abs() < 1e-12);
        assert!(matches!(s.stem_at(&[Complex64::new(0.96, 0.0)]), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn taylor_shift() {
        let p = SlicePolynomial::from_coeffs(&[Quaternion::I, Quaternion::ZERO, Quaternion::J]);
        let s = SlicePowerSeries::from_polynomial(&p, 1.5, 10.0).unwrap();
        let z = [Complex64::new(0.3, -0.8)];
        let d = s.stem_at(&z).unwrap() - p.stem_at(&z).unwrap();
        assert!(d.norm() < 1e-13);
    }

    #[test]
    fn products() {
        let a = SlicePowerSeries::new(0.5, 2.0, vec![Quaternion::ONE, Quaternion::I]).unwrap();
        let b = SlicePowerSeries::new(0.5, 1.0, vec![Quaternion::J, Quaternion::ONE]).unwrap();
        let c = a.star(&b).unwrap();
        assert_eq!(c.coeffs(), &[Quaternion::J, Quaternion::ONE + Quaternion::K]);
        assert_eq!(c.radius(), 1.0);
        let far = SlicePowerSeries::new(0.0, 1.0, vec![Quaternion::ONE]).unwrap();
        assert!(a.star(&far).is_err());
    }
}
