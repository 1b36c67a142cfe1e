use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, SlicePoint};
use crate::stem::StemValue;

/// Exponent multi-index `(k_1, ..., k_n)`.
pub type Exponent = Vec<u32>;

/// `z^k = prod z_l^{k_l}` in `C`.
pub fn complex_monomial(z: &[Complex64], k: &[u32]) -> Complex64 {
    z.iter().zip(k).map(|(c, &e)| c.powu(e)).product()
}

/// A slice polynomial `sum q^k a_k` in `n` quaternionic variables with
/// coefficients on the right.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicePolynomial {
    n: usize,
    coeffs: BTreeMap<Exponent, Quaternion>,
}

impl SlicePolynomial {
    pub fn zero(n: usize) -> Self {
        SlicePolynomial { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Quaternion) -> Self {
        let mut p = SlicePolynomial::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// The coordinate function `q_l`.
    pub fn variable(n: usize, l: usize) -> Self {
        let mut k = vec![0; n];
        k[l] = 1;
        let mut p = SlicePolynomial::zero(n);
        p.add_term(k, Quaternion::ONE);
        p
    }

    /// Sums repeated exponents; rejects exponents of the wrong length.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Exponent, Quaternion)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("polynomial in zero variables".into()));
        }
        let mut p = SlicePolynomial::zero(n);
        for (k, c) in terms {
            if k.len() != n {
                return Err(Error::InvalidInput(format!("exponent {k:?} has length {} instead of {n}", k.len())));
            }
            if !c.is_finite() {
                return Err(Error::InvalidInput(format!("non-finite coefficient at {k:?}")));
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    /// One variable, `coeffs[m]` multiplying `q^m`.
    pub fn from_coeffs(coeffs: &[Quaternion]) -> Self {
        let mut p = SlicePolynomial::zero(1);
        for (m, &c) in coeffs.iter().enumerate() {
            p.add_term(vec![m as u32], c);
        }
        p
    }

    pub fn from_real_coeffs(coeffs: &[f64]) -> Self {
        SlicePolynomial::from_coeffs(&coeffs.iter().map(|&c| Quaternion::real(c)).collect::<Vec<_>>())
    }

    /// `q - a`.
    pub fn linear(a: Quaternion) -> Self {
        SlicePolynomial::from_coeffs(&[-a, Quaternion::ONE])
    }

    fn add_term(&mut self, k: Exponent, c: Quaternion) {
        let entry = self.coeffs.entry(k).or_insert(Quaternion::ZERO);
        *entry += c;
        self.coeffs.retain(|_, v| *v != Quaternion::ZERO);
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Quaternion)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, k: &[u32]) -> Quaternion {
        self.coeffs.get(k).copied().unwrap_or(Quaternion::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|k| k.iter().sum()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficient list of a one-variable polynomial.
    pub fn coeffs_1d(&self) -> Vec<Quaternion> {
        assert_eq!(self.n, 1, "coeffs_1d needs one variable");
        let len = self.degree().map_or(0, |d| d as usize + 1);
        let mut out = vec![Quaternion::ZERO; len];
        for (k, c) in &self.coeffs {
            out[k[0] as usize] = *c;
        }
        out
    }

    /// Real parts of the dense coefficients.
    pub fn real_coeffs_1d(&self) -> Vec<f64> {
        self.coeffs_1d().iter().map(|c| c.w).collect()
    }

    /// `sum |a_k|`, the magnitude used to scale tolerances.
    pub fn scale(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    /// `sum |a_k| |z^k|`, a bound for the stem components at `z`.
    pub fn magnitude_at(&self, z: &[Complex64]) -> f64 {
        self.coeffs.iter().map(|(k, c)| c.norm() * complex_monomial(z, k).norm()).sum()
    }

    pub fn max_imag_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.im_norm()).fold(0.0, f64::max)
    }

    /// Drops the imaginary parts of all coefficients.
    pub fn realified(&self) -> SlicePolynomial {
        let mut p = SlicePolynomial::zero(self.n);
        for (k, c) in &self.coeffs {
            p.add_term(k.clone(), Quaternion::real(c.w));
        }
        p
    }

    /// `(sum Re(z^k) a_k, sum Im(z^k) a_k)`.
    pub fn stem_at(&self, z: &[Complex64]) -> Result<StemValue> {
        if z.len() != self.n {
            return Err(Error::InvalidInput(format!("point of C^{} for a polynomial in {} variables", z.len(), self.n)));
        }
        let mut s = StemValue::ZERO;
        for (k, c) in &self.coeffs {
            s += StemValue::constant(*c).mul_complex(complex_monomial(z, k));
        }
        Ok(s)
    }

    pub fn evaluate(&self, q: &SlicePoint) -> Result<Quaternion> {
        let s = self.stem_at(&q.complex_coords())?;
        Ok(match q.unit() {
            Some(u) => s.eval(u),
            None => s.f1,
        })
    }

    pub fn evaluate_quaternions(&self, q: &[Quaternion]) -> Result<Quaternion> {
        self.evaluate(&SlicePoint::from_quaternions(q)?)
    }

    /// Convolution of coefficients in factor order.
    pub fn star(&self, other: &SlicePolynomial) -> Result<SlicePolynomial> {
        if self.n != other.n {
            return Err(Error::IncompatibleDomains(format!(
                "polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        let mut acc: BTreeMap<Exponent, Quaternion> = BTreeMap::new();
        for (j, a) in &self.coeffs {
            for (k, b) in &other.coeffs {
                let m: Exponent = j.iter().zip(k).map(|(x, y)| x + y).collect();
                *acc.entry(m).or_insert(Quaternion::ZERO) += *a * *b;
            }
        }
        acc.retain(|_, v| *v != Quaternion::ZERO);
        Ok(SlicePolynomial { n: self.n, coeffs: acc })
    }

    pub fn conj(&self) -> SlicePolynomial {
        SlicePolynomial { n: self.n, coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), c.conj())).collect() }
    }

    /// Largest coefficientwise distance.
    pub fn max_coeff_diff(&self, other: &SlicePolynomial) -> f64 {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    /// Quotient of a one-variable polynomial by a real polynomial, remainder dropped.
    pub fn div_real_1d(&self, divisor: &[f64]) -> SlicePolynomial {
        let mut rem = self.coeffs_1d();
        let d = divisor.len() - 1;
        let lead = divisor[d];
        if rem.len() <= d {
            return SlicePolynomial::zero(1);
        }
        let mut quot = vec![Quaternion::ZERO; rem.len() - d];
        for m in (0..quot.len()).rev() {
            let c = rem[m + d] * (1.0 / lead);
            quot[m] = c;
            for (i, &dv) in divisor.iter().enumerate() {
                rem[m + i] -= c * dv;
            }
        }
        SlicePolynomial::from_coeffs(&quot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::ImaginaryUnit;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    #[test]
    fn product_of_linear_factors() {
        let f = SlicePolynomial::linear(Quaternion::I).star(&SlicePolynomial::linear(Quaternion::J)).unwrap();
        assert_eq!(f.coeffs_1d(), vec![Quaternion::K, q(0.0, -1.0, -1.0, 0.0), Quaternion::ONE]);
        let a = q(1.0, 2.0, 0.0, 0.0);
        let g = SlicePolynomial::linear(a).star(&SlicePolynomial::linear(a.conj())).unwrap();
        assert_eq!(g, SlicePolynomial::from_real_coeffs(&[5.0, -2.0, 1.0]));
    }

    #[test]
    fn evaluation() {
        let f = SlicePolynomial::from_real_coeffs(&[1.0, 0.0, 1.0]);
        assert_eq!(f.evaluate_quaternions(&[Quaternion::I]).unwrap(), Quaternion::ZERO);
        let g = SlicePolynomial::linear(Quaternion::I).star(&SlicePolynomial::linear(Quaternion::J)).unwrap();
        assert!(g.evaluate_quaternions(&[Quaternion::I]).unwrap().norm() < 1e-15);
        assert!((g.evaluate_quaternions(&[Quaternion::J]).unwrap() - Quaternion::K * 2.0).norm() < 1e-15);
        let p = SlicePoint::on_slice(&[Complex64::new(0.0, 1.0)], ImaginaryUnit::K);
        assert_eq!(f.evaluate(&p).unwrap(), Quaternion::ZERO);
    }

    #[test]
    fn several_variables() {
        let q1 = SlicePolynomial::variable(2, 0);
        let q2 = SlicePolynomial::variable(2, 1);
        let c = SlicePolynomial::constant(2, Quaternion::J);
        let f = q1.star(&q2).unwrap().star(&c).unwrap();
        assert_eq!(f.degree(), Some(2));
        let z = [Complex64::new(1.0, 1.0), Complex64::new(0.0, 2.0)];
        let s = f.stem_at(&z).unwrap();
        let w = z[0] * z[1];
        assert_eq!(s, StemValue::new(Quaternion::J * w.re, Quaternion::J * w.im));
        assert!(f.star(&SlicePolynomial::linear(Quaternion::I)).is_err());
        assert!(SlicePolynomial::new(2, [(vec![1], Quaternion::ONE)]).is_err());
    }

    #[test]
    fn real_division() {
        let f = SlicePolynomial::from_coeffs(&[q(2.0, 1.0, 0.0, 0.0), Quaternion::ZERO, q(2.0, 1.0, 0.0, 0.0)]);
        let g = f.div_real_1d(&[1.0, 0.0, 1.0]);
        assert_eq!(g.coeffs_1d(), vec![q(2.0, 1.0, 0.0, 0.0)]);
    }

    #[test]
    fn conjugation_and_realification() {
        let f = SlicePolynomial::from_coeffs(&[Quaternion::ZERO, q(1.0, 1.0, 0.0, 0.0)]);
        assert_eq!(f.conj().coeffs_1d(), vec![Quaternion::ZERO, q(1.0, -1.0, 0.0, 0.0)]);
        assert_eq!(f.conj().conj(), f);
        assert_eq!(f.max_imag_norm(), 1.0);
        assert_eq!(f.realified().max_imag_norm(), 0.0);
    }
}
