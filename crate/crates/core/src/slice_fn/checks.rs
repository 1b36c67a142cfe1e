use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::FnHandle;
use crate::error::Result;
use crate::paths::CPoint;
use crate::quaternion::{ImaginaryUnit, Quaternion, SlicePoint};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_residual: f64,
    pub samples: usize,
}

/// Central-difference estimate of `max |1/2 (d/dx_l + I d/dy_l) f_I|` over
/// probes, units and coordinates, for `f` given slice by slice.
pub fn slice_cr_residual<F>(f: F, probes: &[CPoint], units: &[ImaginaryUnit], step: f64) -> Result<ResidualReport>
where
    F: Fn(&[Complex64], ImaginaryUnit) -> Result<Quaternion>,
{
    let mut max_residual = 0.0f64;
    let mut samples = 0;
    for z in probes {
        for &u in units {
            for l in 0..z.len() {
                let at = |d: Complex64| {
                    let mut w = z.clone();
                    w[l] += d;
                    f(&w, u)
                };
                let dx = (at(Complex64::new(step, 0.0))? - at(Complex64::new(-step, 0.0))?) * (0.5 / step);
                let dy = (at(Complex64::new(0.0, step))? - at(Complex64::new(0.0, -step))?) * (0.5 / step);
                let r = ((dx + u.as_quaternion() * dy) * 0.5).norm();
                max_residual = max_residual.max(r);
                samples += 1;
            }
        }
    }
    Ok(ResidualReport { max_residual, samples })
}

/// [`slice_cr_residual`] for a function handle.
pub fn check_slice_regular(f: &FnHandle, probes: &[CPoint], units: &[ImaginaryUnit], step: f64) -> Result<ResidualReport> {
    slice_cr_residual(|z, u| f.evaluate(&SlicePoint::on_slice(z, u)), probes, units, step)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PreservingReport {
    /// Largest distance of a value `f(q)`, `q` in the slice of `I`, from that slice.
    pub max_distance: f64,
    pub bound: f64,
    pub slice_preserving: bool,
    pub samples: usize,
}

/// Distance of `v` from `span{1, I}`.
fn distance_from_slice(v: Quaternion, unit: ImaginaryUnit) -> f64 {
    let im = v.im();
    let u = unit.as_quaternion();
    (im - u * im.dot(u)).norm()
}

pub fn check_slice_preserving(f: &FnHandle, probes: &[CPoint], units: &[ImaginaryUnit]) -> Result<PreservingReport> {
    let mut max_distance = 0.0f64;
    let mut samples = 0;
    for z in probes {
        for &u in units {
            let v = f.evaluate(&SlicePoint::on_slice(z, u))?;
            max_distance = max_distance.max(distance_from_slice(v, u));
            samples += 1;
        }
    }
    let bound = 1e-9 * f.scale().max(f64::MIN_POSITIVE);
    Ok(PreservingReport { max_distance, bound, slice_preserving: max_distance < bound, samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::sphere_sample;
    use crate::slice_fn::SlicePolynomial;

    fn probes() -> Vec<CPoint> {
        vec![vec![Complex64::new(0.3, 0.4)], vec![Complex64::new(-0.5, 0.1)], vec![Complex64::new(0.9, -0.6)]]
    }

    #[test]
    fn polynomials_are_slice_regular() {
        let f: FnHandle = SlicePolynomial::from_coeffs(&[Quaternion::I, Quaternion::J, Quaternion::K, Quaternion::ONE]).into();
        let r = check_slice_regular(&f, &probes(), &sphere_sample(8, 0), 1e-5).unwrap();
        assert!(r.max_residual < 1e-6);
        let c: FnHandle = SlicePolynomial::constant(1, Quaternion::J).into();
        assert_eq!(check_slice_regular(&c, &probes(), &sphere_sample(8, 0), 1e-5).unwrap().max_residual, 0.0);
    }

    #[test]
    fn anti_holomorphic_model() {
        let model = |z: &[Complex64], u: ImaginaryUnit| Ok(Quaternion::real(z[0].re) - u.as_quaternion() * z[0].im);
        let r = slice_cr_residual(model, &probes(), &sphere_sample(8, 0), 1e-5).unwrap();
        assert!((r.max_residual - 1.0).abs() < 1e-9);
    }

    #[test]
    fn slice_preserving() {
        let units = sphere_sample(8, 0);
        let f: FnHandle = SlicePolynomial::from_real_coeffs(&[1.0, 0.0, 1.0]).into();
        assert!(check_slice_preserving(&f, &probes(), &units).unwrap().slice_preserving);
        let g: FnHandle = SlicePolynomial::linear(Quaternion::I).into();
        let r = check_slice_preserving(&g, &probes(), &[ImaginaryUnit::J]).unwrap();
        assert!(!r.slice_preserving && (r.max_distance - 1.0).abs() < 1e-15);
    }
}
