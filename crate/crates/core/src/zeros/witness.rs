use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::roots::complex_roots;
use crate::domain::{SamplingConfig, SliceDomain};
use crate::error::{Error, Result};
use crate::paths::{distance, PathCn};
use crate::quaternion::ImaginaryUnit;
use crate::slice_fn::{symmetrize_poly, SlicePolynomial};

/// Residual bound, relative to the coefficient scale of `E`, at sampled zeros.
pub const CONTAINMENT_BOUND: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitRadius {
    pub unit: ImaginaryUnit,
    pub radius: f64,
}

/// Zeros of `f^s` found near the endpoint and their residuals under `E`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Containment {
    pub samples: usize,
    pub max_residual: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Local description of the zero set of `f^s` near `path(1)`: inside the
/// ball of radius `r_[I]` in the slice of `I`, every zero lies on the zero
/// locus of the complex polynomial `e`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyticWitness {
    pub path: PathCn,
    pub r: f64,
    pub r_per_unit: Vec<UnitRadius>,
    /// Real coefficients; read as a polynomial in `z`.
    pub e: SlicePolynomial,
    pub containment: Containment,
}

impl AnalyticWitness {
    /// `E(z)` for a complex point.
    pub fn eval_e(&self, z: &[Complex64]) -> Result<Complex64> {
        let s = self.e.stem_at(z)?;
        Ok(Complex64::new(s.f1.w, s.f2.w))
    }
}

/// Builds the witness at the end of `path`.
///
/// Zeros are sampled exactly for one variable (roots of `E` in the ball);
/// for several variables only the construction is recorded.
pub fn analytic_witness(
    f: &SlicePolynomial,
    omega: &SliceDomain,
    path: &PathCn,
    cfg: &SamplingConfig,
) -> Result<AnalyticWitness> {
    if f.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if path.dim() != f.dim() || omega.dim() != f.dim() {
        return Err(Error::IncompatibleDomains(format!(
            "function in {} variables, path in {}, domain in {}",
            f.dim(),
            path.dim(),
            omega.dim()
        )));
    }
    let r = omega.radius_two_units(path, cfg)?.min(1.0);
    let z = path.endpoint();
    let su = omega.slice_units(path, cfg);
    let r_per_unit: Vec<UnitRadius> = su
        .units
        .iter()
        .map(|&unit| UnitRadius { unit, radius: r.min(omega.boundary_distance(z, unit)) })
        .filter(|u| u.radius > 0.0)
        .collect();
    let e = symmetrize_poly(f)?;
    if e.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let bound = CONTAINMENT_BOUND * e.scale();
    let mut samples = 0;
    let mut max_residual = 0.0f64;
    if f.dim() == 1 && e.degree().is_some_and(|d| d > 0) {
        let roots = complex_roots(&e.real_coeffs_1d())?;
        for u in &r_per_unit {
            for (w, _) in &roots {
                let w = [*w];
                if distance(&w, z) < u.radius && omega.contains_lifted(&w, u.unit) {
                    let s = e.stem_at(&w)?;
                    max_residual = max_residual.max(Complex64::new(s.f1.w, s.f2.w).norm());
                    samples += 1;
                }
            }
        }
    }
    let containment = Containment { samples, max_residual, bound, pass: max_residual < bound };
    Ok(AnalyticWitness { path: path.clone(), r, r_per_unit, e, containment })
}
