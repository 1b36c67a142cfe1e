//! Zero sets of one-variable slice polynomials.
//!
//! The zeros of `f` lie on the zero spheres `x + y S` of the real polynomial
//! `f^s`. On each sphere the stem `(F1, F2)` of `f` at `x + y i` decides
//! what happens: `F = 0` means `f` vanishes on the whole sphere, otherwise
//! `F1 + I F2 = 0` has at most the solution `I = -F1 F2^-1`.
//!
//! Multiplicities refer to `f`: a real root `x` of `f^s` of multiplicity
//! `2m` is a real zero of multiplicity `m`; a sphere on which `f` factors as
//! `Delta^s g` (with `Delta = q^2 - 2xq + x^2 + y^2`) has spherical
//! multiplicity `s`, and the remaining multiplicity `M - 2s` of the conjugate
//! pair of `f^s` goes to the isolated zero of `g` on it. Hence
//! `sum real + sum isolated + 2 sum spherical = deg f`.

mod plot;
mod roots;
mod witness;

pub use plot::{emit_plot_data, zeroset_csv};
pub use roots::{complex_roots, eval_real_poly, CLUSTER_RADIUS, MAX_SWEEPS, ROOT_RESIDUAL};
pub use witness::{analytic_witness, AnalyticWitness, Containment, UnitRadius};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::domain::{check_self_stem_preserving, SamplingConfig, SliceDomain, Verdict};
use crate::error::{Error, Result};
use crate::quaternion::{ImaginaryUnit, Quaternion, SlicePoint};
use crate::slice_fn::{symmetrize_poly, Checked, PreconditionCheck, SlicePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsolatedZero {
    pub q: Quaternion,
    /// `(x, y)` of the sphere `x + y S` carrying the zero.
    pub sphere: (f64, f64),
    pub multiplicity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SphereKind {
    /// `f` vanishes on the whole sphere.
    SphericalZeroOfF,
    /// Only `f^s` vanishes there; no zero of `f` could be confirmed.
    SymmetrizationOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroSphere {
    pub x: f64,
    pub y: f64,
    pub multiplicity: usize,
    pub kind: SphereKind,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    pub real_roots: Vec<RealRoot>,
    pub isolated: Vec<IsolatedZero>,
    pub spheres: Vec<ZeroSphere>,
}

impl ZeroSet {
    /// Total multiplicity with spherical zeros counted twice; `deg f` when
    /// every zero lies in the domain.
    pub fn total_multiplicity(&self) -> usize {
        let real: usize = self.real_roots.iter().map(|r| r.multiplicity).sum();
        let isolated: usize = self.isolated.iter().map(|r| r.multiplicity).sum();
        let spheres: usize = self
            .spheres
            .iter()
            .map(|s| match s.kind {
                SphereKind::SphericalZeroOfF => 2 * s.multiplicity,
                SphereKind::SymmetrizationOnly => s.multiplicity,
            })
            .sum();
        real + isolated + spheres
    }

    /// The same count on the level of `f^s`, i.e. `deg f^s = 2 deg f`.
    pub fn symmetrized_multiplicity(&self) -> usize {
        2 * self.total_multiplicity()
    }

    pub fn is_empty(&self) -> bool {
        self.real_roots.is_empty() && self.isolated.is_empty() && self.spheres.is_empty()
    }
}

/// Tolerances and domain handling of [`find_zeros`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroOptions {
    /// `|f(q)|` accepted at a zero, relative to the coefficient scale of `f`.
    pub tol_root: f64,
    /// Stem components treated as zero, relative to the coefficient scale.
    pub tol_sph: f64,
    pub check: PreconditionCheck,
    pub sampling: SamplingConfig,
}

impl Default for ZeroOptions {
    fn default() -> Self {
        ZeroOptions {
            tol_root: 1e-8,
            tol_sph: 1e-9,
            check: PreconditionCheck::Witness(SamplingConfig::default()),
            sampling: SamplingConfig::default(),
        }
    }
}

impl ZeroOptions {
    /// Default tolerances with the domain hypotheses asserted.
    pub fn asserted() -> Self {
        ZeroOptions { check: PreconditionCheck::Assert, ..Default::default() }
    }
}

/// `q^2 - 2x q + x^2 + y^2`, ascending.
fn sphere_polynomial(x: f64, y: f64) -> [f64; 3] {
    [x * x + y * y, -2.0 * x, 1.0]
}

/// Zeros of a one-variable polynomial inside `omega`.
pub fn find_zeros(f: &SlicePolynomial, omega: &SliceDomain, opts: &ZeroOptions) -> Result<Checked<ZeroSet>> {
    if f.dim() != 1 {
        return Err(Error::InvalidInput("zero sets are computed for one variable only".into()));
    }
    match f.degree() {
        None => return Err(Error::IdenticallyZero),
        Some(0) => return Err(Error::InvalidInput("a non-zero constant has no zeros to find".into())),
        Some(_) => {}
    }
    let mut warnings = Vec::new();
    let mut reports = Vec::new();
    match opts.check {
        PreconditionCheck::Assert => warnings.push(Error::PreconditionUnverified(
            "domain assumed self-stem-preserving without checking".into(),
        )),
        PreconditionCheck::Witness(cfg) => {
            let report = check_self_stem_preserving(omega, &cfg);
            if report.verdict == Verdict::Violated {
                return Err(Error::DomainCheckFailed("domain is not self-stem-preserving".into()));
            }
            reports.push(report);
        }
    }
    let fs = symmetrize_poly(f)?;
    let roots = complex_roots(&fs.real_coeffs_1d())?;
    let scale = f.scale();
    let tol_root = opts.tol_root * scale;
    let units = omega.candidate_units(&opts.sampling);
    let mut zs = ZeroSet::default();
    for (z, m) in roots {
        if z.im == 0.0 {
            let x = z.re;
            let value = f.evaluate(&SlicePoint::real(&[x]))?;
            if omega.contains_lifted(&[z], ImaginaryUnit::I) && value.norm() < tol_root {
                zs.real_roots.push(RealRoot { value: x, multiplicity: m.div_ceil(2) });
            }
            continue;
        }
        if z.im < 0.0 || !units.iter().any(|&u| omega.contains_lifted(&[z], u)) {
            continue;
        }
        let (x, y) = (z.re, z.im);
        let delta = sphere_polynomial(x, y);
        let mut g = f.clone();
        let mut s = 0;
        while 2 * (s + 1) <= m && g.degree().is_some_and(|d| d >= 2) {
            let stem = g.stem_at(&[z])?;
            let tol = opts.tol_sph * g.scale();
            if stem.f1.norm() < tol && stem.f2.norm() < tol {
                g = g.div_real_1d(&delta);
                s += 1;
            } else {
                break;
            }
        }
        if s > 0 {
            zs.spheres.push(ZeroSphere { x, y, multiplicity: s, kind: SphereKind::SphericalZeroOfF });
        }
        let t = m - 2 * s;
        if t == 0 {
            continue;
        }
        let stem = g.stem_at(&[z])?;
        let tol = opts.tol_sph * g.scale();
        let mut isolated = None;
        if stem.f2.norm() >= tol {
            let candidate = -(stem.f1 * stem.f2.inv()?);
            if candidate.w.abs() < 1e-8 && (candidate.norm() - 1.0).abs() < 1e-8 {
                let unit = ImaginaryUnit::from_direction(candidate)?;
                let q = Quaternion::real(x) + unit.as_quaternion() * y;
                let inside = omega.contains_lifted(&[z], unit);
                if inside && f.evaluate_quaternions(&[q])?.norm() < tol_root {
                    isolated = Some(IsolatedZero { q, sphere: (x, y), multiplicity: t });
                }
            }
        }
        match isolated {
            Some(iz) => zs.isolated.push(iz),
            None => zs.spheres.push(ZeroSphere { x, y, multiplicity: t, kind: SphereKind::SymmetrizationOnly }),
        }
    }
    let by_xy = |a: (f64, f64), b: (f64, f64)| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1));
    zs.real_roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    zs.isolated.sort_by(|a, b| by_xy(a.sphere, b.sphere));
    zs.spheres.sort_by(|a, b| by_xy((a.x, a.y), (b.x, b.y)));
    Ok(Checked { value: zs, warnings, reports })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroCheckReport {
    pub max_residual: f64,
    pub bound: f64,
    pub samples: usize,
    pub pass: bool,
}

impl ZeroCheckReport {
    fn from_residuals(residuals: impl IntoIterator<Item = f64>, bound: f64) -> Self {
        let mut max_residual = 0.0f64;
        let mut samples = 0;
        for r in residuals {
            max_residual = max_residual.max(r);
            samples += 1;
        }
        ZeroCheckReport { max_residual, bound, samples, pass: max_residual < bound }
    }
}

/// Relative bound used by the inclusion and propagation checks.
pub const ZERO_CHECK_BOUND: f64 = 1e-6;

fn fs_at(fs: &SlicePolynomial, x: f64, y: f64, unit: ImaginaryUnit) -> Result<f64> {
    Ok(fs.evaluate(&SlicePoint::on_slice(&[Complex64::new(x, y)], unit))?.norm())
}

/// `|f^s| ` at every reported zero; spheres are sampled at `units`.
pub fn zero_inclusion_check(f: &SlicePolynomial, zs: &ZeroSet, units: &[ImaginaryUnit]) -> Result<ZeroCheckReport> {
    let fs = symmetrize_poly(f)?;
    let mut residuals = Vec::new();
    for r in &zs.real_roots {
        residuals.push(fs_at(&fs, r.value, 0.0, ImaginaryUnit::I)?);
    }
    for z in &zs.isolated {
        residuals.push(fs.evaluate_quaternions(&[z.q])?.norm());
    }
    for s in &zs.spheres {
        for &u in units {
            residuals.push(fs_at(&fs, s.x, s.y, u)?);
        }
    }
    Ok(ZeroCheckReport::from_residuals(residuals, ZERO_CHECK_BOUND * fs.scale()))
}

/// `|f^s(x + y J)|` for every supplied `J`.
pub fn sphere_propagation_check(
    f: &SlicePolynomial,
    sphere: (f64, f64),
    units: &[ImaginaryUnit],
) -> Result<ZeroCheckReport> {
    let fs = symmetrize_poly(f)?;
    let residuals = units.iter().map(|&u| fs_at(&fs, sphere.0, sphere.1, u)).collect::<Result<Vec<_>>>()?;
    Ok(ZeroCheckReport::from_residuals(residuals, ZERO_CHECK_BOUND * fs.scale()))
}
