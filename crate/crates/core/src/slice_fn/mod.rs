//! Slice functions: polynomials, truncated power series and two-slice glued
//! functions, with their `*`-product, conjugation and symmetrization.

mod checks;
mod glued;
mod poly;
mod series;
mod spec;

pub use checks::{check_slice_preserving, check_slice_regular, slice_cr_residual, PreservingReport, ResidualReport};
pub use glued::{TwoSliceGlued, REAL_AGREEMENT};
pub use poly::{complex_monomial, Exponent, SlicePolynomial};
pub use series::{SlicePowerSeries, DEFAULT_TRUNCATION, RADIUS_FRACTION};
pub use spec::{FnSpec, TermSpec};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::domain::{
    check_real_path_connected, check_stem_preserving, DomainCheckReport, Region, SamplingConfig, SliceDomain, Verdict,
};
use crate::error::{Error, Result};
use crate::paths::PathCn;
use crate::quaternion::{Quaternion, SlicePoint};
pub use crate::stem::representation_extend;
use crate::stem::{PathStem, StemValue};

/// Relative bound on the imaginary parts of symmetrized coefficients.
pub const SYMMETRIZATION_REALNESS: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FnSpec", into = "FnSpec")]
pub enum FnHandle {
    Poly(SlicePolynomial),
    Series(SlicePowerSeries),
    Glued(TwoSliceGlued),
}

impl From<SlicePolynomial> for FnHandle {
    fn from(p: SlicePolynomial) -> Self {
        FnHandle::Poly(p)
    }
}

impl From<SlicePowerSeries> for FnHandle {
    fn from(s: SlicePowerSeries) -> Self {
        FnHandle::Series(s)
    }
}

impl From<TwoSliceGlued> for FnHandle {
    fn from(g: TwoSliceGlued) -> Self {
        FnHandle::Glued(g)
    }
}

impl FnHandle {
    pub fn dim(&self) -> usize {
        match self {
            FnHandle::Poly(p) => p.dim(),
            FnHandle::Series(_) | FnHandle::Glued(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FnHandle::Poly(_) => "poly",
            FnHandle::Series(_) => "series",
            FnHandle::Glued(_) => "glued",
        }
    }

    /// The domain on which the function is evaluated.
    pub fn domain(&self) -> SliceDomain {
        match self {
            FnHandle::Poly(_) => SliceDomain::whole(),
            FnHandle::Series(s) => SliceDomain::axial(Region::disk(
                Complex64::new(s.center(), 0.0),
                RADIUS_FRACTION * s.radius(),
            )),
            FnHandle::Glued(g) => g.domain().clone(),
        }
    }

    /// Sum of coefficient norms.
    pub fn scale(&self) -> f64 {
        match self {
            FnHandle::Poly(p) => p.scale(),
            FnHandle::Series(s) => s.scale(),
            FnHandle::Glued(g) => g.scale(),
        }
    }

    pub fn stem_at(&self, z: &[Complex64]) -> Result<StemValue> {
        match self {
            FnHandle::Poly(p) => p.stem_at(z),
            FnHandle::Series(s) => s.stem_at(z),
            FnHandle::Glued(g) => g.stem_at(z),
        }
    }

    pub fn evaluate(&self, q: &SlicePoint) -> Result<Quaternion> {
        match self {
            FnHandle::Glued(g) => g.evaluate(q),
            _ => {
                let s = self.stem_at(&q.complex_coords())?;
                Ok(match q.unit() {
                    Some(u) => s.eval(u),
                    None => s.f1,
                })
            }
        }
    }

    pub fn evaluate_quaternions(&self, q: &[Quaternion]) -> Result<Quaternion> {
        self.evaluate(&SlicePoint::from_quaternions(q)?)
    }

    pub fn as_poly(&self) -> Option<&SlicePolynomial> {
        match self {
            FnHandle::Poly(p) => Some(p),
            _ => None,
        }
    }
}

impl PathStem for FnHandle {
    fn dim(&self) -> usize {
        FnHandle::dim(self)
    }

    fn stem(&self, path: &PathCn) -> Result<StemValue> {
        self.stem_at(path.endpoint())
    }
}

pub fn evaluate(f: &FnHandle, q: &SlicePoint) -> Result<Quaternion> {
    f.evaluate(q)
}

/// Stem coefficients of a one-variable polynomial.
fn poly_stems(p: &SlicePolynomial) -> Result<Vec<StemValue>> {
    if p.dim() != 1 {
        return Err(Error::IncompatibleDomains("glued functions are one-variable".into()));
    }
    Ok(p.coeffs_1d().into_iter().map(StemValue::constant).collect())
}

fn convolve_stems(a: &[StemValue], b: &[StemValue]) -> Vec<StemValue> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![StemValue::ZERO; a.len() + b.len() - 1];
    for (j, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            out[j + k] += x.star(y);
        }
    }
    out
}

/// The `*`-product `f * g`.
pub fn star_product(f: &FnHandle, g: &FnHandle) -> Result<FnHandle> {
    use FnHandle::*;
    match (f, g) {
        (Poly(a), Poly(b)) => Ok(Poly(a.star(b)?)),
        (Series(a), Series(b)) => Ok(Series(a.star(b)?)),
        (Poly(a), Series(b)) => {
            let a = SlicePowerSeries::from_polynomial(a, b.center(), b.radius())?.padded(b.coeffs().len());
            Ok(Series(a.star(b)?))
        }
        (Series(a), Poly(b)) => {
            let b = SlicePowerSeries::from_polynomial(b, a.center(), a.radius())?.padded(a.coeffs().len());
            Ok(Series(a.star(&b)?))
        }
        (Glued(a), Glued(b)) => {
            if a.domain() != b.domain() {
                return Err(Error::IncompatibleDomains("glued functions on different domains".into()));
            }
            let (j, k) = a.units();
            Ok(Glued(TwoSliceGlued::from_stems(j, k, &convolve_stems(a.stem_coeffs(), b.stem_coeffs()), a.domain().clone())?))
        }
        (Poly(a), Glued(b)) => {
            let (j, k) = b.units();
            Ok(Glued(TwoSliceGlued::from_stems(j, k, &convolve_stems(&poly_stems(a)?, b.stem_coeffs()), b.domain().clone())?))
        }
        (Glued(a), Poly(b)) => {
            let (j, k) = a.units();
            Ok(Glued(TwoSliceGlued::from_stems(j, k, &convolve_stems(a.stem_coeffs(), &poly_stems(b)?), a.domain().clone())?))
        }
        (Series(_), Glued(_)) | (Glued(_), Series(_)) => {
            Err(Error::IncompatibleDomains("series and glued functions cannot be multiplied".into()))
        }
    }
}

/// How the domain hypotheses of conjugation and symmetrization are handled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PreconditionCheck {
    /// Trust the caller; a [`Error::PreconditionUnverified`] warning is attached.
    Assert,
    /// Run the sampling checks and fail on a violation.
    Witness(SamplingConfig),
}

/// A value with the warnings and domain reports gathered on the way.
#[derive(Clone, Debug, PartialEq)]
pub struct Checked<T> {
    pub value: T,
    pub warnings: Vec<Error>,
    pub reports: Vec<DomainCheckReport>,
}

/// `omega1` real-path-connected and the domain of `f` stem-preserving for `omega1`.
pub fn verify_preconditions(
    f: &FnHandle,
    omega1: &SliceDomain,
    check: PreconditionCheck,
) -> Result<(Vec<Error>, Vec<DomainCheckReport>)> {
    match check {
        PreconditionCheck::Assert => Ok((
            vec![Error::PreconditionUnverified(
                "domain hypotheses were asserted by the caller, not checked".into(),
            )],
            Vec::new(),
        )),
        PreconditionCheck::Witness(cfg) => {
            let reports = vec![check_real_path_connected(omega1, &cfg), check_stem_preserving(omega1, &f.domain(), &cfg)];
            if let Some(bad) = reports.iter().find(|r| r.verdict == Verdict::Violated) {
                return Err(Error::DomainCheckFailed(format!("{} violated", bad.property)));
            }
            Ok((Vec::new(), reports))
        }
    }
}

fn conjugate_unchecked(f: &FnHandle) -> Result<FnHandle> {
    Ok(match f {
        FnHandle::Poly(p) => FnHandle::Poly(p.conj()),
        FnHandle::Series(s) => FnHandle::Series(s.conj()),
        FnHandle::Glued(g) => {
            let (j, k) = g.units();
            let stems: Vec<StemValue> = g.stem_coeffs().iter().map(StemValue::conj).collect();
            FnHandle::Glued(TwoSliceGlued::from_stems(j, k, &stems, g.domain().clone())?)
        }
    })
}

/// The slice conjugation `f^c`, whose stem is the componentwise conjugate of the stem of `f`.
pub fn conjugation(f: &FnHandle, omega1: &SliceDomain, check: PreconditionCheck) -> Result<Checked<FnHandle>> {
    let (warnings, reports) = verify_preconditions(f, omega1, check)?;
    Ok(Checked { value: conjugate_unchecked(f)?, warnings, reports })
}

/// `f^c * f` with imaginary parts verified to vanish and then dropped.
pub fn symmetrize_unchecked(f: &FnHandle) -> Result<FnHandle> {
    let s = star_product(&conjugate_unchecked(f)?, f)?;
    let bound = SYMMETRIZATION_REALNESS * f.scale() * f.scale();
    let realness = |residual: f64| {
        if residual > bound {
            Err(Error::NonRealSymmetrization { residual, bound })
        } else {
            Ok(())
        }
    };
    Ok(match s {
        FnHandle::Poly(p) => {
            realness(p.max_imag_norm())?;
            FnHandle::Poly(p.realified())
        }
        FnHandle::Series(p) => {
            realness(p.max_imag_norm())?;
            FnHandle::Series(p.realified())
        }
        FnHandle::Glued(g) => {
            let residual = g.stem_coeffs().iter().map(|c| c.f1.im_norm().max(c.f2.im_norm())).fold(0.0, f64::max);
            realness(residual)?;
            let stems: Vec<StemValue> = g
                .stem_coeffs()
                .iter()
                .map(|c| StemValue::new(Quaternion::real(c.f1.w), Quaternion::real(c.f2.w)))
                .collect();
            let (j, k) = g.units();
            FnHandle::Glued(TwoSliceGlued::from_stems(j, k, &stems, g.domain().clone())?)
        }
    })
}

/// The symmetrization `f^s = f^c * f`.
pub fn symmetrization(f: &FnHandle, omega1: &SliceDomain, check: PreconditionCheck) -> Result<Checked<FnHandle>> {
    let (warnings, reports) = verify_preconditions(f, omega1, check)?;
    Ok(Checked { value: symmetrize_unchecked(f)?, warnings, reports })
}

/// Symmetrization of a polynomial as a polynomial.
pub fn symmetrize_poly(p: &SlicePolynomial) -> Result<SlicePolynomial> {
    match symmetrize_unchecked(&FnHandle::Poly(p.clone()))? {
        FnHandle::Poly(s) => Ok(s),
        _ => unreachable!("the symmetrization of a polynomial is a polynomial"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::ImaginaryUnit;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    fn poly(c: &[Quaternion]) -> FnHandle {
        SlicePolynomial::from_coeffs(c).into()
    }

    #[test]
    fn conjugation_examples() {
        let f = poly(&[Quaternion::ZERO, q(1.0, 1.0, 0.0, 0.0)]);
        let ball = SliceDomain::ball(&[0.0], 1.0);
        let c = conjugation(&f, &ball, PreconditionCheck::Assert).unwrap();
        assert_eq!(c.value, poly(&[Quaternion::ZERO, q(1.0, -1.0, 0.0, 0.0)]));
        assert!(matches!(c.warnings[0], Error::PreconditionUnverified(_)));

        let real = poly(&[Quaternion::ONE, Quaternion::real(3.0)]);
        assert_eq!(conjugation(&real, &ball, PreconditionCheck::Assert).unwrap().value, real);

        let g = poly(&[-Quaternion::I, Quaternion::ONE]);
        let gc = conjugation(&g, &ball, PreconditionCheck::Witness(SamplingConfig::default())).unwrap();
        assert!(gc.warnings.is_empty() && gc.reports.len() == 2);
        let v = gc.value.evaluate(&SlicePoint::real(&[2.0])).unwrap();
        assert_eq!(v, q(2.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn violated_domain_is_refused() {
        let bad = SliceDomain::axial(Region::disk(Complex64::new(0.0, 3.0), 1.0));
        let f = poly(&[Quaternion::I]);
        let r = conjugation(&f, &bad, PreconditionCheck::Witness(SamplingConfig::default()));
        assert!(matches!(r, Err(Error::DomainCheckFailed(_))));
    }

    #[test]
    fn symmetrization_examples() {
        let ball = SliceDomain::ball(&[0.0], 1.0);
        let f = poly(&[-q(1.0, 2.0, 0.0, 0.0), Quaternion::ONE]);
        let s = symmetrization(&f, &ball, PreconditionCheck::Assert).unwrap().value;
        assert_eq!(s, SlicePolynomial::from_real_coeffs(&[5.0, -2.0, 1.0]).into());

        let ij = star_product(&poly(&[-Quaternion::I, Quaternion::ONE]), &poly(&[-Quaternion::J, Quaternion::ONE])).unwrap();
        let s = symmetrize_unchecked(&ij).unwrap();
        assert_eq!(s, SlicePolynomial::from_real_coeffs(&[1.0, 0.0, 2.0, 0.0, 1.0]).into());

        let g = poly(&[-Quaternion::I, Quaternion::ONE]);
        let s = symmetrize_unchecked(&g).unwrap();
        assert_eq!(s.evaluate(&SlicePoint::real(&[3.0])).unwrap(), Quaternion::real(10.0));
    }

    #[test]
    fn products_across_classes() {
        let p = poly(&[Quaternion::I, Quaternion::ONE]);
        let ball = SliceDomain::ball(&[0.0], 2.0);
        let c = vec![Quaternion::J, Quaternion::K];
        let g: FnHandle = TwoSliceGlued::new(ImaginaryUnit::I, ImaginaryUnit::J, c.clone(), c.clone(), ball).unwrap().into();
        let pg = star_product(&p, &g).unwrap();
        let direct = star_product(&p, &poly(&c)).unwrap();
        let z = [Complex64::new(0.4, 0.7)];
        assert!((pg.stem_at(&z).unwrap() - direct.stem_at(&z).unwrap()).norm() < 1e-14);

        let s: FnHandle = SlicePowerSeries::new(0.0, 1.0, vec![Quaternion::ONE; 8]).unwrap().into();
        assert!(matches!(star_product(&s, &g), Err(Error::IncompatibleDomains(_))));
        // the product keeps eight terms, so it differs from the pointwise product by one term of order 8
        let ps = star_product(&p, &s).unwrap();
        let w = [Complex64::new(0.1, 0.1)];
        let pointwise = p.stem_at(&w).unwrap().star(&s.stem_at(&w).unwrap());
        assert!((ps.stem_at(&w).unwrap() - pointwise).norm() < 1e-6);

        let two = FnHandle::Poly(SlicePolynomial::variable(2, 0));
        assert!(matches!(star_product(&p, &two), Err(Error::IncompatibleDomains(_))));
    }

    #[test]
    fn glued_symmetrization_is_real() {
        let ball = SliceDomain::ball(&[0.0], 2.0);
        let c = vec![q(0.0, 1.0, 0.0, 0.0), q(1.0, 0.0, 2.0, 0.0)];
        let g: FnHandle = TwoSliceGlued::new(ImaginaryUnit::I, ImaginaryUnit::K, c.clone(), c.clone(), ball).unwrap().into();
        let s = symmetrize_unchecked(&g).unwrap();
        let z = [Complex64::new(0.3, 0.2)];
        let want = symmetrize_unchecked(&poly(&c)).unwrap().stem_at(&z).unwrap();
        assert!((s.stem_at(&z).unwrap() - want).norm() < 1e-13);
    }
}
