use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::gen::{random_imaginary_unit, random_linear_product, random_polynomial};
use super::oracles::{oracle_eval, oracle_sphere_scan, oracle_star_at, oracle_star_coeffs};
use super::OracleConfig;
use crate::domain::{check_self_stem_preserving, Region, SamplingConfig, SliceDomain, Verdict};
use crate::error::Result;
use crate::paths::PathCn;
use crate::quaternion::{sphere_sample, ImaginaryUnit, Quaternion, SlicePoint};
use crate::slice_fn::{
    conjugation, representation_extend, star_product, symmetrization, symmetrize_poly, FnHandle, PreconditionCheck,
    SlicePolynomial, TwoSliceGlued,
};
use crate::stem::{check_stem_holomorphic, EndpointStem, StemValue};
use crate::zeros::{
    find_zeros, sphere_propagation_check, zero_inclusion_check, SphereKind, ZeroOptions, ZeroSet, ZERO_CHECK_BOUND,
};
use crate::SCHEMA;

/// One line of a [`SuiteReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion: Option<u8>,
    pub trials: usize,
    pub max_residual: f64,
    pub bound: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub config: OracleConfig,
    pub properties: Vec<PropertyResult>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

impl SuiteReport {
    /// `(criterion, pass)` for every criterion mentioned, ascending.
    pub fn criteria(&self) -> Vec<(u8, bool)> {
        let mut out: Vec<(u8, bool)> = Vec::new();
        for p in &self.properties {
            let Some(c) = p.criterion else { continue };
            match out.iter_mut().find(|(k, _)| *k == c) {
                Some((_, pass)) => *pass &= p.pass,
                None => out.push((c, p.pass)),
            }
        }
        out.sort_by_key(|(c, _)| *c);
        out
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.property == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Running maximum of residuals that must stay below `bound`.
struct Tally {
    name: &'static str,
    criterion: Option<u8>,
    bound: f64,
    trials: usize,
    max: f64,
    failures: usize,
    note: Option<String>,
}

impl Tally {
    fn new(name: &'static str, criterion: Option<u8>, bound: f64) -> Self {
        Tally { name, criterion, bound, trials: 0, max: 0.0, failures: 0, note: None }
    }

    fn record(&mut self, residual: f64) {
        self.trials += 1;
        if residual.is_nan() {
            self.max = f64::INFINITY;
        } else {
            self.max = self.max.max(residual);
        }
    }

    fn fail(&mut self, note: impl Into<String>) {
        self.failures += 1;
        if self.note.is_none() {
            self.note = Some(note.into());
        }
    }

    fn check(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.fail(note());
        }
    }

    fn finish(self) -> PropertyResult {
        let pass = self.failures == 0 && self.max < self.bound;
        let note = match (self.note, self.trials) {
            (Some(n), _) => Some(n),
            (None, 0) => Some("vacuous: no trials".into()),
            (None, _) => None,
        };
        PropertyResult {
            property: self.name.into(),
            criterion: self.criterion,
            trials: self.trials,
            max_residual: self.max,
            bound: self.bound,
            pass,
            note,
        }
    }
}

fn rng(cfg: &OracleConfig, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
    r.set_stream(stream);
    r
}

fn random_point<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    Complex64::from_polar(radius * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU))
}

fn on_slice(z: Complex64, u: ImaginaryUnit) -> Quaternion {
    Quaternion::real(z.re) + u.as_quaternion() * z.im
}

fn representation_formula(cfg: &OracleConfig) -> PropertyResult {
    let mut t = Tally::new("representation_formula", Some(1), 1e-9);
    let mut rng = rng(cfg, 1);
    for _ in 0..cfg.scaled(1000) {
        let f = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let coeffs = f.coeffs_1d();
        let z = random_point(&mut rng, 1.5);
        let i = random_imaginary_unit(&mut rng);
        let (j, k) = loop {
            let (j, k) = (random_imaginary_unit(&mut rng), random_imaginary_unit(&mut rng));
            if j.distance(k) > 0.1 {
                break (j, k);
            }
        };
        let v = |u| oracle_eval(&coeffs, on_slice(z, u));
        match representation_extend(v(j), v(k), j, k, i) {
            Ok(pred) => t.record((pred - v(i)).norm() / f.scale()),
            Err(e) => t.fail(format!("{e}")),
        }
    }
    t.finish()
}

fn symmetrization_realness(cfg: &OracleConfig) -> PropertyResult {
    let mut t = Tally::new("symmetrization_realness", Some(2), 1e-9);
    let mut rng = rng(cfg, 2);
    for _ in 0..cfg.scaled(500) {
        let f = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        match f.conj().star(&f) {
            Ok(s) => t.record(s.max_imag_norm() / f.scale()),
            Err(e) => t.fail(format!("{e}")),
        }
    }
    t.finish()
}

fn real_point_identities(cfg: &OracleConfig) -> PropertyResult {
    let mut t = Tally::new("real_point_identities", Some(3), 1e-9);
    let mut rng = rng(cfg, 3);
    let whole = SliceDomain::whole();
    for _ in 0..cfg.scaled(200) {
        let f = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let coeffs = f.coeffs_1d();
        let h = FnHandle::Poly(f.clone());
        let (fc, fs) = match (
            conjugation(&h, &whole, PreconditionCheck::Assert),
            symmetrization(&h, &whole, PreconditionCheck::Assert),
        ) {
            (Ok(c), Ok(s)) => (c.value, s.value),
            (Err(e), _) | (_, Err(e)) => {
                t.fail(format!("{e}"));
                continue;
            }
        };
        for _ in 0..100 {
            let x: f64 = rng.gen_range(-1.0..1.0);
            let p = SlicePoint::real(&[x]);
            let direct = oracle_eval(&coeffs, Quaternion::real(x));
            let r = fc.evaluate(&p).and_then(|c| {
                let s = fs.evaluate(&p)?;
                Ok(((c - direct.conj()).norm() / f.scale()).max((s.w - direct.norm_sqr()).abs() / fs.scale()))
            });
            match r {
                Ok(r) => t.record(r),
                Err(e) => t.fail(format!("{e}")),
            }
        }
    }
    t.finish()
}

fn zero_matches(zs: &ZeroSet, a: Quaternion) -> bool {
    let tol = 1e-6 * (1.0 + a.norm());
    if a.im_norm() == 0.0 {
        return zs.real_roots.iter().any(|r| (r.value - a.w).abs() < tol);
    }
    zs.isolated.iter().any(|z| (z.q - a).norm() < tol)
        || zs.spheres.iter().any(|s| {
            s.kind == SphereKind::SphericalZeroOfF && (s.x - a.w).abs() < tol && (s.y - a.im_norm()).abs() < tol
        })
}

fn fs_scale(f: &SlicePolynomial) -> Result<f64> {
    Ok(symmetrize_poly(f)?.scale())
}

/// Zero inclusion, sphere propagation, count conservation, factor roots and
/// per-sphere agreement, all on one stream of random linear products.
fn zero_properties(cfg: &OracleConfig) -> Vec<PropertyResult> {
    let mut inclusion = Tally::new("zero_inclusion", Some(4), ZERO_CHECK_BOUND);
    let mut propagation = Tally::new("sphere_propagation", Some(5), ZERO_CHECK_BOUND);
    let mut count = Tally::new("count_conservation", None, 0.5);
    let mut factor = Tally::new("factor_root_soundness", None, 1e-8);
    let mut solver = Tally::new("per_sphere_solver_agreement", None, 1e-3);
    let mut rng = rng(cfg, 4);
    let units = sphere_sample(cfg.unit_samples, cfg.seed);
    let whole = SliceDomain::whole();
    let opts = ZeroOptions::asserted();
    for _ in 0..cfg.scaled(200) {
        let lp = random_linear_product(&mut rng, 6, cfg.coeff_norm_cap);
        let f = &lp.poly;
        let coeffs = f.coeffs_1d();
        let zs = match find_zeros(f, &whole, &opts) {
            Ok(z) => z.value,
            Err(e) => {
                inclusion.fail(format!("find_zeros: {e}"));
                continue;
            }
        };
        let scale = match fs_scale(f) {
            Ok(s) => s,
            Err(e) => {
                inclusion.fail(format!("{e}"));
                continue;
            }
        };
        match zero_inclusion_check(f, &zs, &units) {
            Ok(r) => inclusion.record(r.max_residual / scale),
            Err(e) => inclusion.fail(format!("{e}")),
        }
        for s in &zs.spheres {
            match sphere_propagation_check(f, (s.x, s.y), &units) {
                Ok(r) => propagation.record(r.max_residual / scale),
                Err(e) => propagation.fail(format!("{e}")),
            }
        }
        let degree = f.degree().unwrap_or(0) as usize;
        let counted = zs.symmetrized_multiplicity();
        count.record((counted as f64 - 2.0 * degree as f64).abs());
        let a1 = lp.roots[0];
        factor.record(oracle_eval(&coeffs, a1).norm() / f.scale());
        factor.check(zero_matches(&zs, a1), || format!("first factor root {a1} missing from {zs:?}"));
        for z in &zs.isolated {
            let scan = oracle_sphere_scan(&coeffs, z.sphere.0, z.sphere.1, 4096);
            match ImaginaryUnit::from_direction(z.q.im()) {
                Ok(u) => solver.record(scan.argmin.distance(u)),
                Err(e) => solver.fail(format!("{e}")),
            }
        }
    }
    // Fixed spheres keep the propagation property from being vacuous.
    let fixed = [
        SlicePolynomial::from_real_coeffs(&[1.0, 0.0, 1.0]),
        SlicePolynomial::from_real_coeffs(&[5.0, -2.0, 1.0]),
        SlicePolynomial::linear(Quaternion::I).star(&SlicePolynomial::linear(Quaternion::J)).expect("one variable"),
    ];
    for f in &fixed {
        let r = find_zeros(f, &whole, &opts).and_then(|zs| {
            let scale = fs_scale(f)?;
            let mut worst = 0.0f64;
            for s in zs.value.spheres.iter().map(|s| (s.x, s.y)).chain(zs.value.isolated.iter().map(|z| z.sphere)) {
                worst = worst.max(sphere_propagation_check(f, s, &units)?.max_residual / scale);
            }
            Ok(worst)
        });
        match r {
            Ok(r) => propagation.record(r),
            Err(e) => propagation.fail(format!("{e}")),
        }
    }
    vec![inclusion.finish(), propagation.finish(), count.finish(), factor.finish(), solver.finish()]
}

fn canonical_roots(cfg: &OracleConfig) -> PropertyResult {
    let mut t = Tally::new("canonical_roots", Some(6), 1e-8);
    let whole = SliceDomain::whole();
    let opts = ZeroOptions { check: PreconditionCheck::Witness(SamplingConfig::with_seed(cfg.seed)), ..Default::default() };
    let lin = SlicePolynomial::linear;
    let cases: Vec<(&str, SlicePolynomial)> = vec![
        ("q^2+1", SlicePolynomial::from_real_coeffs(&[1.0, 0.0, 1.0])),
        ("(q-i)*(q-j)", lin(Quaternion::I).star(&lin(Quaternion::J)).expect("one variable")),
        ("q^2-1", SlicePolynomial::from_real_coeffs(&[-1.0, 0.0, 1.0])),
        (
            "(q-(1+2i))*(q-(1-2i))",
            lin(Quaternion::new(1.0, 2.0, 0.0, 0.0)).star(&lin(Quaternion::new(1.0, -2.0, 0.0, 0.0))).expect("one variable"),
        ),
    ];
    let close = |a: f64, b: f64| (a - b).abs() < 1e-9;
    for (name, f) in cases {
        let zs = match find_zeros(&f, &whole, &opts) {
            Ok(z) => z.value,
            Err(e) => {
                t.fail(format!("{name}: {e}"));
                continue;
            }
        };
        let coeffs = f.coeffs_1d();
        let scale = f.scale();
        let shape = match name {
            "q^2+1" => {
                zs.real_roots.is_empty()
                    && zs.isolated.is_empty()
                    && zs.spheres.len() == 1
                    && close(zs.spheres[0].x, 0.0)
                    && close(zs.spheres[0].y, 1.0)
                    && zs.spheres[0].kind == SphereKind::SphericalZeroOfF
            }
            "(q-i)*(q-j)" => {
                zs.real_roots.is_empty()
                    && zs.spheres.is_empty()
                    && zs.isolated.len() == 1
                    && (zs.isolated[0].q - Quaternion::I).norm() < 1e-9
            }
            "q^2-1" => {
                zs.isolated.is_empty()
                    && zs.spheres.is_empty()
                    && zs.real_roots.len() == 2
                    && close(zs.real_roots[0].value, -1.0)
                    && close(zs.real_roots[1].value, 1.0)
            }
            _ => {
                zs.real_roots.is_empty()
                    && zs.isolated.is_empty()
                    && zs.spheres.len() == 1
                    && close(zs.spheres[0].x, 1.0)
                    && close(zs.spheres[0].y, 2.0)
                    && zs.spheres[0].kind == SphereKind::SphericalZeroOfF
            }
        };
        t.check(shape, || format!("{name}: unexpected zero set {zs:?}"));
        for r in &zs.real_roots {
            t.record(oracle_eval(&coeffs, Quaternion::real(r.value)).norm() / scale);
        }
        for z in &zs.isolated {
            t.record(oracle_eval(&coeffs, z.q).norm() / scale);
        }
        for s in &zs.spheres {
            t.record(oracle_sphere_scan(&coeffs, s.x, s.y, cfg.unit_samples).max / scale);
        }
    }
    t.finish()
}

fn star_algebra(cfg: &OracleConfig) -> Vec<PropertyResult> {
    let mut laws = Tally::new("star_algebra_laws", Some(7), 1e-10);
    let mut oracle = Tally::new("star_oracle_agreement", Some(7), 1e-12);
    let mut rng = rng(cfg, 7);
    let one = SlicePolynomial::constant(1, Quaternion::ONE);
    for _ in 0..cfg.scaled(200) {
        let f = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let g = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let h = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let r: Result<()> = (|| {
            let left = f.star(&g)?.star(&h)?;
            let right = f.star(&g.star(&h)?)?;
            let unit = one.star(&f)?.max_coeff_diff(&f).max(f.star(&one)?.max_coeff_diff(&f));
            laws.record(left.max_coeff_diff(&right).max(unit));
            let fg = star_product(&f.clone().into(), &g.clone().into())?;
            let fg = fg.as_poly().expect("polynomial product");
            let reference = SlicePolynomial::from_coeffs(&oracle_star_coeffs(&f.coeffs_1d(), &g.coeffs_1d()));
            let z = random_point(&mut rng, 1.0);
            let pointwise = (fg.stem_at(&[z])? - oracle_star_at(&f.coeffs_1d(), &g.coeffs_1d(), z)).norm()
                / (f.scale() * g.scale());
            oracle.record(fg.max_coeff_diff(&reference).max(pointwise));
            Ok(())
        })();
        if let Err(e) = r {
            laws.fail(format!("{e}"));
        }
    }
    vec![laws.finish(), oracle.finish()]
}

fn stem_holomorphy(cfg: &OracleConfig) -> Vec<PropertyResult> {
    let mut t = Tally::new("stem_holomorphy", Some(8), 1e-6);
    let mut rng = rng(cfg, 8);
    for _ in 0..cfg.scaled(100) {
        let f = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let path = PathCn::ray_from_real(&[random_point(&mut rng, 0.75)]);
        for h in [FnHandle::Poly(f.clone()), FnHandle::Poly(f.conj())] {
            match check_stem_holomorphic(&h, &path, 1.0, cfg.fd_step) {
                Ok(r) => t.record(r.max_residual),
                Err(e) => t.fail(format!("{e}")),
            }
        }
    }
    let anti = EndpointStem::new(1, |z: &[Complex64]| Ok(StemValue::from_complex(z[0].conj())));
    let path = PathCn::ray_from_real(&[Complex64::new(0.3, 0.4)]);
    let counter = match check_stem_holomorphic(&anti, &path, 1.0, cfg.fd_step) {
        Ok(r) => PropertyResult {
            property: "anti_holomorphic_detected".into(),
            criterion: Some(8),
            trials: 1,
            max_residual: r.max_residual,
            bound: 0.5,
            pass: r.max_residual > 0.5,
            note: Some("residual must exceed the bound".into()),
        },
        Err(e) => PropertyResult {
            property: "anti_holomorphic_detected".into(),
            criterion: Some(8),
            trials: 1,
            max_residual: 0.0,
            bound: 0.5,
            pass: false,
            note: Some(format!("{e}")),
        },
    };
    vec![t.finish(), counter]
}

fn domain_geometry(cfg: &OracleConfig) -> Vec<PropertyResult> {
    let mut radii = Tally::new("disk_radii", Some(9), 1e-12);
    let mut rng = rng(cfg, 9);
    let sampling = SamplingConfig::with_seed(cfg.seed);
    for trial in 0..cfg.scaled(50) {
        let n = 1 + trial % 2;
        let center: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let radius = rng.gen_range(0.5..3.0);
        let domain = if n == 1 {
            SliceDomain::axial(Region::disk(Complex64::new(center[0], 0.0), radius))
        } else {
            SliceDomain::ball(&center, radius)
        };
        let offset: Vec<Complex64> = (0..n).map(|_| random_point(&mut rng, 1.0)).collect();
        let norm = offset.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let rho = rng.gen_range(0.0..0.9) * radius;
        let z: Vec<Complex64> = center.iter().zip(&offset).map(|(c, o)| c + o * (rho / norm)).collect();
        let expected = radius - rho;
        let path = PathCn::ray_from_real(&z);
        let r: Result<f64> = (|| {
            let a = domain.radius_for_units(&path, &[ImaginaryUnit::I])?;
            let b = domain.radius_two_units(&path, &sampling)?;
            let c = domain.radius_path_ball(&path, &sampling);
            Ok([a, b, c].iter().map(|r| (r - expected).abs()).fold(0.0, f64::max))
        })();
        match r {
            Ok(r) => radii.record(r),
            Err(e) => radii.fail(format!("{e}")),
        }
    }

    let mut units = Tally::new("attachment_slice_units", Some(9), 1e-12);
    let bubble = SliceDomain::ball(&[0.0], 1.0).attach(
        ImaginaryUnit::I,
        Region::disk(Complex64::new(0.0, 1.5), 0.6),
        false,
    );
    let ray = PathCn::ray_from_real(&[Complex64::new(0.0, 1.9)]);
    let su = bubble.slice_units(&ray, &sampling);
    units.check(!su.all && su.units == vec![ImaginaryUnit::I], || format!("slice units {:?}", su.units));
    units.record((bubble.radius_path_ball(&ray, &sampling) - 0.2).abs());

    let mut violated = Tally::new("single_slice_violation", Some(9), 0.5);
    let single = SliceDomain::ball(&[0.0], 1.0).attach(
        ImaginaryUnit::I,
        Region::disk(Complex64::new(0.0, 1.5), 0.75),
        false,
    );
    let report = check_self_stem_preserving(&single, &sampling);
    violated.record(0.0);
    violated.check(report.verdict == Verdict::Violated, || format!("verdict {:?}", report.verdict));
    violated.check(!report.witnesses.is_empty() && report.confirmed(&single, &single, &sampling), || {
        "witness does not replay".into()
    });
    vec![radii.finish(), units.finish(), violated.finish()]
}

/// Glued functions built from two slices of a polynomial reproduce it, and
/// conjugation commutes with the gluing.
fn glued_properties(cfg: &OracleConfig) -> Vec<PropertyResult> {
    let mut recovery = Tally::new("two_slice_recovery", None, 1e-9);
    let mut involution = Tally::new("conjugation_involution", None, 1e-12);
    let mut rng = rng(cfg, 11);
    let domain = SliceDomain::ball(&[0.0], 2.0);
    for _ in 0..cfg.scaled(200) {
        let f = random_polynomial(&mut rng, cfg.degree_cap, cfg.coeff_norm_cap);
        let coeffs = f.coeffs_1d();
        let conj_coeffs: Vec<Quaternion> = coeffs.iter().map(|c| c.conj()).collect();
        let (j, k) = loop {
            let (j, k) = (random_imaginary_unit(&mut rng), random_imaginary_unit(&mut rng));
            if j.distance(k) > 0.1 {
                break (j, k);
            }
        };
        let r: Result<()> = (|| {
            let g = FnHandle::Glued(TwoSliceGlued::new(j, k, coeffs.clone(), coeffs.clone(), domain.clone())?);
            let gc = conjugation(&g, &domain, PreconditionCheck::Assert)?.value;
            let q = on_slice(random_point(&mut rng, 1.5), random_imaginary_unit(&mut rng));
            let d1 = (g.evaluate_quaternions(&[q])? - oracle_eval(&coeffs, q)).norm();
            let d2 = (gc.evaluate_quaternions(&[q])? - oracle_eval(&conj_coeffs, q)).norm();
            recovery.record(d1.max(d2) / f.scale());
            let h = FnHandle::Poly(f.clone());
            let back = conjugation(&conjugation(&h, &domain, PreconditionCheck::Assert)?.value, &domain, PreconditionCheck::Assert)?;
            let back = back.value.as_poly().expect("polynomial").clone();
            involution.record(back.max_coeff_diff(&f));
            Ok(())
        })();
        if let Err(e) = r {
            recovery.fail(format!("{e}"));
        }
    }
    vec![recovery.finish(), involution.finish()]
}

/// Runs every property at the sizes given by `config`.
pub fn run_property_suite(config: &OracleConfig) -> SuiteReport {
    let mut warnings = Vec::new();
    if config.trials == 0 {
        warnings.push("trials = 0: randomized properties pass vacuously".to_string());
    }
    let mut properties = vec![
        representation_formula(config),
        symmetrization_realness(config),
        real_point_identities(config),
    ];
    properties.extend(zero_properties(config));
    properties.push(canonical_roots(config));
    properties.extend(star_algebra(config));
    properties.extend(stem_holomorphy(config));
    properties.extend(domain_geometry(config));
    properties.extend(glued_properties(config));
    let pass = properties.iter().all(|p| p.pass);
    SuiteReport { schema: SCHEMA.into(), config: *config, properties, warnings, pass }
}

/// The suite plus a determinism check: a second run must serialize to the
/// same bytes.
pub fn run_acceptance(config: &OracleConfig) -> SuiteReport {
    let mut first = run_property_suite(config);
    let second = run_property_suite(config);
    let same = first.to_json() == second.to_json();
    first.properties.push(PropertyResult {
        property: "determinism".into(),
        criterion: Some(10),
        trials: 2,
        max_residual: if same { 0.0 } else { 1.0 },
        bound: 0.5,
        pass: same,
        note: None,
    });
    first.pass = first.properties.iter().all(|p| p.pass);
    first
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_repeats() {
        let cfg = OracleConfig { trials: 50, ..Default::default() };
        let a = run_property_suite(&cfg);
        for p in &a.properties {
            assert!(p.pass, "{p:?}");
        }
        assert_eq!(a.to_json(), run_property_suite(&cfg).to_json());
        assert_eq!(a.criteria().iter().map(|c| c.0).collect::<Vec<_>>(), (1..=9).collect::<Vec<_>>());
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let r = run_property_suite(&OracleConfig { trials: 0, ..Default::default() });
        assert!(r.pass);
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.property("representation_formula").unwrap().trials, 0);
    }

    #[test]
    fn coarse_step_fails_holomorphy() {
        let r = run_property_suite(&OracleConfig { trials: 50, fd_step: 0.1, ..Default::default() });
        assert!(!r.property("stem_holomorphy").unwrap().pass);
        assert!(r.property("anti_holomorphic_detected").unwrap().pass);
        assert!(!r.pass);
    }
}
