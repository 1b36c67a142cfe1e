//! Stem values `(F1, F2)` in `H^{2x1}` and path-indexed stem families.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::domain::{SamplingConfig, SliceDomain};
use crate::error::{Error, Result};
use crate::paths::{CPoint, PathCn};
use crate::quaternion::{vandermonde2_inverse, ImaginaryUnit, QMatrix2, Quaternion, SlicePoint};

/// A column `(F1, F2)`; its value in the slice of `I` is `F1 + I F2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemValue {
    #[serde(rename = "F1")]
    pub f1: Quaternion,
    #[serde(rename = "F2")]
    pub f2: Quaternion,
}

impl StemValue {
    pub const ZERO: StemValue = StemValue { f1: Quaternion::ZERO, f2: Quaternion::ZERO };

    pub const fn new(f1: Quaternion, f2: Quaternion) -> Self {
        StemValue { f1, f2 }
    }

    /// `(value, 0)`.
    pub const fn constant(value: Quaternion) -> Self {
        StemValue { f1: value, f2: Quaternion::ZERO }
    }

    /// `(x, y)` of a complex number, i.e. the stem of the identity.
    pub fn from_complex(z: Complex64) -> Self {
        StemValue::new(Quaternion::real(z.re), Quaternion::real(z.im))
    }

    /// `F1 + I F2`.
    pub fn eval(&self, unit: ImaginaryUnit) -> Quaternion {
        self.f1 + unit.as_quaternion() * self.f2
    }

    pub fn reflect(&self) -> StemValue {
        StemValue::new(self.f1, -self.f2)
    }

    pub fn conj(&self) -> StemValue {
        StemValue::new(self.f1.conj(), self.f2.conj())
    }

    /// `(F1 I + F2 sigma)(G1 I + G2 sigma) e1 = (F1 G1 - F2 G2, F2 G1 + F1 G2)`.
    pub fn star(&self, g: &StemValue) -> StemValue {
        StemValue::new(self.f1 * g.f1 - self.f2 * g.f2, self.f2 * g.f1 + self.f1 * g.f2)
    }

    /// `conj(F) * F`, unchecked.
    pub fn sym_raw(&self) -> StemValue {
        self.conj().star(self)
    }

    /// `conj(F) * F`; fails if either component has an imaginary part above
    /// `1e-9 (|F1|^2 + |F2|^2)`.
    pub fn sym(&self) -> Result<StemValue> {
        let s = self.sym_raw();
        let bound = 1e-9 * self.norm_sqr();
        let residual = s.f1.im_norm().max(s.f2.im_norm());
        if residual > bound {
            return Err(Error::NonRealSymmetrization { residual, bound });
        }
        Ok(s)
    }

    pub fn scale(&self, s: f64) -> StemValue {
        StemValue::new(self.f1 * s, self.f2 * s)
    }

    /// `Re(w) I + Im(w) sigma` applied to the column.
    pub fn mul_complex(&self, w: Complex64) -> StemValue {
        StemValue::new(self.f1 * w.re - self.f2 * w.im, self.f2 * w.re + self.f1 * w.im)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.f1.norm_sqr() + self.f2.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn as_array(&self) -> [Quaternion; 2] {
        [self.f1, self.f2]
    }

    /// `p1 I + p2 sigma` as a 2x2 matrix.
    pub fn as_matrix(&self) -> QMatrix2 {
        QMatrix2::from_column(self.f1, self.f2)
    }
}

impl std::ops::Add for StemValue {
    type Output = StemValue;
    fn add(self, o: StemValue) -> StemValue {
        StemValue::new(self.f1 + o.f1, self.f2 + o.f2)
    }
}

impl std::ops::Sub for StemValue {
    type Output = StemValue;
    fn sub(self, o: StemValue) -> StemValue {
        StemValue::new(self.f1 - o.f1, self.f2 - o.f2)
    }
}

impl std::ops::AddAssign for StemValue {
    fn add_assign(&mut self, o: StemValue) {
        *self = *self + o;
    }
}

/// Solves `F1 + J F2 = vJ`, `F1 + K F2 = vK`.
pub fn stem_from_two_slices(v_j: Quaternion, v_k: Quaternion, j: ImaginaryUnit, k: ImaginaryUnit) -> Result<StemValue> {
    let m = vandermonde2_inverse(j, k)?;
    let [f1, f2] = m.apply([v_j, v_k]);
    Ok(StemValue::new(f1, f2))
}

pub fn eval_stem(f: &StemValue, unit: ImaginaryUnit) -> Quaternion {
    f.eval(unit)
}

pub fn reflect_stem(f: &StemValue) -> StemValue {
    f.reflect()
}

pub fn conj_stem(f: &StemValue) -> StemValue {
    f.conj()
}

pub fn sym_stem(f: &StemValue) -> Result<StemValue> {
    f.sym()
}

pub fn real_endpoint_stem(value: Quaternion) -> StemValue {
    StemValue::constant(value)
}

/// `(I - K)(J - K)^-1 vJ + (I - J)(K - J)^-1 vK`: the value in the slice of
/// `I` determined by the values in the slices of `J` and `K`.
pub fn representation_extend(
    v_j: Quaternion,
    v_k: Quaternion,
    j: ImaginaryUnit,
    k: ImaginaryUnit,
    i: ImaginaryUnit,
) -> Result<Quaternion> {
    let m = vandermonde2_inverse(j, k)?;
    let row = m.row_apply([Quaternion::ONE, i.as_quaternion()]);
    Ok(row[0] * v_j + row[1] * v_k)
}

/// A family of stem values indexed by paths.
pub trait PathStem {
    /// Number of variables.
    fn dim(&self) -> usize;

    /// The stem at `path`. Errors when the path is outside the family's domain.
    fn stem(&self, path: &PathCn) -> Result<StemValue>;

    /// Whether paths with the same endpoint share their stem value.
    fn endpoint_determined(&self) -> bool {
        true
    }
}

/// A [`PathStem`] given by a closure of the endpoint.
pub struct EndpointStem<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[Complex64]) -> Result<StemValue>> EndpointStem<F> {
    pub fn new(dim: usize, f: F) -> Self {
        EndpointStem { dim, f }
    }
}

impl<F: Fn(&[Complex64]) -> Result<StemValue>> PathStem for EndpointStem<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn stem(&self, path: &PathCn) -> Result<StemValue> {
        (self.f)(path.endpoint())
    }
}

/// The stem of `f` at the slice point `q`, read along a witness path from
/// the real trace of `omega` whose lift under the unit of `q` stays in `omega`.
pub fn point_stem<S: PathStem + ?Sized>(
    f: &S,
    omega: &SliceDomain,
    q: &SlicePoint,
    cfg: &SamplingConfig,
) -> Result<StemValue> {
    let q = q.canonical();
    match q.unit() {
        None => {
            let x: Vec<f64> = q.coords().iter().map(|c| c.0).collect();
            let s = f.stem(&PathCn::constant(&x))?;
            Ok(StemValue::constant(s.f1))
        }
        Some(unit) => {
            let z = q.complex_coords();
            let path = omega.find_witness_path(&z, unit, cfg).ok_or(Error::NoWitnessPath)?;
            f.stem(&path)
        }
    }
}

/// Outcome of [`check_stem_holomorphic`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HolomorphyReport {
    /// Largest residual seen, per coordinate.
    pub per_coordinate: Vec<f64>,
    pub max_residual: f64,
    pub points: usize,
}

fn offset(z: &[Complex64], l: usize, d: Complex64) -> CPoint {
    let mut w = z.to_vec();
    w[l] += d;
    w
}

/// Central-difference estimate of `1/2 (d/dx_l + sigma d/dy_l)` applied to
/// the stem along straight extensions of `path`, at its endpoint and eight
/// points at distance `radius / 4`.
pub fn check_stem_holomorphic<S: PathStem + ?Sized>(
    f: &S,
    path: &PathCn,
    radius: f64,
    step: f64,
) -> Result<HolomorphyReport> {
    if !(step > 0.0 && step < radius / 4.0) {
        return Err(Error::StepOutOfRange { step, radius });
    }
    let n = path.dim();
    let z = path.endpoint().to_vec();
    let mut centres = vec![z.clone()];
    for m in 0..8 {
        let angle = std::f64::consts::TAU * m as f64 / 8.0;
        centres.push(offset(&z, m % n, Complex64::from_polar(radius / 4.0, angle)));
    }
    let at = |w: CPoint| f.stem(&path.extend(&w)?);
    let mut per_coordinate = vec![0.0f64; n];
    for c in &centres {
        for (l, worst) in per_coordinate.iter_mut().enumerate() {
            let dx = (at(offset(c, l, Complex64::new(step, 0.0)))? - at(offset(c, l, Complex64::new(-step, 0.0)))?)
                .scale(0.5 / step);
            let dy = (at(offset(c, l, Complex64::new(0.0, step)))? - at(offset(c, l, Complex64::new(0.0, -step)))?)
                .scale(0.5 / step);
            let sigma_dy = StemValue::new(-dy.f2, dy.f1);
            let r = (dx + sigma_dy).scale(0.5).norm();
            *worst = worst.max(r);
        }
    }
    let max_residual = per_coordinate.iter().copied().fold(0.0, f64::max);
    Ok(HolomorphyReport { per_coordinate, max_residual, points: centres.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Region;
    use crate::quaternion::sphere_sample;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    fn square(z: &[Complex64]) -> Result<StemValue> {
        Ok(StemValue::from_complex(z[0] * z[0]))
    }

    #[test]
    fn two_slice_recovery() {
        let (j, k) = (ImaginaryUnit::J, ImaginaryUnit::K);
        let (x, y) = (0.7, -1.3);
        let v = |u: ImaginaryUnit| Quaternion::real(x) + u.as_quaternion() * y;
        let s = stem_from_two_slices(v(j), v(k), j, k).unwrap();
        assert!((s.f1 - Quaternion::real(x)).norm() < 1e-12 && (s.f2 - Quaternion::real(y)).norm() < 1e-12);

        let c = q(1.0, 2.0, -3.0, 0.5);
        let s = stem_from_two_slices(c, c, ImaginaryUnit::I, -ImaginaryUnit::I).unwrap();
        assert!((s.f1 - c).norm() < 1e-15 && s.f2.norm() < 1e-15);

        // q^2 at 1 + i read on the slices of i and j, checked on the slice of k
        let sq = |u: ImaginaryUnit| {
            let p = Quaternion::ONE + u.as_quaternion();
            p * p
        };
        let s = stem_from_two_slices(sq(ImaginaryUnit::I), sq(ImaginaryUnit::J), ImaginaryUnit::I, ImaginaryUnit::J)
            .unwrap();
        assert!((s.eval(ImaginaryUnit::K) - sq(ImaginaryUnit::K)).norm() < 1e-10);
        assert!(matches!(
            stem_from_two_slices(c, c, ImaginaryUnit::I, ImaginaryUnit::I),
            Err(Error::DegenerateSlicePair(_))
        ));
    }

    #[test]
    fn evaluation_and_reflection() {
        let f = StemValue::new(q(-1.0, 0.0, 0.0, 1.0), q(0.0, -1.0, -1.0, 0.0));
        assert_eq!(f.eval(ImaginaryUnit::I), Quaternion::ZERO);
        for u in sphere_sample(16, 1) {
            assert!((f.reflect().eval(-u) - f.eval(u)).norm() < 1e-15);
        }
        assert_eq!(f.reflect().reflect(), f);
        assert_eq!(f.conj().reflect(), f.reflect().conj());
        assert_eq!(StemValue::new(Quaternion::I, Quaternion::J).conj(), StemValue::new(-Quaternion::I, -Quaternion::J));
    }

    #[test]
    fn symmetrized_stems() {
        let id = StemValue::from_complex(Complex64::new(2.0, 3.0));
        assert_eq!(id.sym().unwrap(), StemValue::new(Quaternion::real(-5.0), Quaternion::real(12.0)));
        let a = StemValue::constant(q(1.0, 2.0, 0.0, -2.0));
        assert_eq!(a.sym().unwrap(), StemValue::constant(Quaternion::real(9.0)));
        let f = StemValue::new(q(-1.0, 0.0, 0.0, 1.0), q(0.0, -1.0, -1.0, 0.0));
        assert!(f.sym().unwrap().norm() < 1e-15);
        let mut rng_like = 0.3;
        for _ in 0..20 {
            rng_like = (rng_like * 7.31f64).fract();
            let g = StemValue::new(q(rng_like, 1.0 - rng_like, 0.2, -0.7), q(0.4, rng_like, -rng_like, 1.1));
            assert!(g.sym().is_ok());
        }
    }

    #[test]
    fn representation_formula_examples() {
        let v = representation_extend(
            Quaternion::I,
            Quaternion::J,
            ImaginaryUnit::I,
            ImaginaryUnit::J,
            ImaginaryUnit::K,
        )
        .unwrap();
        assert!((v - Quaternion::K).norm() < 1e-15);
        let a = q(1.0, 2.0, 3.0, 4.0);
        let b = q(-1.0, 0.5, 0.0, 2.0);
        let same = representation_extend(a, b, ImaginaryUnit::I, ImaginaryUnit::K, ImaginaryUnit::I).unwrap();
        assert!((same - a).norm() < 1e-14);
        let sq = |u: ImaginaryUnit| {
            let p = Quaternion::ONE + u.as_quaternion();
            p * p
        };
        let v = representation_extend(
            sq(ImaginaryUnit::I),
            sq(ImaginaryUnit::J),
            ImaginaryUnit::I,
            ImaginaryUnit::J,
            ImaginaryUnit::K,
        )
        .unwrap();
        assert!((v - q(0.0, 0.0, 0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn point_stems() {
        let cfg = SamplingConfig::default();
        let id = EndpointStem::new(1, |z: &[Complex64]| Ok(StemValue::from_complex(z[0])));
        let ball = SliceDomain::ball(&[0.0], 3.0);
        let p = SlicePoint::from_quaternions(&[q(1.0, 0.0, 2.0, 0.0)]).unwrap();
        let s = point_stem(&id, &ball, &p, &cfg).unwrap();
        assert_eq!(s, StemValue::new(Quaternion::real(1.0), Quaternion::real(2.0)));
        let s = point_stem(&id, &ball, &SlicePoint::real(&[2.5]), &cfg).unwrap();
        assert_eq!(s, StemValue::constant(Quaternion::real(2.5)));
        // negative y is read in the slice of the opposite unit
        let p = SlicePoint::on_slice(&[Complex64::new(1.0, -2.0)], ImaginaryUnit::J);
        let s = point_stem(&id, &ball, &p, &cfg).unwrap();
        assert_eq!(s.eval(p.canonical().unit().unwrap()), p.to_quaternions()[0]);

        let island = SliceDomain::axial(Region::Empty).attach(
            ImaginaryUnit::I,
            Region::disk(Complex64::new(0.0, 3.0), 1.0),
            false,
        );
        let p = SlicePoint::on_slice(&[Complex64::new(0.0, 3.0)], ImaginaryUnit::I);
        assert_eq!(point_stem(&id, &island, &p, &cfg), Err(Error::NoWitnessPath));
    }

    #[test]
    fn holomorphy() {
        let g = PathCn::ray_from_real(&[Complex64::new(0.3, 0.4)]);
        let f = EndpointStem::new(1, square);
        let r = check_stem_holomorphic(&f, &g, 1.0, 1e-5).unwrap();
        assert!(r.max_residual < 1e-6, "{}", r.max_residual);
        assert_eq!(r.points, 9);

        let constant = EndpointStem::new(1, |_: &[Complex64]| Ok(StemValue::constant(q(1.0, 2.0, 3.0, 4.0))));
        assert_eq!(check_stem_holomorphic(&constant, &g, 1.0, 1e-5).unwrap().max_residual, 0.0);

        let anti = EndpointStem::new(1, |z: &[Complex64]| Ok(StemValue::from_complex(z[0].conj())));
        let r = check_stem_holomorphic(&anti, &g, 1.0, 1e-5).unwrap();
        assert!((r.max_residual - 1.0).abs() < 1e-6, "{}", r.max_residual);

        assert!(matches!(check_stem_holomorphic(&f, &g, 1.0, 0.3), Err(Error::StepOutOfRange { .. })));
    }

    #[test]
    fn two_variable_holomorphy() {
        let g = PathCn::ray_from_real(&[Complex64::new(0.3, 0.4), Complex64::new(-0.2, 0.1)]);
        let f = EndpointStem::new(2, |z: &[Complex64]| Ok(StemValue::from_complex(z[0] * z[1] * z[1])));
        assert!(check_stem_holomorphic(&f, &g, 1.0, 1e-5).unwrap().max_residual < 1e-6);
    }

    #[test]
    fn json() {
        let s = StemValue::new(Quaternion::I, Quaternion::real(2.0));
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"F1":[0.0,1.0,0.0,0.0],"F2":[2.0,0.0,0.0,0.0]}"#);
        assert_eq!(serde_json::from_str::<StemValue>(&text).unwrap(), s);
    }
}
