//! Brute-force references. Nothing here calls the closed forms it is used
//! to check: products go through 2x2 matrices, values through explicit
//! quaternion powers, sphere solutions through exhaustive scans.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::quaternion::{sphere_sample, ImaginaryUnit, QMatrix2, Quaternion};
use crate::stem::StemValue;

fn left_scale(q: Quaternion, m: QMatrix2) -> QMatrix2 {
    QMatrix2::new(q * m.a, q * m.b, q * m.c, q * m.d)
}

fn add(x: QMatrix2, y: QMatrix2) -> QMatrix2 {
    QMatrix2::new(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d)
}

/// `p1 I + p2 sigma` built entry by entry from the identity and `sigma`.
fn display_matrix(p: &StemValue) -> QMatrix2 {
    add(left_scale(p.f1, QMatrix2::identity()), left_scale(p.f2, QMatrix2::sigma()))
}

/// `(F1 I + F2 sigma)(G1 I + G2 sigma) e1`.
pub fn oracle_star_pointwise(f: &StemValue, g: &StemValue) -> StemValue {
    let [p1, p2] = (display_matrix(f) * display_matrix(g)).first_column();
    StemValue::new(p1, p2)
}

/// `sum q^k a_k` with the powers of `q` formed by repeated multiplication.
pub fn oracle_eval(coeffs: &[Quaternion], q: Quaternion) -> Quaternion {
    let mut pow = Quaternion::ONE;
    let mut sum = Quaternion::ZERO;
    for a in coeffs {
        sum += pow * *a;
        pow *= q;
    }
    sum
}

/// Stem of the monomial `q^k a` at `z`, from the complex power `z^k`.
fn monomial_stem(a: Quaternion, z: Complex64, k: usize) -> StemValue {
    let w = z.powu(k as u32);
    StemValue::new(a * w.re, a * w.im)
}

/// Stem of `f * g` at `z`, summing matrix products of monomial stems.
pub fn oracle_star_at(f: &[Quaternion], g: &[Quaternion], z: Complex64) -> StemValue {
    let mut out = StemValue::ZERO;
    for (j, a) in f.iter().enumerate() {
        for (k, b) in g.iter().enumerate() {
            out += oracle_star_pointwise(&monomial_stem(*a, z, j), &monomial_stem(*b, z, k));
        }
    }
    out
}

/// Coefficients of `f * g`: the monomial `q^j a` acts as the matrix `a I`
/// on the `z^j` term, so each pair contributes `(a I)(b I) e1` at `j + k`.
pub fn oracle_star_coeffs(f: &[Quaternion], g: &[Quaternion]) -> Vec<Quaternion> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Quaternion::ZERO; f.len() + g.len() - 1];
    for (j, a) in f.iter().enumerate() {
        for (k, b) in g.iter().enumerate() {
            let m = left_scale(*a, QMatrix2::identity()) * left_scale(*b, QMatrix2::identity());
            let [c, rest] = m.first_column();
            debug_assert!(rest.norm() == 0.0);
            out[j + k] += c;
        }
    }
    out
}

/// Result of [`oracle_sphere_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphereScan {
    pub min: f64,
    pub argmin: ImaginaryUnit,
    pub max: f64,
}

fn value_on_sphere(coeffs: &[Quaternion], x: f64, y: f64, u: ImaginaryUnit) -> f64 {
    oracle_eval(coeffs, Quaternion::real(x) + u.as_quaternion() * y).norm()
}

/// Scans `|f(x + y I)|` over `samples` units and refines the best one by a
/// shrinking pattern search on the sphere.
pub fn oracle_sphere_scan(coeffs: &[Quaternion], x: f64, y: f64, samples: usize) -> SphereScan {
    let units = sphere_sample(samples.max(1), 0);
    let mut best = (f64::INFINITY, units[0]);
    let mut max = 0.0f64;
    for &u in &units {
        let v = value_on_sphere(coeffs, x, y, u);
        max = max.max(v);
        if v < best.0 {
            best = (v, u);
        }
    }
    let mut step = 0.1;
    let moves = [
        Quaternion::I,
        Quaternion::J,
        Quaternion::K,
        -Quaternion::I,
        -Quaternion::J,
        -Quaternion::K,
    ];
    while step > 1e-12 {
        let mut improved = false;
        for d in moves {
            let Ok(u) = ImaginaryUnit::from_direction(best.1.as_quaternion() + d * step) else {
                continue;
            };
            let v = value_on_sphere(coeffs, x, y, u);
            if v < best.0 {
                best = (v, u);
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    SphereScan { min: best.0, argmin: best.1, max }
}
