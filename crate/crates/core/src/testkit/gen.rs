use rand::Rng;

use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::slice_fn::SlicePolynomial;

/// Uniform in the ball of radius `cap`.
pub fn random_quaternion<R: Rng>(rng: &mut R, cap: f64) -> Quaternion {
    loop {
        let q = Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if q.norm() <= 1.0 {
            return q * cap;
        }
    }
}

pub fn random_imaginary_unit<R: Rng>(rng: &mut R) -> ImaginaryUnit {
    loop {
        let v = Quaternion::new(0.0, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return ImaginaryUnit::from_direction(v).expect("direction is non-zero");
        }
    }
}

/// One-variable polynomial of degree `1..=degree_cap` with coefficients in
/// the ball of radius `cap` and a leading coefficient of norm at least `cap / 4`.
pub fn random_polynomial<R: Rng>(rng: &mut R, degree_cap: usize, cap: f64) -> SlicePolynomial {
    let degree = rng.gen_range(1..=degree_cap.max(1));
    let mut coeffs: Vec<Quaternion> = (0..=degree).map(|_| random_quaternion(rng, cap)).collect();
    while coeffs[degree].norm() < cap / 4.0 {
        coeffs[degree] = random_quaternion(rng, cap);
    }
    SlicePolynomial::from_coeffs(&coeffs)
}

/// `(q - a_1) * ... * (q - a_m)` together with its roots `a_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProduct {
    pub roots: Vec<Quaternion>,
    pub poly: SlicePolynomial,
}

/// Products of at most `max_factors` linear factors. Some factors are real
/// and some come as conjugate pairs `(q - a) * (q - conj a)`, which produce
/// spherical zeros.
pub fn random_linear_product<R: Rng>(rng: &mut R, max_factors: usize, cap: f64) -> LinearProduct {
    let target = rng.gen_range(1..=max_factors.max(1));
    let mut roots = Vec::new();
    while roots.len() < target {
        let a = random_quaternion(rng, cap);
        match rng.gen_range(0..8) {
            0 => roots.push(Quaternion::real(a.w)),
            1 | 2 if roots.len() + 2 <= target => {
                roots.push(a);
                roots.push(a.conj());
            }
            _ => roots.push(a),
        }
    }
    let poly = roots
        .iter()
        .map(|&a| SlicePolynomial::linear(a))
        .reduce(|acc, l| acc.star(&l).expect("one-variable factors"))
        .expect("at least one factor");
    LinearProduct { roots, poly }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_caps() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let p = random_polynomial(&mut rng, 8, 4.0);
            let d = p.degree().unwrap();
            assert!((1..=8).contains(&d));
            assert!(p.coeffs_1d().iter().all(|c| c.norm() <= 4.0));
            let lp = random_linear_product(&mut rng, 6, 4.0);
            assert_eq!(lp.poly.degree().unwrap() as usize, lp.roots.len());
            assert!(lp.roots.len() <= 6);
        }
    }
}
