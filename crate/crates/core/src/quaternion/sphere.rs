use std::f64::consts::PI;

use super::{ImaginaryUnit, Quaternion};

const AXES: [Quaternion; 6] = [
    Quaternion::I,
    Quaternion::new(0.0, -1.0, 0.0, 0.0),
    Quaternion::J,
    Quaternion::new(0.0, 0.0, -1.0, 0.0),
    Quaternion::K,
    Quaternion::new(0.0, 0.0, 0.0, -1.0),
];

/// Deterministic sample of the imaginary sphere.
///
/// The first six entries are `i, -i, j, -j, k, -k` (truncated when `count < 6`);
/// the rest is a Fibonacci spiral whose azimuth is shifted by `seed`.
pub fn sphere_sample(count: usize, seed: u64) -> Vec<ImaginaryUnit> {
    let mut out: Vec<ImaginaryUnit> = AXES
        .iter()
        .take(count)
        .map(|&q| ImaginaryUnit::new(q).expect("axis units are exact"))
        .collect();
    let spiral = count.saturating_sub(AXES.len());
    if spiral == 0 {
        return out;
    }
    let golden_angle = PI * (3.0 - 5f64.sqrt());
    // Weyl sequence in the seed keeps distinct seeds well separated.
    let offset = 2.0 * PI * ((seed as f64) * 0.618_033_988_749_894_9).fract();
    let n = spiral as f64;
    for m in 0..spiral {
        let h = 1.0 - (2.0 * m as f64 + 1.0) / n;
        let r = (1.0 - h * h).max(0.0).sqrt();
        let phi = m as f64 * golden_angle + offset;
        let v = Quaternion::new(0.0, r * phi.cos(), r * phi.sin(), h);
        out.push(ImaginaryUnit::from_direction(v).expect("spiral points are non-zero"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(sphere_sample(1, 0), vec![ImaginaryUnit::I]);
        let six = sphere_sample(6, 99);
        assert!(six.contains(&ImaginaryUnit::I));
        assert!(six.contains(&-ImaginaryUnit::I));
        assert!(sphere_sample(0, 0).is_empty());
    }

    #[test]
    fn deterministic_and_on_sphere() {
        let a = sphere_sample(256, 7);
        assert_eq!(a, sphere_sample(256, 7));
        assert_ne!(a, sphere_sample(256, 8));
        for u in &a {
            let q = u.as_quaternion();
            assert!((q * q + Quaternion::ONE).norm() < 1e-12);
        }
    }
}
