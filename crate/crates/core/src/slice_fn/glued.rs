use num_complex::Complex64;

use crate::domain::SliceDomain;
use crate::error::{Error, Result};
use crate::quaternion::{vandermonde2_inverse, ImaginaryUnit, Quaternion, SlicePoint};
use crate::stem::{representation_extend, StemValue};

/// Agreement required between the two slice evaluators on real points.
pub const REAL_AGREEMENT: f64 = 1e-10;

/// `sum (x + y U)^m c_m` for `z = x + y i`.
fn slice_poly_value(coeffs: &[Quaternion], z: Complex64, unit: ImaginaryUnit) -> Quaternion {
    let mut pow = Complex64::new(1.0, 0.0);
    let mut acc = Quaternion::ZERO;
    for c in coeffs {
        acc += (Quaternion::real(pow.re) + unit.as_quaternion() * pow.im) * *c;
        pow *= z;
    }
    acc
}

/// A one-variable function on `domain` given by holomorphic polynomials on
/// the slices of `J` and `K` and extended to other slices by the
/// representation formula.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSliceGlued {
    j: ImaginaryUnit,
    k: ImaginaryUnit,
    h_j: Vec<Quaternion>,
    h_k: Vec<Quaternion>,
    domain: SliceDomain,
    stems: Vec<StemValue>,
}

impl TwoSliceGlued {
    pub fn new(
        j: ImaginaryUnit,
        k: ImaginaryUnit,
        h_j: Vec<Quaternion>,
        h_k: Vec<Quaternion>,
        domain: SliceDomain,
    ) -> Result<Self> {
        if domain.dim() != 1 {
            return Err(Error::InvalidInput("glued functions are one-variable".into()));
        }
        let m = vandermonde2_inverse(j, k)?;
        let len = h_j.len().max(h_k.len());
        let get = |v: &[Quaternion], i: usize| v.get(i).copied().unwrap_or(Quaternion::ZERO);
        let stems = (0..len)
            .map(|i| {
                let [f1, f2] = m.apply([get(&h_j, i), get(&h_k, i)]);
                StemValue::new(f1, f2)
            })
            .collect();
        for x in domain.real_points(16, 0) {
            let z = Complex64::new(x[0], 0.0);
            let (a, b) = (slice_poly_value(&h_j, z, j), slice_poly_value(&h_k, z, k));
            let tol = REAL_AGREEMENT * (1.0 + a.norm().max(b.norm()));
            if (a - b).norm() > tol {
                return Err(Error::InvalidInput(format!(
                    "slice evaluators differ by {:e} at the real point {}",
                    (a - b).norm(),
                    x[0]
                )));
            }
        }
        Ok(TwoSliceGlued { j, k, h_j, h_k, domain, stems })
    }

    /// The glued function whose stem is `sum z^m C_m`.
    pub fn from_stems(j: ImaginaryUnit, k: ImaginaryUnit, stems: &[StemValue], domain: SliceDomain) -> Result<Self> {
        let h_j = stems.iter().map(|s| s.eval(j)).collect();
        let h_k = stems.iter().map(|s| s.eval(k)).collect();
        TwoSliceGlued::new(j, k, h_j, h_k, domain)
    }

    pub fn units(&self) -> (ImaginaryUnit, ImaginaryUnit) {
        (self.j, self.k)
    }

    pub fn h_j(&self) -> &[Quaternion] {
        &self.h_j
    }

    pub fn h_k(&self) -> &[Quaternion] {
        &self.h_k
    }

    pub fn domain(&self) -> &SliceDomain {
        &self.domain
    }

    /// Stem coefficients `C_m`, the stem at `z` being `sum z^m C_m`.
    pub fn stem_coeffs(&self) -> &[StemValue] {
        &self.stems
    }

    pub fn scale(&self) -> f64 {
        self.stems.iter().map(|s| s.f1.norm() + s.f2.norm()).sum()
    }

    fn check_reference_points(&self, z: Complex64) -> Result<()> {
        for u in [self.j, self.k] {
            if !self.domain.contains_lifted(&[z], u) {
                return Err(Error::OutOfDomain(format!("{} + {} ({u}) is outside the domain", z.re, z.im)));
            }
        }
        Ok(())
    }

    pub fn stem_at(&self, z: &[Complex64]) -> Result<StemValue> {
        let [z] = z else {
            return Err(Error::InvalidInput("glued functions are one-variable".into()));
        };
        self.check_reference_points(*z)?;
        let mut s = StemValue::ZERO;
        let mut pow = Complex64::new(1.0, 0.0);
        for c in &self.stems {
            s += c.mul_complex(pow);
            pow *= z;
        }
        Ok(s)
    }

    pub fn evaluate(&self, q: &SlicePoint) -> Result<Quaternion> {
        let q = q.canonical();
        if q.dim() != 1 {
            return Err(Error::InvalidInput("glued functions are one-variable".into()));
        }
        if !self.domain.contains(&q) {
            return Err(Error::OutOfDomain("point outside the domain".into()));
        }
        let z = q.complex_coords()[0];
        self.check_reference_points(z)?;
        let v_j = slice_poly_value(&self.h_j, z, self.j);
        match q.unit() {
            None => Ok(v_j),
            Some(i) => representation_extend(v_j, slice_poly_value(&self.h_k, z, self.k), self.j, self.k, i),
        }
    }
}
