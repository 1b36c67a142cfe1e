//! Polyline paths in `C^n` that start on `R^n`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::{ImaginaryUnit, SlicePoint};

/// A point of `C^n`.
pub type CPoint = Vec<Complex64>;

/// Interior samples per segment used when a path's trace is tested against a domain.
pub const POINTS_PER_SEGMENT: usize = 32;

pub fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

pub fn conj_point(z: &[Complex64]) -> CPoint {
    z.iter().map(|c| c.conj()).collect()
}

pub fn is_real_point(z: &[Complex64]) -> bool {
    z.iter().all(|c| c.im == 0.0)
}

/// Piecewise-linear path through `vertices`, parameterized proportionally to
/// arc length. The first vertex is forced onto `R^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPath", into = "RawPath")]
pub struct PathCn {
    vertices: Vec<CPoint>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPath {
    vertices: Vec<CPoint>,
}

impl TryFrom<RawPath> for PathCn {
    type Error = Error;
    fn try_from(raw: RawPath) -> Result<Self> {
        PathCn::new(raw.vertices)
    }
}

impl From<PathCn> for RawPath {
    fn from(p: PathCn) -> Self {
        RawPath { vertices: p.vertices }
    }
}

impl PathCn {
    pub fn new(mut vertices: Vec<CPoint>) -> Result<Self> {
        let n = vertices.first().map(Vec::len).ok_or_else(|| Error::InvalidInput("path without vertices".into()))?;
        if n == 0 {
            return Err(Error::InvalidInput("path in C^0".into()));
        }
        if vertices.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidInput("path vertices have different dimensions".into()));
        }
        if vertices.iter().flatten().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite path vertex".into()));
        }
        for c in &mut vertices[0] {
            c.im = 0.0;
        }
        Ok(PathCn { vertices })
    }

    /// The constant path at a real point.
    pub fn constant(x: &[f64]) -> Self {
        PathCn { vertices: vec![x.iter().map(|&r| Complex64::new(r, 0.0)).collect()] }
    }

    /// The straight segment `Re(z) -> z`, or the constant path when `z` is real.
    pub fn ray_from_real(z: &[Complex64]) -> Self {
        let start: CPoint = z.iter().map(|c| Complex64::new(c.re, 0.0)).collect();
        if is_real_point(z) {
            PathCn { vertices: vec![start] }
        } else {
            PathCn { vertices: vec![start, z.to_vec()] }
        }
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[CPoint] {
        &self.vertices
    }

    pub fn start(&self) -> &[Complex64] {
        &self.vertices[0]
    }

    pub fn endpoint(&self) -> &[Complex64] {
        self.vertices.last().expect("paths are non-empty")
    }

    /// Appends the straight segment from the current endpoint to `z`.
    pub fn extend(&self, z: &[Complex64]) -> Result<PathCn> {
        if z.len() != self.dim() {
            return Err(Error::InvalidInput(format!("cannot extend a path in C^{} to a point of C^{}", self.dim(), z.len())));
        }
        let mut vertices = self.vertices.clone();
        vertices.push(z.to_vec());
        Ok(PathCn { vertices })
    }

    /// The reflected path, vertexwise complex conjugation.
    pub fn conj(&self) -> PathCn {
        PathCn { vertices: self.vertices.iter().map(|v| conj_point(v)).collect() }
    }

    /// Vertexwise image under `x + y i -> x + y I`.
    pub fn lift(&self, unit: ImaginaryUnit) -> Vec<SlicePoint> {
        self.vertices.iter().map(|v| SlicePoint::on_slice(v, unit)).collect()
    }

    /// Vertices together with `per_segment` interior points of every segment.
    pub fn trace(&self, per_segment: usize) -> Vec<CPoint> {
        let mut out = vec![self.vertices[0].clone()];
        for pair in self.vertices.windows(2) {
            out.extend(segment_points(&pair[0], &pair[1], per_segment));
        }
        out
    }

    pub fn length(&self) -> f64 {
        self.vertices.windows(2).map(|w| distance(&w[0], &w[1])).sum()
    }

    /// Position at parameter `t` in `[0, 1]`.
    pub fn point_at(&self, t: f64) -> CPoint {
        let total = self.length();
        if self.vertices.len() == 1 || total == 0.0 {
            return self.vertices[0].clone();
        }
        let mut remaining = t.clamp(0.0, 1.0) * total;
        for w in self.vertices.windows(2) {
            let len = distance(&w[0], &w[1]);
            if remaining <= len && len > 0.0 {
                let s = remaining / len;
                return w[0].iter().zip(&w[1]).map(|(a, b)| a + (b - a) * s).collect();
            }
            remaining -= len;
        }
        self.endpoint().to_vec()
    }
}

/// Interior points and the far end of the segment `a -> b`.
pub fn segment_points(a: &[Complex64], b: &[Complex64], per_segment: usize) -> Vec<CPoint> {
    let steps = per_segment + 1;
    (1..=steps)
        .map(|s| {
            let t = s as f64 / steps as f64;
            a.iter().zip(b).map(|(p, q)| p + (q - p) * t).collect()
        })
        .collect()
}

/// The family `{ extend(base, z) : |z - base(1)| < radius }`; empty for radius zero.
#[derive(Clone, Debug, PartialEq)]
pub struct PathBallSpec {
    pub base: PathCn,
    pub radius: f64,
}

impl PathBallSpec {
    pub fn new(base: PathCn, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(Error::InvalidInput(format!("negative path-ball radius {radius}")));
        }
        Ok(PathBallSpec { base, radius })
    }

    pub fn is_empty(&self) -> bool {
        self.radius == 0.0
    }

    /// The member path ending at `z`, if `z` lies in the ball.
    pub fn member(&self, z: &[Complex64]) -> Option<PathCn> {
        if z.len() == self.base.dim() && distance(z, self.base.endpoint()) < self.radius {
            self.base.extend(z).ok()
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn anchor_is_forced_real() {
        let p = PathCn::new(vec![vec![c(1.0, 3.0)], vec![c(2.0, 2.0)]]).unwrap();
        assert_eq!(p.start(), &[c(1.0, 0.0)]);
        assert!(PathCn::new(vec![]).is_err());
        assert!(PathCn::new(vec![vec![c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]]).is_err());
    }

    #[test]
    fn lifts() {
        let p = PathCn::constant(&[2.0]);
        let lifted = p.lift(ImaginaryUnit::K);
        assert_eq!(lifted[0].to_quaternions()[0], crate::Quaternion::real(2.0));

        let seg = PathCn::new(vec![vec![c(0.0, 0.0)], vec![c(0.0, 1.0)]]).unwrap();
        let end = seg.lift(ImaginaryUnit::J).pop().unwrap();
        assert_eq!(end.to_quaternions()[0], crate::Quaternion::J);

        let g = PathCn::new(vec![vec![c(1.0, 0.0)], vec![c(0.5, 2.0)], vec![c(-1.0, -0.5)]]).unwrap();
        let a: Vec<_> = g.conj().lift(ImaginaryUnit::I).iter().map(|s| s.to_quaternions()).collect();
        let b: Vec<_> = g.lift(-ImaginaryUnit::I).iter().map(|s| s.to_quaternions()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn conjugate_paths() {
        let real = PathCn::new(vec![vec![c(1.0, 0.0)], vec![c(2.0, 0.0)]]).unwrap();
        assert_eq!(real.conj(), real);
        let g = PathCn::new(vec![vec![c(0.0, 0.0)], vec![c(1.0, 2.0)]]).unwrap();
        assert_eq!(g.conj().conj(), g);
        assert_eq!(g.conj().endpoint(), &[c(1.0, -2.0)]);
    }

    #[test]
    fn extension_and_rays() {
        let g = PathCn::new(vec![vec![c(0.0, 0.0)], vec![c(1.0, 1.0)]]).unwrap();
        let same = g.extend(g.endpoint()).unwrap();
        assert_eq!(same.vertices().len(), 3);
        assert_eq!(same.endpoint(), g.endpoint());
        let z = vec![c(-2.0, 0.5)];
        assert_eq!(g.extend(&z).unwrap().endpoint(), &z[..]);
        let seg = PathCn::constant(&[0.0, 0.0]).extend(&[c(1.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(seg.vertices().len(), 2);

        let ray = PathCn::ray_from_real(&[c(2.0, 3.0)]);
        assert_eq!(ray.vertices(), &[vec![c(2.0, 0.0)], vec![c(2.0, 3.0)]]);
        assert_eq!(PathCn::ray_from_real(&[c(4.0, 0.0)]).vertices().len(), 1);
    }

    #[test]
    fn parameterization() {
        let g = PathCn::new(vec![vec![c(0.0, 0.0)], vec![c(1.0, 0.0)], vec![c(1.0, 3.0)]]).unwrap();
        assert_eq!(g.point_at(0.25), vec![c(1.0, 0.0)]);
        assert_eq!(g.point_at(1.0), vec![c(1.0, 3.0)]);
        assert_eq!(g.trace(1).len(), 5);
    }

    #[test]
    fn json_schema() {
        let p: PathCn = serde_json::from_str(r#"{"vertices": [[[1, 5]], [[2, 3]]]}"#).unwrap();
        assert_eq!(p.start(), &[c(1.0, 0.0)]);
        let back: PathCn = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<PathCn>(r#"{"vertices": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn path_balls() {
        let ball = PathBallSpec::new(PathCn::constant(&[0.0]), 1.0).unwrap();
        assert!(ball.member(&[c(0.5, 0.5)]).is_some());
        assert!(ball.member(&[c(1.0, 0.5)]).is_none());
        let empty = PathBallSpec::new(PathCn::constant(&[0.0]), 0.0).unwrap();
        assert!(empty.is_empty() && empty.member(&[c(0.0, 0.0)]).is_none());
    }
}
