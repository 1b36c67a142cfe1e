//! CSG regions in `C^n` built from disks and half-planes of single coordinates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// An open region of `C^n`.
///
/// Primitives constrain one coordinate (`coord`, default 0), so a disk in
/// `C^n` is the cylinder `{ z : |z_coord - center| < radius }`. Signed
/// distances are exact for primitives and min/max-combined at the CSG nodes,
/// which makes the interior distance a lower bound of the true distance to
/// the boundary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Region {
    Disk {
        #[serde(default)]
        coord: usize,
        center: Complex64,
        radius: f64,
    },
    /// Euclidean ball of `C^n`.
    Ball {
        center: Vec<Complex64>,
        radius: f64,
    },
    /// `{ z : Re(a z_coord) < b }`.
    HalfPlane {
        #[serde(default)]
        coord: usize,
        a: Complex64,
        b: f64,
    },
    All,
    Empty,
    Union(Vec<Region>),
    Intersection(Vec<Region>),
    /// Interior of the complement.
    Complement(Box<Region>),
}

impl Region {
    pub fn disk(center: Complex64, radius: f64) -> Region {
        Region::Disk { coord: 0, center, radius }
    }

    pub fn disk_at(coord: usize, center: Complex64, radius: f64) -> Region {
        Region::Disk { coord, center, radius }
    }

    pub fn ball(center: Vec<Complex64>, radius: f64) -> Region {
        Region::Ball { center, radius }
    }

    pub fn half_plane(a: Complex64, b: f64) -> Region {
        Region::HalfPlane { coord: 0, a, b }
    }

    /// Negative inside, positive outside. Coordinates the point does not have
    /// count as outside.
    pub fn signed_distance(&self, z: &[Complex64]) -> f64 {
        match self {
            Region::Disk { coord, center, radius } => match z.get(*coord) {
                Some(w) => (w - center).norm() - radius,
                None => f64::INFINITY,
            },
            Region::Ball { center, radius } => {
                if center.len() != z.len() {
                    return f64::INFINITY;
                }
                crate::paths::distance(z, center) - radius
            }
            Region::HalfPlane { coord, a, b } => match z.get(*coord) {
                Some(w) => {
                    let n = a.norm();
                    if n == 0.0 {
                        if 0.0 < *b {
                            f64::NEG_INFINITY
                        } else {
                            f64::INFINITY
                        }
                    } else {
                        ((a * w).re - b) / n
                    }
                }
                None => f64::INFINITY,
            },
            Region::All => f64::NEG_INFINITY,
            Region::Empty => f64::INFINITY,
            Region::Union(parts) => parts.iter().map(|p| p.signed_distance(z)).fold(f64::INFINITY, f64::min),
            Region::Intersection(parts) => {
                parts.iter().map(|p| p.signed_distance(z)).fold(f64::NEG_INFINITY, f64::max)
            }
            Region::Complement(inner) => -inner.signed_distance(z),
        }
    }

    pub fn contains(&self, z: &[Complex64]) -> bool {
        self.signed_distance(z) < 0.0
    }

    /// Largest coordinate index used, if any primitive is present.
    pub fn max_coord(&self) -> Option<usize> {
        match self {
            Region::Disk { coord, .. } | Region::HalfPlane { coord, .. } => Some(*coord),
            Region::Ball { center, .. } => center.len().checked_sub(1),
            Region::All | Region::Empty => None,
            Region::Union(parts) | Region::Intersection(parts) => parts.iter().filter_map(Region::max_coord).max(),
            Region::Complement(inner) => inner.max_coord(),
        }
    }

    /// Directions (unit vectors of `C^n`) towards the nearest boundary point
    /// of every primitive, as seen from `z`.
    pub fn boundary_directions(&self, z: &[Complex64], out: &mut Vec<Vec<Complex64>>) {
        let axis = |coord: usize, d: Complex64| {
            let mut v = vec![Complex64::new(0.0, 0.0); z.len()];
            v[coord] = d;
            v
        };
        match self {
            Region::Disk { coord, center, .. } => {
                if let Some(w) = z.get(*coord) {
                    let d = w - center;
                    if d.norm() > 0.0 {
                        out.push(axis(*coord, d / d.norm()));
                        out.push(axis(*coord, -d / d.norm()));
                    }
                }
            }
            Region::Ball { center, .. } => {
                let d: Vec<Complex64> = z.iter().zip(center).map(|(a, b)| a - b).collect();
                let n = crate::paths::distance(z, center);
                if center.len() == z.len() && n > 0.0 {
                    out.push(d.iter().map(|c| c / n).collect());
                    out.push(d.iter().map(|c| -c / n).collect());
                }
            }
            Region::HalfPlane { coord, a, .. } => {
                if *coord < z.len() && a.norm() > 0.0 {
                    let d = a.conj() / a.norm();
                    out.push(axis(*coord, d));
                    out.push(axis(*coord, -d));
                }
            }
            Region::All | Region::Empty => {}
            Region::Union(parts) | Region::Intersection(parts) => {
                for p in parts {
                    p.boundary_directions(z, out);
                }
            }
            Region::Complement(inner) => inner.boundary_directions(z, out),
        }
    }

    /// Bounding box `[re_lo, re_hi] x [im_lo, im_hi]` of coordinate `coord`,
    /// `None` when unbounded.
    pub fn bbox(&self, coord: usize) -> Option<[f64; 4]> {
        match self {
            Region::Disk { coord: c, center, radius } if *c == coord => Some([
                center.re - radius,
                center.re + radius,
                center.im - radius,
                center.im + radius,
            ]),
            Region::Ball { center, radius } => center
                .get(coord)
                .map(|c| [c.re - radius, c.re + radius, c.im - radius, c.im + radius]),
            Region::Disk { .. } | Region::HalfPlane { .. } | Region::All | Region::Complement(_) => None,
            Region::Empty => Some([0.0, 0.0, 0.0, 0.0]),
            Region::Union(parts) => parts.iter().try_fold([f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY], |acc, p| {
                p.bbox(coord).map(|b| [acc[0].min(b[0]), acc[1].max(b[1]), acc[2].min(b[2]), acc[3].max(b[3])])
            }),
            Region::Intersection(parts) => {
                let boxes: Vec<_> = parts.iter().filter_map(|p| p.bbox(coord)).collect();
                if boxes.is_empty() {
                    return None;
                }
                Some(boxes.iter().fold([f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY], |acc, b| {
                    [acc[0].max(b[0]), acc[1].min(b[1]), acc[2].max(b[2]), acc[3].min(b[3])]
                }))
            }
        }
    }

    /// Hull of all disk boxes on `coord`, ignoring the CSG structure.
    pub(crate) fn disk_hull(&self, coord: usize, hull: &mut Option<[f64; 4]>) {
        match self {
            Region::Disk { coord: c, center, radius } if *c == coord => {
                let b = [center.re - radius, center.re + radius, center.im - radius, center.im + radius];
                *hull = Some(match hull {
                    Some(h) => [h[0].min(b[0]), h[1].max(b[1]), h[2].min(b[2]), h[3].max(b[3])],
                    None => b,
                });
            }
            Region::Ball { center, radius } if coord < center.len() => {
                let c = center[coord];
                Region::disk_at(coord, c, *radius).disk_hull(coord, hull)
            }
            Region::Union(parts) | Region::Intersection(parts) => parts.iter().for_each(|p| p.disk_hull(coord, hull)),
            Region::Complement(inner) => inner.disk_hull(coord, hull),
            _ => {}
        }
    }

    /// Exact trace on the real line of a one-variable region.
    pub fn real_trace(&self) -> IntervalSet {
        match self {
            Region::Disk { coord, center, radius } => {
                if *coord != 0 || center.im.abs() >= *radius {
                    IntervalSet::empty()
                } else {
                    let h = (radius * radius - center.im * center.im).sqrt();
                    IntervalSet::interval(center.re - h, center.re + h)
                }
            }
            Region::Ball { center, radius } => match center.as_slice() {
                [c] => Region::disk(*c, *radius).real_trace(),
                _ => IntervalSet::empty(),
            },
            Region::HalfPlane { coord, a, b } => {
                if *coord != 0 {
                    IntervalSet::empty()
                } else if a.re > 0.0 {
                    IntervalSet::interval(f64::NEG_INFINITY, b / a.re)
                } else if a.re < 0.0 {
                    IntervalSet::interval(b / a.re, f64::INFINITY)
                } else if 0.0 < *b {
                    IntervalSet::all()
                } else {
                    IntervalSet::empty()
                }
            }
            Region::All => IntervalSet::all(),
            Region::Empty => IntervalSet::empty(),
            Region::Union(parts) => parts.iter().fold(IntervalSet::empty(), |acc, p| acc.union(&p.real_trace())),
            Region::Intersection(parts) => parts.iter().fold(IntervalSet::all(), |acc, p| acc.intersect(&p.real_trace())),
            Region::Complement(inner) => inner.real_trace().complement(),
        }
    }
}

/// Finite union of disjoint open intervals, sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalSet(Vec<(f64, f64)>);

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet(Vec::new())
    }

    pub fn all() -> Self {
        IntervalSet(vec![(f64::NEG_INFINITY, f64::INFINITY)])
    }

    pub fn interval(lo: f64, hi: f64) -> Self {
        if lo < hi {
            IntervalSet(vec![(lo, hi)])
        } else {
            IntervalSet::empty()
        }
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.0.iter().any(|&(lo, hi)| lo < x && x < hi)
    }

    fn normalize(mut v: Vec<(f64, f64)>) -> Self {
        v.retain(|&(lo, hi)| lo < hi);
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(v.len());
        for (lo, hi) in v {
            match out.last_mut() {
                // open intervals sharing only an endpoint stay separate
                Some(last) if lo < last.1 => last.1 = last.1.max(hi),
                _ => out.push((lo, hi)),
            }
        }
        IntervalSet(out)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::normalize(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut v = Vec::new();
        for &(a0, a1) in &self.0 {
            for &(b0, b1) in &other.0 {
                v.push((a0.max(b0), a1.min(b1)));
            }
        }
        IntervalSet::normalize(v)
    }

    /// Interior of the complement.
    pub fn complement(&self) -> IntervalSet {
        let mut v = Vec::new();
        let mut cursor = f64::NEG_INFINITY;
        for &(lo, hi) in &self.0 {
            v.push((cursor, lo));
            cursor = hi;
        }
        v.push((cursor, f64::INFINITY));
        IntervalSet::normalize(v)
    }

    /// Evenly spread sample points of the set clipped to `[lo, hi]`.
    pub fn sample(&self, lo: f64, hi: f64, per_interval: usize) -> Vec<f64> {
        let mut out = Vec::new();
        for &(a, b) in &self.0 {
            let (a, b) = (a.max(lo), b.min(hi));
            if a >= b {
                continue;
            }
            for s in 0..per_interval {
                out.push(a + (b - a) * (s as f64 + 0.5) / per_interval as f64);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn primitive_distances() {
        let d = Region::disk(c(0.0, 0.0), 2.0);
        assert_eq!(d.signed_distance(&[c(1.0, 0.0)]), -1.0);
        assert!(d.contains(&[c(1.0, 0.5)]));
        assert!(!d.contains(&[c(0.0, 3.0)]));
        let h = Region::half_plane(c(1.0, 0.0), 1.0);
        assert_eq!(h.signed_distance(&[c(3.0, 7.0)]), 2.0);
        let h2 = Region::half_plane(c(0.0, 2.0), 0.0); // Re(2i z) = -2 Im z < 0
        assert!(h2.contains(&[c(0.0, 1.0)]));
        assert_eq!(h2.signed_distance(&[c(5.0, 1.0)]), -1.0);
    }

    #[test]
    fn csg_combinations() {
        let annulus = Region::Intersection(vec![
            Region::disk(c(0.0, 0.0), 2.0),
            Region::Complement(Box::new(Region::disk(c(0.0, 0.0), 1.0))),
        ]);
        assert!(annulus.contains(&[c(1.5, 0.0)]));
        assert!(!annulus.contains(&[c(0.5, 0.0)]));
        assert_eq!(annulus.signed_distance(&[c(1.5, 0.0)]), -0.5);
        let trace = annulus.real_trace();
        assert_eq!(trace.intervals(), &[(-2.0, -1.0), (1.0, 2.0)]);
        let u = Region::Union(vec![Region::disk(c(0.0, 0.0), 1.0), Region::disk(c(3.0, 0.0), 1.0)]);
        assert_eq!(u.real_trace().intervals(), &[(-1.0, 1.0), (2.0, 4.0)]);
        assert_eq!(u.bbox(0), Some([-1.0, 4.0, -1.0, 1.0]));
    }

    #[test]
    fn off_axis_disk_has_no_real_trace() {
        let d = Region::disk(c(0.0, 2.0), 0.5);
        assert!(d.real_trace().is_empty());
        let t = Region::disk(c(1.0, 0.6), 1.0).real_trace();
        let (lo, hi) = t.intervals()[0];
        assert!((lo - 0.2).abs() < 1e-15 && (hi - 1.8).abs() < 1e-15);
    }

    #[test]
    fn interval_algebra() {
        let a = IntervalSet::interval(0.0, 2.0).union(&IntervalSet::interval(1.0, 3.0));
        assert_eq!(a.intervals(), &[(0.0, 3.0)]);
        let touching = IntervalSet::interval(0.0, 1.0).union(&IntervalSet::interval(1.0, 2.0));
        assert_eq!(touching.intervals().len(), 2);
        assert!(!touching.contains(1.0));
        assert_eq!(touching.complement().intervals(), &[(f64::NEG_INFINITY, 0.0), (2.0, f64::INFINITY)]);
        assert!(IntervalSet::all().complement().is_empty());
    }

    #[test]
    fn balls() {
        let b = Region::ball(vec![c(0.0, 0.0), c(0.0, 0.0)], 1.0);
        assert!(b.contains(&[c(0.5, 0.0), c(0.0, 0.5)]));
        assert!(!b.contains(&[c(0.8, 0.0), c(0.0, 0.8)]));
        assert!(!b.contains(&[c(0.0, 0.0)]));
        assert_eq!(b.max_coord(), Some(1));
        assert_eq!(Region::ball(vec![c(1.0, 0.0)], 2.0).real_trace().intervals(), &[(-1.0, 3.0)]);
    }

    #[test]
    fn json_form() {
        let r: Region = serde_json::from_str(r#"{"union":[{"disk":{"center":[0,0],"radius":1}},"all"]}"#).unwrap();
        assert_eq!(r, Region::Union(vec![Region::disk(c(0.0, 0.0), 1.0), Region::All]));
        assert!(serde_json::from_str::<Region>(r#"{"disk":{"center":[0,0],"radius":1,"colour":2}}"#).is_err());
    }
}
