//! Slice domains of `H^n_s`, their slice-unit sets and admissible radii.
//!
//! A [`SliceDomain`] is an axially symmetric part (a region `R` of `C^n`
//! taken in every slice, together with its reflection) plus attachments that
//! live in single slices. The point `x + y L` lies in the domain when
//!
//! * `R` contains `z` or `conj z`, or
//! * an attachment `(U, A)` has `L = U` and `z` in `A`, or `L = -U` and
//!   `conj z` in `A` (both describe the same quaternionic set), or
//! * the attachment is flagged `antipode` and `A` is also placed in the
//!   slice of `-U`,
//!
//! and real points belong to the domain as soon as any region contains them.

mod checks;
mod region;

pub use checks::{
    check_real_path_connected, check_self_stem_preserving, check_stem_preserving, DomainCheckReport, Verdict,
    Witness,
};
pub use region::{IntervalSet, Region};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{conj_point, is_real_point, segment_points, CPoint, PathCn};
use crate::quaternion::{sphere_sample, ImaginaryUnit, Quaternion, SlicePoint};

/// Two units closer than this are treated as the same slice.
pub const UNIT_MATCH: f64 = 1e-9;

/// Sample sizes and seed shared by the sampling-based domain routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SamplingConfig {
    pub seed: u64,
    pub unit_samples: usize,
    pub path_samples: usize,
    pub pair_samples: usize,
    pub per_segment: usize,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig { seed: 0, unit_samples: 256, path_samples: 64, pair_samples: 64, per_segment: 32 }
    }
}

impl SamplingConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplingConfig { seed, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Attachment {
    pub unit: ImaginaryUnit,
    pub region: Region,
    #[serde(default)]
    pub antipode: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceDomain {
    pub axial: Region,
    #[serde(default)]
    pub attachments: Vec<Attachment>,
}

/// Result of [`SliceDomain::slice_units`]. When `all` is set the path lifts
/// into the axial part, so every unit works and `units` is only the sample.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceUnits {
    pub all: bool,
    pub units: Vec<ImaginaryUnit>,
}

impl SliceUnits {
    pub fn is_empty(&self) -> bool {
        !self.all && self.units.is_empty()
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn contains(&self, unit: ImaginaryUnit) -> bool {
        self.all || self.units.iter().any(|u| u.approx_eq(unit, UNIT_MATCH))
    }

    /// Intersection of two unit sets; `all` only if both are.
    pub fn intersect(&self, other: &SliceUnits) -> SliceUnits {
        match (self.all, other.all) {
            (true, true) => self.clone(),
            (true, false) => other.clone(),
            (false, true) => self.clone(),
            (false, false) => SliceUnits {
                all: false,
                units: self.units.iter().copied().filter(|&u| other.contains(u)).collect(),
            },
        }
    }
}

impl SliceDomain {
    pub fn axial(region: Region) -> Self {
        SliceDomain { axial: region, attachments: Vec::new() }
    }

    /// The symmetric ball `{ |q - x| < r }` for a real centre `x`.
    pub fn ball(center: &[f64], radius: f64) -> Self {
        let c = center.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        SliceDomain::axial(Region::ball(c, radius))
    }

    pub fn whole() -> Self {
        SliceDomain::axial(Region::All)
    }

    pub fn attach(mut self, unit: ImaginaryUnit, region: Region, antipode: bool) -> Self {
        self.attachments.push(Attachment { unit, region, antipode });
        self
    }

    /// Number of variables, inferred from the coordinates the regions use.
    pub fn dim(&self) -> usize {
        self.regions().filter_map(Region::max_coord).max().map_or(1, |m| m + 1)
    }

    fn regions(&self) -> impl Iterator<Item = &Region> {
        std::iter::once(&self.axial).chain(self.attachments.iter().map(|a| &a.region))
    }

    /// Regions making up the slice of `unit`, each with a flag telling
    /// whether it is applied to the conjugate point.
    fn members(&self, unit: ImaginaryUnit) -> Vec<(&Region, bool)> {
        let mut out = vec![(&self.axial, false), (&self.axial, true)];
        for a in &self.attachments {
            let same = unit.approx_eq(a.unit, UNIT_MATCH);
            let opposite = unit.approx_eq(-a.unit, UNIT_MATCH);
            if same || (a.antipode && opposite) {
                out.push((&a.region, false));
            }
            if opposite || (a.antipode && same) {
                out.push((&a.region, true));
            }
        }
        out
    }

    /// Whether `x + y unit` (coordinatewise) lies in the domain.
    pub fn contains_lifted(&self, z: &[Complex64], unit: ImaginaryUnit) -> bool {
        if is_real_point(z) {
            return self.regions().any(|r| r.contains(z));
        }
        let zc = conj_point(z);
        self.members(unit).iter().any(|(r, c)| r.contains(if *c { &zc } else { z }))
    }

    pub fn contains(&self, p: &SlicePoint) -> bool {
        let p = p.canonical();
        match p.unit() {
            None => self.contains_lifted(&p.complex_coords(), ImaginaryUnit::I),
            Some(u) => self.contains_lifted(&p.complex_coords(), u),
        }
    }

    pub fn contains_quaternions(&self, q: &[Quaternion]) -> Result<bool> {
        Ok(self.contains(&SlicePoint::from_quaternions(q)?))
    }

    /// Signed distance of `z` to the boundary of the slice of `unit`
    /// (negative inside). Real points use the regions of that slice only.
    pub fn signed_distance_lifted(&self, z: &[Complex64], unit: ImaginaryUnit) -> f64 {
        let zc = conj_point(z);
        self.members(unit)
            .iter()
            .map(|(r, c)| r.signed_distance(if *c { &zc } else { z }))
            .fold(f64::INFINITY, f64::min)
    }

    /// Lower bound for the distance from `z` to the complement of the slice of `unit`.
    pub fn boundary_distance(&self, z: &[Complex64], unit: ImaginaryUnit) -> f64 {
        (-self.signed_distance_lifted(z, unit)).max(0.0)
    }

    fn in_axial(&self, z: &[Complex64]) -> bool {
        self.axial.contains(z) || self.axial.contains(&conj_point(z))
    }

    /// Whether the sampled trace of `path` lifts into the domain under `unit`.
    pub fn path_in_slice(&self, path: &PathCn, unit: ImaginaryUnit, per_segment: usize) -> bool {
        path.dim() == self.dim().max(path.dim())
            && path.trace(per_segment).iter().all(|z| self.contains_lifted(z, unit))
    }

    /// Whether the sampled trace of `path` stays in the axial part.
    pub fn path_in_axial(&self, path: &PathCn, per_segment: usize) -> bool {
        path.trace(per_segment).iter().all(|z| self.in_axial(z))
    }

    /// Sampled units plus the attachment units and their opposites.
    pub fn candidate_units(&self, cfg: &SamplingConfig) -> Vec<ImaginaryUnit> {
        let mut out = sphere_sample(cfg.unit_samples, cfg.seed);
        for a in &self.attachments {
            for u in [a.unit, -a.unit] {
                if !out.iter().any(|v| v.approx_eq(u, UNIT_MATCH)) {
                    out.push(u);
                }
            }
        }
        out
    }

    /// The units `I` for which the lift of `path` under `I` lies in the domain.
    pub fn slice_units(&self, path: &PathCn, cfg: &SamplingConfig) -> SliceUnits {
        let candidates = self.candidate_units(cfg);
        if self.path_in_axial(path, cfg.per_segment) {
            return SliceUnits { all: true, units: candidates };
        }
        let units = candidates.into_iter().filter(|&u| self.path_in_slice(path, u, cfg.per_segment)).collect();
        SliceUnits { all: false, units }
    }

    /// `min` over `units` of the distance from the lifted endpoint to the
    /// boundary of the corresponding slice.
    pub fn radius_for_units(&self, path: &PathCn, units: &[ImaginaryUnit]) -> Result<f64> {
        if units.is_empty() {
            return Err(Error::EmptyUnitSet);
        }
        let z = path.endpoint();
        Ok(units.iter().map(|&u| self.boundary_distance(z, u)).fold(f64::INFINITY, f64::min))
    }

    /// The best radius achievable with two distinct units of the slice set:
    /// the second largest per-unit boundary distance.
    pub fn radius_two_units(&self, path: &PathCn, cfg: &SamplingConfig) -> Result<f64> {
        let su = self.slice_units(path, cfg);
        if su.units.len() < 2 {
            return Err(Error::InsufficientUnits(su.units.len()));
        }
        let z = path.endpoint();
        let mut d: Vec<f64> = su.units.iter().map(|&u| self.boundary_distance(z, u)).collect();
        d.sort_by(|a, b| b.total_cmp(a));
        Ok(d[1])
    }

    /// Units of `units` with pairwise different slice membership patterns.
    fn representatives(&self, units: &[ImaginaryUnit]) -> Vec<ImaginaryUnit> {
        let signature = |u: ImaginaryUnit| -> Vec<(usize, bool)> {
            let mut s = Vec::new();
            for (i, a) in self.attachments.iter().enumerate() {
                let same = u.approx_eq(a.unit, UNIT_MATCH);
                let opposite = u.approx_eq(-a.unit, UNIT_MATCH);
                if same || (a.antipode && opposite) {
                    s.push((i, false));
                }
                if opposite || (a.antipode && same) {
                    s.push((i, true));
                }
            }
            s
        };
        let mut seen = Vec::new();
        let mut reps = Vec::new();
        for &u in units {
            let s = signature(u);
            if !seen.contains(&s) {
                seen.push(s);
                reps.push(u);
            }
        }
        reps
    }

    fn probe_directions(&self, z: &[Complex64], seed: u64) -> Vec<CPoint> {
        let n = z.len();
        let mut dirs = Vec::new();
        if n == 1 {
            let offset = (seed as f64 * 0.618_033_988_749_894_9).fract();
            for k in 0..64 {
                let t = std::f64::consts::TAU * (k as f64 + offset) / 64.0;
                dirs.push(vec![Complex64::from_polar(1.0, t)]);
            }
        } else {
            for l in 0..n {
                for d in [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), Complex64::i(), -Complex64::i()] {
                    let mut v = vec![Complex64::new(0.0, 0.0); n];
                    v[l] = d;
                    dirs.push(v);
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..64 {
                let v: CPoint = (0..n)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect();
                let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
                if norm > 1e-3 {
                    dirs.push(v.iter().map(|c| c / norm).collect());
                }
            }
        }
        let zc = conj_point(z);
        for r in self.regions() {
            r.boundary_directions(z, &mut dirs);
            let mut mirrored = Vec::new();
            r.boundary_directions(&zc, &mut mirrored);
            dirs.extend(mirrored.iter().map(|d| conj_point(d)));
        }
        dirs
    }

    /// Largest `r` such that every straight extension of `path` by less than
    /// `r` still lifts into the domain for some unit of its slice set.
    ///
    /// Directions are a fixed sample plus the directions towards the nearest
    /// boundary point of every primitive; the radius is located by bisection
    /// to about `1e-13` relative accuracy. Returns `0` when `path` does not
    /// lift at all and infinity when no sampled direction leaves the domain.
    pub fn radius_path_ball(&self, path: &PathCn, cfg: &SamplingConfig) -> f64 {
        let su = self.slice_units(path, cfg);
        if su.is_empty() {
            return 0.0;
        }
        let reps = self.representatives(&su.units);
        let z = path.endpoint().to_vec();
        let dirs = self.probe_directions(&z, cfg.seed);
        let fits = |r: f64| {
            dirs.iter().all(|d| {
                let w: CPoint = z.iter().zip(d).map(|(a, b)| a + b * r).collect();
                let pts = segment_points(&z, &w, cfg.per_segment);
                (su.all && pts.iter().all(|p| self.in_axial(p)))
                    || reps.iter().any(|&u| pts.iter().all(|p| self.contains_lifted(p, u)))
            })
        };
        let scale = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt().max(1.0);
        let (mut lo, mut hi) = (0.0, scale);
        while fits(hi) {
            lo = hi;
            hi *= 2.0;
            if hi > 1e6 * scale {
                return f64::INFINITY;
            }
        }
        for _ in 0..200 {
            if hi - lo <= 1e-13 * scale {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Sampling window `[re_lo, re_hi, im_lo, im_hi]` of coordinate `coord`.
    fn window(&self, coord: usize) -> [f64; 4] {
        let mut hull = None;
        for r in self.regions() {
            r.disk_hull(coord, &mut hull);
        }
        match hull {
            Some(h) => [h[0] - 1.0, h[1] + 1.0, h[2] - 1.0, h[3] + 1.0],
            None => [-4.0, 4.0, -4.0, 4.0],
        }
    }

    /// Exact real trace of a one-variable domain.
    pub fn real_trace(&self) -> Option<IntervalSet> {
        (self.dim() == 1).then(|| self.regions().fold(IntervalSet::empty(), |acc, r| acc.union(&r.real_trace())))
    }

    /// Up to `count` real points of the domain.
    pub fn real_points(&self, count: usize, seed: u64) -> Vec<Vec<f64>> {
        let n = self.dim();
        if let Some(trace) = self.real_trace() {
            let w = self.window(0);
            let per = (count / trace.intervals().len().max(1)).max(1);
            return trace.sample(w[0], w[1], per).into_iter().take(count).map(|x| vec![x]).collect();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0001);
        let windows: Vec<[f64; 4]> = (0..n).map(|l| self.window(l)).collect();
        let mut out = Vec::new();
        for _ in 0..64 * count {
            if out.len() == count {
                break;
            }
            let x: Vec<f64> = windows.iter().map(|w| rng.gen_range(w[0]..w[1])).collect();
            let z: CPoint = x.iter().map(|&r| Complex64::new(r, 0.0)).collect();
            if self.regions().any(|r| r.contains(&z)) {
                out.push(x);
            }
        }
        out
    }

    /// A polyline from a real point of the domain to `z` lifting into the
    /// domain under `unit`: the vertical ray first, then straight and
    /// two-segment routes from sampled real points.
    pub fn find_witness_path(&self, z: &[Complex64], unit: ImaginaryUnit, cfg: &SamplingConfig) -> Option<PathCn> {
        let ray = PathCn::ray_from_real(z);
        if self.path_in_slice(&ray, unit, cfg.per_segment) {
            return Some(ray);
        }
        let mut starts = self.real_points(16, cfg.seed);
        let key = |x: &Vec<f64>| x.iter().zip(z).map(|(a, c)| (a - c.re).powi(2)).sum::<f64>();
        starts.sort_by(|a, b| key(a).total_cmp(&key(b)));
        for x in starts {
            let p: CPoint = x.iter().map(|&r| Complex64::new(r, 0.0)).collect();
            let lifted: CPoint = p.iter().zip(z).map(|(a, c)| Complex64::new(a.re, c.im)).collect();
            let routes = [vec![p.clone(), z.to_vec()], vec![p.clone(), lifted, z.to_vec()]];
            for vertices in routes {
                if let Ok(path) = PathCn::new(vertices) {
                    if self.path_in_slice(&path, unit, cfg.per_segment) {
                        return Some(path);
                    }
                }
            }
        }
        None
    }

    /// Up to `count` non-real points of the domain with the unit of their slice,
    /// drawn round-robin from the axial part and the attachments.
    pub fn sample_points(&self, count: usize, seed: u64) -> Vec<(CPoint, ImaginaryUnit)> {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0002);
        let units = sphere_sample(16, seed);
        let mut members: Vec<(&Region, Option<ImaginaryUnit>)> = vec![(&self.axial, None)];
        for a in &self.attachments {
            members.push((&a.region, Some(a.unit)));
            if a.antipode {
                members.push((&a.region, Some(-a.unit)));
            }
        }
        let boxes: Vec<Vec<[f64; 4]>> = members
            .iter()
            .map(|(r, _)| (0..n).map(|l| r.bbox(l).unwrap_or_else(|| self.window(l))).collect())
            .collect();
        let mut out = Vec::new();
        let mut k = 0usize;
        for _ in 0..64 * count.max(1) {
            if out.len() == count {
                break;
            }
            let m = k % members.len();
            let (region, unit) = members[m];
            let z: CPoint = boxes[m]
                .iter()
                .map(|b| {
                    let re = if b[0] < b[1] { rng.gen_range(b[0]..b[1]) } else { b[0] };
                    let im = if b[2] < b[3] { rng.gen_range(b[2]..b[3]) } else { b[2] };
                    Complex64::new(re, im)
                })
                .collect();
            k += 1;
            if is_real_point(&z) || !region.contains(&z) {
                continue;
            }
            let unit = unit.unwrap_or(units[out.len() % units.len()]);
            out.push((z, unit));
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

    fn ray(z: Complex64) -> PathCn {
        PathCn::ray_from_real(&[z])
    }

    fn bubble() -> SliceDomain {
        // unit ball with a disk glued into the slice of i only
        SliceDomain::ball(&[0.0], 1.0).attach(ImaginaryUnit::I, Region::disk(c(0.0, 1.5), 0.6), false)
    }

    #[test]
    fn membership() {
        let d = bubble();
        let i = ImaginaryUnit::I;
        assert!(d.contains_lifted(&[c(0.0, 1.9)], i));
        assert!(!d.contains_lifted(&[c(0.0, 1.9)], ImaginaryUnit::J));
        // x - 1.9 i lies in the slice of -i as x + 1.9(-i)
        assert!(d.contains_lifted(&[c(0.0, -1.9)], -i));
        assert!(!d.contains_lifted(&[c(0.0, 1.9)], -i));
        let q = [Quaternion::new(0.0, 1.9, 0.0, 0.0)];
        assert!(d.contains_quaternions(&q).unwrap());
        let q = [Quaternion::new(0.0, -1.9, 0.0, 0.0)];
        assert!(!d.contains_quaternions(&q).unwrap());
        let q = [Quaternion::new(0.0, 0.0, 1.9, 0.0)];
        assert!(!d.contains_quaternions(&q).unwrap());
    }

    #[test]
    fn antipodal_attachment() {
        let d = SliceDomain::axial(Region::Empty).attach(ImaginaryUnit::J, Region::disk(c(0.0, 1.0), 0.5), true);
        assert!(d.contains_lifted(&[c(0.0, 1.0)], ImaginaryUnit::J));
        assert!(d.contains_lifted(&[c(0.0, 1.0)], -ImaginaryUnit::J));
        assert!(!d.contains_lifted(&[c(0.0, 1.0)], ImaginaryUnit::K));
    }

    #[test]
    fn slice_units_of_axial_paths_are_everything() {
        let d = SliceDomain::ball(&[0.0], 1.0);
        let su = d.slice_units(&ray(c(0.2, 0.5)), &SamplingConfig::default());
        assert!(su.all && su.len() == 256);
        let outside = d.slice_units(&ray(c(0.2, 1.5)), &SamplingConfig::default());
        assert!(outside.is_empty());
    }

    #[test]
    fn attachment_path_has_one_unit() {
        let d = bubble();
        let su = d.slice_units(&ray(c(0.0, 1.9)), &SamplingConfig::default());
        assert!(!su.all);
        assert_eq!(su.units, vec![ImaginaryUnit::I]);
        let conj = d.slice_units(&ray(c(0.0, -1.9)), &SamplingConfig::default());
        assert_eq!(conj.units, vec![-ImaginaryUnit::I]);
    }

    #[test]
    fn radii_in_the_unit_ball() {
        let d = SliceDomain::ball(&[0.0], 1.0);
        let g = ray(c(0.3, 0.4));
        let cfg = SamplingConfig::default();
        let expected = 0.5;
        assert!((d.radius_for_units(&g, &[ImaginaryUnit::I]).unwrap() - expected).abs() < 1e-12);
        assert!((d.radius_two_units(&g, &cfg).unwrap() - expected).abs() < 1e-12);
        assert!((d.radius_path_ball(&g, &cfg) - expected).abs() < 1e-12);
        assert_eq!(d.radius_for_units(&g, &[]), Err(Error::EmptyUnitSet));
    }

    #[test]
    fn two_unit_radius_needs_two_units() {
        let d = bubble();
        let g = ray(c(0.0, 1.9));
        assert_eq!(d.radius_two_units(&g, &SamplingConfig::default()), Err(Error::InsufficientUnits(1)));
        let r = d.radius_path_ball(&g, &SamplingConfig::default());
        assert!((r - 0.2).abs() < 1e-12, "{r}");
    }

    #[test]
    fn whole_space_is_unbounded() {
        let d = SliceDomain::whole();
        assert_eq!(d.radius_path_ball(&ray(c(1.0, 1.0)), &SamplingConfig::default()), f64::INFINITY);
    }

    #[test]
    fn witness_paths() {
        let annulus = SliceDomain::axial(Region::Intersection(vec![
            Region::disk(c(0.0, 0.0), 2.0),
            Region::Complement(Box::new(Region::disk(c(0.0, 0.0), 1.0))),
        ]));
        let cfg = SamplingConfig::default();
        // the vertical ray from 0 crosses the hole
        let p = annulus.find_witness_path(&[c(0.0, 1.5)], ImaginaryUnit::K, &cfg).unwrap();
        assert!(annulus.path_in_slice(&p, ImaginaryUnit::K, 32));
        assert_eq!(p.endpoint(), &[c(0.0, 1.5)]);
        let disk = SliceDomain::axial(Region::disk(c(0.0, 3.0), 1.0));
        assert!(disk.find_witness_path(&[c(0.0, 3.0)], ImaginaryUnit::I, &cfg).is_none());
    }

    #[test]
    fn real_points_and_samples() {
        let d = bubble();
        let xs = d.real_points(16, 0);
        assert!(!xs.is_empty() && xs.iter().all(|x| x[0].abs() < 1.0));
        let pts = d.sample_points(40, 3);
        assert_eq!(pts.len(), 40);
        assert!(pts.iter().all(|(z, u)| d.contains_lifted(z, *u)));
        let two = SliceDomain::ball(&[0.0, 0.0], 1.0);
        assert_eq!(two.dim(), 2);
        assert!(!two.real_points(8, 0).is_empty());
    }

    #[test]
    fn json_roundtrip() {
        let d = bubble();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<SliceDomain>(&s).unwrap(), d);
        let parsed: SliceDomain =
            serde_json::from_str(r#"{"axial":{"disk":{"center":[0,0],"radius":2}},"attachments":[]}"#).unwrap();
        assert_eq!(parsed.dim(), 1);
    }
}
