use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{SamplingConfig, SliceDomain, SliceUnits};
use crate::paths::{CPoint, PathCn};
use crate::quaternion::{ImaginaryUnit, Quaternion, SlicePoint};

/// Violation witnesses stop the search once this many are collected.
const MAX_VIOLATIONS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every sampled point came with a witness.
    ProvenByWitness,
    /// Nothing contradicting the property was found; not a proof.
    NoViolationFound,
    /// A witness contradicting the property was found.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A path from a real point to a sampled point, lifting under `unit`.
    Path { path: PathCn, unit: ImaginaryUnit },
    /// A point of a one-variable domain that does not meet the real line.
    RealTraceEmpty { point: Vec<Quaternion> },
    /// A path admissible in the first domain whose slice set in the second
    /// domain has at most one element.
    SingleUnitPath { path: PathCn, units: Vec<ImaginaryUnit> },
    /// Two admissible paths with a common endpoint whose slice sets in the
    /// second domain share exactly one unit.
    Pair { alpha: PathCn, beta: PathCn, unit: ImaginaryUnit },
}

impl Witness {
    /// Re-runs the witness against the domains it was produced for.
    pub fn replay(&self, first: &SliceDomain, second: &SliceDomain, cfg: &SamplingConfig) -> bool {
        match self {
            Witness::Path { path, unit } => first.path_in_slice(path, *unit, cfg.per_segment),
            Witness::RealTraceEmpty { point } => {
                first.contains_quaternions(point).unwrap_or(false)
                    && first.real_trace().is_some_and(|t| t.is_empty())
            }
            Witness::SingleUnitPath { path, .. } => {
                let s2 = second.slice_units(path, cfg);
                !first.slice_units(path, cfg).is_empty() && !s2.all && s2.len() <= 1
            }
            Witness::Pair { alpha, beta, unit } => {
                let common = second.slice_units(alpha, cfg).intersect(&second.slice_units(beta, cfg));
                alpha.endpoint() == beta.endpoint()
                    && !first.slice_units(alpha, cfg).is_empty()
                    && !first.slice_units(beta, cfg).is_empty()
                    && !common.all
                    && common.units.len() == 1
                    && common.contains(*unit)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainCheckReport {
    pub property: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub samples_used: usize,
    /// Sampled points for which no witness path was found.
    pub unresolved: usize,
}

impl DomainCheckReport {
    /// Whether every recorded witness still replays.
    pub fn confirmed(&self, first: &SliceDomain, second: &SliceDomain, cfg: &SamplingConfig) -> bool {
        self.witnesses.iter().all(|w| w.replay(first, second, cfg))
    }
}

/// Every point of the domain is reached from the real trace by a path whose
/// lift stays in the domain.
pub fn check_real_path_connected(domain: &SliceDomain, cfg: &SamplingConfig) -> DomainCheckReport {
    let property = "real_path_connected".to_string();
    let points = domain.sample_points(cfg.path_samples, cfg.seed);
    if let Some(trace) = domain.real_trace() {
        if trace.is_empty() {
            return match points.first() {
                Some((z, u)) => DomainCheckReport {
                    property,
                    verdict: Verdict::Violated,
                    witnesses: vec![Witness::RealTraceEmpty { point: SlicePoint::on_slice(z, *u).to_quaternions() }],
                    samples_used: 1,
                    unresolved: 0,
                },
                None => DomainCheckReport {
                    property,
                    verdict: Verdict::NoViolationFound,
                    witnesses: Vec::new(),
                    samples_used: 0,
                    unresolved: 0,
                },
            };
        }
    }
    let mut witnesses = Vec::new();
    let mut unresolved = 0;
    for (z, u) in &points {
        match domain.find_witness_path(z, *u, cfg) {
            Some(path) => witnesses.push(Witness::Path { path, unit: *u }),
            None => unresolved += 1,
        }
    }
    let verdict = if unresolved == 0 && !points.is_empty() { Verdict::ProvenByWitness } else { Verdict::NoViolationFound };
    DomainCheckReport { property, verdict, witnesses, samples_used: points.len(), unresolved }
}

/// Alternative admissible routes in `first` to the endpoint of `alpha`.
fn alternative_routes(first: &SliceDomain, alpha: &PathCn, cfg: &SamplingConfig) -> Vec<PathCn> {
    let z = alpha.endpoint().to_vec();
    let mut out = Vec::new();
    for x in first.real_points(8, cfg.seed.wrapping_add(1)) {
        let p: CPoint = x.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        let bend: CPoint = p.iter().zip(&z).map(|(a, c)| Complex64::new(a.re, c.im)).collect();
        for vertices in [vec![p.clone(), z.clone()], vec![p.clone(), bend, z.clone()]] {
            if let Ok(beta) = PathCn::new(vertices) {
                if &beta != alpha && !out.contains(&beta) {
                    out.push(beta);
                }
            }
        }
    }
    out
}

/// Sampled admissible paths of `first` must have at least two units in
/// `second`, and two admissible paths with a common endpoint must share at
/// least two units of `second`.
pub fn check_stem_preserving(first: &SliceDomain, second: &SliceDomain, cfg: &SamplingConfig) -> DomainCheckReport {
    let property = "stem_preserving".to_string();
    let mut violations = Vec::new();
    let mut samples = 0;
    let mut unresolved = 0;
    let mut admissible: Vec<(PathCn, SliceUnits)> = Vec::new();
    for (z, u) in first.sample_points(cfg.path_samples, cfg.seed) {
        let Some(path) = first.find_witness_path(&z, u, cfg) else {
            unresolved += 1;
            continue;
        };
        samples += 1;
        let s2 = second.slice_units(&path, cfg);
        if !s2.all && s2.len() <= 1 {
            violations.push(Witness::SingleUnitPath { path: path.clone(), units: s2.units.clone() });
            if violations.len() >= MAX_VIOLATIONS {
                break;
            }
        }
        admissible.push((path, s2));
    }
    let mut pairs = 0;
    'pairs: for (alpha, s_alpha) in &admissible {
        if violations.len() >= MAX_VIOLATIONS || pairs >= cfg.pair_samples {
            break;
        }
        if !s_alpha.all && s_alpha.len() < 2 {
            continue;
        }
        for beta in alternative_routes(first, alpha, cfg) {
            if pairs >= cfg.pair_samples {
                break 'pairs;
            }
            if first.slice_units(&beta, cfg).is_empty() {
                continue;
            }
            pairs += 1;
            let common = s_alpha.intersect(&second.slice_units(&beta, cfg));
            if !common.all && common.units.len() == 1 {
                violations.push(Witness::Pair { alpha: alpha.clone(), beta, unit: common.units[0] });
                break;
            }
        }
    }
    let verdict = if violations.is_empty() { Verdict::NoViolationFound } else { Verdict::Violated };
    DomainCheckReport { property, verdict, witnesses: violations, samples_used: samples + pairs, unresolved }
}

/// Both checks above with `second = first`.
pub fn check_self_stem_preserving(domain: &SliceDomain, cfg: &SamplingConfig) -> DomainCheckReport {
    let connected = check_real_path_connected(domain, cfg);
    let preserving = check_stem_preserving(domain, domain, cfg);
    let verdict = if connected.verdict == Verdict::Violated || preserving.verdict == Verdict::Violated {
        Verdict::Violated
    } else {
        Verdict::NoViolationFound
    };
    let mut witnesses = Vec::new();
    if connected.verdict == Verdict::Violated {
        witnesses.extend(connected.witnesses);
    }
    witnesses.extend(preserving.witnesses);
    DomainCheckReport {
        property: "self_stem_preserving".to_string(),
        verdict,
        witnesses,
        samples_used: connected.samples_used + preserving.samples_used,
        unresolved: connected.unresolved + preserving.unresolved,
    }
}
