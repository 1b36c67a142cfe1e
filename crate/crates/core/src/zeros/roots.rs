use num_complex::Complex64;

use crate::error::{Error, Result};

/// Sweep limit of the simultaneous iteration.
pub const MAX_SWEEPS: usize = 200;

/// Roots closer than this (relative to `max(1, max |root|)`) are merged.
pub const CLUSTER_RADIUS: f64 = 1e-6;

/// Groups closer than this (relative) are tested for forming one multiple root.
pub const MERGE_RADIUS: f64 = 1e-3;

/// Relative residual accepted for a polished root.
pub const ROOT_RESIDUAL: f64 = 1e-10;

fn horner(p: &[f64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn derivative(p: &[f64]) -> Vec<f64> {
    p.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect()
}

/// `sum |a_k| |z|^k`.
fn magnitude(p: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    p.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs())
}

/// Aberth–Ehrlich approximations of all roots of `p` (ascending
/// coefficients, non-zero constant and leading terms).
fn aberth(p: &[f64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    let dp = derivative(p);
    let lead = p[n];
    let rho = (0..n).map(|k| (p[k] / lead).abs().powf(1.0 / (n - k) as f64)).fold(0.0, f64::max).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(rho, std::f64::consts::TAU * k as f64 / n as f64 + 0.7))
        .collect();
    for _ in 0..MAX_SWEEPS {
        let mut moved = 0.0f64;
        for i in 0..n {
            let pv = horner(p, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / horner(&dp, z[i]);
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * repulsion);
            if w.re.is_finite() && w.im.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    z
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Newton iteration on `p^(m-1)`, keeping the best iterate.
fn polish(p: &[f64], z0: Complex64, m: usize) -> Complex64 {
    let mut q = p.to_vec();
    for _ in 1..m {
        q = derivative(&q);
    }
    let dq = derivative(&q);
    let mut z = z0;
    let mut best = (horner(&q, z).norm(), z);
    for _ in 0..50 {
        let d = horner(&dq, z);
        if d.norm() == 0.0 {
            break;
        }
        z -= horner(&q, z) / d;
        let r = horner(&q, z).norm();
        if !(r < best.0) {
            if r.is_finite() && r == best.0 {
                best.1 = z;
            }
            break;
        }
        best = (r, z);
        if r == 0.0 {
            break;
        }
    }
    best.1
}

/// Whether `p` and its first `m - 1` derivatives vanish at `z` within the
/// root residual.
fn is_multiple_root(p: &[f64], z: Complex64, m: usize) -> bool {
    let mut d = p.to_vec();
    for _ in 0..m {
        if horner(&d, z).norm() > ROOT_RESIDUAL * magnitude(&d, z) {
            return false;
        }
        d = derivative(&d);
    }
    true
}

/// Merges nearby groups that together form one multiple root; the spread
/// of a computed `m`-fold root grows like the `m`-th root of the rounding
/// error, which escapes the fixed clustering radius.
///
/// Each group is tried with its nearest neighbours, largest set first; a set
/// is merged when the polished point is a root of the combined multiplicity
/// and every other group is more than twice as far from it as the members.
fn merge_multiple(p: &[f64], groups: &mut Vec<(Complex64, usize)>) {
    'restart: loop {
        for g in 0..groups.len() {
            let centre = groups[g].0;
            let reach = MERGE_RADIUS * centre.norm().max(1.0);
            let mut near: Vec<(f64, usize)> = (0..groups.len())
                .filter(|&h| h != g)
                .map(|h| ((groups[h].0 - centre).norm(), h))
                .filter(|(d, _)| *d < reach)
                .collect();
            near.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            for k in (1..=near.len()).rev() {
                let mut members: Vec<usize> = near[..k].iter().map(|&(_, h)| h).collect();
                members.push(g);
                let m: usize = members.iter().map(|&h| groups[h].1).sum();
                let mean = members.iter().map(|&h| groups[h].0 * groups[h].1 as f64).sum::<Complex64>() / m as f64;
                let c = polish(p, mean, m);
                let spread = members.iter().map(|&h| (groups[h].0 - c).norm()).fold(0.0, f64::max);
                let gap = (0..groups.len())
                    .filter(|h| !members.contains(h))
                    .map(|h| (groups[h].0 - c).norm())
                    .fold(f64::INFINITY, f64::min);
                if 2.0 * spread < gap && is_multiple_root(p, c, m) {
                    members.sort_unstable();
                    for &h in members.iter().rev() {
                        groups.remove(h);
                    }
                    groups.push((c, m));
                    continue 'restart;
                }
            }
        }
        return;
    }
}

/// All roots of a real polynomial with multiplicities, conjugate pairs exact.
///
/// Coefficients are ascending. Iterates are clustered when closer than
/// `1e-6 max(1, max |root|)`; nearby clusters are merged when they form a
/// multiple root, and each cluster is polished by Newton's method on the
/// derivative of order `multiplicity - 1`.
pub fn complex_roots(p: &[f64]) -> Result<Vec<(Complex64, usize)>> {
    let Some(deg) = p.iter().rposition(|&c| c != 0.0) else {
        return Err(Error::IdenticallyZero);
    };
    if deg == 0 {
        return Err(Error::InvalidInput("constant polynomial has no roots".into()));
    }
    if p.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidInput("non-finite coefficient".into()));
    }
    let p = &p[..=deg];
    let zero_mult = p.iter().take_while(|&&c| c == 0.0).count();
    let q = &p[zero_mult..];
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    if zero_mult > 0 {
        out.push((Complex64::new(0.0, 0.0), zero_mult));
    }
    let n = q.len() - 1;
    if n > 0 {
        let z = aberth(q);
        let scale = z.iter().map(|c| c.norm()).fold(1.0, f64::max);
        let radius = CLUSTER_RADIUS * scale;
        let mut parent: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for j in i + 1..n {
                let d = (z[i] - z[j]).norm();
                if d < radius {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut clusters: Vec<(usize, Vec<usize>)> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            match clusters.iter_mut().find(|(root, _)| *root == r) {
                Some((_, members)) => members.push(i),
                None => clusters.push((r, vec![i])),
            }
        }
        let mut groups: Vec<(Complex64, usize)> = clusters
            .iter()
            .map(|(_, members)| (members.iter().map(|&i| z[i]).sum::<Complex64>() / members.len() as f64, members.len()))
            .collect();
        merge_multiple(q, &mut groups);
        let mut real = Vec::new();
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for (mean, m) in groups {
            if mean.im.abs() <= radius {
                let x = polish(q, Complex64::new(mean.re, 0.0), m);
                real.push((Complex64::new(x.re, 0.0), m));
            } else if mean.im > 0.0 {
                upper.push((polish(q, mean, m), m));
            } else {
                lower.push((polish(q, mean.conj(), m), m));
            }
        }
        let real_total: usize = real.iter().map(|r| r.1).sum();
        let paired = |side: &[(Complex64, usize)]| real_total + 2 * side.iter().map(|r| r.1).sum::<usize>() == n;
        let side = if paired(&upper) {
            upper
        } else if paired(&lower) {
            lower
        } else {
            return Err(Error::NoConvergence(format!(
                "roots of a degree {n} polynomial are not closed under conjugation"
            )));
        };
        out.extend(real);
        for (c, m) in side {
            let c = if c.im < 0.0 { c.conj() } else { c };
            out.push((c, m));
            out.push((c.conj(), m));
        }
        for (c, _) in &out {
            if horner(p, *c).norm() > ROOT_RESIDUAL * magnitude(p, *c) {
                return Err(Error::NoConvergence(format!("residual {:e} at {c}", horner(p, *c).norm())));
            }
        }
    }
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(out)
}

/// Value of a real polynomial at a complex point.
pub fn eval_real_poly(p: &[f64], z: Complex64) -> Complex64 {
    horner(p, z)
}
