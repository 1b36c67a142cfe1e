use super::{SphereKind, ZeroSet};
use crate::quaternion::ImaginaryUnit;

fn kind_name(kind: SphereKind) -> &'static str {
    match kind {
        SphereKind::SphericalZeroOfF => "sphere",
        SphereKind::SymmetrizationOnly => "symmetrization_only",
    }
}

fn to_string(rows: Vec<(&'static str, f64, f64, [f64; 4])>, header: [&str; 7]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for (kind, x, y, u) in rows {
        let mut record: Vec<String> = vec![x.to_string(), y.to_string()];
        record.extend(u.iter().map(f64::to_string));
        record.push(kind.to_string());
        w.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing memory")).expect("csv output is utf-8")
}

/// Plot rows `x, y, unit_w, unit_x, unit_y, unit_z, kind`: every sphere traced
/// at `units`, isolated zeros at their own unit, real zeros with a zero unit.
/// Rows are sorted by `(kind, x, y)`; ties keep the order of `units`.
pub fn emit_plot_data(zs: &ZeroSet, units: &[ImaginaryUnit]) -> String {
    let mut rows = Vec::new();
    for s in &zs.spheres {
        for u in units {
            rows.push((kind_name(s.kind), s.x, s.y, u.as_quaternion().to_array()));
        }
    }
    for z in &zs.isolated {
        let im = z.q.im_norm();
        let u = z.q.im() * (1.0 / im);
        rows.push(("isolated", z.q.w, im, u.to_array()));
    }
    for r in &zs.real_roots {
        rows.push(("real", r.value, 0.0, [0.0; 4]));
    }
    rows.sort_by(|a, b| a.0.cmp(b.0).then(a.1.total_cmp(&b.1)).then(a.2.total_cmp(&b.2)));
    to_string(rows, ["x", "y", "unit_w", "unit_x", "unit_y", "unit_z", "kind"])
}

/// One row per zero object: `kind, x, y, q_w, q_x, q_y, q_z, multiplicity`.
/// Spheres carry the point `x + y i` of the sphere.
pub fn zeroset_csv(zs: &ZeroSet) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "x", "y", "q_w", "q_x", "q_y", "q_z", "multiplicity"]).expect("writing to memory");
    let mut push = |kind: &str, x: f64, y: f64, q: [f64; 4], m: usize| {
        let mut record = vec![kind.to_string(), x.to_string(), y.to_string()];
        record.extend(q.iter().map(f64::to_string));
        record.push(m.to_string());
        w.write_record(&record).expect("writing to memory");
    };
    for r in &zs.real_roots {
        push("real", r.value, 0.0, [r.value, 0.0, 0.0, 0.0], r.multiplicity);
    }
    for z in &zs.isolated {
        push("isolated", z.sphere.0, z.sphere.1, z.q.to_array(), z.multiplicity);
    }
    for s in &zs.spheres {
        push(kind_name(s.kind), s.x, s.y, [s.x, s.y, 0.0, 0.0], s.multiplicity);
    }
    String::from_utf8(w.into_inner().expect("flushing memory")).expect("csv output is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{sphere_sample, Quaternion};
    use crate::zeros::{IsolatedZero, RealRoot, ZeroSphere};

    const HEADER: &str = "x,y,unit_w,unit_x,unit_y,unit_z,kind\n";

    #[test]
    fn empty_set_is_header_only() {
        assert_eq!(emit_plot_data(&ZeroSet::default(), &sphere_sample(4, 0)), HEADER);
    }

    #[test]
    fn sphere_rows() {
        let zs = ZeroSet {
            spheres: vec![ZeroSphere { x: 0.0, y: 1.0, multiplicity: 1, kind: SphereKind::SphericalZeroOfF }],
            ..Default::default()
        };
        let text = emit_plot_data(&zs, &sphere_sample(4, 0));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1..].iter().all(|l| l.ends_with(",sphere") && l.starts_with("0,1,")));
    }

    #[test]
    fn mixed_rows_are_sorted() {
        let zs = ZeroSet {
            real_roots: vec![RealRoot { value: 3.0, multiplicity: 1 }, RealRoot { value: -1.0, multiplicity: 1 }],
            isolated: vec![IsolatedZero { q: Quaternion::new(0.5, 0.0, 2.0, 0.0), sphere: (0.5, 2.0), multiplicity: 1 }],
            spheres: vec![
                ZeroSphere { x: 2.0, y: 1.0, multiplicity: 1, kind: SphereKind::SphericalZeroOfF },
                ZeroSphere { x: -2.0, y: 1.0, multiplicity: 1, kind: SphereKind::SymmetrizationOnly },
            ],
        };
        let text = emit_plot_data(&zs, &[ImaginaryUnit::I]);
        let kinds: Vec<String> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect();
        assert_eq!(kinds, ["isolated", "real", "real", "sphere", "symmetrization_only"]);
        assert!(text.contains("0.5,2,0,0,1,0,isolated"));
        assert!(text.lines().nth(2).unwrap().starts_with("-1,"));
        assert_eq!(text, emit_plot_data(&zs, &[ImaginaryUnit::I]));
        assert_eq!(zeroset_csv(&zs).lines().count(), 6);
    }
}
