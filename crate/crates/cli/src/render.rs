use std::fmt::Write;

use zeeman::linalg::Mat;
use zeeman::resolutions::{FaceModule, FaceModuleComplex};
use zeeman::zeeman::SSPage;

pub fn face_module(t: &FaceModule) -> String {
    if t.summands.is_empty() {
        return "0".into();
    }
    t.summands
        .iter()
        .map(|s| match s.multiplicity {
            1 => format!("k[{}]", s.label),
            m => format!("k[{}]^{m}", s.label),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn matrix(m: &Mat, indent: &str) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("{indent}({}x{} zero map)\n", m.rows(), m.cols());
    }
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "{indent}[ {} ]", line.join(" ")).unwrap();
    }
    out
}

pub fn resolution(c: &FaceModuleComplex) -> String {
    let mut out = String::new();
    for (i, t) in c.terms.iter().enumerate() {
        writeln!(out, "W^{i} = {}", face_module(t)).unwrap();
    }
    if let Some(aug) = &c.augmentation {
        let v: Vec<String> = aug.iter().map(|x| x.to_string()).collect();
        writeln!(out, "augmentation: [ {} ]", v.join(" ")).unwrap();
    }
    for (i, m) in c.maps.iter().enumerate() {
        writeln!(out, "W^{i} -> W^{}:", i + 1).unwrap();
        out.push_str(&matrix(m, "  "));
    }
    out
}

/// Grid with a row per `-q` and a column per `p`; zero entries shown as `.`.
pub fn page_table(page: &SSPage) -> String {
    let ps: Vec<i64> = page.dims.keys().map(|&(p, _)| p).collect();
    let qs: Vec<i64> = page.dims.keys().map(|&(_, q)| q).collect();
    let (Some(&pmin), Some(&pmax)) = (ps.iter().min(), ps.iter().max()) else {
        return "(empty page)\n".into();
    };
    let (qmin, qmax) = (*qs.iter().min().unwrap(), *qs.iter().max().unwrap());
    let mut out = String::from("-q\\p");
    for p in pmin..=pmax {
        write!(out, "{p:>5}").unwrap();
    }
    out.push('\n');
    for q in (qmin..=qmax).rev() {
        write!(out, "{:>4}", -q).unwrap();
        for p in pmin..=pmax {
            match page.dim((p, q)) {
                0 => write!(out, "{:>5}", ".").unwrap(),
                d => write!(out, "{d:>5}").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
