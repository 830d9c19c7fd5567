use std::fmt::Write;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use zeeman::complexes::{alexander_dual, set_label, validate as validate_poset, FaceComplex};
use zeeman::degrees;
use zeeman::eagon_reiner::{betti_from_dual, betti_hochster, dualize, is_linear_table, verify_dual_exactness};
use zeeman::input::{self, Input};
use zeeman::local_cohomology::{cm_from_table, CmWitness, LocalCohomologyTable};
use zeeman::resolutions::{
    coarse_hilbert, hilbert_points, is_linear, minimal_linear_resolution, minimality_scan, total_resolution,
    verify_exactness, FaceModuleComplex, ResolutionError, SerialComplex,
};
use zeeman::zeeman::{build, concentration_check, page, Page};

use crate::render;
use crate::Common;

pub struct Report {
    pub verdict: bool,
    pub text: String,
    pub json: Value,
}

type Outcome = Result<Report, String>;

fn load(c: &Common) -> Result<Input, String> {
    let text = fs::read_to_string(&c.input).map_err(|e| format!("{}: {e}", c.input.display()))?;
    input::parse(&text).map_err(|e| match e.line {
        Some(line) => format!("{}:{line}: {}", c.input.display(), e.message),
        None => format!("{}: {}", c.input.display(), e.message),
    })
}

fn header(c: &Common, command: &str, verdict: bool) -> Value {
    json!({
        "command": command,
        "input": c.input.display().to_string(),
        "field": c.field,
        "verdict": verdict,
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn witness_line(w: &CmWitness) -> String {
    format!("H^{}_{} has dimension {} below the top degree", w.degree, w.label, w.dim)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn validate(c: &Common, resolution: Option<&Path>) -> Outcome {
    let inp = load(c)?;
    let fc = &inp.complex;
    let report = validate_poset(fc);
    let mut text = format!("{} faces, {} covers, dimension {}\n", fc.len(), fc.covers().len(), fc.dim());
    for s in &report.structural {
        writeln!(text, "structural: {s}").unwrap();
    }
    for d in &report.diamonds {
        writeln!(
            text,
            "incidence: interval [{}, {}] sums to {}",
            fc.face(d.lower).label,
            fc.face(d.upper).label,
            d.sum
        )
        .unwrap();
    }
    let mut verdict = report.is_valid();
    writeln!(text, "valid: {}", if verdict { "yes" } else { "no" }).unwrap();
    let diamonds: Vec<Value> = report
        .diamonds
        .iter()
        .map(|d| json!({"lower": fc.face(d.lower).label, "upper": fc.face(d.upper).label, "sum": d.sum}))
        .collect();
    let mut extra = json!({
        "faces": fc.len(),
        "covers": fc.covers().len(),
        "dim": fc.dim(),
        "structural": report.structural,
        "diamonds": diamonds,
    });
    if let Some(path) = resolution {
        let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let value: Value = serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", path.display()))?;
        let body = value.get("resolution").cloned().unwrap_or(value);
        let serial: SerialComplex = serde_json::from_value(body).map_err(|e| format!("{}: {e}", path.display()))?;
        let checked = FaceModuleComplex::from_serial(serial).and_then(|mut res| {
            res.rebind(fc)?;
            verify_exactness(&res, fc, inp.semigroup())
        });
        match checked {
            Ok(ex) => {
                verdict &= ex.exact;
                writeln!(text, "resolution exact at {} degrees: {}", ex.degrees_checked, yes_no(ex.exact)).unwrap();
                if let Some(f) = &ex.failure {
                    writeln!(text, "  fails at degree ({}): {}", degrees::format_degree(&f.degree), f.reason).unwrap();
                }
                extra = merge(extra, json!({ "resolution_exactness": ex }));
            }
            Err(e @ (ResolutionError::Degree(_) | ResolutionError::Linalg(_))) => return Err(err(e)),
            Err(e) => {
                verdict = false;
                writeln!(text, "resolution rejected: {e}").unwrap();
                extra = merge(extra, json!({ "resolution_error": e.to_string() }));
            }
        }
    }
    Ok(Report { verdict, text, json: merge(header(c, "validate", verdict), extra) })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cm_check(c: &Common) -> Outcome {
    let inp = load(c)?;
    let fc = &inp.complex;
    let table = LocalCohomologyTable::compute(fc, c.field).map_err(err)?;
    let v = cm_from_table(fc, &table);
    let mut text = format!("dimension {}\n", v.dim);
    let mut rows = Vec::new();
    for lc in &table.entries {
        let dims: Vec<(i64, usize)> = lc
            .summary
            .dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(t, &d)| (lc.summary.lo + t as i64, d))
            .collect();
        if !dims.is_empty() {
            let label = &fc.face(lc.face).label;
            let parts: Vec<String> = dims.iter().map(|(p, d)| format!("H^{p}={d}")).collect();
            writeln!(text, "  {label}: {}", parts.join(" ")).unwrap();
        }
        rows.push(json!({
            "face": fc.face(lc.face).label,
            "cohomology": dims.iter().map(|(p, d)| json!({"degree": p, "dim": d})).collect::<Vec<_>>(),
        }));
    }
    match &v.witness {
        None => writeln!(text, "Cohen-Macaulay over {}: yes", c.field).unwrap(),
        Some(w) => writeln!(text, "Cohen-Macaulay over {}: no, {}", c.field, witness_line(w)).unwrap(),
    }
    let json = merge(
        header(c, "cm-check", v.cohen_macaulay),
        json!({ "dim": v.dim, "witness": v.witness, "local_cohomology": rows }),
    );
    Ok(Report { verdict: v.cohen_macaulay, text, json })
}

fn parse_degree(s: &str, d: usize) -> Result<Vec<BigInt>, String> {
    if s.trim() == "0" {
        return Ok(degrees::zero_degree(d));
    }
    let a = s
        .split(',')
        .map(|w| w.trim().parse::<BigInt>().map_err(|_| format!("--degree: `{w}` is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if a.len() != d {
        return Err(format!("--degree has {} entries, the ambient rank is {d}", a.len()));
    }
    Ok(a)
}

/// The verdict is E¹ concentration in the top column for the ordinary
/// sequence, and the double-complex identities in a nonzero degree.
pub fn zeeman(c: &Common, degree: &str, r: Page) -> Outcome {
    let inp = load(c)?;
    let fc = &inp.complex;
    let a = parse_degree(degree, fc.ambient_dim())?;
    let z = build(fc, &a, c.field, inp.semigroup()).map_err(err)?;
    let ids = z.identities();
    let shown = page(&z, fc, r).map_err(err)?;
    let mut text = format!("degree ({}), page {r}, field {}\n", degrees::format_degree(&a), c.field);
    text.push_str(&render::page_table(&shown));
    writeln!(text, "euler characteristic: {}", shown.euler()).unwrap();
    let mut extra = json!({
        "degree": degrees::format_degree(&a),
        "page": r.to_string(),
        "entries": shown.support().iter().map(|((p, q), d)| json!({"p": p, "q": q, "dim": d})).collect::<Vec<_>>(),
        "euler": shown.euler(),
        "identities": ids,
    });
    let verdict = if degrees::is_zero(&a) {
        let e1 = if r == Page::One { shown.clone() } else { page(&z, fc, Page::One).map_err(err)? };
        let conc = concentration_check(&e1, fc.dim());
        if conc.concentrated {
            writeln!(text, "E1 concentrated in column {}: yes", conc.column).unwrap();
        } else {
            let off: Vec<String> = conc.offending.iter().map(|(p, q, d)| format!("({p},{q})={d}")).collect();
            writeln!(text, "E1 concentrated in column {}: no, nonzero at {}", conc.column, off.join(" ")).unwrap();
        }
        extra = merge(extra, json!({ "concentration": conc }));
        conc.concentrated && ids.all()
    } else {
        writeln!(text, "double complex identities: {}", yes_no(ids.all())).unwrap();
        ids.all()
    };
    Ok(Report { verdict, text, json: merge(header(c, "zeeman", verdict), extra) })
}

fn refusal(c: &Common, command: &str, w: &CmWitness) -> Report {
    Report {
        verdict: false,
        text: format!("not Cohen-Macaulay over {}: {}\n", c.field, witness_line(w)),
        json: merge(header(c, command, false), json!({ "witness": w })),
    }
}

fn resolution_report(c: &Common, command: &str, fc: &FaceComplex, inp: &Input, res: &FaceModuleComplex) -> Outcome {
    let ex = verify_exactness(res, fc, inp.semigroup()).map_err(err)?;
    let linear = is_linear(res, fc);
    let scan = minimality_scan(res);
    let mut text = render::resolution(res);
    writeln!(text, "exact at {} evaluation degrees: {}", ex.degrees_checked, yes_no(ex.exact)).unwrap();
    if let Some(f) = &ex.failure {
        writeln!(text, "  fails at degree ({}): {}", degrees::format_degree(&f.degree), f.reason).unwrap();
    }
    writeln!(text, "linear: {}", yes_no(linear)).unwrap();
    write!(text, "split pairs: {}", scan.pairs.len()).unwrap();
    if !scan.complete {
        text.push_str(" (not a complete minimality certificate for a nonlinear complex)");
    }
    text.push('\n');
    let verdict = match command {
        "irres" => ex.exact && linear,
        _ => ex.exact,
    };
    let json = merge(
        header(c, command, verdict),
        json!({
            "term_sizes": res.term_sizes(),
            "resolution": res.to_serial(),
            "exactness": ex,
            "linear": linear,
            "minimality_scan": scan,
        }),
    );
    Ok(Report { verdict, text, json })
}

pub fn irres(c: &Common) -> Outcome {
    let inp = load(c)?;
    let fc = &inp.complex;
    match minimal_linear_resolution(fc, c.field) {
        Ok(res) => resolution_report(c, "irres", fc, &inp, &res),
        Err(ResolutionError::NotCohenMacaulay(w)) => Ok(refusal(c, "irres", &w)),
        Err(e) => Err(err(e)),
    }
}

pub fn total_irres(c: &Common) -> Outcome {
    let inp = load(c)?;
    let res = total_resolution(&inp.complex, c.field).map_err(err)?;
    resolution_report(c, "total-irres", &inp.complex, &inp, &res)
}

fn simplicial_only(inp: &Input, c: &Common, command: &str) -> Result<(), String> {
    match &inp.simplicial {
        Some(_) => Ok(()),
        None => Err(format!("{}: `{command}` needs a simplicial input", c.input.display())),
    }
}

fn facets_json(sc: &zeeman::complexes::SimplicialComplex) -> Value {
    if sc.is_void() {
        json!({ "void": true, "facets": [] })
    } else {
        json!({ "void": false, "facets": sc.facets() })
    }
}

pub fn dual(c: &Common) -> Outcome {
    let inp = load(c)?;
    simplicial_only(&inp, c, "dual")?;
    let sc = inp.simplicial.as_ref().unwrap();
    let fc = &inp.complex;
    let dual = alexander_dual(sc);
    let mut text = format!("Alexander dual: {dual}\n");
    let res = match minimal_linear_resolution(fc, c.field) {
        Ok(res) => res,
        Err(ResolutionError::NotCohenMacaulay(w)) => {
            let mut r = refusal(c, "dual", &w);
            r.text = format!("{text}{}", r.text);
            r.json = merge(r.json, json!({ "alexander_dual": facets_json(&dual) }));
            return Ok(r);
        }
        Err(e) => return Err(err(e)),
    };
    let dc = dualize(&res, fc).map_err(err)?;
    let ex = verify_dual_exactness(&dc, &dual).map_err(err)?;
    let bt = betti_from_dual(&dc);
    let linear = is_linear_table(&bt);
    for (i, gens) in dc.generators.iter().enumerate() {
        let g: Vec<String> = gens.iter().map(|s| format!("S(-{})", set_label(s))).collect();
        writeln!(text, "F_{i} = {}", if g.is_empty() { "0".into() } else { g.join(" + ") }).unwrap();
    }
    for (i, m) in dc.maps.iter().enumerate() {
        writeln!(text, "F_{} -> F_{i}:", i + 1).unwrap();
        text.push_str(&render::matrix(m, "  "));
    }
    writeln!(text, "exact at {} squarefree degrees: {}", ex.degrees_checked, yes_no(ex.exact)).unwrap();
    writeln!(text, "linear: {}", yes_no(linear)).unwrap();
    let verdict = ex.exact && linear;
    let maps: Vec<Vec<Vec<String>>> = dc
        .maps
        .iter()
        .map(|m| (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect())
        .collect();
    let json = merge(
        header(c, "dual", verdict),
        json!({
            "alexander_dual": facets_json(&dual),
            "generators": dc.generators,
            "maps": maps,
            "exactness": ex,
            "betti": bt,
            "linear": linear,
        }),
    );
    Ok(Report { verdict, text, json })
}

pub fn betti(c: &Common) -> Outcome {
    let inp = load(c)?;
    simplicial_only(&inp, c, "betti")?;
    let sc = inp.simplicial.as_ref().unwrap();
    let dual = alexander_dual(sc);
    let bt = betti_hochster(&dual, c.field);
    let linear = is_linear_table(&bt);
    let mut text = format!("ideal of the Alexander dual {dual} ({:?})\n", bt.ideal);
    text.push_str(&bt.to_string());
    writeln!(text, "linear: {}", yes_no(linear)).unwrap();
    let mut extra = json!({ "alexander_dual": facets_json(&dual), "betti": bt, "linear": linear });
    if let Ok(res) = minimal_linear_resolution(&inp.complex, c.field) {
        let agrees = dualize(&res, &inp.complex).map(|dc| betti_from_dual(&dc) == bt).unwrap_or(false);
        writeln!(text, "matches the dualized irreducible resolution: {}", yes_no(agrees)).unwrap();
        extra = merge(extra, json!({ "matches_dual": agrees }));
    }
    Ok(Report { verdict: linear, text, json: merge(header(c, "betti", linear), extra) })
}

pub fn hilbert(c: &Common) -> Outcome {
    let inp = load(c)?;
    let fc = &inp.complex;
    let (res, which) = match minimal_linear_resolution(fc, c.field) {
        Ok(res) => (res, "minimal"),
        Err(ResolutionError::NotCohenMacaulay(_)) => (total_resolution(fc, c.field).map_err(err)?, "total"),
        Err(e) => return Err(err(e)),
    };
    let points = hilbert_points(&res, fc, inp.semigroup()).map_err(err)?;
    let pointwise = points.iter().all(|p| p.alternating_sum == p.quotient as i64);
    let mut text = format!("{which} resolution, terms {:?}\n", res.term_sizes());
    for p in &points {
        writeln!(
            text,
            "  a = ({}): alternating sum {}, quotient {}",
            degrees::format_degree(&p.degree),
            p.alternating_sum,
            p.quotient
        )
        .unwrap();
    }
    let mut verdict = pointwise;
    let mut extra = json!({ "resolution": which, "points": points });
    if inp.simplicial.is_some() {
        let h = coarse_hilbert(&res, fc);
        let fmt = |p: &[BigInt]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(text, "coarse numerator over (1-t)^{}:", h.denominator_exponent).unwrap();
        writeln!(text, "  resolution [{}]", fmt(&h.resolution_numerator)).unwrap();
        writeln!(text, "  face ring  [{}]", fmt(&h.face_ring_numerator)).unwrap();
        verdict &= h.holds();
        extra = merge(extra, json!({ "coarse": h, "coarse_holds": h.holds() }));
    }
    writeln!(text, "consistent: {}", yes_no(verdict)).unwrap();
    Ok(Report { verdict, text, json: merge(header(c, "hilbert", verdict), extra) })
}
