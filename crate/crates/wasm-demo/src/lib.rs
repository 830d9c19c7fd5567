//! WebAssembly bindings for the browser demo in `www/`. Every export takes the
//! text of an input file and returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use zeeman::complexes::alexander_dual;
use zeeman::degrees;
use zeeman::eagon_reiner::{betti_hochster, is_linear_table};
use zeeman::input::{self, Input};
use zeeman::linalg::Field;
use zeeman::local_cohomology::{cm_from_table, LocalCohomologyTable};
use zeeman::resolutions::{is_linear, minimal_linear_resolution, verify_exactness, FaceModule, ResolutionError};
use zeeman::zeeman::{build, concentration_check, page, Page, SSPage};

fn setup(text: &str, field: &str) -> Result<(Input, Field), String> {
    let field: Field = field.parse().map_err(|e: zeeman::linalg::LinalgError| e.to_string())?;
    let inp = input::parse(text).map_err(|e| e.to_string())?;
    Ok((inp, field))
}

fn finish(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

pub fn cm(text: &str, field: &str) -> Result<Value, String> {
    let (inp, f) = setup(text, field)?;
    let fc = &inp.complex;
    let table = LocalCohomologyTable::compute(fc, f).map_err(|e| e.to_string())?;
    let v = cm_from_table(fc, &table);
    let rows: Vec<Value> = table
        .entries
        .iter()
        .map(|lc| {
            let dims: Vec<usize> = (0..=v.dim).map(|p| lc.dim(p)).collect();
            json!({ "face": fc.face(lc.face).label, "dims": dims })
        })
        .collect();
    Ok(json!({
        "field": f.to_string(),
        "faces": fc.len(),
        "dim": v.dim,
        "cohen_macaulay": v.cohen_macaulay,
        "witness": v.witness,
        "local_cohomology": rows,
    }))
}

fn grid(p: &SSPage) -> Value {
    let entries: Vec<Value> = p.dims.iter().map(|(&(pp, q), &d)| json!({ "p": pp, "q": q, "dim": d })).collect();
    json!(entries)
}

pub fn spectral_page(text: &str, field: &str, which: &str, degree: &str) -> Result<Value, String> {
    let (inp, f) = setup(text, field)?;
    let fc = &inp.complex;
    let r: Page = which.parse().map_err(|e: zeeman::zeeman::ZeemanError| e.to_string())?;
    let a = if degree.trim().is_empty() || degree.trim() == "0" {
        degrees::zero_degree(fc.ambient_dim())
    } else {
        degree
            .split(',')
            .map(|w| w.trim().parse().map_err(|_| format!("`{w}` is not an integer")))
            .collect::<Result<Vec<_>, _>>()?
    };
    let z = build(fc, &a, f, inp.semigroup()).map_err(|e| e.to_string())?;
    let shown = page(&z, fc, r).map_err(|e| e.to_string())?;
    let concentration = if degrees::is_zero(&a) {
        let e1 = page(&z, fc, Page::One).map_err(|e| e.to_string())?;
        json!(concentration_check(&e1, fc.dim()))
    } else {
        Value::Null
    };
    Ok(json!({
        "page": r.to_string(),
        "degree": degrees::format_degree(&a),
        "entries": grid(&shown),
        "euler": shown.euler(),
        "identities": z.identities(),
        "concentration": concentration,
    }))
}

fn module(t: &FaceModule) -> Value {
    json!(t.summands.iter().map(|s| json!({ "face": s.label, "dim": s.dim, "multiplicity": s.multiplicity })).collect::<Vec<_>>())
}

pub fn resolution(text: &str, field: &str) -> Result<Value, String> {
    let (inp, f) = setup(text, field)?;
    let fc = &inp.complex;
    let betti = inp.simplicial.as_ref().map(|sc| {
        let bt = betti_hochster(&alexander_dual(sc), f);
        json!({ "table": bt.to_string(), "linear": is_linear_table(&bt) })
    });
    match minimal_linear_resolution(fc, f) {
        Ok(res) => {
            let ex = verify_exactness(&res, fc, inp.semigroup()).map_err(|e| e.to_string())?;
            let maps: Vec<Vec<Vec<String>>> = res
                .maps
                .iter()
                .map(|m| (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect())
                .collect();
            Ok(json!({
                "terms": res.terms.iter().map(module).collect::<Vec<_>>(),
                "maps": maps,
                "exact": ex.exact,
                "degrees_checked": ex.degrees_checked,
                "linear": is_linear(&res, fc),
                "betti": betti,
            }))
        }
        Err(ResolutionError::NotCohenMacaulay(w)) => Ok(json!({ "refused": w, "betti": betti })),
        Err(e) => Err(e.to_string()),
    }
}

/// Local cohomology table and Cohen–Macaulay verdict.
#[wasm_bindgen]
pub fn cm_report(text: &str, field: &str) -> String {
    finish(cm(text, field))
}

/// One page (`0`, `1`, `2` or `inf`) of the Zeeman spectral sequence in a degree (`0` for ordinary).
#[wasm_bindgen]
pub fn zeeman_page(text: &str, field: &str, which: &str, degree: &str) -> String {
    finish(spectral_page(text, field, which, degree))
}

/// Minimal linear irreducible resolution, with the Betti table of the dual ideal for simplicial input.
#[wasm_bindgen]
pub fn resolution_report(text: &str, field: &str) -> String {
    finish(resolution(text, field))
}
