//! Line-oriented input files. Blank lines and `#` comments are ignored; the
//! first remaining line names the format.
//!
//! ```text
//! simplicial            polyhedral                  semigroup
//! vertices 3            ambient 2                   dim 3
//! facet 1 2             face 0 0 apex               functional 1 0 0
//! facet 1 3             face r 1                    functional 0 1 0
//! facet 2 3             cover 0 r +                 face 1
//! ```
//!
//! A bare `facet` line is the empty face. Semigroup `face` lines list the
//! 1-based functionals vanishing on a generating face; without any, Δ is the
//! whole cone. All integers are arbitrary precision.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::complexes::{cone_of_simplicial, Cover, Face, FaceComplex, FaceGeometry, SimplicialComplex};
use crate::semigroup::{cone_subcomplex, face_lattice, AffineSemigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{}{message}", .line.map(|l| format!("line {l}: ")).unwrap_or_default())]
pub struct ParseError {
    /// 1-based line number, when the problem sits on one line.
    pub line: Option<usize>,
    pub message: String,
}

fn at(line: usize, message: impl fmt::Display) -> ParseError {
    ParseError { line: Some(line), message: message.to_string() }
}

fn whole(message: impl fmt::Display) -> ParseError {
    ParseError { line: None, message: message.to_string() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Simplicial,
    Polyhedral,
    Semigroup,
}

/// A parsed input: the face complex, plus whatever geometry came with it.
#[derive(Clone, Debug)]
pub struct Input {
    pub kind: InputKind,
    pub complex: FaceComplex,
    pub simplicial: Option<SimplicialComplex>,
    pub semigroup: Option<AffineSemigroup>,
}

impl Input {
    pub fn semigroup(&self) -> Option<&AffineSemigroup> {
        self.semigroup.as_ref()
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T, ParseError> {
    word.parse().map_err(|_| at(line, format!("expected {what}, found `{word}`")))
}

pub fn parse(text: &str) -> Result<Input, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| whole("empty input"))?;
    if header.len() != 1 {
        return Err(at(line, "the first line must be `simplicial`, `polyhedral` or `semigroup`"));
    }
    let rest: Vec<(usize, Vec<&str>)> = lines.collect();
    match header[0] {
        "simplicial" => parse_simplicial(line, &rest),
        "polyhedral" => parse_polyhedral(line, &rest),
        "semigroup" => parse_semigroup(line, &rest),
        other => Err(at(line, format!("unknown format `{other}`"))),
    }
}

fn size_line(header: usize, rest: &[(usize, Vec<&str>)], keyword: &str) -> Result<usize, ParseError> {
    match rest.first() {
        Some((line, words)) if words[0] == keyword => {
            if words.len() != 2 {
                return Err(at(*line, format!("`{keyword}` takes one number")));
            }
            number(*line, words[1], "a nonnegative integer")
        }
        Some((line, _)) => Err(at(*line, format!("expected `{keyword} <n>`"))),
        None => Err(at(header, format!("missing `{keyword}` line"))),
    }
}

fn parse_simplicial(header: usize, rest: &[(usize, Vec<&str>)]) -> Result<Input, ParseError> {
    let d = size_line(header, rest, "vertices")?;
    let mut facets = Vec::new();
    for (line, words) in &rest[1..] {
        if words[0] != "facet" {
            return Err(at(*line, format!("expected `facet`, found `{}`", words[0])));
        }
        let mut f = Vec::with_capacity(words.len() - 1);
        for w in &words[1..] {
            let v: usize = number(*line, w, "a vertex index")?;
            if v == 0 || v > d {
                return Err(at(*line, format!("vertex {v} outside 1..={d}")));
            }
            if f.contains(&v) {
                return Err(at(*line, format!("vertex {v} repeated")));
            }
            f.push(v);
        }
        facets.push((*line, f));
    }
    if facets.is_empty() {
        return Err(at(header, "no facets: the void complex is not a valid input"));
    }
    let sc = SimplicialComplex::new(d, facets.iter().map(|(_, f)| f.clone()).collect()).map_err(|e| {
        let mut sorted: Vec<(usize, Vec<usize>)> = facets.clone();
        for (_, f) in &mut sorted {
            f.sort_unstable();
        }
        // point at the second copy of a repeated facet
        let dup = sorted.iter().enumerate().find(|(i, (_, f))| sorted[..*i].iter().any(|(_, g)| g == f));
        match dup {
            Some((_, (line, _))) => at(*line, &e),
            None => whole(&e),
        }
    })?;
    let complex = cone_of_simplicial(&sc).map_err(whole)?;
    Ok(Input { kind: InputKind::Simplicial, complex, simplicial: Some(sc), semigroup: None })
}

fn parse_polyhedral(header: usize, rest: &[(usize, Vec<&str>)]) -> Result<Input, ParseError> {
    let d = size_line(header, rest, "ambient")?;
    let mut faces = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut covers = Vec::new();
    for (line, words) in &rest[1..] {
        match words[0] {
            "face" => {
                if !(3..=4).contains(&words.len()) {
                    return Err(at(*line, "expected `face <id> <dim> [label]`"));
                }
                let dim: usize = number(*line, words[2], "a face dimension")?;
                if ids.insert(words[1].to_string(), faces.len()).is_some() {
                    return Err(at(*line, format!("face id `{}` used twice", words[1])));
                }
                let label = words.get(3).unwrap_or(&words[1]).to_string();
                faces.push(Face { dim, label, geometry: FaceGeometry::Abstract });
            }
            "cover" => {
                if words.len() != 4 {
                    return Err(at(*line, "expected `cover <lower> <upper> +|-`"));
                }
                let lookup = |w: &str| ids.get(w).copied().ok_or_else(|| at(*line, format!("unknown face id `{w}`")));
                let sign = match words[3] {
                    "+" | "+1" | "1" => 1,
                    "-" | "-1" => -1,
                    other => return Err(at(*line, format!("cover sign must be + or -, found `{other}`"))),
                };
                covers.push(Cover { lower: lookup(words[1])?, upper: lookup(words[2])?, sign });
            }
            other => return Err(at(*line, format!("expected `face` or `cover`, found `{other}`"))),
        }
    }
    if faces.is_empty() {
        return Err(at(header, "no faces"));
    }
    let complex = FaceComplex::new(d, faces, covers).map_err(whole)?;
    Ok(Input { kind: InputKind::Polyhedral, complex, simplicial: None, semigroup: None })
}

fn parse_semigroup(header: usize, rest: &[(usize, Vec<&str>)]) -> Result<Input, ParseError> {
    let d = size_line(header, rest, "dim")?;
    let mut functionals = Vec::new();
    let mut generators: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut last_functional = header;
    for (line, words) in &rest[1..] {
        match words[0] {
            "functional" => {
                if !generators.is_empty() {
                    return Err(at(*line, "functionals must come before faces"));
                }
                if words.len() - 1 != d {
                    return Err(at(*line, format!("functional has {} entries, expected {d}", words.len() - 1)));
                }
                let row = words[1..]
                    .iter()
                    .map(|w| number::<BigInt>(*line, w, "an integer"))
                    .collect::<Result<Vec<_>, _>>()?;
                functionals.push(row);
                last_functional = *line;
            }
            "face" => {
                let mut v = Vec::new();
                for w in &words[1..] {
                    let i: usize = number(*line, w, "a functional index")?;
                    if i == 0 || i > functionals.len() {
                        return Err(at(*line, format!("functional index {i} outside 1..={}", functionals.len())));
                    }
                    v.push(i);
                }
                v.sort_unstable();
                v.dedup();
                generators.push((*line, v));
            }
            other => return Err(at(*line, format!("expected `functional` or `face`, found `{other}`"))),
        }
    }
    let q = AffineSemigroup::new(d, functionals).map_err(|e| at(last_functional, e))?;
    for (line, v) in &generators {
        if q.face_by_vanishing(v).is_none() {
            return Err(at(*line, format!("functionals {v:?} do not cut out a face of the cone")));
        }
    }
    let complex = if generators.is_empty() {
        face_lattice(&q).map_err(whole)?
    } else {
        let gens: Vec<Vec<usize>> = generators.into_iter().map(|(_, v)| v).collect();
        cone_subcomplex(&q, &gens).map_err(whole)?
    };
    Ok(Input { kind: InputKind::Semigroup, complex, simplicial: None, semigroup: Some(q) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::validate;

    #[test]
    fn simplicial_file() {
        let inp = parse("# hollow triangle\nsimplicial\nvertices 3\nfacet 1 2\nfacet 1 3 # edge\nfacet 2 3\n").unwrap();
        assert_eq!(inp.kind, InputKind::Simplicial);
        assert_eq!(inp.complex.len(), 7);
        let empty = parse("simplicial\nvertices 2\nfacet\n").unwrap();
        assert_eq!(empty.complex.len(), 1);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse("simplicial\nvertices 3\nfacet 1 4\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = parse("simplicial\nvertices 3\nfacet 1 2\nfacet 2 1\n").unwrap_err();
        assert_eq!(e.line, Some(4));
        let e = parse("simplicial\nvertices x\n").unwrap_err();
        assert_eq!(e.to_string(), "line 2: expected a nonnegative integer, found `x`");
        assert!(parse("").is_err());
        assert_eq!(parse("cubical\n").unwrap_err().line, Some(1));
        let e = parse("polyhedral\nambient 1\nface 0 0\ncover 0 r +\n").unwrap_err();
        assert_eq!(e.line, Some(4));
    }

    #[test]
    fn polyhedral_segment() {
        let text = "polyhedral\nambient 1\nface 0 0 apex\nface r 1 ray\ncover 0 r +\n";
        let inp = parse(text).unwrap();
        assert!(validate(&inp.complex).is_valid());
        assert_eq!(inp.complex.face(1).label, "ray");
    }

    #[test]
    fn semigroup_square_cone() {
        let base = "semigroup\ndim 3\nfunctional 1 0 0\nfunctional 0 1 0\nfunctional -1 0 1\nfunctional 0 -1 1\n";
        assert_eq!(parse(base).unwrap().complex.len(), 10);
        let two = parse(&format!("{base}face 1\nface 2\n")).unwrap();
        assert_eq!(two.complex.len(), 6);
        assert_eq!(two.complex.dim(), 2);
        let bad = parse(&format!("{base}face 1 3\n")).unwrap_err();
        assert_eq!(bad.line, Some(7));
    }
}
