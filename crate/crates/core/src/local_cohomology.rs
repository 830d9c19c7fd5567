//! Cochain complexes of upper sets, local cohomology `H^p_G(Δ)`, the
//! restriction maps between neighbouring faces, and the Cohen–Macaulay test.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::complexes::{self, ComplexError, FaceComplex, FaceId, UpperSet};
use crate::linalg::{self, Field, LinalgError, Mat, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{lower} is not a facet of {upper}")]
    NotACover { lower: String, upper: String },
}

/// A bounded cochain complex of finite-dimensional vector spaces.
/// `maps[t]` goes from degree `lo + t` to `lo + t + 1` (rows = target dimension).
#[derive(Clone, Debug)]
pub struct VSComplex {
    pub field: Field,
    pub lo: i64,
    pub labels: Vec<Vec<String>>,
    pub maps: Vec<Mat>,
}

impl VSComplex {
    pub fn hi(&self) -> i64 {
        self.lo + self.labels.len() as i64 - 1
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.index(degree).map(|t| self.labels[t].len()).unwrap_or(0)
    }

    fn index(&self, degree: i64) -> Option<usize> {
        let t = degree - self.lo;
        (t >= 0 && (t as usize) < self.labels.len()).then_some(t as usize)
    }

    /// All consecutive compositions vanish.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }
}

/// Cohomology dimensions with chosen representative cocycles.
#[derive(Clone, Debug)]
pub struct CohomologySummary {
    pub field: Field,
    pub lo: i64,
    pub dims: Vec<usize>,
    pub representatives: Vec<Vec<Vector>>,
    /// Basis of the coboundaries in each degree.
    pub coboundaries: Vec<Vec<Vector>>,
    term_dims: Vec<usize>,
}

impl CohomologySummary {
    pub fn dim(&self, degree: i64) -> usize {
        self.index(degree).map(|t| self.dims[t]).unwrap_or(0)
    }

    pub fn reps(&self, degree: i64) -> &[Vector] {
        self.index(degree).map(|t| self.representatives[t].as_slice()).unwrap_or(&[])
    }

    fn index(&self, degree: i64) -> Option<usize> {
        let t = degree - self.lo;
        (t >= 0 && (t as usize) < self.dims.len()).then_some(t as usize)
    }

    /// Coordinates of the class of `cocycle` in the representative basis, or
    /// `None` if it is not a combination of representatives and coboundaries.
    pub fn class_of(&self, degree: i64, cocycle: &[linalg::Scalar]) -> Result<Option<Vector>, LinalgError> {
        let Some(t) = self.index(degree) else {
            return Ok(if linalg::is_zero_vec(cocycle) { Some(Vec::new()) } else { None });
        };
        if cocycle.len() != self.term_dims[t] {
            return Err(LinalgError::Shape(format!(
                "cocycle of length {} in degree {degree} of dimension {}",
                cocycle.len(),
                self.term_dims[t]
            )));
        }
        let reps = &self.representatives[t];
        let mut gens = reps.clone();
        gens.extend(self.coboundaries[t].iter().cloned());
        Ok(linalg::solve_in_subspace(cocycle, &gens, self.field)?.map(|mut c| {
            c.truncate(reps.len());
            c
        }))
    }

    /// Euler characteristic Σ (−1)^p dim H^p.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(t, &d)| if (self.lo + t as i64).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// ker/im in each degree, with representatives taken as the first kernel basis
/// vectors (in echelon order) that are independent modulo the image.
pub fn cohomology(c: &VSComplex) -> Result<CohomologySummary, LinalgError> {
    let f = c.field;
    let n = c.labels.len();
    let term_dims: Vec<usize> = c.labels.iter().map(Vec::len).collect();
    let mut dims = Vec::with_capacity(n);
    let mut reps = Vec::with_capacity(n);
    let mut cobs = Vec::with_capacity(n);
    for t in 0..n {
        let dim = term_dims[t];
        let cycles: Vec<Vector> = if t < c.maps.len() && c.maps[t].rows() > 0 {
            linalg::kernel_basis(&c.maps[t], f)?
        } else {
            standard_basis(f, dim)
        };
        let boundaries = if t > 0 && c.maps[t - 1].cols() > 0 {
            linalg::image_basis(&c.maps[t - 1], f)?
        } else {
            Vec::new()
        };
        let chosen = linalg::complement_indices(&boundaries, &cycles, dim, f);
        dims.push(chosen.len());
        reps.push(chosen.into_iter().map(|i| cycles[i].clone()).collect());
        cobs.push(boundaries);
    }
    Ok(CohomologySummary { field: f, lo: c.lo, dims, representatives: reps, coboundaries: cobs, term_dims })
}

fn standard_basis(f: Field, dim: usize) -> Vec<Vector> {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect()
}

/// `C^•(Δ_G)`: degree p has basis the p-dimensional faces containing G, and the
/// coboundary sends F to Σ ε(F, F′) F′ over the faces F′ covering F.
pub fn cochain_complex(fc: &FaceComplex, g: FaceId, f: Field) -> Result<(VSComplex, UpperSet), ComplexError> {
    let upper = complexes::upper_set(fc, g)?;
    let lo = fc.face(g).dim;
    let hi = upper.by_degree.keys().next_back().copied().unwrap_or(lo);
    let labels: Vec<Vec<String>> = (lo..=hi)
        .map(|p| upper.degree(p).iter().map(|&x| fc.face(x).label.clone()).collect())
        .collect();
    let maps = (lo..hi)
        .map(|p| {
            let (src, tgt) = (upper.degree(p), upper.degree(p + 1));
            let row: HashMap<FaceId, usize> = tgt.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let mut m = Mat::zeros(f, tgt.len(), src.len());
            for (j, &face) in src.iter().enumerate() {
                for &(up, sign) in fc.up_covers(face) {
                    if let Some(&i) = row.get(&up) {
                        m.set(i, j, f.from_i64(sign as i64));
                    }
                }
            }
            m
        })
        .collect();
    Ok((VSComplex { field: f, lo: lo as i64, labels, maps }, upper))
}

/// Local cohomology of Δ near one face, with the cochain complex it came from.
#[derive(Clone, Debug)]
pub struct LocalCohomology {
    pub face: FaceId,
    pub complex: VSComplex,
    pub upper: UpperSet,
    pub summary: CohomologySummary,
}

impl LocalCohomology {
    pub fn dim(&self, p: usize) -> usize {
        self.summary.dim(p as i64)
    }
}

pub fn local_cohomology(fc: &FaceComplex, g: FaceId, f: Field) -> Result<LocalCohomology, CohomologyError> {
    let (complex, upper) = cochain_complex(fc, g, f)?;
    let summary = cohomology(&complex)?;
    Ok(LocalCohomology { face: g, complex, upper, summary })
}

/// Local cohomology at every face, computed once.
#[derive(Clone, Debug)]
pub struct LocalCohomologyTable {
    pub field: Field,
    pub entries: Vec<LocalCohomology>,
}

impl LocalCohomologyTable {
    pub fn compute(fc: &FaceComplex, f: Field) -> Result<Self, CohomologyError> {
        let ids: Vec<FaceId> = fc.ids().collect();
        #[cfg(feature = "parallel")]
        let entries = {
            use rayon::prelude::*;
            ids.par_iter().map(|&g| local_cohomology(fc, g, f)).collect::<Result<Vec<_>, _>>()?
        };
        #[cfg(not(feature = "parallel"))]
        let entries = ids.iter().map(|&g| local_cohomology(fc, g, f)).collect::<Result<Vec<_>, _>>()?;
        Ok(LocalCohomologyTable { field: f, entries })
    }

    pub fn get(&self, g: FaceId) -> &LocalCohomology {
        &self.entries[g]
    }

    /// Matrix of `ε(G′, G) · (H^p_G → H^p_{G′})` in the representative bases.
    pub fn restriction(&self, fc: &FaceComplex, g: FaceId, g_prime: FaceId, p: usize) -> Result<Mat, CohomologyError> {
        restrict(fc, self.get(g), self.get(g_prime), p, self.field)
    }
}

fn restrict(
    fc: &FaceComplex,
    src: &LocalCohomology,
    tgt: &LocalCohomology,
    p: usize,
    f: Field,
) -> Result<Mat, CohomologyError> {
    let sign = fc.sign(tgt.face, src.face).ok_or_else(|| CohomologyError::NotACover {
        lower: fc.face(tgt.face).label.clone(),
        upper: fc.face(src.face).label.clone(),
    })?;
    let src_reps = src.summary.reps(p as i64);
    let tgt_dim = tgt.summary.dim(p as i64);
    let mut m = Mat::zeros(f, tgt_dim, src_reps.len());
    if src_reps.is_empty() || tgt_dim == 0 {
        return Ok(m);
    }
    let src_faces = src.upper.degree(p);
    let tgt_pos: HashMap<FaceId, usize> =
        tgt.upper.degree(p).iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let eps = f.from_i64(sign as i64);
    for (j, rep) in src_reps.iter().enumerate() {
        let mut lifted = vec![f.zero(); tgt_pos.len()];
        for (k, &face) in src_faces.iter().enumerate() {
            lifted[tgt_pos[&face]] = rep[k].clone();
        }
        let coords = tgt
            .summary
            .class_of(p as i64, &lifted)?
            .expect("a cocycle of the smaller upper set stays a cocycle");
        for (i, c) in coords.iter().enumerate() {
            m.set(i, j, f.mul(c, &eps));
        }
    }
    Ok(m)
}

/// `ε(G′, G) · (H^p_G(Δ) → H^p_{G′}(Δ))` for a facet `G′` of `G`.
pub fn restriction_map(fc: &FaceComplex, g: FaceId, g_prime: FaceId, f: Field, p: usize) -> Result<Mat, CohomologyError> {
    fc.check_id(g)?;
    fc.check_id(g_prime)?;
    if fc.sign(g_prime, g).is_none() {
        return Err(CohomologyError::NotACover {
            lower: fc.face(g_prime).label.clone(),
            upper: fc.face(g).label.clone(),
        });
    }
    let src = local_cohomology(fc, g, f)?;
    let tgt = local_cohomology(fc, g_prime, f)?;
    restrict(fc, &src, &tgt, p, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    pub face: FaceId,
    pub label: String,
    pub degree: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    pub dim: usize,
    pub witness: Option<CmWitness>,
}

/// Δ is Cohen–Macaulay over `f` when `H^i_G(Δ) = 0` for every face G and every
/// `i < dim Δ`. The first violation in (face, degree) order is the witness.
pub fn is_cohen_macaulay(fc: &FaceComplex, f: Field) -> Result<CmVerdict, CohomologyError> {
    let table = LocalCohomologyTable::compute(fc, f)?;
    Ok(cm_from_table(fc, &table))
}

pub fn cm_from_table(fc: &FaceComplex, table: &LocalCohomologyTable) -> CmVerdict {
    let n = fc.dim();
    for lc in &table.entries {
        for p in 0..n {
            let d = lc.dim(p);
            if d > 0 {
                let witness =
                    CmWitness { face: lc.face, label: fc.face(lc.face).label.clone(), degree: p, dim: d };
                return CmVerdict { cohen_macaulay: false, dim: n, witness: Some(witness) };
            }
        }
    }
    CmVerdict { cohen_macaulay: true, dim: n, witness: None }
}
