//! Alexander duality for `Q = N^d`: the minimal linear irreducible resolution
//! of `k[Δ]` turns into a linear free resolution of `I_{Δ*}`. Betti tables come
//! either from the dualized complex or from restriction-subcomplex cohomology.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::complexes::{is_subset, reduced_cohomology, FaceComplex, SimplicialComplex, VertexSet};
use crate::linalg::{self, Field, LinalgError, Mat, Vector};
use crate::resolutions::{monomial_times_one_minus_t, FaceModuleComplex, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("face {0} is not a simplex; dualization needs Q = N^d")]
    NotSimplicial(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A complex of free `k[x_1..x_d]`-modules with squarefree generators.
/// `maps[i] : F_{i+1} → F_i`; the entry `c` in block `(σ, σ′)` stands for `c·x^{σ′∖σ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFreeComplex {
    pub vertex_count: usize,
    pub field: Field,
    pub generators: Vec<Vec<VertexSet>>,
    pub maps: Vec<Mat>,
    /// Coefficient of `x^σ` in the image of each generator of `F_0` in the ideal.
    pub augmentation: Vector,
}

/// Sends `k[G]` in `W^i` to a generator of degree `[d] ∖ G` in `F_i` and
/// transposes every map.
pub fn dualize(res: &FaceModuleComplex, fc: &FaceComplex) -> Result<DualFreeComplex, DualError> {
    let d = fc.ambient_dim();
    let mut generators = Vec::with_capacity(res.terms.len());
    for t in &res.terms {
        let mut gens = Vec::new();
        for s in t.copies() {
            let v = fc.vertex_set(s.face).ok_or_else(|| DualError::NotSimplicial(s.label.clone()))?;
            gens.push((1..=d).filter(|x| !v.contains(x)).collect());
        }
        generators.push(gens);
    }
    let augmentation = res
        .augmentation
        .clone()
        .unwrap_or_else(|| vec![res.field.zero(); generators.first().map_or(0, Vec::len)]);
    Ok(DualFreeComplex {
        vertex_count: d,
        field: res.field,
        generators,
        maps: res.maps.iter().map(Mat::transpose).collect(),
        augmentation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualExactness {
    pub exact: bool,
    pub degrees_checked: usize,
    /// Squarefree degree τ and homological position of the first failure.
    pub failure: Option<(VertexSet, usize)>,
    /// Blocks `(σ, σ′)` with a nonzero entry although `σ ⊄ σ′`.
    pub support_violations: usize,
}

/// Checks `⋯ → F_1 → F_0 → I_{Δ*} → 0` in every squarefree degree τ: `S(−σ)`
/// contributes `k` iff `σ ⊆ τ`, and `(I_{Δ*})_τ = k` iff `τ ∉ Δ*`.
pub fn verify_dual_exactness(dc: &DualFreeComplex, dual: &SimplicialComplex) -> Result<DualExactness, DualError> {
    let f = dc.field;
    let d = dc.vertex_count;
    let mut support_violations = 0;
    for (i, m) in dc.maps.iter().enumerate() {
        for (r, s) in dc.generators[i].iter().enumerate() {
            for (c, sp) in dc.generators[i + 1].iter().enumerate() {
                if !m.get(r, c).is_zero() && !is_subset(s, sp) {
                    support_violations += 1;
                }
            }
        }
    }
    let mut failure = None;
    for mask in 0u64..1 << d {
        let tau: VertexSet = (1..=d).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let keep: Vec<Vec<usize>> = dc
            .generators
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, s)| is_subset(s, &tau)).map(|(i, _)| i).collect())
            .collect();
        let ideal = usize::from(!dual.contains(&tau));
        let aug: Vector = keep.first().map_or(Vec::new(), |k| k.iter().map(|&i| dc.augmentation[i].clone()).collect());
        let aug = Mat::from_scalars(f, ideal, aug.len(), &if ideal == 1 { aug } else { Vec::new() })?;
        let maps: Vec<Mat> = dc.maps.iter().enumerate().map(|(i, m)| m.select(&keep[i], &keep[i + 1])).collect();
        let ranks: Vec<usize> = maps.iter().map(|m| linalg::rank(m, f)).collect::<Result<_, _>>()?;
        let aug_rank = linalg::rank(&aug, f)?;
        let zero_composites = maps.first().is_none_or(|m| aug.mul(m).is_zero())
            && maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero());
        let position = if aug_rank != ideal || !zero_composites {
            Some(0)
        } else {
            keep.iter().enumerate().position(|(i, k)| {
                let outgoing = if i == 0 { aug_rank } else { ranks[i - 1] };
                let incoming = ranks.get(i).copied().unwrap_or(0);
                k.len() != outgoing + incoming
            })
        };
        if let Some(p) = position {
            failure = Some((tau, p));
            break;
        }
    }
    Ok(DualExactness {
        exact: failure.is_none() && support_violations == 0,
        degrees_checked: 1 << d,
        failure,
        support_violations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealKind {
    /// `I = 0`: no generators at all.
    Zero,
    /// `I = S`, which happens exactly when the dual complex is void.
    Unit,
    Proper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub vertex_count: usize,
    /// `β_{i,σ}`, keyed by `(i, σ)`.
    #[serde(serialize_with = "entry_list")]
    pub entries: BTreeMap<(usize, VertexSet), usize>,
    pub ideal: IdealKind,
}

fn entry_list<S: serde::Serializer>(
    entries: &BTreeMap<(usize, VertexSet), usize>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        i: usize,
        sigma: &'a VertexSet,
        beta: usize,
    }
    ser.collect_seq(entries.iter().map(|((i, sigma), &beta)| Entry { i: *i, sigma, beta }))
}

impl BettiTable {
    fn new(vertex_count: usize, entries: BTreeMap<(usize, VertexSet), usize>) -> BettiTable {
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|&(_, b)| b > 0).collect();
        let ideal = if entries.is_empty() {
            IdealKind::Zero
        } else if entries.contains_key(&(0, Vec::new())) {
            IdealKind::Unit
        } else {
            IdealKind::Proper
        };
        BettiTable { vertex_count, entries, ideal }
    }

    pub fn get(&self, i: usize, sigma: &[usize]) -> usize {
        self.entries.get(&(i, sigma.to_vec())).copied().unwrap_or(0)
    }

    /// Coarse `β_{i,j}` with `j = |σ|`.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for ((i, s), &b) in &self.entries {
            *out.entry((*i, s.len())).or_insert(0) += b;
        }
        out
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|(i, _)| *i + 1).max().unwrap_or(0);
        let mut out = vec![0; top];
        for ((i, _), &b) in &self.entries {
            out[*i] += b;
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ (−1)^i β_{i,σ} t^{|σ|}`
    pub fn k_polynomial(&self) -> Poly {
        let mut p = vec![BigInt::zero(); self.vertex_count + 1];
        for ((i, s), &b) in &self.entries {
            let b = BigInt::from(b);
            if i % 2 == 0 {
                p[s.len()] += b;
            } else {
                p[s.len()] -= b;
            }
        }
        trim(p)
    }
}

impl fmt::Display for BettiTable {
    /// Rows `i`, columns `j = |σ|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coarse = self.coarse();
        let rows = self.totals().len();
        write!(f, "i\\j")?;
        for j in 0..=self.vertex_count {
            write!(f, "{j:>5}")?;
        }
        writeln!(f)?;
        for i in 0..rows {
            write!(f, "{i:>3}")?;
            for j in 0..=self.vertex_count {
                match coarse.get(&(i, j)) {
                    Some(b) => write!(f, "{b:>5}")?,
                    None => write!(f, "{:>5}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn betti_from_dual(dc: &DualFreeComplex) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (i, gens) in dc.generators.iter().enumerate() {
        for s in gens {
            *entries.entry((i, s.clone())).or_insert(0) += 1;
        }
    }
    BettiTable::new(dc.vertex_count, entries)
}

/// `β_{i,σ}(I_{Δ*}) = dim H̃^{|σ|−i−2}(Δ*|_σ)`. A void `Δ*` gives the unit ideal.
pub fn betti_hochster(dual: &SimplicialComplex, f: Field) -> BettiTable {
    let d = dual.vertex_count();
    if dual.is_void() {
        return BettiTable::new(d, BTreeMap::from([((0, Vec::new()), 1)]));
    }
    let sigmas: Vec<VertexSet> =
        (0u64..1 << d).map(|mask| (1..=d).filter(|v| mask >> (v - 1) & 1 == 1).collect()).collect();
    let one = |sigma: &VertexSet| -> Vec<((usize, VertexSet), usize)> {
        reduced_cohomology(&dual.induced(sigma), f)
            .into_iter()
            .filter_map(|(j, dim)| {
                let i = sigma.len() as i64 - j - 2;
                (dim > 0 && i >= 0).then(|| ((i as usize, sigma.clone()), dim))
            })
            .collect()
    };
    #[cfg(feature = "parallel")]
    let parts: Vec<_> = {
        use rayon::prelude::*;
        sigmas.par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<_> = sigmas.iter().map(one).collect();
    BettiTable::new(d, parts.into_iter().flatten().collect())
}

/// All entries on one diagonal `|σ| − i = const`; vacuous for the empty table.
pub fn is_linear_table(bt: &BettiTable) -> bool {
    let mut shifts = bt.entries.keys().map(|(i, s)| s.len() as i64 - *i as i64);
    match shifts.next() {
        Some(first) => shifts.all(|s| s == first),
        None => true,
    }
}

/// Numerator of the Hilbert series of `I_{Δ*}` over `(1 − t)^d`:
/// `1 − Σ_{F ∈ Δ*} t^{|F|} (1 − t)^{d − |F|}`.
pub fn ideal_numerator(dual: &SimplicialComplex) -> Poly {
    let d = dual.vertex_count();
    let mut p = vec![BigInt::one()];
    p.resize(d + 1, BigInt::zero());
    for face in dual.faces() {
        for (k, c) in monomial_times_one_minus_t(face.len(), d - face.len()).into_iter().enumerate() {
            p[k] -= c;
        }
    }
    trim(p)
}
