//! The Zeeman double complex `D(Δ)` in a fixed `Z^d`-degree, its total complex,
//! and pages of the spectral sequence that takes horizontal cohomology first.
//!
//! Generators are pairs `F ⊗ e_G` with `G ⊆ F` in Δ, sitting at
//! `(p, q) = (dim F, −dim G)`. In degree `a` only pairs with `a ∈ G` survive.
//!
//! * vertical `∂(F ⊗ e_G) = Σ ε(G′, G) F ⊗ e_{G′}` over facets `G′` of `G` with `a ∈ G′`
//! * horizontal `δ(F ⊗ e_G) = (−1)^q Σ ε(F, F′) F′ ⊗ e_G` over faces `F′` covering `F`

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::complexes::{FaceComplex, FaceId};
use crate::degrees::{self, DegreeError};
use crate::linalg::{self, Field, LinalgError, Mat, Scalar, Vector};
use crate::local_cohomology::{cohomology, CohomologySummary, VSComplex};
use crate::semigroup::AffineSemigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZeemanError {
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("unsupported page {0}; pages 0, 1, 2 and infinity are available")]
    UnsupportedPage(String),
    #[error("complex has no minimal face")]
    NoMinimalFace,
}

/// Bidegree `(p, q)`, with `q ≤ 0`.
pub type Bidegree = (i64, i64);

/// `ε_F = (−1)^{dim F (dim F + 1) / 2}`: +1 for dims ≡ 0, 3 (mod 4), −1 for dims ≡ 1, 2.
pub fn augmentation_sign(dim: usize) -> i64 {
    if (dim * (dim + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub struct ZeemanComplex {
    field: Field,
    degree: Vec<BigInt>,
    /// `dim Δ`
    top: usize,
    basis: BTreeMap<Bidegree, Vec<(FaceId, FaceId)>>,
    /// keyed by source; `(p, q) → (p, q + 1)`
    vertical: BTreeMap<Bidegree, Mat>,
    /// keyed by source; `(p, q) → (p + 1, q)`
    horizontal: BTreeMap<Bidegree, Mat>,
}

/// Builds `D(Δ)_a`. A nonzero degree needs face coordinates: simplicial faces
/// carry their own, cone faces need the semigroup `q`.
pub fn build(
    fc: &FaceComplex,
    degree: &[BigInt],
    f: Field,
    q: Option<&AffineSemigroup>,
) -> Result<ZeemanComplex, ZeemanError> {
    fc.minimal().ok_or(ZeemanError::NoMinimalFace)?;
    let member = degrees::membership(fc, q, degree)?;
    let mut basis: BTreeMap<Bidegree, Vec<(FaceId, FaceId)>> = BTreeMap::new();
    for g in fc.ids().filter(|&g| member[g]) {
        for big in fc.ids().filter(|&big| fc.is_face_of(g, big)) {
            let key = (fc.face(big).dim as i64, -(fc.face(g).dim as i64));
            basis.entry(key).or_default().push((big, g));
        }
    }
    for v in basis.values_mut() {
        v.sort_by_key(|&(big, g)| (g, big));
    }
    let index: HashMap<(FaceId, FaceId), usize> = basis
        .values()
        .flat_map(|v| v.iter().enumerate().map(|(i, &pair)| (pair, i)))
        .collect();
    let empty = Vec::new();
    let mut vertical = BTreeMap::new();
    let mut horizontal = BTreeMap::new();
    for (&(p, qq), src) in &basis {
        let tgt_v = basis.get(&(p, qq + 1)).unwrap_or(&empty);
        let mut dv = Mat::zeros(f, tgt_v.len(), src.len());
        let tgt_h = basis.get(&(p + 1, qq)).unwrap_or(&empty);
        let mut dh = Mat::zeros(f, tgt_h.len(), src.len());
        let twist = if qq.rem_euclid(2) == 0 { 1 } else { -1 };
        for (j, &(big, g)) in src.iter().enumerate() {
            for &(gp, s) in fc.down_covers(g) {
                if member[gp] {
                    dv.set(index[&(big, gp)], j, f.from_i64(s as i64));
                }
            }
            for &(bp, s) in fc.up_covers(big) {
                dh.set(index[&(bp, g)], j, f.from_i64(twist * s as i64));
            }
        }
        vertical.insert((p, qq), dv);
        horizontal.insert((p, qq), dh);
    }
    Ok(ZeemanComplex { field: f, degree: degree.to_vec(), top: fc.dim(), basis, vertical, horizontal })
}

/// Results of the three double-complex identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Identities {
    pub vertical_squares_to_zero: bool,
    pub horizontal_squares_to_zero: bool,
    pub anticommute: bool,
}

impl Identities {
    pub fn all(&self) -> bool {
        self.vertical_squares_to_zero && self.horizontal_squares_to_zero && self.anticommute
    }
}

impl ZeemanComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> &[BigInt] {
        &self.degree
    }

    pub fn top_dim(&self) -> usize {
        self.top
    }

    pub fn basis(&self, at: Bidegree) -> &[(FaceId, FaceId)] {
        self.basis.get(&at).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.basis.keys().copied()
    }

    pub fn dim(&self, at: Bidegree) -> usize {
        self.basis(at).len()
    }

    pub fn total_size(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    /// `∂ : D_{p,q} → D_{p,q+1}`.
    pub fn vertical(&self, at: Bidegree) -> Mat {
        self.vertical.get(&at).cloned().unwrap_or_else(|| Mat::zeros(self.field, self.dim((at.0, at.1 + 1)), 0))
    }

    /// `δ : D_{p,q} → D_{p+1,q}`.
    pub fn horizontal(&self, at: Bidegree) -> Mat {
        self.horizontal.get(&at).cloned().unwrap_or_else(|| Mat::zeros(self.field, self.dim((at.0 + 1, at.1)), 0))
    }

    pub fn identities(&self) -> Identities {
        let mut ids = Identities { vertical_squares_to_zero: true, horizontal_squares_to_zero: true, anticommute: true };
        for &(p, q) in self.basis.keys() {
            let dv = self.vertical((p, q));
            let dh = self.horizontal((p, q));
            if self.dim((p, q + 2)) > 0 && !self.vertical((p, q + 1)).mul(&dv).is_zero() {
                ids.vertical_squares_to_zero = false;
            }
            if self.dim((p + 2, q)) > 0 && !self.horizontal((p + 1, q)).mul(&dh).is_zero() {
                ids.horizontal_squares_to_zero = false;
            }
            if self.dim((p + 1, q + 1)) > 0 {
                let a = self.vertical((p + 1, q)).mul(&dh);
                let b = self.horizontal((p, q + 1)).mul(&dv);
                if !a.add(&b).is_zero() {
                    ids.anticommute = false;
                }
            }
        }
        ids
    }

    fn rows(&self) -> Vec<i64> {
        let mut qs: Vec<i64> = self.basis.keys().map(|&(_, q)| q).collect();
        qs.sort_unstable();
        qs.dedup();
        qs
    }

    fn columns(&self) -> Vec<i64> {
        let mut ps: Vec<i64> = self.basis.keys().map(|&(p, _)| p).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Row `q` as a complex under δ, indexed by `p`.
    fn row_complex(&self, q: i64) -> VSComplex {
        let ps: Vec<i64> = self.columns();
        let (lo, hi) = (ps[0], *ps.last().unwrap());
        VSComplex {
            field: self.field,
            lo,
            labels: (lo..=hi).map(|p| self.labels((p, q))).collect(),
            maps: (lo..hi).map(|p| self.horizontal_between((p, q))).collect(),
        }
    }

    /// Column `p` as a complex under ∂, indexed by `q`.
    fn column_complex(&self, p: i64) -> VSComplex {
        let qs = self.rows();
        let (lo, hi) = (qs[0], *qs.last().unwrap());
        VSComplex {
            field: self.field,
            lo,
            labels: (lo..=hi).map(|q| self.labels((p, q))).collect(),
            maps: (lo..hi).map(|q| self.vertical_between((p, q))).collect(),
        }
    }

    fn labels(&self, at: Bidegree) -> Vec<String> {
        self.basis(at).iter().map(|(big, g)| format!("{big}⊗{g}")).collect()
    }

    fn horizontal_between(&self, at: Bidegree) -> Mat {
        let (r, c) = (self.dim((at.0 + 1, at.1)), self.dim(at));
        self.horizontal.get(&at).cloned().unwrap_or_else(|| Mat::zeros(self.field, r, c))
    }

    fn vertical_between(&self, at: Bidegree) -> Mat {
        let (r, c) = (self.dim((at.0, at.1 + 1)), self.dim(at));
        self.vertical.get(&at).cloned().unwrap_or_else(|| Mat::zeros(self.field, r, c))
    }

    /// Cohomology of each column under ∂ (the vertical-first `E¹`).
    pub fn vertical_cohomology(&self) -> Result<BTreeMap<Bidegree, usize>, ZeemanError> {
        let mut out = BTreeMap::new();
        for p in self.columns() {
            let s = cohomology(&self.column_complex(p))?;
            for (t, &d) in s.dims.iter().enumerate() {
                if d > 0 {
                    out.insert((p, s.lo + t as i64), d);
                }
            }
        }
        Ok(out)
    }
}

/// `tot D(Δ)` with differential `δ + ∂` and the augmentation `1 ↦ Σ ε_F F ⊗ e_F`.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    pub complex: VSComplex,
    /// For each total degree, the bidegree blocks in basis order with their offsets.
    pub blocks: Vec<Vec<(Bidegree, usize)>>,
    /// Coordinates of the augmentation image in total degree 0.
    pub augmentation: Vector,
    /// Basis pairs `(F, G)` of each total degree, in basis order.
    pub pairs: Vec<Vec<(FaceId, FaceId)>>,
}

impl TotalComplex {
    /// `(δ + ∂)` applied to the augmentation vector is zero.
    pub fn augmentation_is_cocycle(&self) -> bool {
        match self.complex.maps.first() {
            Some(d0) => linalg::is_zero_vec(&d0.mul_vec(&self.augmentation)),
            None => true,
        }
    }
}

pub fn total_complex(z: &ZeemanComplex, fc: &FaceComplex) -> TotalComplex {
    let f = z.field;
    let max_total = z.basis.keys().map(|&(p, q)| p + q).max().unwrap_or(0);
    let mut blocks = Vec::new();
    let mut pairs = Vec::new();
    for n in 0..=max_total {
        let mut offs = Vec::new();
        let mut ps = Vec::new();
        let mut off = 0;
        for (&(p, q), v) in &z.basis {
            if p + q == n {
                offs.push(((p, q), off));
                off += v.len();
                ps.extend(v.iter().copied());
            }
        }
        blocks.push(offs);
        pairs.push(ps);
    }
    let maps = (0..max_total as usize)
        .map(|n| {
            let mut m = Mat::zeros(f, pairs[n + 1].len(), pairs[n].len());
            let target_offset: HashMap<Bidegree, usize> = blocks[n + 1].iter().copied().collect();
            for &((p, q), col0) in &blocks[n] {
                if let Some(&row0) = target_offset.get(&(p + 1, q)) {
                    paste(&mut m, &z.horizontal_between((p, q)), row0, col0);
                }
                if let Some(&row0) = target_offset.get(&(p, q + 1)) {
                    paste(&mut m, &z.vertical_between((p, q)), row0, col0);
                }
            }
            m
        })
        .collect();
    let augmentation = pairs
        .first()
        .map(|v| {
            v.iter()
                .map(|&(big, g)| {
                    debug_assert_eq!(big, g);
                    f.from_i64(augmentation_sign(fc.face(big).dim))
                })
                .collect()
        })
        .unwrap_or_default();
    let labels = pairs
        .iter()
        .map(|v| v.iter().map(|(big, g)| format!("{}⊗e{}", fc.face(*big).label, fc.face(*g).label)).collect())
        .collect();
    TotalComplex { complex: VSComplex { field: f, lo: 0, labels, maps }, blocks, augmentation, pairs }
}

fn paste(m: &mut Mat, block: &Mat, row0: usize, col0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if !v.is_zero() {
                m.set(row0 + i, col0 + j, v.clone());
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Page {
    Zero,
    One,
    Two,
    Infinity,
}

impl std::str::FromStr for Page {
    type Err = ZeemanError;

    fn from_str(s: &str) -> Result<Page, ZeemanError> {
        match s.trim() {
            "0" => Ok(Page::Zero),
            "1" => Ok(Page::One),
            "2" => Ok(Page::Two),
            "inf" | "infinity" | "∞" => Ok(Page::Infinity),
            other => Err(ZeemanError::UnsupportedPage(other.to_string())),
        }
    }
}

impl fmt::Display for Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Page::Zero => write!(f, "0"),
            Page::One => write!(f, "1"),
            Page::Two => write!(f, "2"),
            Page::Infinity => write!(f, "inf"),
        }
    }
}

/// One page of the horizontal-first spectral sequence. The differential on
/// page r has bidegree `(1 − r, r)` for r ≥ 1 and `(1, 0)` on page 0.
#[derive(Clone, Debug)]
pub struct SSPage {
    pub page: Page,
    pub dims: BTreeMap<Bidegree, usize>,
    /// keyed by source bidegree
    pub differentials: BTreeMap<Bidegree, Mat>,
}

impl SSPage {
    pub fn dim(&self, at: Bidegree) -> usize {
        self.dims.get(&at).copied().unwrap_or(0)
    }

    /// Σ (−1)^{p+q} dim E_{pq}.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&(p, q), &d)| if (p + q).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Nonzero entries, in bidegree order.
    pub fn support(&self) -> Vec<(Bidegree, usize)> {
        self.dims.iter().filter(|(_, &d)| d > 0).map(|(&k, &d)| (k, d)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }
}

/// First page with representatives, kept to build the later pages.
struct FirstPage {
    rows: BTreeMap<i64, CohomologySummary>,
    d1: BTreeMap<Bidegree, Mat>,
}

fn first_page(z: &ZeemanComplex) -> Result<FirstPage, ZeemanError> {
    let f = z.field;
    let mut rows = BTreeMap::new();
    for q in z.rows() {
        rows.insert(q, cohomology(&z.row_complex(q))?);
    }
    let mut d1 = BTreeMap::new();
    for (&q, summary) in &rows {
        let Some(next) = rows.get(&(q + 1)) else { continue };
        for t in 0..summary.dims.len() {
            let p = summary.lo + t as i64;
            let reps = summary.reps(p);
            let tgt_dim = next.dim(p);
            if reps.is_empty() || tgt_dim == 0 {
                continue;
            }
            let dv = z.vertical_between((p, q));
            let mut m = Mat::zeros(f, tgt_dim, reps.len());
            for (j, x) in reps.iter().enumerate() {
                let image = dv.mul_vec(x);
                let coords = next.class_of(p, &image)?.expect("∂ carries δ-cocycles to δ-cocycles");
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            d1.insert((p, q), m);
        }
    }
    Ok(FirstPage { rows, d1 })
}

fn e1_dims(first: &FirstPage) -> BTreeMap<Bidegree, usize> {
    let mut dims = BTreeMap::new();
    for (&q, s) in &first.rows {
        for (t, &d) in s.dims.iter().enumerate() {
            dims.insert((s.lo + t as i64, q), d);
        }
    }
    dims
}

/// Page `r` of the spectral sequence obtained by taking horizontal (δ)
/// cohomology first. `E^∞` is the associated graded of `H(tot)` for the row
/// filtration `F^s = ⊕_{q ≥ s}`, which is the filtration this sequence comes from.
pub fn page(z: &ZeemanComplex, fc: &FaceComplex, r: Page) -> Result<SSPage, ZeemanError> {
    match r {
        Page::Zero => Ok(SSPage {
            page: r,
            dims: z.basis.iter().map(|(&k, v)| (k, v.len())).collect(),
            differentials: z.horizontal.clone(),
        }),
        Page::One => {
            let first = first_page(z)?;
            Ok(SSPage { page: r, dims: e1_dims(&first), differentials: first.d1 })
        }
        Page::Two => second_page(z),
        Page::Infinity => infinity_page(z, fc),
    }
}

fn second_page(z: &ZeemanComplex) -> Result<SSPage, ZeemanError> {
    let f = z.field;
    let first = first_page(z)?;
    let e1 = e1_dims(&first);
    let qs = z.rows();
    let (qlo, qhi) = (qs[0], *qs.last().unwrap());
    // column complexes of E¹ under d1
    let mut columns: BTreeMap<i64, CohomologySummary> = BTreeMap::new();
    for p in z.columns() {
        let labels = (qlo..=qhi).map(|q| vec![String::new(); e1.get(&(p, q)).copied().unwrap_or(0)]).collect();
        let maps = (qlo..qhi)
            .map(|q| {
                let (r, c) = (e1.get(&(p, q + 1)).copied().unwrap_or(0), e1.get(&(p, q)).copied().unwrap_or(0));
                first.d1.get(&(p, q)).cloned().unwrap_or_else(|| Mat::zeros(f, r, c))
            })
            .collect();
        columns.insert(p, cohomology(&VSComplex { field: f, lo: qlo, labels, maps })?);
    }
    let mut dims = BTreeMap::new();
    for (&p, s) in &columns {
        for (t, &d) in s.dims.iter().enumerate() {
            dims.insert((p, s.lo + t as i64), d);
        }
    }
    // d2 : E²_{p,q} → E²_{p−1,q+2} by the zigzag X ↦ −∂Y where δY = ∂X.
    let mut differentials = BTreeMap::new();
    for (&p, col) in &columns {
        let Some(target_col) = columns.get(&(p - 1)) else { continue };
        for t in 0..col.dims.len() {
            let q = col.lo + t as i64;
            let reps = col.reps(q);
            let tgt_dim = target_col.dim(q + 2);
            if reps.is_empty() || tgt_dim == 0 {
                continue;
            }
            let row = &first.rows[&q];
            let dv = z.vertical_between((p, q));
            let dh_below = z.horizontal_between((p - 1, q + 1));
            let dh_cols: Vec<Vector> = (0..dh_below.cols()).map(|j| dh_below.column(j)).collect();
            let dv_below = z.vertical_between((p - 1, q + 1));
            let row_target = &first.rows[&(q + 2)];
            let mut m = Mat::zeros(f, tgt_dim, reps.len());
            for (j, c) in reps.iter().enumerate() {
                let x = combine(f, row.reps(p), c, z.dim((p, q)));
                let dx = dv.mul_vec(&x);
                let y = linalg::solve_in_subspace(&dx, &dh_cols, f)?
                    .expect("a d1-cycle lifts through the horizontal differential");
                let minus_dy: Vector = dv_below.mul_vec(&y).iter().map(|s| f.neg(s)).collect();
                let e1_coords = row_target
                    .class_of(p - 1, &minus_dy)?
                    .expect("the zigzag lands on a horizontal cocycle");
                let e2_coords = target_col
                    .class_of(q + 2, &e1_coords)?
                    .expect("the zigzag lands on a d1-cycle");
                for (i, v) in e2_coords.into_iter().enumerate() {
                    m.set(i, j, v);
                }
            }
            differentials.insert((p, q), m);
        }
    }
    Ok(SSPage { page: Page::Two, dims, differentials })
}

fn combine(f: Field, basis: &[Vector], coeffs: &[Scalar], len: usize) -> Vector {
    let mut out = vec![f.zero(); len];
    for (c, v) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = f.add(o, &f.mul(c, x));
        }
    }
    out
}

fn infinity_page(z: &ZeemanComplex, fc: &FaceComplex) -> Result<SSPage, ZeemanError> {
    let f = z.field;
    let tot = total_complex(z, fc);
    let c = &tot.complex;
    let mut dims: BTreeMap<Bidegree, usize> = z.basis.keys().map(|&k| (k, 0)).collect();
    let top = c.labels.len();
    let ranks: Vec<usize> = c.maps.iter().map(|m| linalg::rank(m, f)).collect::<Result<_, _>>()?;
    for n in 0..top {
        let size = c.labels[n].len();
        let r_out = if n < c.maps.len() { ranks[n] } else { 0 };
        let r_in = if n > 0 { ranks[n - 1] } else { 0 };
        if size - r_out - r_in == 0 {
            continue;
        }
        let boundaries = if n > 0 { linalg::image_basis(&c.maps[n - 1], f)? } else { Vec::new() };
        // q ranges over the blocks of this total degree
        let qs: Vec<i64> = tot.blocks[n].iter().map(|&((_, q), _)| q).collect();
        let span_dim = |s: i64| -> Result<usize, ZeemanError> {
            let cols: Vec<usize> = tot.blocks[n]
                .iter()
                .filter(|&&((_, q), _)| q >= s)
                .flat_map(|&((p, q), off)| off..off + z.dim((p, q)))
                .collect();
            let mut gens = boundaries.clone();
            if !cols.is_empty() {
                let restricted = if n < c.maps.len() {
                    c.maps[n].select(&(0..c.maps[n].rows()).collect::<Vec<_>>(), &cols)
                } else {
                    Mat::zeros(f, 0, cols.len())
                };
                for k in linalg::kernel_basis(&restricted, f)? {
                    let mut v = vec![f.zero(); size];
                    for (x, &col) in k.into_iter().zip(&cols) {
                        v[col] = x;
                    }
                    gens.push(v);
                }
            }
            if gens.is_empty() {
                return Ok(0);
            }
            Ok(linalg::rank(&Mat::from_columns(f, size, &gens), f)?)
        };
        let mut levels: Vec<i64> = qs.clone();
        levels.sort_unstable();
        levels.dedup();
        let mut spans: Vec<usize> = levels.iter().map(|&s| span_dim(s)).collect::<Result<_, _>>()?;
        spans.push(boundaries.len());
        for (i, &s) in levels.iter().enumerate() {
            let gr = spans[i] - spans[i + 1];
            dims.insert((n as i64 - s, s), gr);
        }
    }
    Ok(SSPage { page: Page::Infinity, dims, differentials: BTreeMap::new() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Concentration {
    pub concentrated: bool,
    pub column: usize,
    /// Nonzero `E¹` entries outside the column, as `(p, q, dim)`.
    pub offending: Vec<(i64, i64, usize)>,
}

/// Whether `E¹` vanishes outside column `p = n`.
pub fn concentration_check(e1: &SSPage, n: usize) -> Concentration {
    let offending: Vec<(i64, i64, usize)> = e1
        .support()
        .into_iter()
        .filter(|&((p, _), _)| p != n as i64)
        .map(|((p, q), d)| (p, q, d))
        .collect();
    Concentration { concentrated: offending.is_empty(), column: n, offending }
}

/// Builds `D(Δ)_0`, takes its first page, and checks concentration in column `dim Δ`.
pub fn ordinary_concentration(fc: &FaceComplex, f: Field) -> Result<Concentration, ZeemanError> {
    let z = build(fc, &degrees::zero_degree(fc.ambient_dim()), f, None)?;
    let e1 = page(&z, fc, Page::One)?;
    Ok(concentration_check(&e1, fc.dim()))
}
