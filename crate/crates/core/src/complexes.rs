//! Face posets with incidence signs, simplicial complexes and Alexander duality.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Field, Mat};

pub type FaceId = usize;

/// Sorted list of 1-based vertex indices.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("the void complex has no faces")]
    Void,
    #[error("duplicate facet {0}")]
    DuplicateFacet(String),
    #[error("vertex {vertex} outside 1..={d}")]
    VertexOutOfRange { vertex: usize, d: usize },
    #[error("unknown face {0}")]
    UnknownFace(String),
    #[error("cover sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("duplicate face label {0}")]
    DuplicateLabel(String),
    #[error("complex has no minimal face")]
    NoMinimalFace,
}

/// How a face sits inside the ambient cone, when known.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FaceGeometry {
    /// Hand-authored face with no coordinates.
    Abstract,
    /// Coordinate face of `N^d` spanned by these (1-based) unit vectors.
    Simplex(VertexSet),
    /// Face of a semigroup cone cut out by these (1-based) functionals.
    Cone(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub dim: usize,
    pub label: String,
    pub geometry: FaceGeometry,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub lower: FaceId,
    pub upper: FaceId,
    pub sign: i8,
}

/// A graded face poset with an incidence function on its cover relations.
#[derive(Clone, Debug)]
pub struct FaceComplex {
    ambient_dim: usize,
    faces: Vec<Face>,
    covers: Vec<Cover>,
    up: Vec<Vec<(FaceId, i8)>>,
    down: Vec<Vec<(FaceId, i8)>>,
    /// `leq[g][f]` iff g is a face of f.
    leq: Vec<Vec<bool>>,
}

impl FaceComplex {
    /// Assembles a complex. Only referential integrity is checked here; use
    /// [`validate`] for the poset and incidence axioms.
    pub fn new(ambient_dim: usize, faces: Vec<Face>, covers: Vec<Cover>) -> Result<Self, ComplexError> {
        let mut seen = BTreeSet::new();
        for f in &faces {
            if !seen.insert(f.label.as_str()) {
                return Err(ComplexError::DuplicateLabel(f.label.clone()));
            }
        }
        let n = faces.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for c in &covers {
            if c.lower >= n || c.upper >= n {
                return Err(ComplexError::UnknownFace(format!("#{}", c.lower.max(c.upper))));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(ComplexError::BadSign(c.sign as i64));
            }
            up[c.lower].push((c.upper, c.sign));
            down[c.upper].push((c.lower, c.sign));
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        let mut leq = vec![vec![false; n]; n];
        // faces reachable upward from g, by breadth-first search
        for g in 0..n {
            let mut stack = vec![g];
            leq[g][g] = true;
            while let Some(x) = stack.pop() {
                for &(y, _) in &up[x] {
                    if !leq[g][y] {
                        leq[g][y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        Ok(FaceComplex { ambient_dim, faces, covers, up, down, leq })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn ids(&self) -> std::ops::Range<FaceId> {
        0..self.faces.len()
    }

    /// `dim Δ`: the largest face dimension present.
    pub fn dim(&self) -> usize {
        self.faces.iter().map(|f| f.dim).max().unwrap_or(0)
    }

    pub fn minimal(&self) -> Option<FaceId> {
        let mut it = self.ids().filter(|&i| self.faces[i].dim == 0);
        match (it.next(), it.next()) {
            (Some(m), None) => Some(m),
            _ => None,
        }
    }

    pub fn find(&self, label: &str) -> Option<FaceId> {
        self.faces.iter().position(|f| f.label == label)
    }

    pub fn check_id(&self, id: FaceId) -> Result<(), ComplexError> {
        if id < self.faces.len() {
            Ok(())
        } else {
            Err(ComplexError::UnknownFace(format!("#{id}")))
        }
    }

    /// Faces covering `id`, with incidence signs.
    pub fn up_covers(&self, id: FaceId) -> &[(FaceId, i8)] {
        &self.up[id]
    }

    /// Facets of `id`, with incidence signs.
    pub fn down_covers(&self, id: FaceId) -> &[(FaceId, i8)] {
        &self.down[id]
    }

    /// ε(lower, upper) when `lower` is a facet of `upper`.
    pub fn sign(&self, lower: FaceId, upper: FaceId) -> Option<i8> {
        self.up[lower].iter().find(|(u, _)| *u == upper).map(|&(_, s)| s)
    }

    /// Whether `g` is a face of `f` (reflexive).
    pub fn is_face_of(&self, g: FaceId, f: FaceId) -> bool {
        self.leq[g][f]
    }

    /// Maximal faces, in id order.
    pub fn maximal_faces(&self) -> Vec<FaceId> {
        self.ids().filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn faces_of_dim(&self, dim: usize) -> Vec<FaceId> {
        self.ids().filter(|&i| self.faces[i].dim == dim).collect()
    }

    /// Vertex set of a face of a simplicial cone complex.
    pub fn vertex_set(&self, id: FaceId) -> Option<&VertexSet> {
        match &self.faces[id].geometry {
            FaceGeometry::Simplex(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_simplicial(&self) -> bool {
        self.faces.iter().all(|f| matches!(f.geometry, FaceGeometry::Simplex(_)))
    }
}

/// Faces of an upper set Δ_G arranged by cohomological degree (= face dimension).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperSet {
    pub base: FaceId,
    pub by_degree: BTreeMap<usize, Vec<FaceId>>,
}

impl UpperSet {
    pub fn all(&self) -> Vec<FaceId> {
        self.by_degree.values().flatten().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn degree(&self, p: usize) -> &[FaceId] {
        self.by_degree.get(&p).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Δ_G = {F ∈ Δ : F ⊇ G}.
pub fn upper_set(fc: &FaceComplex, g: FaceId) -> Result<UpperSet, ComplexError> {
    fc.check_id(g)?;
    let mut by_degree: BTreeMap<usize, Vec<FaceId>> = BTreeMap::new();
    for f in fc.ids().filter(|&f| fc.is_face_of(g, f)) {
        by_degree.entry(fc.face(f).dim).or_default().push(f);
    }
    Ok(UpperSet { base: g, by_degree })
}

/// A codimension-2 interval whose incidence sum is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondViolation {
    pub lower: FaceId,
    pub upper: FaceId,
    pub sum: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub structural: Vec<String>,
    pub diamonds: Vec<DiamondViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.structural.is_empty() && self.diamonds.is_empty()
    }
}

/// Checks for a unique minimal face, dimension-raising covers, gradedness, and
/// the incidence axiom on every codimension-2 interval.
pub fn validate(fc: &FaceComplex) -> ValidationReport {
    let mut report = ValidationReport::default();
    let zeros = fc.faces_of_dim(0);
    match zeros.len() {
        0 => report.structural.push("no face of dimension 0 (minimal face missing)".into()),
        1 => {}
        k => report.structural.push(format!("{k} faces of dimension 0; expected exactly one")),
    }
    let mut seen = BTreeSet::new();
    for c in fc.covers() {
        if !seen.insert((c.lower, c.upper)) {
            report.structural.push(format!(
                "duplicate cover {} < {}",
                fc.face(c.lower).label,
                fc.face(c.upper).label
            ));
        }
        let (dl, du) = (fc.face(c.lower).dim, fc.face(c.upper).dim);
        if du != dl + 1 {
            report.structural.push(format!(
                "cover {} < {} goes from dim {dl} to dim {du}",
                fc.face(c.lower).label,
                fc.face(c.upper).label
            ));
        }
    }
    for id in fc.ids() {
        let f = fc.face(id);
        if f.dim > 0 && fc.down_covers(id).is_empty() {
            report.structural.push(format!("face {} (dim {}) has no facets", f.label, f.dim));
        }
    }
    for upper in fc.ids() {
        let mut sums: BTreeMap<FaceId, i64> = BTreeMap::new();
        for &(mid, s1) in fc.down_covers(upper) {
            for &(lower, s2) in fc.down_covers(mid) {
                *sums.entry(lower).or_insert(0) += (s1 as i64) * (s2 as i64);
            }
        }
        for (lower, sum) in sums {
            if sum != 0 {
                report.diamonds.push(DiamondViolation { lower, upper, sum });
            }
        }
    }
    report
}

/// The subcomplex generated by `generators` (all their faces), with induced
/// signs and geometry.
pub fn subcomplex(fc: &FaceComplex, generators: &[FaceId]) -> Result<FaceComplex, ComplexError> {
    for &g in generators {
        fc.check_id(g)?;
    }
    let keep: Vec<FaceId> =
        fc.ids().filter(|&f| generators.iter().any(|&g| fc.is_face_of(f, g))).collect();
    if keep.is_empty() {
        return Err(ComplexError::Void);
    }
    let index: HashMap<FaceId, FaceId> = keep.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let faces = keep.iter().map(|&f| fc.face(f).clone()).collect();
    let covers = fc
        .covers()
        .iter()
        .filter_map(|c| {
            Some(Cover { lower: *index.get(&c.lower)?, upper: *index.get(&c.upper)?, sign: c.sign })
        })
        .collect();
    FaceComplex::new(fc.ambient_dim(), faces, covers)
}

/// An abstract simplicial complex on `{1..d}`, stored by its facets. No facets
/// at all is the void complex; a single empty facet is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Normalizes the generating faces to the maximal ones. Repeated faces are
    /// rejected.
    pub fn new(vertex_count: usize, faces: Vec<VertexSet>) -> Result<Self, ComplexError> {
        let mut sets: Vec<VertexSet> = Vec::with_capacity(faces.len());
        let mut seen = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > vertex_count) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, d: vertex_count });
            }
            if !seen.insert(f.clone()) {
                return Err(ComplexError::DuplicateFacet(set_label(&f)));
            }
            sets.push(f);
        }
        Ok(Self::from_faces_unchecked(vertex_count, sets))
    }

    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex { vertex_count, facets: Vec::new() }
    }

    pub fn simplex(vertex_count: usize) -> Self {
        SimplicialComplex { vertex_count, facets: vec![(1..=vertex_count).collect()] }
    }

    fn from_faces_unchecked(vertex_count: usize, sets: Vec<VertexSet>) -> Self {
        let mut facets: Vec<VertexSet> = sets
            .iter()
            .filter(|f| !sets.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        SimplicialComplex { vertex_count, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(s, f))
    }

    /// Every face including ∅, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            for k in 0..=f.len() {
                for c in f.iter().copied().combinations(k) {
                    all.insert(c);
                }
            }
        }
        let mut v: Vec<VertexSet> = all.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Induced subcomplex on the vertex subset `sigma`.
    pub fn induced(&self, sigma: &[usize]) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        let sets = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|v| sigma.contains(v)).collect())
            .collect();
        Self::from_faces_unchecked(self.vertex_count, sets)
    }

    /// link(S) = {T : T ∩ S = ∅, T ∪ S ∈ Δ}.
    pub fn link(&self, s: &[usize]) -> SimplicialComplex {
        let sets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| is_subset(s, f))
            .map(|f| f.iter().copied().filter(|v| !s.contains(v)).collect())
            .collect();
        Self::from_faces_unchecked(self.vertex_count, sets)
    }

    /// Simplicial dimension (max facet size − 1); −1 for `{∅}`, `None` when void.
    pub fn simplicial_dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        write!(f, "{}", self.facets.iter().map(|s| set_label(s)).join(" "))
    }
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// `{1,2}` style label; `{}` for the empty face.
pub fn set_label(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().join(","))
}

/// The cone complex of a simplicial complex over `N^d`: a k-element face becomes a
/// k-dimensional cone, and the cover `S ⊂ S ∪ {v}` gets sign `(-1)^i` where `i` is
/// the 0-based position of `v` in the sorted `S ∪ {v}`.
pub fn cone_of_simplicial(sc: &SimplicialComplex) -> Result<FaceComplex, ComplexError> {
    if sc.is_void() {
        return Err(ComplexError::Void);
    }
    let sets = sc.faces();
    let index: HashMap<&VertexSet, FaceId> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let faces = sets
        .iter()
        .map(|s| Face { dim: s.len(), label: set_label(s), geometry: FaceGeometry::Simplex(s.clone()) })
        .collect();
    let mut covers = Vec::new();
    for (lower, s) in sets.iter().enumerate() {
        for v in 1..=sc.vertex_count() {
            if s.contains(&v) {
                continue;
            }
            let mut t = s.clone();
            let pos = t.partition_point(|&x| x < v);
            t.insert(pos, v);
            if let Some(&upper) = index.get(&t) {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                covers.push(Cover { lower, upper, sign });
            }
        }
    }
    FaceComplex::new(sc.vertex_count(), faces, covers)
}

/// Δ* = { [d] ∖ F : F ∉ Δ }, returned by its facets. The result is void
/// exactly when Δ is the full simplex.
pub fn alexander_dual(sc: &SimplicialComplex) -> SimplicialComplex {
    let d = sc.vertex_count();
    let mut sets = Vec::new();
    for mask in 0u64..(1u64 << d) {
        let f: VertexSet = (1..=d).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        if !sc.contains(&f) {
            sets.push((1..=d).filter(|v| mask & (1 << (v - 1)) == 0).collect());
        }
    }
    SimplicialComplex::from_faces_unchecked(d, sets)
}

/// Reduced cohomology dimensions of a simplicial complex, keyed by degree
/// (−1 ..= dim). Computed from the standard simplicial coboundary with the
/// augmentation in degree −1; the void complex has no cohomology at all.
pub fn reduced_cohomology(sc: &SimplicialComplex, field: Field) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if sc.is_void() {
        return out;
    }
    let faces = sc.faces();
    let top = faces.last().map(|f| f.len()).unwrap_or(0);
    // by size: size k ↦ degree k − 1
    let mut by_size: Vec<Vec<&VertexSet>> = vec![Vec::new(); top + 1];
    for f in &faces {
        by_size[f.len()].push(f);
    }
    let ranks: Vec<usize> = (0..top)
        .map(|k| {
            let (src, tgt) = (&by_size[k], &by_size[k + 1]);
            let pos: HashMap<&VertexSet, usize> = src.iter().enumerate().map(|(i, s)| (*s, i)).collect();
            let mut m = Mat::zeros(field, tgt.len(), src.len());
            for (i, t) in tgt.iter().enumerate() {
                for (j, _) in t.iter().enumerate() {
                    let mut b = (*t).clone();
                    b.remove(j);
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    m.set(i, pos[&b], field.from_i64(sign));
                }
            }
            linalg::rank(&m, field).expect("field-consistent")
        })
        .collect();
    for k in 0..=top {
        let dim = by_size[k].len();
        let r_out = if k < top { ranks[k] } else { 0 };
        let r_in = if k > 0 { ranks[k - 1] } else { 0 };
        out.insert(k as i64 - 1, dim - r_out - r_in);
    }
    out
}
