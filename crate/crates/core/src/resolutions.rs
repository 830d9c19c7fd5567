//! Complexes of face modules `⊕ k[G]^m` with scalar block maps: the
//! irreducible resolution read off the total Zeeman complex, the minimal
//! linear one built from top local cohomology, and degreewise checks.
//!
//! Maps are stored as one matrix per step with a row per target copy and a
//! column per source copy; copies are the summands expanded by multiplicity.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{ComplexError, FaceComplex, FaceId};
use crate::degrees::{self, DegreeError};
use crate::linalg::{self, Field, LinalgError, Mat, Scalar, Vector};
use crate::local_cohomology::{cm_from_table, CmWitness, CohomologyError, LocalCohomologyTable};
use crate::semigroup::AffineSemigroup;
use crate::zeeman::{self, ZeemanError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("not Cohen-Macaulay: H^{} at face {} has dimension {}", .0.degree, .0.label, .0.dim)]
    NotCohenMacaulay(CmWitness),
    #[error("unknown face {0}")]
    UnknownFace(String),
    #[error("face {label} has dimension {actual}, summand records {recorded}")]
    DimMismatch { label: String, recorded: usize, actual: usize },
    #[error("map {index} is {rows}x{cols}, expected {want_rows}x{want_cols}")]
    Shape { index: usize, rows: usize, cols: usize, want_rows: usize, want_cols: usize },
    #[error("{terms} terms need {} maps, found {maps}", .terms.saturating_sub(1))]
    MapCount { terms: usize, maps: usize },
    #[error("multiplicity of {0} must be positive")]
    ZeroMultiplicity(String),
    #[error("map {index} has a nonzero entry from k[{from}] to k[{to}], which is not a face of it")]
    Support { index: usize, from: String, to: String },
    #[error(transparent)]
    Zeeman(#[from] ZeemanError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub face: FaceId,
    pub label: String,
    /// Krull dimension of `k[G]`, i.e. `dim G`.
    pub dim: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceModule {
    pub summands: Vec<Summand>,
}

impl FaceModule {
    /// Total multiplicity `μ`.
    pub fn rank(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// One entry per copy, in order.
    pub fn copies(&self) -> Vec<&Summand> {
        self.summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s, s.multiplicity))
            .collect()
    }

    pub fn is_pure(&self, dim: usize) -> bool {
        self.summands.iter().all(|s| s.dim == dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceModuleComplex {
    pub field: Field,
    pub terms: Vec<FaceModule>,
    /// `maps[i] : W^i → W^{i+1}`
    pub maps: Vec<Mat>,
    /// Image of `1 ∈ k[Q]/I_Δ` in `W^0`, one scalar per copy.
    pub augmentation: Option<Vector>,
}

impl FaceModuleComplex {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_sizes(&self) -> Vec<usize> {
        self.terms.iter().map(FaceModule::rank).collect()
    }

    /// Checks shapes, multiplicities, face references and the support condition
    /// (a nonzero block `k[G] → k[G′]` needs `G′ ⊆ G`).
    pub fn check(&self, fc: &FaceComplex) -> Result<(), ResolutionError> {
        for t in &self.terms {
            for s in &t.summands {
                if s.face >= fc.len() || fc.face(s.face).label != s.label {
                    return Err(ResolutionError::UnknownFace(s.label.clone()));
                }
                if s.multiplicity == 0 {
                    return Err(ResolutionError::ZeroMultiplicity(s.label.clone()));
                }
                let actual = fc.face(s.face).dim;
                if actual != s.dim {
                    return Err(ResolutionError::DimMismatch { label: s.label.clone(), recorded: s.dim, actual });
                }
            }
        }
        let want_maps = self.terms.len().saturating_sub(1);
        if self.maps.len() != want_maps {
            return Err(ResolutionError::MapCount { terms: self.terms.len(), maps: self.maps.len() });
        }
        for (i, m) in self.maps.iter().enumerate() {
            let (src, tgt) = (self.terms[i].copies(), self.terms[i + 1].copies());
            if m.rows() != tgt.len() || m.cols() != src.len() {
                return Err(ResolutionError::Shape {
                    index: i,
                    rows: m.rows(),
                    cols: m.cols(),
                    want_rows: tgt.len(),
                    want_cols: src.len(),
                });
            }
            for (r, t) in tgt.iter().enumerate() {
                for (c, s) in src.iter().enumerate() {
                    if !m.get(r, c).is_zero() && !fc.is_face_of(t.face, s.face) {
                        return Err(ResolutionError::Support { index: i, from: s.label.clone(), to: t.label.clone() });
                    }
                }
            }
        }
        if let Some(aug) = &self.augmentation {
            let w0 = self.terms.first().map(FaceModule::rank).unwrap_or(0);
            if aug.len() != w0 {
                return Err(ResolutionError::Shape { index: 0, rows: aug.len(), cols: 1, want_rows: w0, want_cols: 1 });
            }
        }
        Ok(())
    }

    /// Looks faces up again by label, e.g. after reading a serialized complex.
    pub fn rebind(&mut self, fc: &FaceComplex) -> Result<(), ResolutionError> {
        for t in &mut self.terms {
            for s in &mut t.summands {
                s.face = fc.find(&s.label).ok_or_else(|| ResolutionError::UnknownFace(s.label.clone()))?;
            }
        }
        Ok(())
    }

    pub fn to_serial(&self) -> SerialComplex {
        SerialComplex {
            field: self.field,
            terms: self.terms.clone(),
            maps: self.maps.iter().map(|m| (0..m.rows()).map(|r| m.row(r).to_vec()).collect()).collect(),
            augmentation: self.augmentation.clone(),
        }
    }

    pub fn from_serial(s: SerialComplex) -> Result<Self, ResolutionError> {
        let mut maps = Vec::with_capacity(s.maps.len());
        for (i, rows) in s.maps.into_iter().enumerate() {
            let want_cols = s.terms.get(i).map(FaceModule::rank).unwrap_or(0);
            let want_rows = s.terms.get(i + 1).map(FaceModule::rank).unwrap_or(0);
            if rows.len() != want_rows || rows.iter().any(|r| r.len() != want_cols) {
                return Err(ResolutionError::Shape {
                    index: i,
                    rows: rows.len(),
                    cols: rows.first().map(Vec::len).unwrap_or(0),
                    want_rows,
                    want_cols,
                });
            }
            let flat: Vec<Scalar> = rows.into_iter().flatten().collect();
            maps.push(Mat::from_scalars(s.field, want_rows, want_cols, &flat)?);
        }
        let augmentation = match s.augmentation {
            Some(v) => Some(v.iter().map(|x| s.field.reduce(x)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        Ok(FaceModuleComplex { field: s.field, terms: s.terms, maps, augmentation })
    }
}

/// Plain-data form used for JSON reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialComplex {
    pub field: Field,
    pub terms: Vec<FaceModule>,
    /// `maps[i][row][col]`
    pub maps: Vec<Vec<Vec<Scalar>>>,
    pub augmentation: Option<Vec<Scalar>>,
}

fn summand(fc: &FaceComplex, g: FaceId, multiplicity: usize) -> Summand {
    let face = fc.face(g);
    Summand { face: g, label: face.label.clone(), dim: face.dim, multiplicity }
}

/// `tot D(Δ)_𝟎` read as a complex of face modules: term i collects `k[G]` for
/// every pair `F ⊇ G` with `dim F − dim G = i`.
pub fn total_resolution(fc: &FaceComplex, f: Field) -> Result<FaceModuleComplex, ResolutionError> {
    let z = zeeman::build(fc, &degrees::zero_degree(fc.ambient_dim()), f, None)?;
    let tot = zeeman::total_complex(&z, fc);
    let terms = tot
        .pairs
        .iter()
        .map(|pairs| FaceModule { summands: pairs.iter().map(|&(_, g)| summand(fc, g, 1)).collect() })
        .collect();
    Ok(FaceModuleComplex { field: f, terms, maps: tot.complex.maps, augmentation: Some(tot.augmentation) })
}

/// `W^i = ⊕_{dim G = n−i} k[G]^{dim H^n_G(Δ)}` with restriction maps between
/// top local cohomology groups, `n = dim Δ`. Refuses non-CM input.
pub fn minimal_linear_resolution(fc: &FaceComplex, f: Field) -> Result<FaceModuleComplex, ResolutionError> {
    let table = LocalCohomologyTable::compute(fc, f)?;
    let verdict = cm_from_table(fc, &table);
    if let Some(w) = verdict.witness {
        return Err(ResolutionError::NotCohenMacaulay(w));
    }
    let n = fc.dim();
    let top = |g: FaceId| table.get(g).summary.dim(n as i64);
    // per term: faces with nonzero top cohomology, in id order
    let faces: Vec<Vec<FaceId>> = (0..=n)
        .map(|i| fc.faces_of_dim(n - i).into_iter().filter(|&g| top(g) > 0).collect())
        .collect();
    let terms: Vec<FaceModule> = faces
        .iter()
        .map(|gs| FaceModule { summands: gs.iter().map(|&g| summand(fc, g, top(g))).collect() })
        .collect();
    let mut maps = Vec::with_capacity(n);
    for i in 0..n {
        let (src, tgt) = (&faces[i], &faces[i + 1]);
        let mut m = Mat::zeros(f, terms[i + 1].rank(), terms[i].rank());
        let mut col0 = 0;
        for &g in src {
            let mut row0 = 0;
            for &gp in tgt {
                if fc.sign(gp, g).is_some() {
                    let block = table.restriction(fc, g, gp, n)?;
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m.set(row0 + r, col0 + c, block.get(r, c).clone());
                        }
                    }
                }
                row0 += top(gp);
            }
            col0 += top(g);
        }
        maps.push(m);
    }
    let augmentation = Some(vec![f.one(); terms[0].rank()]);
    Ok(FaceModuleComplex { field: f, terms, maps, augmentation })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessFailure {
    #[serde(serialize_with = "degrees::serialize_ints")]
    pub degree: Vec<BigInt>,
    /// Position in `0 → M → W^0 → W^1 → ⋯` where exactness fails; `None` means at `M`.
    pub position: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub exact: bool,
    pub degrees_checked: usize,
    pub failure: Option<ExactnessFailure>,
}

/// Evaluates the augmented complex at one degree per face of the ambient cone
/// and checks that each resulting vector-space complex is exact. These degrees
/// suffice: every component depends only on the smallest cone face carrying the degree.
pub fn verify_exactness(
    c: &FaceModuleComplex,
    fc: &FaceComplex,
    q: Option<&AffineSemigroup>,
) -> Result<ExactnessReport, ResolutionError> {
    c.check(fc)?;
    let degs = degrees::evaluation_degrees(fc, q)?;
    let check = |a: &Vec<BigInt>| exact_at(c, fc, q, a);
    #[cfg(feature = "parallel")]
    let results: Vec<Option<ExactnessFailure>> = {
        use rayon::prelude::*;
        degs.par_iter().map(check).collect::<Result<_, _>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Option<ExactnessFailure>> = degs.iter().map(check).collect::<Result<_, _>>()?;
    let failure = results.into_iter().flatten().next();
    Ok(ExactnessReport { exact: failure.is_none(), degrees_checked: degs.len(), failure })
}

/// The degree-`a` strand `0 → M_a → W^0_a → ⋯`: returns the component of the
/// quotient (0 or 1) and the restricted maps.
pub fn strand(
    c: &FaceModuleComplex,
    fc: &FaceComplex,
    q: Option<&AffineSemigroup>,
    a: &[BigInt],
) -> Result<(usize, Option<Mat>, Vec<Mat>, Vec<usize>), ResolutionError> {
    let member = degrees::membership(fc, q, a)?;
    let quotient = usize::from(member.iter().any(|&m| m));
    let keep: Vec<Vec<usize>> = c
        .terms
        .iter()
        .map(|t| t.copies().iter().enumerate().filter(|(_, s)| member[s.face]).map(|(i, _)| i).collect())
        .collect();
    let maps = c.maps.iter().enumerate().map(|(i, m)| m.select(&keep[i + 1], &keep[i])).collect();
    let aug = match (&c.augmentation, keep.first()) {
        (Some(v), Some(k0)) => {
            let entries: Vec<Scalar> = k0.iter().map(|&i| v[i].clone()).collect();
            Some(Mat::from_scalars(c.field, k0.len(), quotient, &if quotient == 1 { entries } else { vec![] })?)
        }
        _ => None,
    };
    Ok((quotient, aug, maps, keep.iter().map(Vec::len).collect()))
}

fn exact_at(
    c: &FaceModuleComplex,
    fc: &FaceComplex,
    q: Option<&AffineSemigroup>,
    a: &[BigInt],
) -> Result<Option<ExactnessFailure>, ResolutionError> {
    let f = c.field;
    let (quotient, aug, maps, sizes) = strand(c, fc, q, a)?;
    let fail = |position: Option<usize>, reason: String| {
        Ok(Some(ExactnessFailure { degree: a.to_vec(), position, reason }))
    };
    let aug = aug.unwrap_or_else(|| Mat::zeros(f, sizes.first().copied().unwrap_or(0), quotient));
    // M_a → W^0_a injective, or M_a → 0 when the complex is empty
    let aug_rank = linalg::rank(&aug, f)?;
    if aug_rank != quotient {
        return fail(None, format!("augmentation has rank {aug_rank}, quotient component is {quotient}"));
    }
    if let Some(m0) = maps.first() {
        if !m0.mul(&aug).is_zero() {
            return fail(Some(0), "first map does not kill the augmentation".into());
        }
    }
    for i in 1..maps.len() {
        if !maps[i].mul(&maps[i - 1]).is_zero() {
            return fail(Some(i), format!("maps {} and {} do not compose to zero", i - 1, i));
        }
    }
    let ranks: Vec<usize> = maps.iter().map(|m| linalg::rank(m, f)).collect::<Result<_, _>>()?;
    for (i, &size) in sizes.iter().enumerate() {
        let incoming = if i == 0 { aug_rank } else { ranks[i - 1] };
        let outgoing = ranks.get(i).copied().unwrap_or(0);
        if size != incoming + outgoing {
            let h = size - incoming - outgoing;
            return fail(Some(i), format!("cohomology of dimension {h} at W^{i}"));
        }
    }
    Ok(None)
}

/// Every summand of `W^i` has Krull dimension `dim Δ − i`.
pub fn is_linear(c: &FaceModuleComplex, fc: &FaceComplex) -> bool {
    let n = fc.dim();
    c.terms.iter().enumerate().all(|(i, t)| i <= n && t.is_pure(n - i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPair {
    /// The map `W^i → W^{i+1}`.
    pub step: usize,
    pub label: String,
    pub source_copy: usize,
    pub target_copy: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityScan {
    pub pairs: Vec<SplitPair>,
    /// Whether an empty scan certifies minimality: only for complexes whose
    /// terms are pure with dimensions dropping by one per step.
    pub complete: bool,
}

/// Pairs of copies of the same face in consecutive terms joined by a nonzero
/// scalar; each one splits off a summand `0 → k[G] → k[G] → 0`.
pub fn minimality_scan(c: &FaceModuleComplex) -> MinimalityScan {
    let mut pairs = Vec::new();
    for (i, m) in c.maps.iter().enumerate() {
        let (src, tgt) = (c.terms[i].copies(), c.terms[i + 1].copies());
        for (r, t) in tgt.iter().enumerate() {
            for (col, s) in src.iter().enumerate() {
                if s.face == t.face && !m.get(r, col).is_zero() {
                    pairs.push(SplitPair { step: i, label: s.label.clone(), source_copy: col, target_copy: r });
                }
            }
        }
    }
    let dims: Vec<Option<usize>> = c
        .terms
        .iter()
        .map(|t| match t.summands.first() {
            Some(s) if t.is_pure(s.dim) => Some(s.dim),
            None => None,
            _ => Some(usize::MAX),
        })
        .collect();
    let complete = dims.iter().all(|d| *d != Some(usize::MAX))
        && dims.windows(2).all(|w| match (w[0], w[1]) {
            (Some(a), Some(b)) => a == b + 1,
            _ => true,
        });
    MinimalityScan { pairs, complete }
}

/// Hilbert function of `ω_{k[F]}` at `a`: 1 iff `a` is in the relative interior of F.
pub fn canonical_module_hilbert(
    fc: &FaceComplex,
    face: FaceId,
    a: &[BigInt],
    q: Option<&AffineSemigroup>,
) -> Result<u8, ResolutionError> {
    fc.check_id(face)?;
    Ok(u8::from(degrees::relative_interior(fc, q, a)?[face]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertPoint {
    #[serde(serialize_with = "degrees::serialize_ints")]
    pub degree: Vec<BigInt>,
    pub alternating_sum: i64,
    pub quotient: usize,
}

/// `Σ_i (−1)^i dim W^i_a` against `dim (k[Q]/I_Δ)_a` at every evaluation degree.
pub fn hilbert_points(
    c: &FaceModuleComplex,
    fc: &FaceComplex,
    q: Option<&AffineSemigroup>,
) -> Result<Vec<HilbertPoint>, ResolutionError> {
    degrees::evaluation_degrees(fc, q)?
        .into_iter()
        .map(|a| {
            let member = degrees::membership(fc, q, &a)?;
            let alternating_sum = c
                .terms
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let n: i64 = t.summands.iter().filter(|s| member[s.face]).map(|s| s.multiplicity as i64).sum();
                    if i % 2 == 0 {
                        n
                    } else {
                        -n
                    }
                })
                .sum();
            let quotient = usize::from(member.iter().any(|&m| m));
            Ok(HilbertPoint { degree: a, alternating_sum, quotient })
        })
        .collect()
}

/// Integer polynomial in `t`, lowest degree first, without trailing zeros.
pub type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn add_scaled(acc: &mut Poly, p: &[BigInt], c: &BigInt) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += c * x;
    }
}

/// `t^k (1 − t)^m`
pub fn monomial_times_one_minus_t(k: usize, m: usize) -> Poly {
    let mut p = vec![BigInt::zero(); k];
    let mut binom = BigInt::one();
    for j in 0..=m {
        p.push(if j % 2 == 0 { binom.clone() } else { -binom.clone() });
        binom = binom * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoarseHilbert {
    /// Common denominator exponent N: both sides are numerators over `(1 − t)^N`.
    pub denominator_exponent: usize,
    #[serde(serialize_with = "degrees::serialize_ints")]
    pub resolution_numerator: Poly,
    #[serde(serialize_with = "degrees::serialize_ints")]
    pub face_ring_numerator: Poly,
}

impl CoarseHilbert {
    pub fn holds(&self) -> bool {
        self.resolution_numerator == self.face_ring_numerator
    }
}

/// Coarse Hilbert series of the resolution, `Σ_i (−1)^i Σ m / (1 − t)^{dim G}`,
/// against `Σ_{F ∈ Δ} t^{dim F} / (1 − t)^{dim F}`, both over `(1 − t)^d`.
/// Meaningful for simplicial complexes, where `dim G` counts vertices.
pub fn coarse_hilbert(c: &FaceModuleComplex, fc: &FaceComplex) -> CoarseHilbert {
    let d = fc.ambient_dim();
    let mut lhs = Poly::new();
    for (i, t) in c.terms.iter().enumerate() {
        for s in &t.summands {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            add_scaled(&mut lhs, &monomial_times_one_minus_t(0, d - s.dim), &BigInt::from(sign * s.multiplicity as i64));
        }
    }
    let mut rhs = Poly::new();
    for face in fc.faces() {
        add_scaled(&mut rhs, &monomial_times_one_minus_t(face.dim, d - face.dim), &BigInt::one());
    }
    CoarseHilbert { denominator_exponent: d, resolution_numerator: trim(lhs), face_ring_numerator: trim(rhs) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cone_of_simplicial, SimplicialComplex};

    const Q: Field = Field::Rational;

    fn cone(d: usize, facets: &[&[usize]]) -> FaceComplex {
        let sc = SimplicialComplex::new(d, facets.iter().map(|f| f.to_vec()).collect()).unwrap();
        cone_of_simplicial(&sc).unwrap()
    }

    fn hollow() -> FaceComplex {
        cone(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    #[test]
    fn total_resolution_sizes() {
        let single = cone(1, &[&[1]]);
        assert_eq!(total_resolution(&single, Q).unwrap().term_sizes(), vec![2, 1]);
        let t = total_resolution(&hollow(), Q).unwrap();
        assert_eq!(t.term_sizes(), vec![7, 9, 3]);
        let r = verify_exactness(&t, &hollow(), None).unwrap();
        assert!(r.exact, "{r:?}");
        assert_eq!(r.degrees_checked, 8);
        assert!(!is_linear(&t, &hollow()));
        let scan = minimality_scan(&t);
        assert!(!scan.pairs.is_empty());
        assert!(!scan.complete);
    }

    #[test]
    fn minimal_resolution_of_hollow_triangle() {
        let fc = hollow();
        let m = minimal_linear_resolution(&fc, Q).unwrap();
        assert_eq!(m.term_sizes(), vec![3, 3, 1]);
        assert!(verify_exactness(&m, &fc, None).unwrap().exact);
        assert!(is_linear(&m, &fc));
        let scan = minimality_scan(&m);
        assert!(scan.pairs.is_empty() && scan.complete);
        assert!(coarse_hilbert(&m, &fc).holds());
        assert!(coarse_hilbert(&total_resolution(&fc, Q).unwrap(), &fc).holds());
        for p in hilbert_points(&m, &fc, None).unwrap() {
            assert_eq!(p.alternating_sum, p.quotient as i64);
        }
    }

    #[test]
    fn degenerate_resolutions() {
        let simplex = cone_of_simplicial(&SimplicialComplex::simplex(3)).unwrap();
        let m = minimal_linear_resolution(&simplex, Q).unwrap();
        assert_eq!(m.term_sizes(), vec![1, 0, 0, 0]);
        assert_eq!(m.terms[0].summands[0].label, "{1,2,3}");
        assert!(verify_exactness(&m, &simplex, None).unwrap().exact);

        let point = cone_of_simplicial(&SimplicialComplex::new(2, vec![vec![]]).unwrap()).unwrap();
        let m = minimal_linear_resolution(&point, Q).unwrap();
        assert_eq!(m.term_sizes(), vec![1]);
        assert!(verify_exactness(&m, &point, None).unwrap().exact);
        assert!(is_linear(&m, &point));
    }

    #[test]
    fn bowtie_is_refused() {
        let fc = cone(5, &[&[1, 2, 3], &[3, 4, 5]]);
        match minimal_linear_resolution(&fc, Q) {
            Err(ResolutionError::NotCohenMacaulay(w)) => assert_eq!((w.label.as_str(), w.degree), ("{3}", 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dropping_a_summand_breaks_exactness() {
        let fc = hollow();
        let mut m = minimal_linear_resolution(&fc, Q).unwrap();
        m.terms[1].summands.remove(0);
        m.maps[0] = m.maps[0].select(&[1, 2], &[0, 1, 2]);
        m.maps[1] = m.maps[1].select(&[0], &[1, 2]);
        let r = verify_exactness(&m, &fc, None).unwrap();
        assert!(!r.exact);
        assert!(r.failure.is_some());
    }

    #[test]
    fn appended_identity_is_a_split_pair() {
        let fc = hollow();
        let mut m = minimal_linear_resolution(&fc, Q).unwrap();
        let g = m.terms[2].summands[0].clone();
        m.terms.push(FaceModule { summands: vec![g] });
        m.maps.push(Mat::identity(Q, 1));
        let scan = minimality_scan(&m);
        assert_eq!(scan.pairs.len(), 1);
        assert_eq!(scan.pairs[0].step, 2);
    }

    #[test]
    fn canonical_module_values() {
        let fc = hollow();
        let zero = degrees::zero_degree(3);
        assert_eq!(canonical_module_hilbert(&fc, fc.minimal().unwrap(), &zero, None).unwrap(), 1);
        let e12 = fc.find("{1,2}").unwrap();
        assert_eq!(canonical_module_hilbert(&fc, e12, &degrees::from_i64(&[1, 1, 0]), None).unwrap(), 1);
        assert_eq!(canonical_module_hilbert(&fc, e12, &degrees::from_i64(&[1, 0, 0]), None).unwrap(), 0);
    }

    #[test]
    fn serial_round_trip() {
        let fc = hollow();
        let m = minimal_linear_resolution(&fc, Field::prime(3).unwrap()).unwrap();
        let json = serde_json::to_string(&m.to_serial()).unwrap();
        let back: SerialComplex = serde_json::from_str(&json).unwrap();
        let mut again = FaceModuleComplex::from_serial(back).unwrap();
        again.rebind(&fc).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn binomial_rows() {
        assert_eq!(monomial_times_one_minus_t(1, 2), degrees::from_i64(&[0, 1, -2, 1]));
    }
}
