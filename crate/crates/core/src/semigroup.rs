//! Normal affine semigroups cut out by primitive integer functionals.
//!
//! `Q = { a ∈ Z^d : τ_i(a) ≥ 0 for all i }`. Faces are enumerated by testing,
//! for each subset `S` of functionals, whether `τ_S = 0, τ_rest > 0` has a
//! rational solution (Fourier–Motzkin). Feasible subsets are exactly the
//! vanishing sets of faces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{self, ComplexError, Cover, Face, FaceComplex, FaceGeometry};
use crate::linalg::{self, Field, Mat, Scalar};

/// Upper bound on the number of functionals (faces are found by subset enumeration).
pub const MAX_FUNCTIONALS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("functional {index} has length {len}, expected {d}")]
    Length { index: usize, len: usize, d: usize },
    #[error("functional {0} is not primitive (entries share a common factor)")]
    NotPrimitive(usize),
    #[error("the cone contains a line (functionals have rank {rank} < {d})")]
    NotPointed { rank: usize, d: usize },
    #[error("the cone is not full-dimensional")]
    NotFullDimensional,
    #[error("at most {MAX_FUNCTIONALS} functionals are supported, got {0}")]
    TooManyFunctionals(usize),
    #[error("degree has length {len}, expected {d}")]
    DegreeLength { len: usize, d: usize },
    #[error("{0} is not the vanishing set of a face")]
    NotAFace(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A face of the cone, identified by the full set of functionals vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFace {
    /// 1-based indices of vanishing functionals, sorted.
    pub vanishing: Vec<usize>,
    pub dim: usize,
    pub interior_point: Vec<BigInt>,
}

#[derive(Clone, Debug)]
pub struct AffineSemigroup {
    d: usize,
    functionals: Vec<Vec<BigInt>>,
    faces: Vec<ConeFace>,
}

impl AffineSemigroup {
    pub fn new(d: usize, functionals: Vec<Vec<BigInt>>) -> Result<Self, SemigroupError> {
        let n = functionals.len();
        if n > MAX_FUNCTIONALS {
            return Err(SemigroupError::TooManyFunctionals(n));
        }
        for (i, t) in functionals.iter().enumerate() {
            if t.len() != d {
                return Err(SemigroupError::Length { index: i + 1, len: t.len(), d });
            }
            let g = t.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_one() {
                return Err(SemigroupError::NotPrimitive(i + 1));
            }
        }
        let q = Field::Rational;
        let rank = linalg::rank(&functional_matrix(&functionals, &(0..n).collect::<Vec<_>>()), q)
            .expect("rational");
        if rank < d {
            return Err(SemigroupError::NotPointed { rank, d });
        }
        let mut found: Vec<(Vec<usize>, usize)> = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let zero: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let Some(basis) = feasible_face(&functionals, &zero, d) else {
                continue;
            };
            found.push((zero, basis.len()));
        }
        if !found.iter().any(|(z, _)| z.is_empty()) {
            return Err(SemigroupError::NotFullDimensional);
        }
        found.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        let mut semigroup = AffineSemigroup { d, functionals, faces: Vec::new() };
        let rays: Vec<(Vec<usize>, Vec<BigInt>)> = found
            .iter()
            .filter(|(_, dim)| *dim == 1)
            .map(|(z, _)| (z.clone(), semigroup.ray_generator(z)))
            .collect();
        semigroup.faces = found
            .into_iter()
            .map(|(zero, dim)| {
                let mut point = vec![BigInt::zero(); d];
                for (rz, r) in &rays {
                    if zero.iter().all(|i| rz.contains(i)) {
                        for (p, x) in point.iter_mut().zip(r) {
                            *p += x;
                        }
                    }
                }
                ConeFace { vanishing: zero.iter().map(|i| i + 1).collect(), dim, interior_point: point }
            })
            .collect();
        Ok(semigroup)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(d: usize, functionals: &[Vec<i64>]) -> Result<Self, SemigroupError> {
        Self::new(d, functionals.iter().map(|t| t.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// `N^d`, cut out by the coordinate functionals.
    pub fn orthant(d: usize) -> Self {
        let rows: Vec<Vec<i64>> =
            (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        Self::from_i64(d, &rows).expect("the orthant is a valid cone")
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn functionals(&self) -> &[Vec<BigInt>] {
        &self.functionals
    }

    /// Faces ordered by dimension, then by vanishing set. Index `i` here is face
    /// id `i` in [`face_lattice`].
    pub fn faces(&self) -> &[ConeFace] {
        &self.faces
    }

    pub fn face_by_vanishing(&self, vanishing: &[usize]) -> Option<usize> {
        let mut v = vanishing.to_vec();
        v.sort_unstable();
        v.dedup();
        self.faces.iter().position(|f| f.vanishing == v)
    }

    pub fn evaluate(&self, i: usize, a: &[BigInt]) -> BigInt {
        self.functionals[i].iter().zip(a).map(|(t, x)| t * x).sum()
    }

    fn check_len(&self, a: &[BigInt]) -> Result<(), SemigroupError> {
        if a.len() == self.d {
            Ok(())
        } else {
            Err(SemigroupError::DegreeLength { len: a.len(), d: self.d })
        }
    }

    /// Primitive generator of a ray given by its (0-based) vanishing set.
    fn ray_generator(&self, zero: &[usize]) -> Vec<BigInt> {
        let q = Field::Rational;
        let k = linalg::kernel_basis(&functional_matrix(&self.functionals, zero), q).expect("rational");
        debug_assert_eq!(k.len(), 1);
        let rats: Vec<BigRational> = k[0]
            .iter()
            .map(|s| match s {
                Scalar::Rational(r) => r.clone(),
                Scalar::Mod(_) => unreachable!(),
            })
            .collect();
        let lcm = rats.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut v: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
        let outside = (0..self.functionals.len()).find(|i| !zero.contains(i));
        if let Some(j) = outside {
            if self.evaluate(j, &v).is_negative() {
                v.iter_mut().for_each(|x| *x = -x.clone());
            }
        }
        v
    }
}

fn functional_matrix(functionals: &[Vec<BigInt>], rows: &[usize]) -> Mat {
    let q = Field::Rational;
    let d = functionals.first().map(Vec::len).unwrap_or(0);
    let mut m = Mat::zeros(q, rows.len(), d);
    for (r, &i) in rows.iter().enumerate() {
        for (j, x) in functionals[i].iter().enumerate() {
            m.set(r, j, q.from_bigint(x));
        }
    }
    m
}

fn as_rational(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rational(r) => r.clone(),
        Scalar::Mod(_) => unreachable!("rational computation"),
    }
}

/// If `τ_zero = 0, τ_other > 0` is feasible, returns a basis of the linear span
/// `{τ_zero = 0}` (whose length is the face dimension).
fn feasible_face(functionals: &[Vec<BigInt>], zero: &[usize], d: usize) -> Option<Vec<Vec<BigRational>>> {
    let q = Field::Rational;
    let m = functional_matrix(functionals, zero);
    let kernel: Vec<Vec<BigRational>> = if zero.is_empty() {
        (0..d)
            .map(|i| (0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect()
    } else {
        linalg::kernel_basis(&m, q).expect("rational").iter().map(|v| v.iter().map(as_rational).collect()).collect()
    };
    let others: Vec<usize> = (0..functionals.len()).filter(|i| !zero.contains(i)).collect();
    if kernel.is_empty() {
        return others.is_empty().then_some(kernel);
    }
    // constraints (τ_j K) · y ≥ 1
    let rows: Vec<(Vec<BigRational>, BigRational)> = others
        .iter()
        .map(|&j| {
            let coeffs = kernel
                .iter()
                .map(|k| {
                    functionals[j].iter().zip(k).map(|(t, x)| BigRational::from_integer(t.clone()) * x).sum()
                })
                .collect();
            (coeffs, BigRational::one())
        })
        .collect();
    fourier_motzkin_feasible(rows, kernel.len()).then_some(kernel)
}

/// Decides feasibility of `{ y : a · y ≥ b }` by eliminating variables one at a time.
pub(crate) fn fourier_motzkin_feasible(mut rows: Vec<(Vec<BigRational>, BigRational)>, vars: usize) -> bool {
    for v in (0..vars).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in rows {
            match a[v].cmp(&BigRational::zero()) {
                std::cmp::Ordering::Greater => pos.push((a, b)),
                std::cmp::Ordering::Less => neg.push((a, b)),
                std::cmp::Ordering::Equal => rest.push((a, b)),
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (cp, cn) = (ap[v].clone(), -an[v].clone());
                let a: Vec<BigRational> =
                    ap.iter().zip(an).map(|(x, y)| x / &cp + y / &cn).collect();
                let b = bp / &cp + bn / &cn;
                rest.push((a, b));
            }
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    rows.iter().all(|(_, b)| !b.is_positive())
}

/// The face poset of the real cone, with orientation-derived incidence signs.
///
/// Each face span gets the reduced-row-echelon basis of `{τ_S = 0}`. For a facet
/// `G ⊂ F`, `ε(G, F)` is the sign of the determinant of `[basis(G); p_F]` written
/// in the basis of `F`, where `p_F` is the interior point of `F`.
pub fn face_lattice(q: &AffineSemigroup) -> Result<FaceComplex, SemigroupError> {
    let field = Field::Rational;
    let faces = q.faces();
    let bases: Vec<(Mat, Vec<usize>)> = faces
        .iter()
        .map(|f| {
            let zero: Vec<usize> = f.vanishing.iter().map(|i| i - 1).collect();
            let span = if f.dim == 0 {
                Vec::new()
            } else if zero.is_empty() {
                (0..q.d).map(|i| (0..q.d).map(|j| field.from_i64(i64::from(i == j))).collect()).collect()
            } else {
                linalg::kernel_basis(&functional_matrix(&q.functionals, &zero), field).expect("rational")
            };
            let rows = Mat::from_columns(field, q.d, &span).transpose();
            let e = linalg::echelon(&rows);
            let basis = e.rref.select(&(0..e.pivots.len()).collect::<Vec<_>>(), &(0..q.d).collect::<Vec<_>>());
            (basis, e.pivots)
        })
        .collect();
    let mut covers = Vec::new();
    for (upper, f) in faces.iter().enumerate() {
        for (lower, g) in faces.iter().enumerate() {
            if g.dim + 1 != f.dim || !f.vanishing.iter().all(|i| g.vanishing.contains(i)) {
                continue;
            }
            let (basis_f, pivots_f) = &bases[upper];
            let (basis_g, _) = &bases[lower];
            let k = f.dim;
            let mut m = Mat::zeros(field, k, k);
            for r in 0..basis_g.rows() {
                for (c, &p) in pivots_f.iter().enumerate() {
                    m.set(r, c, basis_g.get(r, p).clone());
                }
            }
            for (c, &p) in pivots_f.iter().enumerate() {
                m.set(k - 1, c, field.from_bigint(&f.interior_point[p]));
            }
            debug_assert_eq!(basis_f.rows(), k);
            let sign = match linalg::determinant(&m).signum() {
                1 => 1,
                -1 => -1,
                _ => unreachable!("interior point lies outside the facet span"),
            };
            covers.push(Cover { lower, upper, sign });
        }
    }
    let cfaces = faces
        .iter()
        .map(|f| Face {
            dim: f.dim,
            label: format!("v{}", complexes::set_label(&f.vanishing)),
            geometry: FaceGeometry::Cone(f.vanishing.clone()),
        })
        .collect();
    Ok(FaceComplex::new(q.d, cfaces, covers)?)
}

/// `a ∈ face`: all vanishing functionals are zero at `a`, and all functionals are ≥ 0.
pub fn membership(q: &AffineSemigroup, face: &ConeFace, a: &[BigInt]) -> Result<bool, SemigroupError> {
    q.check_len(a)?;
    Ok((0..q.functionals.len()).all(|i| {
        let v = q.evaluate(i, a);
        if face.vanishing.contains(&(i + 1)) {
            v.is_zero()
        } else {
            !v.is_negative()
        }
    }))
}

/// `a` in the relative interior of `face`: membership plus strict positivity on
/// every functional that does not vanish on the face.
pub fn in_relative_interior(q: &AffineSemigroup, face: &ConeFace, a: &[BigInt]) -> Result<bool, SemigroupError> {
    q.check_len(a)?;
    Ok((0..q.functionals.len()).all(|i| {
        let v = q.evaluate(i, a);
        if face.vanishing.contains(&(i + 1)) {
            v.is_zero()
        } else {
            v.is_positive()
        }
    }))
}

/// One lattice point in the relative interior of each face (face order as in
/// [`AffineSemigroup::faces`]); the minimal face gets the origin.
pub fn relint_representatives(q: &AffineSemigroup) -> Vec<Vec<BigInt>> {
    q.faces.iter().map(|f| f.interior_point.clone()).collect()
}

/// The subcomplex of the cone generated by the faces with the given vanishing sets.
pub fn cone_subcomplex(q: &AffineSemigroup, generators: &[Vec<usize>]) -> Result<FaceComplex, SemigroupError> {
    let lattice = face_lattice(q)?;
    let ids = generators
        .iter()
        .map(|v| q.face_by_vanishing(v).ok_or_else(|| SemigroupError::NotAFace(complexes::set_label(v))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(complexes::subcomplex(&lattice, &ids)?)
}
