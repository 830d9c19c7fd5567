//! Which faces of Δ contain a given `Z^d`-degree, and the finite set of degrees
//! at which degreewise statements are checked.
//!
//! Every module in play (`k[G]`, `ω_{k[F]}`, `k[Q]/I_Δ`) has a degree-`a`
//! component that depends only on the face of the ambient cone carrying `a` in
//! its relative interior, so one degree per ambient face is a complete test set.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::complexes::{FaceComplex, FaceGeometry};
use crate::semigroup::{self, AffineSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error("degree has length {len}, ambient rank is {d}")]
    Length { len: usize, d: usize },
    #[error("graded evaluation needs the semigroup (face {0} has no coordinates)")]
    MissingSemigroup(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

pub fn zero_degree(d: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); d]
}

pub fn is_zero(a: &[BigInt]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn from_i64(a: &[i64]) -> Vec<BigInt> {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

fn check(fc: &FaceComplex, a: &[BigInt]) -> Result<(), DegreeError> {
    if a.len() == fc.ambient_dim() {
        Ok(())
    } else {
        Err(DegreeError::Length { len: a.len(), d: fc.ambient_dim() })
    }
}

/// `a ∈ G` for each face G of `fc`.
pub fn membership(fc: &FaceComplex, q: Option<&AffineSemigroup>, a: &[BigInt]) -> Result<Vec<bool>, DegreeError> {
    check(fc, a)?;
    if is_zero(a) {
        return Ok(vec![true; fc.len()]);
    }
    fc.faces()
        .iter()
        .map(|face| match &face.geometry {
            FaceGeometry::Simplex(v) => Ok(a
                .iter()
                .enumerate()
                .all(|(i, x)| !x.is_negative() && (x.is_zero() || v.contains(&(i + 1))))),
            FaceGeometry::Cone(vanishing) => {
                let q = q.ok_or_else(|| DegreeError::MissingSemigroup(face.label.clone()))?;
                let cf = cone_face(q, vanishing, &face.label)?;
                Ok(semigroup::membership(q, cf, a)?)
            }
            FaceGeometry::Abstract => Err(DegreeError::MissingSemigroup(face.label.clone())),
        })
        .collect()
}

/// `a` in the relative interior of G, for each face G of `fc`.
pub fn relative_interior(
    fc: &FaceComplex,
    q: Option<&AffineSemigroup>,
    a: &[BigInt],
) -> Result<Vec<bool>, DegreeError> {
    check(fc, a)?;
    if is_zero(a) {
        return Ok(fc.faces().iter().map(|f| f.dim == 0).collect());
    }
    fc.faces()
        .iter()
        .map(|face| match &face.geometry {
            FaceGeometry::Simplex(v) => Ok(a.iter().enumerate().all(|(i, x)| {
                if v.contains(&(i + 1)) {
                    x.is_positive()
                } else {
                    x.is_zero()
                }
            })),
            FaceGeometry::Cone(vanishing) => {
                let q = q.ok_or_else(|| DegreeError::MissingSemigroup(face.label.clone()))?;
                let cf = cone_face(q, vanishing, &face.label)?;
                Ok(semigroup::in_relative_interior(q, cf, a)?)
            }
            FaceGeometry::Abstract => Err(DegreeError::MissingSemigroup(face.label.clone())),
        })
        .collect()
}

fn cone_face<'a>(
    q: &'a AffineSemigroup,
    vanishing: &[usize],
    label: &str,
) -> Result<&'a semigroup::ConeFace, DegreeError> {
    q.face_by_vanishing(vanishing)
        .map(|i| &q.faces()[i])
        .ok_or_else(|| SemigroupError::NotAFace(label.to_string()).into())
}

/// One degree per face of the ambient cone: all 0/1 vectors for simplicial
/// complexes over `N^d`, the interior representatives of `q` otherwise.
pub fn evaluation_degrees(fc: &FaceComplex, q: Option<&AffineSemigroup>) -> Result<Vec<Vec<BigInt>>, DegreeError> {
    if fc.is_simplicial() {
        let d = fc.ambient_dim();
        return Ok((0u64..1 << d)
            .map(|mask| (0..d).map(|i| BigInt::from((mask >> i) & 1)).collect())
            .collect());
    }
    if let Some(face) = fc.faces().iter().find(|f| matches!(f.geometry, FaceGeometry::Abstract)) {
        return Err(DegreeError::MissingSemigroup(face.label.clone()));
    }
    let q = q.ok_or_else(|| DegreeError::MissingSemigroup(fc.face(0).label.clone()))?;
    if q.ambient_dim() != fc.ambient_dim() {
        return Err(DegreeError::Length { len: q.ambient_dim(), d: fc.ambient_dim() });
    }
    Ok(semigroup::relint_representatives(q))
}

/// Whether `a` lies on some face of Δ, i.e. the quotient `k[Q]/I_Δ` is nonzero in degree `a`.
pub fn in_complex(fc: &FaceComplex, q: Option<&AffineSemigroup>, a: &[BigInt]) -> Result<bool, DegreeError> {
    Ok(membership(fc, q, a)?.into_iter().any(|m| m))
}

/// Serializes integer vectors as decimal strings, since they may exceed any fixed width.
pub fn serialize_ints<S: serde::Serializer>(a: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(a.iter().map(|x| x.to_string()))
}

pub fn format_degree(a: &[BigInt]) -> String {
    a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cone_of_simplicial, SimplicialComplex};

    #[test]
    fn simplicial_membership_and_interior() {
        let sc = SimplicialComplex::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        let fc = cone_of_simplicial(&sc).unwrap();
        let a = from_i64(&[1, 1, 0]);
        let m = membership(&fc, None, &a).unwrap();
        let labels: Vec<&str> =
            fc.ids().filter(|&i| m[i]).map(|i| fc.face(i).label.as_str()).collect();
        assert_eq!(labels, vec!["{1,2}"]);
        let r = relative_interior(&fc, None, &from_i64(&[1, 0, 0])).unwrap();
        assert!(r[fc.find("{1}").unwrap()]);
        assert!(!r[fc.find("{1,2}").unwrap()]);
        assert!(!in_complex(&fc, None, &from_i64(&[1, 0, 1])).unwrap());
        assert!(membership(&fc, None, &from_i64(&[1, 0])).is_err());
    }

    #[test]
    fn orthant_degrees_are_squarefree() {
        let sc = SimplicialComplex::simplex(3);
        let fc = cone_of_simplicial(&sc).unwrap();
        assert_eq!(evaluation_degrees(&fc, None).unwrap().len(), 8);
    }
}
