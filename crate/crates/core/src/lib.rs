//! Exact computations for quotients `k[Q]/I_Δ` of normal affine semigroup rings
//! by radical monomial ideals: local cohomology of face posets, the Zeeman
//! double complex and its spectral sequence pages, Cohen–Macaulay tests,
//! irreducible resolutions, and (for `Q = N^d`) Alexander-dual Betti tables.

pub mod complexes;
pub mod eagon_reiner;
pub mod input;
pub mod degrees;
pub mod linalg;
pub mod local_cohomology;
pub mod resolutions;
pub mod semigroup;
pub mod zeeman;
