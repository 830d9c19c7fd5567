//! Fixtures and independent checks shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeeman::complexes::{cone_of_simplicial, reduced_cohomology, FaceComplex, SimplicialComplex};
use zeeman::input::{self, Input};
use zeeman::linalg::Field;

pub const RP2_FACETS: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [3, 4, 6],
    [2, 4, 5],
    [3, 5, 6],
    [2, 4, 6],
];

pub fn simplicial(d: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::new(d, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
}

pub fn hollow_triangle() -> SimplicialComplex {
    simplicial(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

pub fn bowtie() -> SimplicialComplex {
    simplicial(5, &[&[1, 2, 3], &[3, 4, 5]])
}

pub fn rp2() -> SimplicialComplex {
    SimplicialComplex::new(6, RP2_FACETS.iter().map(|f| f.to_vec()).collect()).unwrap()
}

pub fn cone(sc: &SimplicialComplex) -> FaceComplex {
    cone_of_simplicial(sc).unwrap()
}

pub const SQUARE_CONE: &str = "semigroup
dim 3
functional 1 0 0
functional 0 1 0
functional -1 0 1
functional 0 -1 1
";

/// Two adjacent facets of the cone over a square, with all their faces.
pub fn square_cone_pair() -> Input {
    input::parse(&format!("{SQUARE_CONE}face 1\nface 2\n")).unwrap()
}

pub fn fields() -> [Field; 3] {
    [Field::Rational, Field::prime(2).unwrap(), Field::prime(3).unwrap()]
}

/// A random simplicial complex on at most `max_d` vertices: a handful of
/// random facets, with the point complex `{∅}`, the full simplex and the
/// six-vertex projective plane mixed in.
pub fn random_complex(rng: &mut ChaCha8Rng, max_d: usize) -> SimplicialComplex {
    let d = if rng.gen_bool(0.1) { rng.gen_range(1..=max_d) } else { rng.gen_range(3.min(max_d)..=max_d) };
    match rng.gen_range(0..20) {
        0 => return SimplicialComplex::new(d, vec![vec![]]).unwrap(),
        1 => return SimplicialComplex::simplex(d),
        2 if max_d >= 6 => return rp2(),
        _ => {}
    }
    // mostly pure complexes of a common facet size, some with one size less
    let k = if d >= 3 && rng.gen_bool(0.85) { rng.gen_range(2..=d.min(4)) } else { rng.gen_range(1..=d.min(4)) };
    let mixed = rng.gen_bool(0.4);
    let count = if k >= 3 { rng.gen_range(2..=5) } else { rng.gen_range(2..=7) };
    let vertices: Vec<usize> = (1..=d).collect();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for _ in 0..count {
        let size = if mixed && k > 1 && rng.gen_bool(0.4) { k - 1 } else { k };
        let mut f: Vec<usize> = vertices.choose_multiple(rng, size).copied().collect();
        f.sort_unstable();
        if !facets.contains(&f) {
            facets.push(f);
        }
    }
    SimplicialComplex::new(d, facets).unwrap()
}

pub fn sweep(seed: u64, count: usize, max_d: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_complex(&mut rng, max_d)).collect()
}

/// Reisner's criterion: every link (including the link of ∅) has vanishing
/// reduced cohomology below its own dimension.
pub fn reisner_cm(sc: &SimplicialComplex, f: Field) -> bool {
    sc.faces().iter().all(|face| {
        let link = sc.link(face);
        let top = link.simplicial_dim().unwrap_or(-1);
        reduced_cohomology(&link, f).into_iter().all(|(i, dim)| i >= top || dim == 0)
    })
}
