mod common;

use zeeman::complexes::alexander_dual;
use zeeman::degrees;
use zeeman::eagon_reiner::{betti_from_dual, betti_hochster, dualize, IdealKind};
use zeeman::linalg::Field;
use zeeman::resolutions::{canonical_module_hilbert, minimal_linear_resolution, verify_exactness};
use zeeman::semigroup::relint_representatives;
use zeeman::zeeman::{build, page, Page};

use common::*;

#[test]
fn graded_abutment_detects_membership() {
    let fc = cone(&hollow_triangle());
    for mask in 0..8i64 {
        let a: Vec<i64> = (0..3).map(|i| (mask >> i) & 1).collect();
        let z = build(&fc, &degrees::from_i64(&a), Field::Rational, None).unwrap();
        let einf = page(&z, &fc, Page::Infinity).unwrap();
        let expected = usize::from(mask != 7);
        assert_eq!(einf.total_dim(), expected, "a = {a:?}");
    }
}

#[test]
fn square_cone_vertical_cohomology_follows_relative_interiors() {
    let inp = square_cone_pair();
    let q = inp.semigroup().unwrap();
    let fc = &inp.complex;
    for a in relint_representatives(q) {
        let z = build(fc, &a, Field::prime(3).unwrap(), Some(q)).unwrap();
        let v = z.vertical_cohomology().unwrap();
        for ((p, qq), dim) in &v {
            assert_eq!(*p, -qq);
            let count: u8 = fc
                .faces_of_dim(*p as usize)
                .into_iter()
                .map(|g| canonical_module_hilbert(fc, g, &a, Some(q)).unwrap())
                .sum();
            assert_eq!(*dim, count as usize);
        }
    }
}

#[test]
fn graded_build_needs_the_semigroup() {
    let inp = square_cone_pair();
    let a = inp.semigroup().unwrap().faces()[1].interior_point.clone();
    assert!(build(&inp.complex, &a, Field::Rational, None).is_err());
    assert!(build(&inp.complex, &a[..2], Field::Rational, inp.semigroup()).is_err());
}

#[test]
fn square_cone_pair_resolves_minimally() {
    let inp = square_cone_pair();
    let res = minimal_linear_resolution(&inp.complex, Field::Rational).unwrap();
    // two facets, the shared ray, then nothing: the union is a 2-ball
    assert_eq!(res.term_sizes(), vec![2, 1, 0]);
    assert!(verify_exactness(&res, &inp.complex, inp.semigroup()).unwrap().exact);
}

#[test]
fn extreme_duals() {
    let point = simplicial(3, &[&[]]);
    let fc = cone(&point);
    let dc = dualize(&minimal_linear_resolution(&fc, Field::Rational).unwrap(), &fc).unwrap();
    let bt = betti_from_dual(&dc);
    assert_eq!(bt.get(0, &[1, 2, 3]), 1);
    assert_eq!(bt, betti_hochster(&alexander_dual(&point), Field::Rational));

    let full = zeeman::complexes::SimplicialComplex::simplex(3);
    let fc = cone(&full);
    let dc = dualize(&minimal_linear_resolution(&fc, Field::Rational).unwrap(), &fc).unwrap();
    let bt = betti_from_dual(&dc);
    assert_eq!(bt.ideal, IdealKind::Unit);
    assert_eq!(bt, betti_hochster(&alexander_dual(&full), Field::Rational));
}
