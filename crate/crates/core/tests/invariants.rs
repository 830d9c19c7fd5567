mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zeeman::complexes::{alexander_dual, upper_set, SimplicialComplex};
use zeeman::degrees;
use zeeman::eagon_reiner::{betti_from_dual, betti_hochster, dualize, ideal_numerator, verify_dual_exactness};
use zeeman::linalg::{kernel_basis, rank, Field, Mat};
use zeeman::local_cohomology::local_cohomology;
use zeeman::resolutions::{
    minimal_linear_resolution, total_resolution, verify_exactness, FaceModuleComplex, SerialComplex,
};
use zeeman::zeeman::{build, page, Page};

use common::*;

fn complex_from(seed: u64) -> SimplicialComplex {
    random_complex(&mut ChaCha8Rng::seed_from_u64(seed), 6)
}

fn field_from(i: usize) -> Field {
    fields()[i % 3]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-3i64..4, 36), fi in 0usize..3) {
        let f = field_from(fi);
        let m = Mat::from_i64(f, rows, cols, &entries[..rows * cols]).unwrap();
        let ker = kernel_basis(&m, f).unwrap();
        prop_assert_eq!(rank(&m, f).unwrap() + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(rank(&m.transpose(), f).unwrap(), rank(&m, f).unwrap());
    }

    #[test]
    fn alexander_duality_is_an_involution(seed in any::<u64>()) {
        let sc = complex_from(seed);
        prop_assert_eq!(alexander_dual(&alexander_dual(&sc)), sc);
    }

    #[test]
    fn double_complex_identities(seed in any::<u64>(), fi in 0usize..3) {
        let fc = cone(&complex_from(seed));
        let z = build(&fc, &degrees::zero_degree(fc.ambient_dim()), field_from(fi), None).unwrap();
        prop_assert!(z.identities().all());
    }

    #[test]
    fn local_cohomology_euler_characteristic(seed in any::<u64>(), fi in 0usize..3) {
        let fc = cone(&complex_from(seed));
        for g in fc.ids() {
            let lc = local_cohomology(&fc, g, field_from(fi)).unwrap();
            let up = upper_set(&fc, g).unwrap();
            let faces: i64 = up.by_degree.iter().map(|(&p, v)| if p % 2 == 0 { v.len() as i64 } else { -(v.len() as i64) }).sum();
            prop_assert_eq!(lc.summary.euler(), faces);
        }
    }

    #[test]
    fn total_resolution_is_exact(seed in any::<u64>(), fi in 0usize..3) {
        let fc = cone(&complex_from(seed));
        let res = total_resolution(&fc, field_from(fi)).unwrap();
        let report = verify_exactness(&res, &fc, None).unwrap();
        prop_assert!(report.exact, "{:?}", report);
    }

    #[test]
    fn euler_characteristic_is_constant_across_pages(seed in any::<u64>(), fi in 0usize..3) {
        let fc = cone(&complex_from(seed));
        let z = build(&fc, &degrees::zero_degree(fc.ambient_dim()), field_from(fi), None).unwrap();
        let chi: Vec<i64> = [Page::Zero, Page::One, Page::Two, Page::Infinity]
            .into_iter()
            .map(|r| page(&z, &fc, r).unwrap().euler())
            .collect();
        prop_assert!(chi.iter().all(|&c| c == 1), "{:?}", chi);
    }

    #[test]
    fn betti_numbers_match_the_hilbert_numerator(seed in any::<u64>(), fi in 0usize..3) {
        let dual = alexander_dual(&complex_from(seed));
        let bt = betti_hochster(&dual, field_from(fi));
        prop_assert_eq!(bt.k_polynomial(), ideal_numerator(&dual));
    }

    #[test]
    fn dualized_resolution_matches_hochster(seed in any::<u64>(), fi in 0usize..3) {
        let sc = complex_from(seed);
        let fc = cone(&sc);
        let f = field_from(fi);
        if let Ok(res) = minimal_linear_resolution(&fc, f) {
            let dual = alexander_dual(&sc);
            let dc = dualize(&res, &fc).unwrap();
            prop_assert!(verify_dual_exactness(&dc, &dual).unwrap().exact);
            prop_assert_eq!(betti_from_dual(&dc), betti_hochster(&dual, f));
        }
    }

    #[test]
    fn resolutions_survive_json(seed in any::<u64>(), fi in 0usize..3) {
        let fc = cone(&complex_from(seed));
        let res = total_resolution(&fc, field_from(fi)).unwrap();
        let json = serde_json::to_string(&res.to_serial()).unwrap();
        let mut back = FaceModuleComplex::from_serial(serde_json::from_str::<SerialComplex>(&json).unwrap()).unwrap();
        back.rebind(&fc).unwrap();
        prop_assert_eq!(back, res);
    }
}
