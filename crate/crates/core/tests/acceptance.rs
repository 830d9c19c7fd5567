//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeeman::complexes::{alexander_dual, reduced_cohomology, validate, FaceComplex, SimplicialComplex};
use zeeman::degrees;
use zeeman::eagon_reiner::{betti_from_dual, betti_hochster, dualize, is_linear_table, verify_dual_exactness};
use zeeman::linalg::Field;
use zeeman::local_cohomology::{is_cohen_macaulay, LocalCohomologyTable};
use zeeman::resolutions::{
    coarse_hilbert, hilbert_points, is_linear, minimal_linear_resolution, minimality_scan, total_resolution,
    verify_exactness, ResolutionError,
};
use zeeman::semigroup::face_lattice;
use zeeman::zeeman::{build, concentration_check, page, total_complex, Page};
use zeeman::local_cohomology::cohomology;

use common::*;

const HOLLOW_LIMIT: Duration = Duration::from_secs(1);
const RP2_LIMIT: Duration = Duration::from_secs(5);
const SWEEP_LIMIT: Duration = Duration::from_secs(120);
const CONE_LIMIT: Duration = Duration::from_secs(5);
const SWEEP_SIZE: usize = 200;
const SWEEP_SEED: u64 = 0x5eed_0042;
const MAX_VERTICES: usize = 6;
const GRADED_PAIRS: usize = 24;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q() -> Field {
    Field::Rational
}

fn p(n: u64) -> Field {
    Field::prime(n).unwrap()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ordinary(fc: &FaceComplex, f: Field) -> Result<zeeman::zeeman::ZeemanComplex, String> {
    build(fc, &degrees::zero_degree(fc.ambient_dim()), f, None).map_err(err)
}

fn hollow_triangle_pipeline() -> Check {
    let sc = hollow_triangle();
    let fc = cone(&sc);
    for f in [q(), p(2)] {
        ensure!(is_cohen_macaulay(&fc, f).map_err(err)?.cohen_macaulay, "not CM over {f}");
        let z = ordinary(&fc, f)?;
        let e1 = page(&z, &fc, Page::One).map_err(err)?;
        ensure!(concentration_check(&e1, 2).concentrated, "E1 not concentrated over {f}");
        let column: Vec<usize> = (0..=2).map(|g| e1.dim((2, -g))).collect();
        ensure!(column == [1, 3, 3], "E1 column {column:?} over {f}");
        let res = minimal_linear_resolution(&fc, f).map_err(err)?;
        ensure!(res.term_sizes() == [3, 3, 1], "terms {:?}", res.term_sizes());
        let ex = verify_exactness(&res, &fc, None).map_err(err)?;
        ensure!(ex.exact && ex.degrees_checked == 8, "exactness {ex:?}");
        ensure!(is_linear(&res, &fc), "not linear");
        ensure!(minimality_scan(&res).pairs.is_empty(), "split pairs in the minimal resolution");
        let dual = alexander_dual(&sc);
        let dc = dualize(&res, &fc).map_err(err)?;
        ensure!(verify_dual_exactness(&dc, &dual).map_err(err)?.exact, "dual complex not exact over {f}");
        let bt = betti_from_dual(&dc);
        let want = BTreeMap::from([((0, 1), 3), ((1, 2), 3), ((2, 3), 1)]);
        ensure!(bt.coarse() == want, "Betti {:?}", bt.coarse());
        ensure!(is_linear_table(&bt), "table not linear");
        ensure!(bt == betti_hochster(&dual, f), "dual table differs from Hochster over {f}");
    }
    Ok(())
}

fn rp2_fields() -> Check {
    let sc = rp2();
    let fc = cone(&sc);
    ensure!(validate(&fc).is_valid(), "RP2 cone invalid");
    for (f, expected) in [(q(), true), (p(3), true), (p(2), false)] {
        let v = is_cohen_macaulay(&fc, f).map_err(err)?;
        ensure!(v.cohen_macaulay == expected, "CM over {f} = {}", v.cohen_macaulay);
        let e1 = page(&ordinary(&fc, f)?, &fc, Page::One).map_err(err)?;
        ensure!(concentration_check(&e1, fc.dim()).concentrated == expected, "concentration over {f}");
    }
    let bt = betti_hochster(&alexander_dual(&sc), p(2));
    ensure!(!is_linear_table(&bt), "F2 Betti table of the dual ideal is linear");
    Ok(())
}

fn bowtie() -> Check {
    let sc = common::bowtie();
    let fc = cone(&sc);
    for f in fields() {
        ensure!(!is_cohen_macaulay(&fc, f).map_err(err)?.cohen_macaulay, "bowtie CM over {f}");
        let tot = total_resolution(&fc, f).map_err(err)?;
        let ex = verify_exactness(&tot, &fc, None).map_err(err)?;
        ensure!(ex.exact && ex.degrees_checked == 32, "total resolution over {f}: {ex:?}");
        match minimal_linear_resolution(&fc, f) {
            Err(ResolutionError::NotCohenMacaulay(w)) => {
                // H^p_G(Δ) = H̃^{p − |G| − 1}(lk G) for simplicial Δ
                let g = fc.vertex_set(w.face).unwrap().clone();
                let link = reduced_cohomology(&sc.link(&g), f);
                let j = w.degree as i64 - g.len() as i64 - 1;
                ensure!(w.label == "{3}" && w.degree == 2, "witness {} in degree {}", w.label, w.degree);
                ensure!(link.get(&j).copied() == Some(w.dim), "witness dimension {} vs link {link:?}", w.dim);
            }
            other => return Err(format!("irres accepted the bowtie over {f}: {other:?}")),
        }
    }
    Ok(())
}

struct SweepStats {
    cm: usize,
    total: usize,
}

fn equivalence_sweep(complexes: &[SimplicialComplex]) -> Result<SweepStats, String> {
    let mut stats = SweepStats { cm: 0, total: 0 };
    for (k, sc) in complexes.iter().enumerate() {
        let fc = cone(sc);
        for f in fields() {
            let cm = is_cohen_macaulay(&fc, f).map_err(err)?.cohen_macaulay;
            let e1 = page(&ordinary(&fc, f)?, &fc, Page::One).map_err(err)?;
            let conc = concentration_check(&e1, fc.dim()).concentrated;
            let construction = match minimal_linear_resolution(&fc, f) {
                Ok(res) => verify_exactness(&res, &fc, None).map_err(err)?.exact && is_linear(&res, &fc),
                Err(ResolutionError::NotCohenMacaulay(_)) => false,
                Err(e) => return Err(format!("#{k} {sc}: {e}")),
            };
            let er = is_linear_table(&betti_hochster(&alexander_dual(sc), f));
            let reisner = reisner_cm(sc, f);
            ensure!(
                cm == conc && cm == construction && cm == er && cm == reisner,
                "#{k} {sc} over {f}: cm {cm}, concentration {conc}, construction {construction}, linear dual {er}, links {reisner}"
            );
            stats.total += 1;
            stats.cm += usize::from(cm);
        }
    }
    Ok(stats)
}

fn double_complex_identities(complexes: &[SimplicialComplex]) -> Check {
    for (k, sc) in complexes.iter().enumerate() {
        let fc = cone(sc);
        for f in fields() {
            let z = ordinary(&fc, f)?;
            let ids = z.identities();
            ensure!(ids.all(), "#{k} {sc} over {f}: {ids:?}");
            let tot = total_complex(&z, &fc);
            ensure!(tot.augmentation_is_cocycle(), "#{k} {sc} over {f}: augmentation not a cocycle");
            let table = LocalCohomologyTable::compute(&fc, f).map_err(err)?;
            let e1 = page(&z, &fc, Page::One).map_err(err)?;
            for pp in 0..=fc.dim() {
                for g in 0..=pp {
                    let want: usize =
                        fc.faces_of_dim(g).iter().map(|&id| table.get(id).summary.dim(pp as i64)).sum();
                    let got = e1.dim((pp as i64, -(g as i64)));
                    ensure!(got == want, "#{k} {sc} over {f}: E1({pp},-{g}) = {got}, local cohomology {want}");
                }
            }
            let einf = page(&z, &fc, Page::Infinity).map_err(err)?;
            let abutment = einf.support();
            ensure!(
                abutment.len() == 1 && abutment[0].1 == 1 && abutment[0].0 .0 + abutment[0].0 .1 == 0,
                "#{k} {sc} over {f}: E_inf {abutment:?}"
            );
            let h = cohomology(&tot.complex).map_err(err)?;
            ensure!(h.dims.iter().sum::<usize>() == 1 && h.dims[0] == 1, "#{k}: total cohomology {:?}", h.dims);
            let e0 = page(&z, &fc, Page::Zero).map_err(err)?;
            let e2 = page(&z, &fc, Page::Two).map_err(err)?;
            if concentration_check(&e1, fc.dim()).concentrated {
                ensure!(e2.support() == abutment, "#{k} {sc} over {f}: E2 {:?} vs E_inf {abutment:?}", e2.support());
            }
            let chi = [e0.euler(), e1.euler(), e2.euler(), einf.euler()];
            ensure!(chi.iter().all(|&c| c == chi[0]), "#{k} {sc} over {f}: Euler characteristics {chi:?}");
        }
    }
    Ok(())
}

fn graded_vertical_cohomology(complexes: &[SimplicialComplex]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED ^ 0x33);
    let mut checked = 0;
    for sc in complexes.iter().filter(|sc| sc.vertex_count() >= 2).take(GRADED_PAIRS) {
        let fc = cone(sc);
        let d = sc.vertex_count();
        let a: Vec<i64> = (0..d).map(|_| rng.gen_range(0..3)).collect();
        let z = build(&fc, &degrees::from_i64(&a), q(), None).map_err(err)?;
        let v = z.vertical_cohomology().map_err(err)?;
        let support: Vec<usize> = (1..=d).filter(|&i| a[i - 1] != 0).collect();
        let mut want: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for face in sc.faces() {
            if face == support {
                *want.entry((face.len() as i64, -(face.len() as i64))).or_insert(0) += 1;
            }
        }
        ensure!(v == want, "{sc} at a = {a:?}: vertical cohomology {v:?}, expected {want:?}");
        checked += 1;
    }
    ensure!(checked >= 20, "only {checked} pairs");
    Ok(())
}

fn general_cone() -> Check {
    let inp = square_cone_pair();
    let q_ = inp.semigroup().unwrap();
    let lattice = face_lattice(q_).map_err(err)?;
    ensure!(lattice.len() == 10, "lattice has {} faces", lattice.len());
    ensure!(validate(&lattice).is_valid(), "lattice invalid");
    let fc = &inp.complex;
    ensure!(validate(fc).is_valid(), "subcomplex invalid");
    for f in fields() {
        let tot = total_resolution(fc, f).map_err(err)?;
        let ex = verify_exactness(&tot, fc, Some(q_)).map_err(err)?;
        ensure!(ex.exact && ex.degrees_checked == 10, "total resolution over {f}: {ex:?}");
        let cm = is_cohen_macaulay(fc, f).map_err(err)?.cohen_macaulay;
        let e1 = page(&ordinary(fc, f)?, fc, Page::One).map_err(err)?;
        ensure!(cm == concentration_check(&e1, fc.dim()).concentrated, "verdicts disagree over {f}");
        if cm {
            let res = minimal_linear_resolution(fc, f).map_err(err)?;
            ensure!(verify_exactness(&res, fc, Some(q_)).map_err(err)?.exact, "minimal resolution inexact");
        }
    }
    Ok(())
}

fn hilbert_consistency(complexes: &[SimplicialComplex]) -> Check {
    for (k, sc) in complexes.iter().enumerate() {
        let fc = cone(sc);
        for f in fields() {
            let Ok(res) = minimal_linear_resolution(&fc, f) else { continue };
            for pt in hilbert_points(&res, &fc, None).map_err(err)? {
                ensure!(pt.alternating_sum == pt.quotient as i64, "#{k} {sc} over {f}: {pt:?}");
            }
            let h = coarse_hilbert(&res, &fc);
            ensure!(h.holds(), "#{k} {sc} over {f}: {h:?}");
        }
    }
    Ok(())
}

fn run(id: usize, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let mut outcome = check();
    let elapsed = start.elapsed();
    if let (Ok(()), Some(limit)) = (&outcome, limit) {
        if elapsed > limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let bound = limit.map(|l| format!(" (limit {l:?})")).unwrap_or_default();
    match &outcome {
        Ok(()) => println!("PASS  {id}. {name} [{elapsed:.2?}{bound}]"),
        Err(e) => println!("FAIL  {id}. {name} [{elapsed:.2?}{bound}]: {e}"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let complexes = sweep(SWEEP_SEED, SWEEP_SIZE, MAX_VERTICES);
    let mut ok = true;
    ok &= run(1, "hollow triangle pipeline over Q and F2", Some(HOLLOW_LIMIT), hollow_triangle_pipeline);
    ok &= run(2, "RP2: CM over Q and F3, not over F2", Some(RP2_LIMIT), rp2_fields);
    ok &= run(3, "bowtie: exact total resolution, refused minimal one", None, bowtie);
    let mut summary = String::new();
    ok &= run(4, "CM / concentration / linear construction / Eagon-Reiner sweep", Some(SWEEP_LIMIT), || {
        let s = equivalence_sweep(&complexes)?;
        summary = format!("{} cases, {} CM", s.total, s.cm);
        Ok(())
    });
    if !summary.is_empty() {
        println!("      sweep: {summary}");
    }
    ok &= run(5, "double complex identities and pages on the sweep", None, || double_complex_identities(&complexes));
    ok &= run(6, "graded vertical cohomology sits on the diagonal", None, || graded_vertical_cohomology(&complexes));
    ok &= run(7, "cone over a square", Some(CONE_LIMIT), general_cone);
    ok &= run(8, "Hilbert consistency of minimal resolutions", None, || hilbert_consistency(&complexes));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
