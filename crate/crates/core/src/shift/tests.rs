use super::*;
use crate::extremal::make_s;
use crate::matcher::nu;
use alloc::vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn single(g: KGraph) -> Family {
    Family::new(vec![g]).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: u32, k: u32, p: f64) -> KGraph {
    let edges: Vec<Vec<u32>> =
        crate::combin::subsets(1, n, k as usize).filter(|_| rng.gen_bool(p)).collect();
    KGraph::build(n, k, edges).unwrap()
}

/// Sum of vertex labels over all edges; strictly drops on an effective shift.
fn potential(f: &Family) -> u64 {
    f.members().iter().flat_map(|g| g.edges()).flat_map(|e| e.iter()).map(|&v| v as u64).sum()
}

#[test]
fn shift_examples() {
    let f = single(KGraph::build(4, 3, [[2, 3, 4]]).unwrap());
    let s = shift_ij(&f, 1, 2).unwrap();
    assert_eq!(s.member(0).edges()[0].vertices(), &[1, 3, 4]);
    let f = single(KGraph::build(4, 3, [[1, 3, 4], [2, 3, 4]]).unwrap());
    assert_eq!(shift_ij(&f, 1, 2).unwrap(), f);
    assert!(shift_ij(&f, 2, 2).is_err());
    assert!(shift_ij(&f, 3, 2).is_err());
}

#[test]
fn stabilize_examples() {
    let f = single(KGraph::build(4, 3, [[2, 3, 4]]).unwrap());
    let s = stabilize(&f);
    assert_eq!(s.member(0).edges()[0].vertices(), &[1, 2, 3]);
    let stable = Family::copies(&make_s(7, 2, 3).unwrap(), 2).unwrap();
    assert_eq!(stabilize(&stable), stable);
}

#[test]
fn shifts_preserve_sizes_and_lower_potential() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(4..=7);
        let m = rng.gen_range(1..=3);
        let members = (0..m).map(|_| random_graph(&mut rng, n, 3, 0.3)).collect();
        let f = Family::new(members).unwrap();
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let s = shift_ij(&f, i, j).unwrap();
        assert_eq!(s.sizes(), f.sizes());
        if s != f {
            assert!(potential(&s) < potential(&f));
        }
    }
}

#[test]
fn stabilize_outputs_stable_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(4..=8);
        let members = (0..2).map(|_| random_graph(&mut rng, n, 3, 0.25)).collect();
        let f = Family::new(members).unwrap();
        let s = stabilize(&f);
        assert!(s.is_stable());
        assert_eq!(s.sizes(), f.sizes());
        assert!(rainbow_free_preserved(&f, &s));
        let g = stabilize_graph(f.member(0));
        assert!(g.is_stable());
        assert!(nu(&g) <= nu(f.member(0)));
    }
}

#[test]
fn saturate_examples() {
    let f = single(KGraph::empty(5, 3));
    assert_eq!(saturate(&f).unwrap(), f);
    let s = Family::copies(&make_s(6, 2, 3).unwrap(), 2).unwrap();
    assert!(is_saturated(&s));
    assert_eq!(saturate(&s).unwrap(), s);
    let rich = Family::copies(&KGraph::complete(6, 3), 2).unwrap();
    assert!(matches!(saturate(&rich), Err(Error::HasRainbow(_))));
}

#[test]
fn is_saturated_examples() {
    let empty = Family::copies(&KGraph::empty(6, 3), 2).unwrap();
    assert!(!is_saturated(&empty));
    let rich = Family::copies(&KGraph::complete(6, 3), 2).unwrap();
    assert!(!is_saturated(&rich));
}

#[test]
fn saturate_random_no_rainbow_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut done = 0;
    while done < 25 {
        let n = rng.gen_range(4..=7);
        let members = (0..2).map(|_| random_graph(&mut rng, n, 2, 0.15)).collect();
        let f = Family::new(members).unwrap();
        if rainbow(&f).is_some() {
            continue;
        }
        let s = saturate(&f).unwrap();
        assert!(is_saturated(&s));
        assert!(s.is_stable());
        assert!(s.sizes().iter().zip(f.sizes()).all(|(a, b)| *a >= b));
        let report = degree_cap_check(&s, SaturationFlag::Verify);
        assert_eq!(report.saturated, Some(true));
        assert!(report.violations.is_empty(), "{report:?}");
        assert_eq!(saturate(&s).unwrap(), s);
        done += 1;
    }
}

#[test]
fn degree_cap_on_extremal_copies() {
    let f = Family::copies(&make_s(9, 3, 3).unwrap(), 3).unwrap();
    let r = degree_cap_check(&f, SaturationFlag::Trust);
    assert_eq!(r.saturated, None);
    assert_eq!(r.full, 28);
    assert!(r.violations.is_empty());
    for g in f.members() {
        assert_eq!(g.vertex_degree(1), 28);
        assert_eq!(g.vertex_degree(2), 28);
    }
    // a damaged family: report is produced, flag says it is not saturated
    let damaged = Family::copies(&KGraph::complete(6, 3), 2).unwrap();
    let r = degree_cap_check(&damaged, SaturationFlag::Verify);
    assert_eq!(r.saturated, Some(false));
}

#[test]
fn peel_extremal_copies() {
    let f = Family::copies(&make_s(6, 2, 3).unwrap(), 2).unwrap();
    let out = peel_full_degree(&f).unwrap();
    assert_eq!(out.log.len(), 1);
    assert_eq!((out.log[0].vertex, out.log[0].member, out.log[0].iteration), (1, 0, 0));
    assert_eq!(out.family.m(), 1);
    assert_eq!(out.family.n(), 5);
    assert!(out.family.member(0).is_empty());
    assert_eq!(out.original_members, [1]);
    assert_eq!(out.original_vertices, [2, 3, 4, 5, 6]);
    assert_eq!(out.size_bound_carried, None);
}

#[test]
fn peel_without_full_degree_is_one_saturation() {
    let f = single(KGraph::empty(5, 3));
    let out = peel_full_degree(&f).unwrap();
    assert!(out.log.is_empty());
    assert_eq!(out.family, f);
}

#[test]
fn lift_inverts_a_peel_step() {
    let star = KGraph::build(
        7,
        3,
        crate::combin::subsets(1, 7, 3).filter(|e| e[0] == 1).collect::<Vec<_>>(),
    )
    .unwrap();
    let f = Family::new(vec![star, KGraph::complete(7, 3)]).unwrap();
    let small = peel_step(&f, 0, 1).unwrap();
    assert_eq!((small.m(), small.n()), (1, 6));
    let rm = rainbow(&small).unwrap();
    let lifted = lift_step(&f, 0, 1, &rm);
    lifted.validate(&f).unwrap();
}
