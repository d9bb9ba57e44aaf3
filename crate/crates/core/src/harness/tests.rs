use super::*;
use crate::combin::subsets;
use crate::extremal::{make_d, make_s};
use crate::matcher::{reduce_hstar, AuxVertex, Label};
use alloc::collections::BTreeSet;
use alloc::vec;
use proptest::prelude::*;

fn q(p: i64, d: i64) -> Rational {
    ratio(p, d)
}

fn complete_on(n: u32, span: u32) -> KGraph {
    KGraph::build(n, 3, subsets(1, span, 3)).unwrap()
}

#[test]
fn config_validation() {
    assert!(TrialConfig::new(9, 3, 3).validate().is_ok());
    assert!(TrialConfig::new(8, 3, 3).validate().is_err());
    let mut cfg = TrialConfig::new(9, 3, 3);
    cfg.gamma_prime = cfg.gamma.clone();
    assert!(cfg.validate().is_err());
    let mut cfg = TrialConfig::new(9, 3, 3);
    cfg.c = q(1, 1);
    assert!(cfg.validate().is_err());
    let mut cfg = TrialConfig::new(9, 3, 3);
    cfg.epsilon = q(1, 5);
    assert!(cfg.validate().is_err());
}

#[test]
fn seeds_are_pure_and_spread() {
    assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
    let seeds: BTreeSet<u64> = (0..1000).map(|i| trial_seed(42, i)).collect();
    assert_eq!(seeds.len(), 1000);
    assert_ne!(trial_seed(1, 0), trial_seed(2, 0));
}

proptest! {
    #[test]
    fn random_stable_is_stable_with_exact_size(n in 4u32..10, k in 2u32..4, frac in 0.0f64..1.0, seed: u64) {
        let total = crate::combin::binomial_u64(n as u64, k as u64) as usize;
        let size = (frac * total as f64) as usize;
        let mut rng = trial_rng(seed, 0);
        let g = random_stable(n, k, size, &mut rng).unwrap();
        prop_assert!(g.is_stable());
        prop_assert_eq!(g.len(), size);
    }

    #[test]
    fn trimming_keeps_stability(seed: u64, target in 0usize..49) {
        let mut rng = trial_rng(seed, 1);
        let g = trim_stable(&make_s(9, 3, 3).unwrap(), target, &mut rng);
        prop_assert!(g.is_stable());
        prop_assert_eq!(g.len(), target);
    }
}

#[test]
fn random_graph_size() {
    let mut rng = trial_rng(3, 0);
    assert_eq!(random_graph(7, 3, 20, &mut rng).unwrap().len(), 20);
    assert!(random_graph(5, 3, 11, &mut rng).is_err());
}

#[test]
fn witnesses_that_miss_the_premise_are_rejected() {
    let w = Witness::Graph { graph: make_s(9, 3, 3).unwrap(), m: 3 };
    assert!(w.revalidate().is_err());
    let s = make_s(6, 2, 3).unwrap();
    let w = Witness::Family { family: Family::copies(&s, 2).unwrap() };
    assert!(w.revalidate().is_err());
    let w = Witness::Graph { graph: KGraph::complete(6, 3), m: 2 };
    assert!(w.revalidate().is_err());
}

#[test]
fn erdos_sweeps_confirm() {
    for (n, m) in [(6, 2), (9, 3), (10, 2), (12, 4)] {
        let cfg = TrialConfig::new(n, m, 3).with_trials(40, 11);
        let v = verify_erdos(&cfg, &Sequential).unwrap();
        assert_eq!(v.status, Status::Confirmed, "n={n} m={m}: {v:?}");
        assert_eq!(v.stats.random, 40);
        assert!(v.stats.deterministic > 0);
    }
}

#[test]
fn erdos_sweep_counts_cases() {
    // S(6,2,3) misses C(5,3) = 10 edges: 10 singles, 9 pairs, 8 triples.
    // D(6,2,3) misses 10 edges as well.
    let v = verify_erdos(&TrialConfig::new(6, 2, 3), &Sequential).unwrap();
    assert_eq!(v.stats.deterministic, 2 * (10 + 9 + 8));
    assert_eq!(v.stats.random, 0);
}

#[test]
fn rainbow_sweeps_confirm() {
    for (n, m) in [(6, 2), (7, 2), (9, 3)] {
        let cfg = TrialConfig::new(n, m, 3).with_trials(30, 5);
        let v = verify_rainbow(&cfg, &Sequential).unwrap();
        assert_eq!(v.status, Status::Confirmed, "n={n} m={m}: {v:?}");
    }
    let cfg = TrialConfig::new(25, 2, 2).with_trials(100, 1);
    assert_eq!(verify_rainbow(&cfg, &Sequential).unwrap().status, Status::Confirmed);
}

#[test]
fn sweeps_are_deterministic() {
    let cfg = TrialConfig::new(9, 2, 3).with_trials(25, 99);
    assert_eq!(verify_erdos(&cfg, &Sequential).unwrap(), verify_erdos(&cfg, &Sequential).unwrap());
    assert_eq!(
        verify_rainbow(&cfg, &Sequential).unwrap(),
        verify_rainbow(&cfg, &Sequential).unwrap()
    );
}

#[test]
fn sweeps_reject_bad_parameters() {
    assert!(verify_erdos(&TrialConfig::new(5, 2, 3), &Sequential).is_err());
    assert!(verify_rainbow(&TrialConfig::new(5, 2, 3), &Sequential).is_err());
}

#[test]
fn absorbing_examples() {
    let s = make_s(12, 2, 3).unwrap();
    let f = Family::copies(&s, 2).unwrap();
    assert!(build_absorbing(&f, 0).unwrap().is_empty());
    // S(12,2,3) lacks {2,3,4}
    let err = build_absorbing(&f, 2).unwrap_err();
    assert!(err.is_precondition());

    let f = Family::copies(&complete_on(9, 6), 2).unwrap();
    let m = build_absorbing(&f, 1).unwrap();
    assert_eq!(m.edges.len(), 1);
    assert_eq!(m.edges[0].label, Label::U(1));
    assert_eq!(m.edges[0].base.vertices(), &[1, 2, 3]);
    assert!(build_absorbing(&f, 2).is_err());
}

fn absorbing_family() -> Family {
    // S(12,2,3) together with every triple of [6]: stable, 65 > f = 55 edges
    let mut g = make_s(12, 2, 3).unwrap();
    for e in subsets(1, 6, 3) {
        g.insert(crate::graph::Edge::new(12, 3, &e).unwrap());
    }
    assert!(g.is_stable());
    Family::new(vec![g, KGraph::complete(12, 3)]).unwrap()
}

#[test]
fn absorb_single_label() {
    let f = absorbing_family();
    let m = build_absorbing(&f, 2).unwrap();
    assert_eq!(absorb(&f, &m, &BTreeSet::new()).unwrap(), m);
    let s: BTreeSet<AuxVertex> = [AuxVertex::Label(Label::V(1))]
        .into_iter()
        .chain([10, 11, 12].map(AuxVertex::Base))
        .collect();
    let out = absorb(&f, &m, &s).unwrap();
    assert_eq!(out.len(), 3);
    assert_eq!(out.edges[0].label, Label::V(1));
    assert_eq!(out.edges[0].base.vertices(), &[1, 2, 3]);
}

#[test]
fn absorb_exhaustive_label_size_one() {
    let f = absorbing_family();
    let host = reduce_hstar(&f).unwrap();
    let m = build_absorbing(&f, 2).unwrap();
    let mut count = 0;
    for label in [Label::V(1), Label::V(2)] {
        for base in subsets(7, 12, 3) {
            let s: BTreeSet<AuxVertex> = core::iter::once(AuxVertex::Label(label))
                .chain(base.into_iter().map(AuxVertex::Base))
                .collect();
            let out = absorb(&f, &m, &s).unwrap();
            let target: BTreeSet<AuxVertex> = m.covered().union(&s).copied().collect();
            out.validate_perfect_on(&host, &target).unwrap();
            count += 1;
        }
    }
    assert_eq!(count, 40);
}

#[test]
fn absorb_rejects_bad_sets() {
    let f = absorbing_family();
    let m = build_absorbing(&f, 2).unwrap();
    let unbalanced: BTreeSet<AuxVertex> =
        [AuxVertex::Label(Label::V(1)), AuxVertex::Base(10)].into_iter().collect();
    assert!(absorb(&f, &m, &unbalanced).is_err());
    let overlapping: BTreeSet<AuxVertex> = [AuxVertex::Label(Label::V(1))]
        .into_iter()
        .chain([1, 11, 12].map(AuxVertex::Base))
        .collect();
    assert!(absorb(&f, &m, &overlapping).is_err());
    let too_big: BTreeSet<AuxVertex> = [Label::V(1), Label::V(2)]
        .map(AuxVertex::Label)
        .into_iter()
        .chain((7..=12).map(AuxVertex::Base))
        .collect();
    assert!(absorb(&f, &m, &too_big).is_err());
}

#[test]
fn classification_examples() {
    let eps = q(1, 1_000_000);
    assert_eq!(classify_near_extremal(&make_s(9, 3, 3).unwrap(), 3, &eps).unwrap(), Extremal::SClose);
    assert_eq!(classify_near_extremal(&make_d(9, 3, 3).unwrap(), 3, &eps).unwrap(), Extremal::DClose);
    // |S| misses 49 and |D| misses 56 edges from the edgeless graph
    let empty = KGraph::empty(9, 3);
    assert_eq!(classify_near_extremal(&empty, 3, &q(48, 729)).unwrap(), Extremal::Neither);
    assert_eq!(classify_near_extremal(&empty, 3, &q(56, 729)).unwrap(), Extremal::Both);
    assert!(classify_near_extremal(&KGraph::empty(9, 2), 3, &eps).is_err());
}

#[test]
fn near_d_on_complete_span() {
    let f = Family::copies(&complete_on(10, 9), 3).unwrap();
    let r = near_d_rainbow(&f, &q(1, 1_000_000_000_000)).unwrap();
    assert!(r.claim.iter().all(|c| c.present));
    match r.outcome {
        NearDOutcome::Rainbow(rm) => rm.validate(&f).unwrap(),
        NearDOutcome::Missing(w) => panic!("unexpected failure {w:?}"),
    }
}

#[test]
fn near_d_on_d_reports_first_position() {
    let f = Family::copies(&make_d(10, 3, 3).unwrap(), 3).unwrap();
    let r = near_d_rainbow(&f, &q(1, 1_000_000_000_000)).unwrap();
    // 6 * 10^-2 * 10 = 0.6 rounds up to 1
    assert_eq!(r.b, 1);
    let j0: Vec<bool> = r.claim.iter().filter(|c| c.j == 0).map(|c| c.present).collect();
    assert_eq!(j0, [false; 3]);
    assert!(r.claim.iter().filter(|c| c.j == 1).all(|c| c.present));
    assert_eq!(
        r.outcome,
        NearDOutcome::Missing(vec![(0, crate::graph::Edge::new(10, 3, &[1, 2, 9]).unwrap())])
    );
}

#[test]
fn near_d_names_missing_membership() {
    // the member lacking {1,2,9} sits at position 2 and takes {3,4,8}
    let f = Family::new(vec![complete_on(10, 9), g_missing(), complete_on(10, 9)]).unwrap();
    let r = near_d_rainbow(&f, &q(1, 1_000_000)).unwrap();
    assert_eq!(r.order, [0, 1, 2]);
    assert!(matches!(r.outcome, NearDOutcome::Rainbow(_)));
    let f = Family::new(vec![g_missing(), complete_on(10, 9), complete_on(10, 9)]).unwrap();
    match near_d_rainbow(&f, &q(1, 1_000_000)).unwrap().outcome {
        NearDOutcome::Missing(w) => assert_eq!(w, [(0, crate::graph::Edge::new(10, 3, &[1, 2, 9]).unwrap())]),
        NearDOutcome::Rainbow(_) => panic!("expected a failure"),
    }
    assert!(near_d_rainbow(&Family::copies(&KGraph::empty(10, 2), 3).unwrap(), &q(1, 2)).is_err());
}

fn g_missing() -> KGraph {
    let mut g = complete_on(10, 9);
    g.remove_edge(&[1, 2, 9]);
    g
}

#[test]
fn pattern_depth_rounds_up_and_clamps() {
    let f = Family::copies(&complete_on(10, 9), 3).unwrap();
    // eps = 1/6^6: 6 * (1/6) * 10 = 10, clamped to m = 3
    assert_eq!(near_d_rainbow(&f, &q(1, 46656)).unwrap().b, 3);
    // (1/60)^6: exactly 1
    assert_eq!(near_d_rainbow(&f, &q(1, 46_656_000_000)).unwrap().b, 1);
    // just above (1/60)^6: 2
    assert_eq!(near_d_rainbow(&f, &q(2, 46_656_000_000)).unwrap().b, 2);
}

#[test]
fn stability_probe_windows() {
    let r = stability_probe(12, 3, &q(1, 100), 30, 4, &Sequential).unwrap();
    assert!(!r.vacuous);
    // S(12,3,3) has f = 100 edges and is the only source in the window
    assert_eq!(r.s_close, 10);
    assert_eq!(r.outside_window, 10);
    assert_eq!(r.d_close, 0);
    let r = stability_probe(9, 3, &q(1, 100), 30, 4, &Sequential).unwrap();
    assert_eq!(r.d_close, 10);
    let r = stability_probe(9, 3, &q(9, 10), 12, 4, &Sequential).unwrap();
    assert!(r.vacuous);
    assert_eq!(
        r.s_close + r.d_close + r.both + r.neither + r.has_matching + r.outside_window,
        r.sampled
    );
}

#[test]
fn balanced_sampling() {
    let f = Family::copies(&KGraph::complete(6, 3), 1).unwrap();
    let h = reduce_hstar(&f).unwrap();
    let all: BTreeSet<AuxVertex> = h.vertices().collect();
    let p = Rational::new((u64::MAX - 1).into(), u64::MAX.into());
    let s = sample_balanced(&h, &p, 8).unwrap();
    assert_eq!(s.drawn, all);
    assert_eq!(s.balanced, all);
    assert!(sample_balanced(&h, &q(1, 1), 0).is_err());
    assert!(sample_balanced(&h, &q(0, 1), 0).is_err());
}

#[test]
fn balanced_sampling_audit() {
    let f = Family::copies(&KGraph::complete(30, 3), 4).unwrap();
    let h = reduce_hstar(&f).unwrap();
    let p = q(3, 10);
    let mut base_total = 0u64;
    let draws = 1000;
    for seed in 0..draws {
        let s = sample_balanced(&h, &p, seed).unwrap();
        assert!(s.balanced.is_subset(&s.drawn));
        let base = s.balanced.iter().filter(|x| matches!(x, AuxVertex::Base(_))).count();
        assert_eq!(base, 3 * (s.balanced.len() - base));
        base_total += s.drawn.iter().filter(|x| matches!(x, AuxVertex::Base(_))).count() as u64;
    }
    // mean of 1000 Binomial(30, 3/10) counts: 9 with standard error sqrt(6.3/1000)
    let mean = base_total as f64 / draws as f64;
    assert!((mean - 9.0).abs() < 5.0 * (6.3f64 / draws as f64).sqrt());
}
