use super::*;
use crate::extremal::{make_d, make_hd, make_hs, make_s};
use alloc::vec;

/// Exhaustive oracle: largest matching over all include/exclude choices.
fn brute_nu(edges: &[Edge]) -> usize {
    fn go(edges: &[Edge], chosen: &mut Vec<Edge>) -> usize {
        let Some((first, rest)) = edges.split_first() else {
            return chosen.len();
        };
        let skip = go(rest, chosen);
        if chosen.iter().all(|c| c.is_disjoint(first)) {
            chosen.push(first.clone());
            let take = go(rest, chosen);
            chosen.pop();
            skip.max(take)
        } else {
            skip
        }
    }
    go(edges, &mut Vec::new())
}

/// Exhaustive rainbow oracle: try every edge tuple.
fn brute_rainbow(f: &Family) -> bool {
    fn go(f: &Family, i: usize, used: &mut Vec<Edge>) -> bool {
        if i == f.m() {
            return true;
        }
        for e in f.member(i).edges() {
            if used.iter().all(|u| u.is_disjoint(e)) {
                used.push(e.clone());
                if go(f, i + 1, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    go(f, 0, &mut Vec::new())
}

#[test]
fn nu_examples() {
    for n in 3..=9 {
        assert_eq!(nu(&KGraph::complete(n, 3)), (n / 3) as usize);
    }
    assert_eq!(nu(&make_s(9, 3, 3).unwrap()), 2);
    assert_eq!(nu(&make_d(9, 3, 3).unwrap()), 2);
    assert_eq!(nu(&KGraph::empty(9, 3)), 0);
    assert_eq!(brute_nu(make_s(9, 3, 3).unwrap().edges()), 2);
    assert_eq!(brute_nu(make_d(9, 3, 3).unwrap().edges()), 2);
}

#[test]
fn witness_is_valid() {
    let g = make_s(10, 3, 3).unwrap();
    let m = max_matching(&g);
    m.validate(&g).unwrap();
    assert_eq!(m.len(), 2);
}

#[test]
fn perfect_matching_examples() {
    assert!(has_perfect_matching(&KGraph::complete(6, 3)));
    assert!(!has_perfect_matching(&KGraph::complete(7, 3)));
    assert!(!has_perfect_matching(&make_s(6, 2, 3).unwrap()));
    let pm = perfect_matching(&KGraph::complete(9, 3)).unwrap();
    assert_eq!(pm.covered().len(), 9);
}

#[test]
fn wide_graphs_use_the_multiword_path() {
    let edges: Vec<Vec<u32>> = (0..35).map(|i| vec![2 * i + 1, 2 * i + 2]).collect();
    let g = KGraph::build(70, 2, edges).unwrap();
    assert_eq!(nu(&g), 35);
    let f = Family::copies(&g, 3).unwrap();
    let rm = rainbow(&f).unwrap();
    rm.validate(&f).unwrap();
}

#[test]
fn rainbow_examples() {
    let single = Family::new(vec![KGraph::build(4, 2, [[3, 4]]).unwrap()]).unwrap();
    assert_eq!(rainbow(&single).unwrap().pairs[0].1.vertices(), &[3, 4]);
    for m in 1..=3u32 {
        let f = Family::copies(&KGraph::complete(3 * m, 3), m as usize).unwrap();
        rainbow(&f).unwrap().validate(&f).unwrap();
        let f = Family::copies(&make_s(3 * m + 1, m, 3).unwrap(), m as usize).unwrap();
        assert!(rainbow(&f).is_none());
    }
    let empty = Family::new(vec![KGraph::empty(4, 2)]).unwrap();
    assert!(rainbow(&empty).is_none());
}

#[test]
fn rainbow_validation_rejects_bad_witnesses() {
    let f = Family::copies(&KGraph::complete(6, 3), 2).unwrap();
    let e1 = Edge::new(6, 3, &[1, 2, 3]).unwrap();
    let e2 = Edge::new(6, 3, &[3, 4, 5]).unwrap();
    let bad = RainbowMatching { pairs: vec![(0, e1.clone()), (1, e2)] };
    assert!(bad.validate(&f).is_err());
    let dup = RainbowMatching { pairs: vec![(0, e1.clone()), (0, e1)] };
    assert!(dup.validate(&f).is_err());
}

#[test]
fn reductions() {
    let s = make_s(6, 2, 3).unwrap();
    let f = Family::copies(&s, 2).unwrap();
    let h = reduce_h(&f).unwrap();
    assert_eq!(h.len(), 2 * s.len());
    assert_eq!(h, make_hs(6, 2, 3).unwrap());
    let hs = reduce_hstar(&f).unwrap();
    assert_eq!(hs.r(), 0);
    let f = Family::copies(&make_d(9, 2, 3).unwrap(), 2).unwrap();
    assert_eq!(reduce_h(&f).unwrap(), make_hd(9, 2, 3).unwrap());
    let hs = reduce_hstar(&f).unwrap();
    assert_eq!(hs.r(), 1);
    assert_eq!(hs.len(), 20 + 84);
    assert!(hs.edges().iter().all(|e| e.base.len() == 3));
    let too_small = Family::copies(&KGraph::complete(5, 3), 2).unwrap();
    assert!(reduce_h(&too_small).is_err());
}

#[test]
fn equivalence_on_extremal_and_complete() {
    let f = Family::copies(&make_s(6, 2, 3).unwrap(), 2).unwrap();
    let eq = aux_equivalence(&f).unwrap();
    assert!(eq.agrees());
    assert!(!eq.rainbow);
    let f = Family::copies(&KGraph::complete(9, 3), 3).unwrap();
    let eq = aux_equivalence(&f).unwrap();
    assert!(eq.agrees() && eq.rainbow);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn graph(n: u32, k: u32) -> impl Strategy<Value = KGraph> {
        let all: Vec<Vec<u32>> = crate::combin::subsets(1, n, k as usize).collect();
        proptest::sample::subsequence(all.clone(), 0..=all.len())
            .prop_map(move |es| KGraph::build(n, k, es).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn nu_matches_brute_force(g in (4u32..=8, 2u32..=3).prop_flat_map(|(n, k)| graph(n, k))) {
            let m = max_matching(&g);
            prop_assert!(m.validate(&g).is_ok());
            prop_assert_eq!(m.len(), brute_nu(g.edges()));
            prop_assert!(m.len() <= (g.n() / g.k()) as usize);
        }

        #[test]
        fn rainbow_matches_brute_force(
            members in (6u32..=7).prop_flat_map(|n| proptest::collection::vec(graph(n, 2), 1..=3))
        ) {
            let f = Family::new(members).unwrap();
            let got = rainbow(&f);
            if let Some(rm) = &got {
                prop_assert!(rm.validate(&f).is_ok());
            }
            prop_assert_eq!(got.is_some(), brute_rainbow(&f));
            prop_assert!(aux_matching_equiv(&f).unwrap());
        }

        #[test]
        fn nu_monotone_under_edge_addition(g in graph(7, 3), extra in 0usize..35) {
            let all = KGraph::complete(7, 3);
            let mut h = g.clone();
            h.insert(all.edges()[extra].clone());
            prop_assert!(nu(&g) <= nu(&h));
        }
    }
}
