//! The two conjecture sweeps.

use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use super::sample::{random_graph, random_stable};
use super::{trial_rng, TrialConfig, TrialRunner, TrialStats, Verdict, Witness};
use crate::combin::binomial_u64;
use crate::error::Result;
use crate::extremal::{make_d, make_s};
use crate::family::Family;
use crate::graph::{Edge, KGraph};
use crate::matcher::{matching_of_size, rainbow};
use crate::shift::stabilize;

/// Exhaustive augmentation sweeps of the rainbow check stop at this many
/// edge multisets per base graph and fall back to giving every member the
/// same extra edge.
pub const RAINBOW_SWEEP_LIMIT: usize = 100_000;

enum Outcome {
    Holds,
    BelowPremise,
    Violates(Witness),
    Anomaly,
}

struct Tally {
    stats: TrialStats,
    witness: Option<Witness>,
}

impl Tally {
    fn new() -> Self {
        Tally { stats: TrialStats::default(), witness: None }
    }

    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Holds => {}
            Outcome::BelowPremise => self.stats.below_premise += 1,
            Outcome::Anomaly => self.stats.anomalies += 1,
            Outcome::Violates(w) => {
                // a witness that fails its own revalidation is a solver bug
                if w.revalidate().is_err() {
                    self.stats.anomalies += 1;
                } else {
                    self.stats.counterexamples += 1;
                    self.witness.get_or_insert(w);
                }
            }
        }
    }

    fn finish(self) -> Verdict {
        Verdict::from_parts(self.stats, self.witness)
    }
}

fn exceeds(len: usize, f: &BigUint) -> bool {
    BigUint::from(len) > *f
}

/// Room above the threshold used by the random samplers: sizes are drawn
/// from `f + 1 ..= f + 1 + spread`.
fn spread(cfg: &TrialConfig, f: usize) -> usize {
    let total = binomial_u64(cfg.n as u64, cfg.k as u64) as usize;
    (total - f - 1).min(cfg.n as usize)
}

fn check_graph(h: &KGraph, m: u32, f: &BigUint) -> Outcome {
    if matching_of_size(h, m as usize).is_some() {
        Outcome::Holds
    } else if exceeds(h.len(), f) {
        Outcome::Violates(Witness::Graph { graph: h.clone(), m })
    } else {
        Outcome::BelowPremise
    }
}

fn with_edges(base: &KGraph, extra: &[&Edge]) -> KGraph {
    let mut g = base.clone();
    for e in extra {
        g.insert((*e).clone());
    }
    g
}

/// Checks `ν(H) >= m` on
///
/// * `S(n,m,k)` and `D(n,m,k)` plus each absent edge, and plus each run of 2
///   or 3 consecutive absent edges in lexicographic order;
/// * `cfg.trials` random stable graphs with `f + 1` to `f + 1 + n` edges.
///
/// Augmentations that do not exceed `f` are still checked but cannot yield a
/// counterexample.
pub fn verify_erdos<R: TrialRunner>(cfg: &TrialConfig, runner: &R) -> Result<Verdict> {
    cfg.validate()?;
    let f = cfg.threshold();
    let f_small = f.to_usize().expect("threshold fits in memory");
    let mut tally = Tally::new();
    for base in [make_s(cfg.n, cfg.m, cfg.k)?, make_d(cfg.n, cfg.m, cfg.k)?] {
        let absent: Vec<Edge> = base.non_edges().collect();
        let mut cases: Vec<&[Edge]> = absent.chunks(1).collect();
        for t in 2..=3 {
            cases.extend(absent.windows(t));
        }
        let outcomes = runner.map(cases.len() as u64, |i| {
            let extra: Vec<&Edge> = cases[i as usize].iter().collect();
            check_graph(&with_edges(&base, &extra), cfg.m, &f)
        });
        tally.stats.deterministic += outcomes.len() as u64;
        outcomes.into_iter().for_each(|o| tally.record(o));
    }
    let room = spread(cfg, f_small);
    let outcomes = runner.map(cfg.trials, |i| {
        let mut rng = trial_rng(cfg.seed, i);
        let size = f_small + 1 + rng.gen_range(0..=room);
        let h = random_stable(cfg.n, cfg.k, size, &mut rng).expect("size within range");
        check_graph(&h, cfg.m, &f)
    });
    tally.stats.random += outcomes.len() as u64;
    outcomes.into_iter().for_each(|o| tally.record(o));
    Ok(tally.finish())
}

fn check_family(family: Family, f: &BigUint) -> Outcome {
    if rainbow(&family).is_some() {
        return Outcome::Holds;
    }
    if family.members().iter().all(|g| exceeds(g.len(), f)) {
        Outcome::Violates(Witness::Family { family })
    } else {
        Outcome::BelowPremise
    }
}

/// Checks for rainbow matchings on
///
/// * `m` copies of `S(n,m,k)` or `D(n,m,k)` with one absent edge added to each
///   member, over every multiset of added edges (member order is
///   irrelevant for copies). Past [`RAINBOW_SWEEP_LIMIT`] multisets only the
///   diagonal, one shared extra edge, is swept;
/// * `cfg.trials` random families whose members have `f + 1` to
///   `f + 1 + n` edges. Even trials draw uniform members, odd trials stable
///   ones. The original family is searched; its compression is searched as
///   a cross-check, and a compression that gains a rainbow matching the
///   original lacks is an anomaly.
pub fn verify_rainbow<R: TrialRunner>(cfg: &TrialConfig, runner: &R) -> Result<Verdict> {
    cfg.validate()?;
    let f = cfg.threshold();
    let f_small = f.to_usize().expect("threshold fits in memory");
    let m = cfg.m as usize;
    let mut tally = Tally::new();
    for base in [make_s(cfg.n, cfg.m, cfg.k)?, make_d(cfg.n, cfg.m, cfg.k)?] {
        let absent: Vec<Edge> = base.non_edges().collect();
        let multisets = binomial_u64((absent.len() + m - 1) as u64, m as u64);
        let cases: Vec<Vec<usize>> = if multisets <= RAINBOW_SWEEP_LIMIT as u64 {
            (0..absent.len()).combinations_with_replacement(m).collect()
        } else {
            (0..absent.len()).map(|i| alloc::vec![i; m]).collect()
        };
        let outcomes = runner.map(cases.len() as u64, |c| {
            let members = cases[c as usize]
                .iter()
                .map(|&i| with_edges(&base, &[&absent[i]]))
                .collect();
            check_family(Family::new(members).expect("copies share n and k"), &f)
        });
        tally.stats.deterministic += outcomes.len() as u64;
        outcomes.into_iter().for_each(|o| tally.record(o));
    }
    let room = spread(cfg, f_small);
    let outcomes = runner.map(cfg.trials, |i| {
        let mut rng = trial_rng(cfg.seed, i);
        let members = (0..m)
            .map(|_| {
                let size = f_small + 1 + rng.gen_range(0..=room);
                if i % 2 == 0 {
                    random_graph(cfg.n, cfg.k, size, &mut rng)
                } else {
                    random_stable(cfg.n, cfg.k, size, &mut rng)
                }
                .expect("size within range")
            })
            .collect();
        let family = Family::new(members).expect("members share n and k");
        if rainbow(&family).is_some() {
            return Outcome::Holds;
        }
        if rainbow(&stabilize(&family)).is_some() {
            return Outcome::Anomaly;
        }
        check_family(family, &f)
    });
    tally.stats.random += outcomes.len() as u64;
    outcomes.into_iter().for_each(|o| tally.record(o));
    Ok(tally.finish())
}
