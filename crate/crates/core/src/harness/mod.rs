//! Seeded verification sweeps and the constructive pieces of the absorbing
//! and near-extremal arguments.
//!
//! Every random choice is driven by a [`ChaCha8Rng`] seeded from
//! [`trial_seed`], so a sweep is a pure function of its [`TrialConfig`] no
//! matter how a [`TrialRunner`] schedules the trials.

mod absorb;
mod near;
mod sample;
mod sweep;

pub use absorb::{absorb, build_absorbing};
pub use near::{
    classify_near_extremal, near_d_rainbow, rainbow_pattern_edge, stability_probe, Extremal,
    MembershipCheck, NearD, NearDOutcome, ProbeReport,
};
pub use sample::{balance, BalancedSample, random_edge, random_graph, random_stable, sample_balanced, trim_stable};
pub use sweep::{verify_erdos, verify_rainbow};

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extremal::f_bound;
use crate::family::Family;
use crate::graph::KGraph;
use crate::matcher::{matching_of_size, rainbow};
use crate::Rational;

/// Parameters of a sweep. The four constants are experiment knobs; their
/// defaults carry no normative weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrialConfig {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub trials: u64,
    pub seed: u64,
    pub epsilon: Rational,
    pub gamma: Rational,
    pub gamma_prime: Rational,
    pub c: Rational,
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

impl TrialConfig {
    /// Defaults: `epsilon = 1/100`, `c = 1/10`, `gamma = 1/50`,
    /// `gamma_prime = 1/500`, no random trials, seed 0.
    pub fn new(n: u32, m: u32, k: u32) -> Self {
        TrialConfig {
            n,
            m,
            k,
            trials: 0,
            seed: 0,
            epsilon: ratio(1, 100),
            gamma: ratio(1, 50),
            gamma_prime: ratio(1, 500),
            c: ratio(1, 10),
        }
    }

    pub fn with_trials(mut self, trials: u64, seed: u64) -> Self {
        self.trials = trials;
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (zero, one) = (ratio(0, 1), ratio(1, 1));
        if !(zero < self.gamma_prime && self.gamma_prime < self.gamma) {
            return Err(Error::params("need 0 < gamma' < gamma"));
        }
        if !(zero < self.epsilon && self.epsilon < self.c && self.c < one) {
            return Err(Error::params("need 0 < epsilon < c < 1"));
        }
        if self.k == 0 || self.m == 0 || self.n < self.k * self.m {
            return Err(Error::params(format!(
                "need k, m >= 1 and n >= km, got n={}, m={}, k={}",
                self.n, self.m, self.k
            )));
        }
        Ok(())
    }

    /// `f(n, m, k)` for this configuration.
    pub fn threshold(&self) -> BigUint {
        f_bound(self.n as u64, self.m as u64, self.k as u64).expect("validated configuration")
    }
}

/// The seed of trial `i`: one splitmix64 output for the state
/// `seed + (i + 1) * 0x9E3779B97F4A7C15` (wrapping).
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed.wrapping_add(i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The generator for trial `i`.
pub fn trial_rng(seed: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, i))
}

/// Schedules independent jobs `0..count`. Implementations must return the
/// results in index order.
pub trait TrialRunner {
    fn map<T, F>(&self, count: u64, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send;
}

/// Runs every job on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl TrialRunner for Sequential {
    fn map<T, F>(&self, count: u64, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        (0..count).map(job).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Status {
    Confirmed,
    Counterexample,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// An instance that meets the size premise but lacks the promised matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// `e(graph) > f(n,m,k)` and `ν(graph) < m`.
    Graph { graph: KGraph, m: u32 },
    /// Every member exceeds `f(n,m,k)` and there is no rainbow matching.
    Family { family: Family },
}

impl Witness {
    /// Re-checks both halves of the claim from scratch.
    pub fn revalidate(&self) -> Result<()> {
        match self {
            Witness::Graph { graph, m } => {
                let f = f_bound(graph.n() as u64, *m as u64, graph.k() as u64)?;
                if BigUint::from(graph.len()) <= f {
                    return Err(Error::precondition("witness does not exceed f(n,m,k)"));
                }
                if matching_of_size(graph, *m as usize).is_some() {
                    return Err(Error::precondition(format!("witness has a matching of size {m}")));
                }
            }
            Witness::Family { family } => {
                let f = f_bound(family.n() as u64, family.m() as u64, family.k() as u64)?;
                if family.members().iter().any(|g| BigUint::from(g.len()) <= f) {
                    return Err(Error::precondition("a witness member does not exceed f(n,m,k)"));
                }
                if rainbow(family).is_some() {
                    return Err(Error::precondition("witness has a rainbow matching"));
                }
            }
        }
        Ok(())
    }
}

/// Counters for one sweep. A case that fails the property while not meeting
/// the size premise is counted in `below_premise`, not as a counterexample.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct TrialStats {
    pub deterministic: u64,
    pub random: u64,
    pub below_premise: u64,
    pub anomalies: u64,
    pub counterexamples: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub status: Status,
    /// The first counterexample in sweep order, already revalidated.
    pub witness: Option<Witness>,
    pub stats: TrialStats,
}

impl Verdict {
    fn from_parts(stats: TrialStats, witness: Option<Witness>) -> Self {
        let status = if witness.is_some() {
            Status::Counterexample
        } else if stats.anomalies > 0 || stats.deterministic + stats.random == 0 {
            Status::Inconclusive
        } else {
            Status::Confirmed
        };
        Verdict { status, witness, stats }
    }
}

#[cfg(test)]
mod tests;
