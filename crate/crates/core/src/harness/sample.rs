//! Random graphs and the balanced vertex sampler.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combin::{binomial_u64, subsets};
use crate::error::{Error, Result};
use crate::graph::{Edge, KGraph, Vertex};
use crate::matcher::{AuxGraph, AuxVertex};
use crate::Rational;

/// A uniform k-subset of `{1..n}`.
pub fn random_edge<R: Rng + ?Sized>(n: u32, k: u32, rng: &mut R) -> Edge {
    let mut v: Vec<Vertex> = index::sample(rng, n as usize, k as usize)
        .into_iter()
        .map(|i| i as Vertex + 1)
        .collect();
    v.sort_unstable();
    Edge::from_sorted(v)
}

/// A uniform k-graph with exactly `size` edges.
pub fn random_graph<R: Rng + ?Sized>(n: u32, k: u32, size: usize, rng: &mut R) -> Result<KGraph> {
    let mut all: Vec<Vec<Vertex>> = subsets(1, n, k as usize).collect();
    if size > all.len() {
        return Err(Error::params(format!("{size} edges requested, only {} exist", all.len())));
    }
    all.shuffle(rng);
    all.truncate(size);
    KGraph::build(n, k, all)
}

fn close_down(set: &mut BTreeSet<Edge>, e: Edge) {
    let mut stack = alloc::vec![e];
    while let Some(e) = stack.pop() {
        if set.contains(&e) {
            continue;
        }
        stack.extend(e.immediate_predecessors());
        set.insert(e);
    }
}

fn maximal(set: &BTreeSet<Edge>, n: u32) -> Vec<Edge> {
    set.iter()
        .filter(|e| e.immediate_successors(n).all(|s| !set.contains(&s)))
        .cloned()
        .collect()
}

/// Deletes uniformly chosen dominance-maximal edges of a stable graph until
/// `target` edges remain. The result is stable.
pub fn trim_stable<R: Rng + ?Sized>(g: &KGraph, target: usize, rng: &mut R) -> KGraph {
    let mut set: BTreeSet<Edge> = g.edges().iter().cloned().collect();
    while set.len() > target {
        let top = maximal(&set, g.n());
        let e = top.choose(rng).expect("a non-empty downset has a maximal edge");
        set.remove(e);
    }
    KGraph::from_edges(g.n(), g.k(), set.into_iter().collect())
}

/// A random stable k-graph with exactly `size` edges: draw `size` uniform
/// edges (more if duplicates leave the closure short), close the draw
/// downward, then trim maximal edges at random.
pub fn random_stable<R: Rng + ?Sized>(n: u32, k: u32, size: usize, rng: &mut R) -> Result<KGraph> {
    if k == 0 || k > n {
        return Err(Error::Uniformity { n, k });
    }
    let total = binomial_u64(n as u64, k as u64);
    if size as u64 > total {
        return Err(Error::params(format!("{size} edges requested, only {total} exist")));
    }
    let mut set = BTreeSet::new();
    for _ in 0..size {
        close_down(&mut set, random_edge(n, k, rng));
    }
    while set.len() < size {
        close_down(&mut set, random_edge(n, k, rng));
    }
    let g = KGraph::from_edges(n, k, set.into_iter().collect());
    Ok(trim_stable(&g, size, rng))
}

fn delete_random<R: Rng + ?Sized>(from: &mut Vec<AuxVertex>, count: usize, rng: &mut R) {
    let doomed: BTreeSet<usize> = index::sample(rng, from.len(), count).into_iter().collect();
    let mut i = 0;
    from.retain(|_| {
        i += 1;
        !doomed.contains(&(i - 1))
    });
}

/// Trims `r` to a set with `|R ∩ [n]| = k |R ∩ labels|`.
///
/// With a base surplus, surplus base vertices are deleted. Otherwise the base
/// part is first cut to a multiple of `k` and then label vertices are
/// deleted. Every deletion is uniform within its class.
pub fn balance<R: Rng + ?Sized>(r: &BTreeSet<AuxVertex>, k: u32, rng: &mut R) -> BTreeSet<AuxVertex> {
    let (mut base, mut labels): (Vec<AuxVertex>, Vec<AuxVertex>) =
        r.iter().partition(|x| matches!(x, AuxVertex::Base(_)));
    let k = k as usize;
    if base.len() >= k * labels.len() {
        let surplus = base.len() - k * labels.len();
        delete_random(&mut base, surplus, rng);
    } else {
        let rem = base.len() % k;
        delete_random(&mut base, rem, rng);
        let extra = labels.len() - base.len() / k;
        delete_random(&mut labels, extra, rng);
    }
    base.into_iter().chain(labels).collect()
}

/// A raw inclusion draw and its balanced trim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalancedSample {
    pub drawn: BTreeSet<AuxVertex>,
    pub balanced: BTreeSet<AuxVertex>,
}

/// Includes every vertex of `h` independently with probability `p`, then
/// [`balance`]s the draw.
pub fn sample_balanced(h: &AuxGraph, p: &Rational, seed: u64) -> Result<BalancedSample> {
    if !p.is_positive() || *p >= Rational::from_integer(1.into()) {
        return Err(Error::params("need 0 < p < 1"));
    }
    let (num, den) = match (p.numer().to_u64(), p.denom().to_u64()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::params("p must have a 64-bit numerator and denominator")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: BTreeSet<AuxVertex> = h.vertices().filter(|_| rng.gen_range(0..den) < num).collect();
    let balanced = balance(&drawn, h.k(), &mut rng);
    Ok(BalancedSample { drawn, balanced })
}
