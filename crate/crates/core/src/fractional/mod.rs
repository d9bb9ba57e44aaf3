//! Exact-rational fractional matchings.
//!
//! A fractional matching puts a weight in `[0, 1]` on each edge so that every
//! vertex load (sum of incident weights) is at most 1. It is perfect when
//! every load is exactly 1, equivalently when the total weight is `|V|/k`.
//!
//! Besides the LP optimum this module carries the constructive pieces used
//! to build a perfect fractional matching of an `H*`-style graph from the
//! weights already placed on label edges: projection onto the base vertices,
//! extension to a perfect fractional matching of the complete 3-graph, and
//! splitting the added weight into unit parcels for the free labels.

mod extend;
pub mod simplex;

pub use extend::{closing_patch, extend_complete3, Extension};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Edge, KGraph, Vertex};
use crate::matcher::{AuxEdge, Label};
use crate::Rational;
use simplex::{Lp, LpOutcome};

pub(crate) fn int(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Edge weights over a k-graph on `[n]`. Only positive weights are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FracMatching {
    n: u32,
    k: u32,
    weights: BTreeMap<Edge, Rational>,
}

impl FracMatching {
    pub fn new(n: u32, k: u32) -> Self {
        FracMatching { n, k, weights: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn weights(&self) -> &BTreeMap<Edge, Rational> {
        &self.weights
    }

    pub fn weight(&self, e: &Edge) -> Rational {
        self.weights.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `w` to the weight of `e`. Zero results are dropped.
    pub fn add(&mut self, e: Edge, w: &Rational) {
        let sum = self.weight(&e) + w;
        if sum.is_zero() {
            self.weights.remove(&e);
        } else {
            self.weights.insert(e, sum);
        }
    }

    /// Vertex loads indexed by `v - 1`.
    pub fn loads(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.n as usize];
        for (e, w) in &self.weights {
            for &v in e.iter() {
                out[v as usize - 1] += w;
            }
        }
        out
    }

    pub fn total(&self) -> Rational {
        self.weights.values().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// Every weight in `[0, 1]`, every load at most 1, and (with a host)
    /// every weighted edge present in the host.
    pub fn validate(&self, host: Option<&KGraph>) -> Result<()> {
        for (e, w) in &self.weights {
            if w.is_negative() || *w > Rational::one() {
                return Err(Error::precondition(format!("weight {w} on {e:?} outside [0,1]")));
            }
            if let Some(h) = host {
                if !h.contains(e) {
                    return Err(Error::precondition(format!("{e:?} is not an edge of the host")));
                }
            }
        }
        if let Some((v, l)) = self.loads().iter().enumerate().find(|(_, l)| **l > Rational::one()) {
            return Err(Error::precondition(format!("vertex {} has load {l}", v + 1)));
        }
        Ok(())
    }

    /// True iff every vertex load is exactly 1.
    pub fn is_perfect(&self) -> bool {
        self.loads().iter().all(One::is_one)
    }
}

/// LP optimum together with the dual certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FractionalOptimum {
    pub value: Rational,
    pub matching: FracMatching,
    /// Fractional vertex cover, indexed by `v - 1`: every edge has cover sum
    /// at least 1, and the cover total equals `value`.
    pub cover: Vec<Rational>,
}

impl FractionalOptimum {
    /// Complementary check: primal feasible, dual feasible, equal values.
    pub fn audit(&self, h: &KGraph) -> Result<()> {
        self.matching.validate(Some(h))?;
        if self.cover.iter().any(Signed::is_negative) {
            return Err(Error::precondition("negative cover weight"));
        }
        for e in h.edges() {
            let s = e.iter().fold(Rational::zero(), |acc, &v| acc + &self.cover[v as usize - 1]);
            if s < Rational::one() {
                return Err(Error::precondition(format!("edge {e:?} under-covered")));
            }
        }
        let dual: Rational = self.cover.iter().fold(Rational::zero(), |acc, y| acc + y);
        if dual != self.value || self.matching.total() != self.value {
            return Err(Error::precondition("primal and dual values differ"));
        }
        Ok(())
    }
}

/// Maximum fractional matching of `h`, certified by a dual vertex cover.
pub fn max_fractional(h: &KGraph) -> FractionalOptimum {
    let n = h.n() as usize;
    let mut a = alloc::vec![alloc::vec![Rational::zero(); h.len()]; n];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e.iter() {
            a[v as usize - 1][j] = Rational::one();
        }
    }
    let lp = Lp { a, b: alloc::vec![Rational::one(); n], c: alloc::vec![Rational::one(); h.len()] };
    let LpOutcome::Optimal { value, primal, dual } = lp.solve() else {
        unreachable!("matching LP is bounded by n");
    };
    let mut matching = FracMatching::new(h.n(), h.k());
    for (e, w) in h.edges().iter().zip(primal) {
        if !w.is_zero() {
            matching.weights.insert(e.clone(), w);
        }
    }
    let opt = FractionalOptimum { value, matching, cover: dual };
    debug_assert!(opt.audit(h).is_ok());
    opt
}

/// A perfect fractional matching, if one exists.
pub fn perfect_fractional(h: &KGraph) -> Option<FracMatching> {
    let opt = max_fractional(h);
    let target = Rational::new(BigInt::from(h.n()), BigInt::from(h.k()));
    (opt.value == target).then_some(opt.matching)
}

pub fn has_perfect_fractional(h: &KGraph) -> bool {
    perfect_fractional(h).is_some()
}

/// Weights on the edges of an auxiliary graph (only positive weights kept).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AuxFracMatching {
    pub n: u32,
    pub k: u32,
    pub m: u32,
    pub r: u32,
    pub weights: BTreeMap<AuxEdge, Rational>,
}

impl AuxFracMatching {
    pub fn new(n: u32, k: u32, m: u32, r: u32) -> Self {
        AuxFracMatching { n, k, m, r, weights: BTreeMap::new() }
    }

    pub fn add(&mut self, e: AuxEdge, w: &Rational) {
        if w.is_zero() {
            return;
        }
        *self.weights.entry(e).or_insert_with(Rational::zero) += w;
    }

    /// Loads of base vertices (`v - 1`), then of `v_1..v_m`, then `u_1..u_r`.
    pub fn loads(&self) -> Vec<Rational> {
        let (n, m) = (self.n as usize, self.m as usize);
        let mut out = alloc::vec![Rational::zero(); n + m + self.r as usize];
        for (e, w) in &self.weights {
            for &v in e.base.iter() {
                out[v as usize - 1] += w;
            }
            let idx = match e.label {
                Label::V(i) => n + i as usize - 1,
                Label::U(j) => n + m + j as usize - 1,
            };
            out[idx] += w;
        }
        out
    }

    pub fn is_perfect(&self) -> bool {
        self.weights.values().all(|w| !w.is_negative()) && self.loads().iter().all(One::is_one)
    }
}

/// Projection of label-edge weights onto the complete k-graph on `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Projection {
    /// `w'(f)`: summed weight of `f ∪ {v_i}` over all `i`.
    pub edge_weights: FracMatching,
    /// Base vertex loads, indexed by `v - 1`.
    pub loads: Vec<Rational>,
}

/// Sums the weights of `e ∪ {v_i}` onto `e`. Only `v`-edges are accepted and
/// each `v_i` may carry at most weight 1.
pub fn project_aux(w: &AuxFracMatching) -> Result<Projection> {
    let mut per_label = alloc::vec![Rational::zero(); w.m as usize];
    let mut out = FracMatching::new(w.n, w.k);
    for (e, x) in &w.weights {
        let Label::V(i) = e.label else {
            return Err(Error::precondition(format!("edge through {} is not a v-edge", e.label)));
        };
        if x.is_negative() {
            return Err(Error::precondition("negative weight"));
        }
        per_label[i as usize - 1] += x;
        out.add(e.base.clone(), x);
    }
    if let Some(i) = per_label.iter().position(|t| *t > Rational::one()) {
        return Err(Error::precondition(format!("v{} carries weight above 1", i + 1)));
    }
    let loads = out.loads();
    Ok(Projection { edge_weights: out, loads })
}

/// Splits a nonnegative weighting of total mass `count` into `count` parcels
/// of mass exactly 1, filling parcels in lexicographic edge order and
/// splitting an edge across a parcel boundary when needed.
pub fn distribute_to_u(residual: &FracMatching, count: usize) -> Result<Vec<FracMatching>> {
    if residual.weights.values().any(Signed::is_negative) {
        return Err(Error::precondition("negative residual weight"));
    }
    if residual.total() != int(count) {
        return Err(Error::precondition(format!(
            "residual mass {} differs from parcel count {count}",
            residual.total()
        )));
    }
    let mut parcels = Vec::with_capacity(count);
    let mut cur = FracMatching::new(residual.n, residual.k);
    let mut room = Rational::one();
    for (e, w) in &residual.weights {
        let mut left = w.clone();
        while left.is_positive() {
            let take = if left < room { left.clone() } else { room.clone() };
            cur.add(e.clone(), &take);
            left -= &take;
            room -= &take;
            if room.is_zero() {
                parcels.push(core::mem::replace(&mut cur, FracMatching::new(residual.n, residual.k)));
                room = Rational::one();
            }
        }
    }
    debug_assert_eq!(parcels.len(), count);
    Ok(parcels)
}

/// Builds a perfect fractional matching of an `H*`-style graph with
/// `n = 3(m + r)` base vertices: the given weights on `v`-edges (each `v_i`
/// with total exactly 1) are kept, the projection is extended to a perfect
/// fractional matching of the complete 3-graph on `[n]`, and the added
/// weight is handed to `u_1..u_r` in unit parcels.
pub fn complete_hstar_fractional(w: &AuxFracMatching) -> Result<AuxFracMatching> {
    if w.k != 3 || w.n != 3 * (w.m + w.r) {
        return Err(Error::params(format!(
            "need k = 3 and n = 3(m + r), got k={}, n={}, m={}, r={}",
            w.k, w.n, w.m, w.r
        )));
    }
    let proj = project_aux(w)?;
    let ext = extend_complete3(w.n, &proj.loads)?;
    let parcels = distribute_to_u(&ext.added, w.r as usize)?;
    let mut out = w.clone();
    for (j, parcel) in parcels.into_iter().enumerate() {
        for (e, x) in parcel.weights {
            out.add(AuxEdge { label: Label::U(j as u32 + 1), base: e }, &x);
        }
    }
    if !out.is_perfect() {
        return Err(Error::precondition("assembled weighting is not perfect"));
    }
    Ok(out)
}

pub(crate) fn vertex_edge(vs: &[Vertex]) -> Edge {
    let mut v = vs.to_vec();
    v.sort_unstable();
    Edge::from_sorted(v)
}
