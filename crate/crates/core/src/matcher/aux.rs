//! The auxiliary (k+1)-graphs `H(F)` and `H*(F)`.
//!
//! `H(F)` attaches a label vertex `v_i` to every edge of member `F_i`;
//! `H*(F)` additionally has `r = ⌊n/k⌋ - m` free labels `u_j`, each attached
//! to every k-subset of `[n]`. The family admits a rainbow matching iff
//! `ν(H(F)) >= m` iff `ν(H*(F)) = m + r`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::combin;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{Edge, Vertex};

/// A label vertex: `V(i)` is `v_i`, `U(j)` is `u_j` (both 1-based).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    V(u32),
    U(u32),
}

/// Any vertex of an auxiliary graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AuxVertex {
    Base(Vertex),
    Label(Label),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::V(i) => write!(f, "v{i}"),
            Label::U(j) => write!(f, "u{j}"),
        }
    }
}

impl fmt::Display for AuxVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuxVertex::Base(v) => write!(f, "{v}"),
            AuxVertex::Label(l) => write!(f, "{l}"),
        }
    }
}

/// An edge `e ∪ {label}` with `e` a k-subset of `[n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AuxEdge {
    pub label: Label,
    pub base: Edge,
}

impl AuxEdge {
    pub fn vertices(&self) -> impl Iterator<Item = AuxVertex> + '_ {
        self.base
            .iter()
            .map(|&v| AuxVertex::Base(v))
            .chain(core::iter::once(AuxVertex::Label(self.label)))
    }

    pub fn contains(&self, x: AuxVertex) -> bool {
        match x {
            AuxVertex::Base(v) => self.base.contains(v),
            AuxVertex::Label(l) => self.label == l,
        }
    }

    pub fn is_disjoint(&self, other: &AuxEdge) -> bool {
        self.label != other.label && self.base.is_disjoint(&other.base)
    }
}

/// A (k+1)-graph on `[n] ∪ {v_1..v_m} ∪ {u_1..u_r}` in which every edge holds
/// exactly one label vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AuxGraph {
    n: u32,
    k: u32,
    m: u32,
    r: u32,
    edges: Vec<AuxEdge>,
}

impl AuxGraph {
    /// Validates labels and base edges, then sorts and deduplicates.
    pub fn build(n: u32, k: u32, m: u32, r: u32, edges: Vec<AuxEdge>) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::Uniformity { n, k });
        }
        for e in &edges {
            Edge::new(n, k, &e.base)?;
            let ok = match e.label {
                Label::V(i) => (1..=m).contains(&i),
                Label::U(j) => (1..=r).contains(&j),
            };
            if !ok {
                return Err(Error::params(format!(
                    "label {} outside v1..v{m} / u1..u{r}",
                    e.label
                )));
            }
        }
        Ok(Self::from_edges(n, k, m, r, edges))
    }

    pub(crate) fn from_edges(n: u32, k: u32, m: u32, r: u32, mut edges: Vec<AuxEdge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        AuxGraph { n, k, m, r, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Uniformity of the base family; edges here have `k + 1` vertices.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn edges(&self) -> &[AuxEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Total vertex count `n + m + r`.
    pub fn vertex_count(&self) -> u32 {
        self.n + self.m + self.r
    }

    pub fn contains(&self, e: &AuxEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = AuxVertex> {
        let (n, m, r) = (self.n, self.m, self.r);
        (1..=n)
            .map(AuxVertex::Base)
            .chain((1..=m).map(|i| AuxVertex::Label(Label::V(i))))
            .chain((1..=r).map(|j| AuxVertex::Label(Label::U(j))))
    }

    /// 0-based solver index: base vertices first, then `v_i`, then `u_j`.
    pub fn index_of(&self, x: AuxVertex) -> usize {
        match x {
            AuxVertex::Base(v) => v as usize - 1,
            AuxVertex::Label(Label::V(i)) => (self.n + i - 1) as usize,
            AuxVertex::Label(Label::U(j)) => (self.n + self.m + j - 1) as usize,
        }
    }

    pub fn is_label_present(&self, l: Label) -> bool {
        match l {
            Label::V(i) => (1..=self.m).contains(&i),
            Label::U(j) => (1..=self.r).contains(&j),
        }
    }
}

/// `H(F)`.
pub fn reduce_h(family: &Family) -> Result<AuxGraph> {
    reduce(family, false)
}

/// `H*(F)` with `r = ⌊n/k⌋ - m` free labels.
pub fn reduce_hstar(family: &Family) -> Result<AuxGraph> {
    reduce(family, true)
}

fn reduce(family: &Family, star: bool) -> Result<AuxGraph> {
    let (n, k, m) = (family.n(), family.k(), family.m() as u32);
    if n < k * m {
        return Err(Error::params(format!("reduction needs n >= km, got n={n}, k={k}, m={m}")));
    }
    let r = if star { n / k - m } else { 0 };
    let mut edges = Vec::new();
    for (i, g) in family.members().iter().enumerate() {
        edges.extend(
            g.edges().iter().map(|e| AuxEdge { label: Label::V(i as u32 + 1), base: e.clone() }),
        );
    }
    for j in 1..=r {
        edges.extend(
            combin::subsets(1, n, k as usize)
                .map(|e| AuxEdge { label: Label::U(j), base: Edge::from_sorted(e) }),
        );
    }
    Ok(AuxGraph::from_edges(n, k, m, r, edges))
}
