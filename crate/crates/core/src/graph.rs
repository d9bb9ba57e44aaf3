//! k-uniform hypergraphs on `{1..n}` and the queries the rest of the crate
//! builds on.

use alloc::vec::Vec;
use core::ops::Deref;

use crate::combin;
use crate::error::{Error, Result};

/// A vertex label, 1-based.
pub type Vertex = u32;

/// An edge: a strictly increasing tuple of distinct vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(Vec<Vertex>);

impl Edge {
    /// Sorts and validates `vertices` as a `k`-edge over `{1..n}`.
    pub fn new(n: u32, k: u32, vertices: &[Vertex]) -> Result<Self> {
        if vertices.len() != k as usize {
            return Err(Error::Arity { edge: vertices.to_vec(), expected: k as usize });
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if let Some(&v) = sorted.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::VertexOutOfRange { edge: vertices.to_vec(), vertex: v, n });
        }
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex { edge: vertices.to_vec(), vertex: w[0] });
        }
        Ok(Edge(sorted))
    }

    /// Wraps an already strictly increasing vertex list.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Edge(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Edges covered by one step down in the dominance order: one coordinate
    /// decremented by one, keeping the tuple strictly increasing.
    pub fn immediate_predecessors(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.0.len()).filter_map(move |i| {
            let floor = if i == 0 { 0 } else { self.0[i - 1] };
            (self.0[i] - 1 > floor).then(|| {
                let mut e = self.0.clone();
                e[i] -= 1;
                Edge(e)
            })
        })
    }

    /// One step up in the dominance order, staying inside `{1..n}`.
    pub fn immediate_successors(&self, n: u32) -> impl Iterator<Item = Edge> + '_ {
        (0..self.0.len()).filter_map(move |i| {
            let ceil = self.0.get(i + 1).copied().unwrap_or(n + 1);
            (self.0[i] + 1 < ceil).then(|| {
                let mut e = self.0.clone();
                e[i] += 1;
                Edge(e)
            })
        })
    }
}

impl AsRef<[Vertex]> for Edge {
    fn as_ref(&self) -> &[Vertex] {
        &self.0
    }
}

impl Deref for Edge {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

/// Coordinatewise dominance on sorted tuples: `e <= f` iff `e[i] <= f[i]` for
/// every position.
pub fn dominance_leq(e: &[Vertex], f: &[Vertex]) -> Result<bool> {
    if e.len() != f.len() {
        return Err(Error::Arity { edge: f.to_vec(), expected: e.len() });
    }
    Ok(e.iter().zip(f).all(|(a, b)| a <= b))
}

/// A set of vertices, kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        VertexSet((1..=n).collect())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// `{1..n}` minus this set.
    pub fn complement(&self, n: u32) -> Self {
        VertexSet((1..=n).filter(|v| !self.contains(*v)).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

/// Order-preserving relabeling produced by [`KGraph::induced`]: new vertex
/// `i` (1-based) is old vertex `old_of_new[i - 1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relabel {
    old_of_new: Vec<Vertex>,
}

impl Relabel {
    pub fn to_old(&self, new: Vertex) -> Vertex {
        self.old_of_new[new as usize - 1]
    }

    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        self.old_of_new.binary_search(&old).ok().map(|i| i as Vertex + 1)
    }

    pub fn kept(&self) -> &[Vertex] {
        &self.old_of_new
    }

    pub fn map_edge_to_old(&self, e: &Edge) -> Edge {
        Edge(e.iter().map(|&v| self.to_old(v)).collect())
    }
}

/// A k-uniform hypergraph on `{1..n}`.
///
/// Edges are stored sorted and deduplicated; two graphs are equal iff they
/// have the same `n`, `k` and edge set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KGraph {
    n: u32,
    k: u32,
    edges: Vec<Edge>,
}

impl KGraph {
    /// Validates and canonicalizes an edge list.
    pub fn build<I, E>(n: u32, k: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if k == 0 || k > n {
            return Err(Error::Uniformity { n, k });
        }
        let edges = edges
            .into_iter()
            .map(|e| Edge::new(n, k, e.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_edges(n, k, edges))
    }

    /// Canonicalizes edges already known to be valid.
    pub(crate) fn from_edges(n: u32, k: u32, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        KGraph { n, k, edges }
    }

    pub fn empty(n: u32, k: u32) -> Self {
        KGraph { n, k, edges: Vec::new() }
    }

    /// All k-subsets of `{1..n}`.
    pub fn complete(n: u32, k: u32) -> Self {
        Self::complete_on(n, k, n)
    }

    /// All k-subsets of `{1..span}` on the vertex set `{1..n}`.
    pub(crate) fn complete_on(n: u32, k: u32, span: u32) -> Self {
        let edges = combin::subsets(1, span, k as usize).map(Edge).collect();
        KGraph { n, k, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Membership test for a strictly increasing tuple.
    pub fn contains(&self, e: &[Vertex]) -> bool {
        self.edges.binary_search_by(|x| x.vertices().cmp(e)).is_ok()
    }

    /// Adds one edge (no-op when present).
    pub fn insert(&mut self, e: Edge) -> bool {
        match self.edges.binary_search(&e) {
            Ok(_) => false,
            Err(i) => {
                self.edges.insert(i, e);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, e: &[Vertex]) -> bool {
        match self.edges.binary_search_by(|x| x.vertices().cmp(e)) {
            Ok(i) => {
                self.edges.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    /// k-subsets of `{1..n}` that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        combin::subsets(1, self.n, self.k as usize)
            .filter(|e| !self.contains(e))
            .map(Edge)
    }

    /// `d_H(T)`: the number of edges containing every vertex of `t`. The
    /// empty set has degree `|E(H)|`.
    pub fn degree(&self, t: &VertexSet) -> Result<usize> {
        if t.len() > self.k as usize {
            return Err(Error::SetTooLarge { size: t.len(), k: self.k });
        }
        Ok(self.edges.iter().filter(|e| t.iter().all(|v| e.contains(v))).count())
    }

    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Degrees of all vertices, indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = alloc::vec![0; self.n as usize];
        for e in &self.edges {
            for &v in e.iter() {
                d[v as usize - 1] += 1;
            }
        }
        d
    }

    /// `Δ(H)`, zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Δ₂(H)`: the largest pair degree, zero for an edgeless graph.
    pub fn max_codegree(&self) -> usize {
        let n = self.n as usize;
        let mut d = alloc::vec![0usize; n * n];
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    d[(a as usize - 1) * n + b as usize - 1] += 1;
                }
            }
        }
        d.into_iter().max().unwrap_or(0)
    }

    /// `H[S]`, relabeled onto `{1..|S|}` preserving order. Vertices of `s`
    /// outside `{1..n}` are ignored.
    pub fn induced(&self, s: &VertexSet) -> (KGraph, Relabel) {
        let kept: Vec<Vertex> = s.iter().filter(|&v| v >= 1 && v <= self.n).collect();
        let relabel = Relabel { old_of_new: kept };
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                e.iter()
                    .map(|&v| relabel.to_new(v))
                    .collect::<Option<Vec<_>>>()
                    .map(Edge)
            })
            .collect();
        let g = KGraph { n: relabel.old_of_new.len() as u32, k: self.k, edges };
        (g, relabel)
    }

    /// `H - S`: the subgraph induced on the complement of `s`.
    pub fn remove(&self, s: &VertexSet) -> (KGraph, Relabel) {
        self.induced(&s.complement(self.n))
    }

    /// True iff the edge set is closed downward in the dominance order.
    /// Only immediate predecessors are generated; a set closed under those
    /// is closed under the whole order.
    pub fn is_stable(&self) -> bool {
        self.first_unstable().is_none()
    }

    /// An edge together with a missing immediate predecessor, if any.
    pub fn first_unstable(&self) -> Option<(Edge, Edge)> {
        self.edges.iter().find_map(|f| {
            f.immediate_predecessors()
                .find(|e| !self.contains(e))
                .map(|e| (f.clone(), e))
        })
    }

    /// Same graph placed on a larger vertex set.
    pub fn with_n(&self, n: u32) -> Result<KGraph> {
        if let Some(e) = self.edges.iter().find(|e| e[e.len() - 1] > n) {
            let vertex = e[e.len() - 1];
            return Err(Error::VertexOutOfRange { edge: e.to_vec(), vertex, n });
        }
        Ok(KGraph { n, k: self.k, edges: self.edges.clone() })
    }
}
