//! Exact matching solvers and the rainbow-to-matching reductions.
//!
//! Every solver here is exact: answers come from exhausting the search tree
//! or closing the bound, and witnesses are validated before they are
//! returned.

mod aux;
mod rainbow;
pub(crate) mod solver;

pub use aux::{reduce_h, reduce_hstar, AuxEdge, AuxGraph, AuxVertex, Label};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{Edge, KGraph, Vertex};
use crate::mask::{VertexMask, WideMask};

/// Pairwise disjoint edges of a k-graph.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> BTreeSet<Vertex> {
        self.edges.iter().flat_map(|e| e.iter().copied()).collect()
    }

    /// Checks membership in `host` and pairwise disjointness.
    pub fn validate(&self, host: &KGraph) -> Result<()> {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if !host.contains(e) {
                return Err(Error::precondition(format!("{e:?} is not an edge of the host")));
            }
            for &v in e.iter() {
                if !seen.insert(v) {
                    return Err(Error::precondition(format!("vertex {v} covered twice")));
                }
            }
        }
        Ok(())
    }
}

/// Pairwise disjoint edges of an auxiliary graph.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AuxMatching {
    pub edges: Vec<AuxEdge>,
}

impl AuxMatching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> BTreeSet<AuxVertex> {
        self.edges.iter().flat_map(AuxEdge::vertices).collect()
    }

    /// Checks membership in `host` and pairwise disjointness.
    pub fn validate(&self, host: &AuxGraph) -> Result<()> {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if !host.contains(e) {
                return Err(Error::precondition(format!(
                    "{}+{:?} is not an edge of the host",
                    e.label,
                    e.base.vertices()
                )));
            }
            for x in e.vertices() {
                if !seen.insert(x) {
                    return Err(Error::precondition(format!("vertex {x} covered twice")));
                }
            }
        }
        Ok(())
    }

    /// Checks that the matching is valid in `host` and covers exactly
    /// `vertices`.
    pub fn validate_perfect_on(&self, host: &AuxGraph, vertices: &BTreeSet<AuxVertex>) -> Result<()> {
        self.validate(host)?;
        if &self.covered() != vertices {
            return Err(Error::precondition("matching does not cover exactly the target set"));
        }
        Ok(())
    }
}

/// One edge per family member, pairwise disjoint. `pairs` is sorted by member
/// index (0-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RainbowMatching {
    pub pairs: Vec<(usize, Edge)>,
}

impl RainbowMatching {
    /// Independent check: one edge per member, each a member edge, all
    /// pairwise disjoint.
    pub fn validate(&self, family: &Family) -> Result<()> {
        if self.pairs.len() != family.m() {
            return Err(Error::precondition(format!(
                "{} edges for {} members",
                self.pairs.len(),
                family.m()
            )));
        }
        let mut members = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for (i, e) in &self.pairs {
            if *i >= family.m() || !members.insert(*i) {
                return Err(Error::precondition(format!("member index {} repeated or invalid", i + 1)));
            }
            if !family.member(*i).contains(e) {
                return Err(Error::precondition(format!("{e:?} is not in member {}", i + 1)));
            }
            for &v in e.iter() {
                if !seen.insert(v) {
                    return Err(Error::precondition(format!("vertex {v} covered twice")));
                }
            }
        }
        Ok(())
    }

    pub fn into_pairs(self) -> Vec<(usize, Vec<Vertex>)> {
        self.pairs.into_iter().map(|(i, e)| (i, e.into_vec())).collect()
    }
}

fn edge_bits(e: &[Vertex]) -> impl Iterator<Item = usize> + '_ {
    e.iter().map(|&v| v as usize - 1)
}

fn pack(
    width: usize,
    edge_size: usize,
    edges: &[Vec<usize>],
    classes: &[Vec<usize>],
    target: Option<usize>,
) -> Vec<usize> {
    fn run<M: VertexMask>(
        width: usize,
        edge_size: usize,
        edges: &[Vec<usize>],
        classes: &[Vec<usize>],
        target: Option<usize>,
    ) -> Vec<usize> {
        let e: Vec<M> = edges.iter().map(|b| M::from_bits(width, b.iter().copied())).collect();
        let c: Vec<M> = classes.iter().map(|b| M::from_bits(width, b.iter().copied())).collect();
        solver::max_packing(width, &e, edge_size, &c, target)
    }
    if width <= 64 {
        run::<u64>(width, edge_size, edges, classes, target)
    } else {
        run::<WideMask>(width, edge_size, edges, classes, target)
    }
}

fn solve_kgraph(h: &KGraph, target: Option<usize>) -> Matching {
    let bits: Vec<Vec<usize>> = h.edges().iter().map(|e| edge_bits(e).collect()).collect();
    let picked = pack(h.n() as usize, h.k() as usize, &bits, &[], target);
    let m = Matching { edges: picked.into_iter().map(|i| h.edges()[i].clone()).collect() };
    debug_assert!(m.validate(h).is_ok());
    m
}

/// A maximum matching of `h`.
pub fn max_matching(h: &KGraph) -> Matching {
    solve_kgraph(h, None)
}

/// `ν(H)`.
pub fn nu(h: &KGraph) -> usize {
    max_matching(h).len()
}

/// A matching of exactly `size` edges, if `ν(H) >= size`.
pub fn matching_of_size(h: &KGraph, size: usize) -> Option<Matching> {
    let mut m = solve_kgraph(h, Some(size));
    (m.len() >= size).then(|| {
        m.edges.truncate(size);
        m
    })
}

/// A perfect matching (covering all `n` vertices), if one exists.
pub fn perfect_matching(h: &KGraph) -> Option<Matching> {
    if h.n() % h.k() != 0 {
        return None;
    }
    matching_of_size(h, (h.n() / h.k()) as usize)
}

pub fn has_perfect_matching(h: &KGraph) -> bool {
    perfect_matching(h).is_some()
}

fn solve_aux(h: &AuxGraph, target: Option<usize>) -> AuxMatching {
    let bits: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.vertices().map(|x| h.index_of(x)).collect())
        .collect();
    let labels: Vec<usize> = (h.n() as usize..h.vertex_count() as usize).collect();
    let picked = pack(h.vertex_count() as usize, h.k() as usize + 1, &bits, &[labels], target);
    let m = AuxMatching { edges: picked.into_iter().map(|i| h.edges()[i].clone()).collect() };
    debug_assert!(m.validate(h).is_ok());
    m
}

/// A maximum matching of an auxiliary graph.
pub fn aux_max_matching(h: &AuxGraph) -> AuxMatching {
    solve_aux(h, None)
}

pub fn aux_nu(h: &AuxGraph) -> usize {
    aux_max_matching(h).len()
}

/// An auxiliary matching of exactly `size` edges, if one exists.
pub fn aux_matching_of_size(h: &AuxGraph, size: usize) -> Option<AuxMatching> {
    let mut m = solve_aux(h, Some(size));
    (m.len() >= size).then(|| {
        m.edges.truncate(size);
        m
    })
}

/// A rainbow matching of `family`, or `None` when none exists.
pub fn rainbow(family: &Family) -> Option<RainbowMatching> {
    fn run<M: VertexMask>(family: &Family) -> Option<Vec<usize>> {
        let width = family.n() as usize;
        let members: Vec<Vec<M>> = family
            .members()
            .iter()
            .map(|g| g.edges().iter().map(|e| M::from_bits(width, edge_bits(e))).collect())
            .collect();
        rainbow::search(width, family.k() as usize, &members)
    }
    let chosen = if family.n() <= 64 { run::<u64>(family) } else { run::<WideMask>(family) }?;
    let pairs = chosen
        .into_iter()
        .enumerate()
        .map(|(i, idx)| (i, family.member(i).edges()[idx].clone()))
        .collect();
    let rm = RainbowMatching { pairs };
    debug_assert!(rm.validate(family).is_ok());
    Some(rm)
}

/// The three equivalent answers for one family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Equivalence {
    pub rainbow: bool,
    pub h_has_m: bool,
    pub hstar_has_m_plus_r: bool,
}

impl Equivalence {
    pub fn agrees(&self) -> bool {
        self.rainbow == self.h_has_m && self.h_has_m == self.hstar_has_m_plus_r
    }
}

/// Runs all three solvers: rainbow search on `F`, `ν(H(F)) >= m` and
/// `ν(H*(F)) = m + r`.
pub fn aux_equivalence(family: &Family) -> Result<Equivalence> {
    let h = reduce_h(family)?;
    let hs = reduce_hstar(family)?;
    let m = family.m();
    let full = m + hs.r() as usize;
    let nu_star = aux_max_matching(&hs).len();
    if nu_star > full {
        return Err(Error::precondition("H* matching larger than m + r"));
    }
    Ok(Equivalence {
        rainbow: rainbow(family).is_some(),
        h_has_m: aux_matching_of_size(&h, m).is_some(),
        hstar_has_m_plus_r: nu_star == full,
    })
}

/// True iff the rainbow and both auxiliary-matching answers agree.
pub fn aux_matching_equiv(family: &Family) -> Result<bool> {
    Ok(aux_equivalence(family)?.agrees())
}

#[cfg(test)]
mod tests;
