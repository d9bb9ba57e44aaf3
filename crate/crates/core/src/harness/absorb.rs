//! The absorbing matching of a stable family and its absorption step.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::combin::subsets;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{Edge, Vertex};
use crate::matcher::{reduce_hstar, AuxEdge, AuxMatching, AuxVertex, Label};

fn block(k: u32, j: u32) -> Edge {
    Edge::from_sorted((k * (j - 1) + 1..=k * j).collect())
}

/// `M = {u_j ∪ {k(j-1)+1, ..., kj} : j ∈ [t]}` in `H*(F)`.
///
/// The construction needs `t <= r` and every member complete on `[kt]`; the
/// latter is checked edge by edge and the first missing edge is reported.
/// Stability and `|F_i| > f(n,m,k)` are how that completeness arises in
/// theory but are not themselves required.
pub fn build_absorbing(family: &Family, t: u32) -> Result<AuxMatching> {
    let k = family.k();
    let host = reduce_hstar(family)?;
    if t > host.r() {
        return Err(Error::precondition(format!("t = {t} exceeds r = {}", host.r())));
    }
    for (i, g) in family.members().iter().enumerate() {
        if let Some(e) = subsets(1, k * t, k as usize).find(|e| !g.contains(e)) {
            return Err(Error::precondition(format!(
                "member {} is not complete on [{}]: missing {e:?}",
                i + 1,
                k * t
            )));
        }
    }
    let matching = AuxMatching {
        edges: (1..=t).map(|j| AuxEdge { label: Label::U(j), base: block(k, j) }).collect(),
    };
    matching.validate(&host)?;
    Ok(matching)
}

/// Extends the absorbing matching `m` to a perfect matching of `V(M) ∪ S`.
///
/// With `t' = |S ∩ labels|`, the label vertices of `S` take the blocks
/// `[kt']` in order (`M_1`); the `u`-labels of `M` then cover what is left of
/// `[kt]` together with `S ∩ [n]` (`M_2`). The result is validated against
/// `H*(F)`.
pub fn absorb(family: &Family, m: &AuxMatching, s: &BTreeSet<AuxVertex>) -> Result<AuxMatching> {
    let host = reduce_hstar(family)?;
    let k = host.k();
    m.validate(&host)?;
    let t = m.len() as u32;
    let covered = m.covered();
    let shape: BTreeSet<AuxVertex> = (1..=k * t)
        .map(AuxVertex::Base)
        .chain((1..=t).map(|j| AuxVertex::Label(Label::U(j))))
        .collect();
    if covered != shape {
        return Err(Error::precondition("M does not cover exactly {u_1..u_t} and [kt]"));
    }
    let all: BTreeSet<AuxVertex> = host.vertices().collect();
    if let Some(x) = s.iter().find(|x| !all.contains(x)) {
        return Err(Error::precondition(format!("{x} is not a vertex of H*")));
    }
    if let Some(x) = s.intersection(&covered).next() {
        return Err(Error::precondition(format!("S meets V(M) at {x}")));
    }
    let labels: Vec<Label> = s
        .iter()
        .filter_map(|x| match x {
            AuxVertex::Label(l) => Some(*l),
            AuxVertex::Base(_) => None,
        })
        .collect();
    let base: Vec<Vertex> = s
        .iter()
        .filter_map(|x| match x {
            AuxVertex::Base(v) => Some(*v),
            AuxVertex::Label(_) => None,
        })
        .collect();
    let tp = labels.len() as u32;
    if k * tp != base.len() as u32 {
        return Err(Error::precondition(format!(
            "S is unbalanced: {} base vertices for {tp} labels",
            base.len()
        )));
    }
    if tp > 0 && tp >= t {
        return Err(Error::precondition(format!("S has {tp} labels, needs fewer than t = {t}")));
    }
    let mut edges: Vec<AuxEdge> = labels
        .iter()
        .zip(1..)
        .map(|(&label, j)| AuxEdge { label, base: block(k, j) })
        .collect();
    let mut rest: Vec<Vertex> = (k * tp + 1..=k * t).chain(base).collect();
    rest.sort_unstable();
    edges.extend(
        rest.chunks(k as usize)
            .zip(1..=t)
            .map(|(chunk, j)| AuxEdge { label: Label::U(j), base: Edge::from_sorted(chunk.to_vec()) }),
    );
    let out = AuxMatching { edges };
    let target: BTreeSet<AuxVertex> = covered.union(s).copied().collect();
    out.validate_perfect_on(&host, &target)?;
    Ok(out)
}
