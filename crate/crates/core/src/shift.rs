//! Compression, saturation and full-degree peeling of families.
//!
//! All schedules here are deterministic:
//!
//! * compression sweeps the pairs `(i, j)`, `i < j`, lexicographically and
//!   restarts after every effective shift until a clean sweep;
//! * saturation tries candidate edges in `(member, edge)` lexicographic
//!   order, keeping an edge only if the family stays rainbow-free;
//! * peeling removes the first `(member, vertex)` pair of full degree.

use alloc::format;
use alloc::vec::Vec;

use crate::combin::binomial_u64;
use crate::error::{Error, Result};
use crate::extremal::f_bound;
use crate::family::Family;
use crate::graph::{Edge, KGraph, Vertex, VertexSet};
use crate::matcher::{rainbow, RainbowMatching};

/// `(i, j)`-compression of one graph: every edge `e` with `j ∈ e`, `i ∉ e` is
/// replaced by `e - j + i` unless that set is already an edge.
pub fn shift_graph(g: &KGraph, i: Vertex, j: Vertex) -> KGraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            if e.contains(j) && !e.contains(i) {
                let mut moved: Vec<Vertex> = e.iter().map(|&v| if v == j { i } else { v }).collect();
                moved.sort_unstable();
                if !g.contains(&moved) {
                    return Edge::from_sorted(moved);
                }
            }
            e.clone()
        })
        .collect();
    KGraph::from_edges(g.n(), g.k(), edges)
}

/// Applies the `(i, j)`-compression to every member in lockstep.
pub fn shift_ij(family: &Family, i: Vertex, j: Vertex) -> Result<Family> {
    if i == 0 || i >= j || j > family.n() {
        return Err(Error::params(format!("shift needs 1 <= i < j <= n, got i={i}, j={j}")));
    }
    Family::new(family.members().iter().map(|g| shift_graph(g, i, j)).collect())
}

/// Compresses a single graph to a stable one with the same edge count.
pub fn stabilize_graph(g: &KGraph) -> KGraph {
    let mut cur = g.clone();
    'sweep: loop {
        for i in 1..cur.n() {
            for j in i + 1..=cur.n() {
                let next = shift_graph(&cur, i, j);
                if next != cur {
                    cur = next;
                    continue 'sweep;
                }
            }
        }
        return cur;
    }
}

/// Repeats simultaneous compressions until no pair changes any member.
/// Every member of the result is stable and keeps its edge count.
pub fn stabilize(family: &Family) -> Family {
    let n = family.n();
    let mut cur = family.clone();
    'sweep: loop {
        for i in 1..n {
            for j in i + 1..=n {
                let next = shift_ij(&cur, i, j).expect("pair in range");
                if next != cur {
                    cur = next;
                    continue 'sweep;
                }
            }
        }
        return cur;
    }
}

/// Single-instance check that compression keeps rainbow-freeness: true iff `original`
/// has a rainbow matching or `stabilized` has none.
pub fn rainbow_free_preserved(original: &Family, stabilized: &Family) -> bool {
    rainbow(original).is_some() || rainbow(stabilized).is_none()
}

fn require_rainbow_free(family: &Family) -> Result<()> {
    match rainbow(family) {
        Some(rm) => Err(Error::HasRainbow(rm.into_pairs())),
        None => Ok(()),
    }
}

/// One saturation sweep; returns how many edges were added.
fn saturation_sweep(family: &mut Family) -> usize {
    let mut added = 0;
    for i in 0..family.m() {
        let candidates: Vec<Edge> = family.member(i).non_edges().collect();
        for e in candidates {
            family.member_mut(i).insert(e.clone());
            if rainbow(family).is_some() {
                family.member_mut(i).remove_edge(&e);
            } else {
                added += 1;
            }
        }
    }
    added
}

/// Grows a rainbow-free family to one that is both stable and saturated,
/// alternating saturation sweeps with compression until neither changes
/// anything. Member sizes never shrink.
pub fn saturate(family: &Family) -> Result<Family> {
    require_rainbow_free(family)?;
    let mut cur = family.clone();
    loop {
        let added = saturation_sweep(&mut cur);
        let stable = stabilize(&cur);
        if added == 0 && stable == cur {
            return Ok(cur);
        }
        cur = stable;
        // compression is expected to keep the family rainbow-free
        require_rainbow_free(&cur)?;
    }
}

/// True iff the family has no rainbow matching but adding any missing edge
/// to any member creates one.
pub fn is_saturated(family: &Family) -> bool {
    if rainbow(family).is_some() {
        return false;
    }
    let mut work = family.clone();
    for i in 0..family.m() {
        for e in family.member(i).non_edges() {
            work.member_mut(i).insert(e.clone());
            let creates = rainbow(&work).is_some();
            work.member_mut(i).remove_edge(&e);
            if !creates {
                return false;
            }
        }
    }
    true
}

/// Whether [`degree_cap_check`] should verify saturation or take it on
/// trust.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SaturationFlag {
    Verify,
    Trust,
}

/// A vertex whose degree in one member breaks the cap.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CapViolation {
    pub member: usize,
    pub vertex: Vertex,
    pub degree: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeCapReport {
    /// `Some(result)` when saturation was verified, `None` when trusted. The
    /// violation list only carries meaning for saturated families.
    pub saturated: Option<bool>,
    /// `C(n-1,k-1) - C(n-1-k(m-1),k-1)`.
    pub cap: u64,
    /// `C(n-1,k-1)`.
    pub full: u64,
    pub violations: Vec<CapViolation>,
}

/// Audits every member degree against the saturated-family bound: each
/// degree is either at most `cap` or equal to `full`.
pub fn degree_cap_check(family: &Family, flag: SaturationFlag) -> DegreeCapReport {
    let (n, k, m) = (family.n() as u64, family.k() as u64, family.m() as u64);
    let full = binomial_u64(n - 1, k - 1);
    let rest = (n - 1).checked_sub(k * (m - 1)).map_or(0, |x| binomial_u64(x, k - 1));
    let cap = full - rest;
    let mut violations = Vec::new();
    for (i, g) in family.members().iter().enumerate() {
        for (v, d) in g.degrees().into_iter().enumerate() {
            let d = d as u64;
            if d > cap && d != full {
                violations.push(CapViolation { member: i, vertex: v as Vertex + 1, degree: d });
            }
        }
    }
    let saturated = match flag {
        SaturationFlag::Verify => Some(is_saturated(family)),
        SaturationFlag::Trust => None,
    };
    DegreeCapReport { saturated, cap, full, violations }
}

/// One removal: `vertex` had full degree in `member`; the member was dropped
/// and the vertex deleted from every other member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeelStep {
    pub iteration: usize,
    /// Vertex label in the family the step was applied to.
    pub vertex: Vertex,
    /// Member index in the family the step was applied to.
    pub member: usize,
    /// The same vertex and member expressed in the input's labels.
    pub original_vertex: Vertex,
    pub original_member: usize,
    /// Size of the vertex set the step was applied to.
    pub n: u32,
}

/// Deletes `vertex` from every member except `member`, drops `member`, and
/// relabels onto `[n - 1]`.
pub fn peel_step(family: &Family, member: usize, vertex: Vertex) -> Result<Family> {
    if family.m() < 2 {
        return Err(Error::precondition("peeling needs at least two members"));
    }
    if member >= family.m() || vertex == 0 || vertex > family.n() {
        return Err(Error::params("peel target out of range"));
    }
    let gone = VertexSet::from([vertex]);
    let rest = family
        .members()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != member)
        .map(|(_, g)| g.remove(&gone).0)
        .collect();
    Family::new(rest)
}

/// Undoes one [`peel_step`] on a rainbow matching: edges are mapped back to
/// the larger vertex set and the dropped member receives `vertex` plus the
/// lowest `k - 1` free vertices. The result is a rainbow matching of the
/// family the step was applied to whenever `vertex` had full degree there.
pub fn lift_step(
    family_before: &Family,
    member: usize,
    vertex: Vertex,
    rm: &RainbowMatching,
) -> RainbowMatching {
    let up = |v: Vertex| if v >= vertex { v + 1 } else { v };
    let mut pairs: Vec<(usize, Edge)> = rm
        .pairs
        .iter()
        .map(|(i, e)| {
            let idx = if *i >= member { i + 1 } else { *i };
            (idx, Edge::from_sorted(e.iter().map(|&v| up(v)).collect()))
        })
        .collect();
    let used: VertexSet = pairs.iter().flat_map(|(_, e)| e.iter().copied()).collect();
    let mut extra: Vec<Vertex> = (1..=family_before.n())
        .filter(|&v| v != vertex && !used.contains(v))
        .take(family_before.k() as usize - 1)
        .collect();
    extra.push(vertex);
    extra.sort_unstable();
    pairs.push((member, Edge::from_sorted(extra)));
    pairs.sort();
    RainbowMatching { pairs }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeelResult {
    /// Stable, saturated, and free of full-degree vertices.
    pub family: Family,
    pub log: Vec<PeelStep>,
    /// `original_members[i]` is the input index of output member `i`.
    pub original_members: Vec<usize>,
    /// `original_vertices[v - 1]` is the input label of output vertex `v`.
    pub original_vertices: Vec<Vertex>,
    /// `Some(true)` when the input had `|F_i| > f(n,m,k)` for all `i` and the
    /// output has `|F'_i| > f(n_t,m_t,k)` for all `i`; `Some(false)` if that
    /// implication failed; `None` when the input premise did not hold.
    pub size_bound_carried: Option<bool>,
}

fn above_threshold(family: &Family) -> bool {
    let (n, m, k) = (family.n() as u64, family.m() as u64, family.k() as u64);
    match f_bound(n, m, k) {
        Ok(f) => family.members().iter().all(|g| num_bigint::BigUint::from(g.len()) > f),
        Err(_) => false,
    }
}

/// Saturate, then remove the first full-degree `(member, vertex)` pair, and
/// repeat until no member has a vertex of degree `C(n-1,k-1)`.
pub fn peel_full_degree(family: &Family) -> Result<PeelResult> {
    require_rainbow_free(family)?;
    let premise = above_threshold(family);
    let mut cur = family.clone();
    let mut members: Vec<usize> = (0..family.m()).collect();
    let mut vertices: Vec<Vertex> = (1..=family.n()).collect();
    let mut log = Vec::new();
    for iteration in 0.. {
        cur = saturate(&cur)?;
        let full = binomial_u64(cur.n() as u64 - 1, cur.k() as u64 - 1) as usize;
        let hit = cur.members().iter().enumerate().find_map(|(i, g)| {
            g.degrees().iter().position(|&d| d == full).map(|v| (i, v as Vertex + 1))
        });
        let Some((member, vertex)) = hit else {
            break;
        };
        if cur.m() < 2 {
            return Err(Error::precondition("full-degree vertex in a single-member family"));
        }
        log.push(PeelStep {
            iteration,
            vertex,
            member,
            original_vertex: vertices[vertex as usize - 1],
            original_member: members[member],
            n: cur.n(),
        });
        cur = peel_step(&cur, member, vertex)?;
        members.remove(member);
        vertices.remove(vertex as usize - 1);
    }
    let size_bound_carried = premise.then(|| above_threshold(&cur));
    Ok(PeelResult {
        family: cur,
        log,
        original_members: members,
        original_vertices: vertices,
        size_bound_carried,
    })
}

#[cfg(test)]
mod tests;
