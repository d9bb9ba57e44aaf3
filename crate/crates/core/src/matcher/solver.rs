//! Branch-and-bound maximum matching over bitset edges.
//!
//! The search branches on the lowest-index vertex that some still-available
//! edge can cover: first every available edge through it (in input order),
//! then the option of leaving it uncovered. A node is cut when
//! `chosen + min(⌊coverable / edge_size⌋, coverable ∩ class)` cannot beat the
//! incumbent, where `coverable` is the union of the available edges and each
//! class is a vertex set that every edge meets exactly once.

use alloc::vec::Vec;

use crate::mask::VertexMask;

pub(crate) struct Packing<'a, M> {
    edges: &'a [M],
    edge_size: usize,
    classes: &'a [M],
    incident: Vec<Vec<usize>>,
    best: Vec<usize>,
    stack: Vec<usize>,
    target: usize,
    nodes: u64,
}

/// Maximum set of pairwise disjoint `edges`, returned as indices into
/// `edges`. With `target`, the search stops as soon as a packing of that
/// size is found (the result is then a packing of size `target`, or the
/// true maximum if that is smaller).
pub(crate) fn max_packing<M: VertexMask>(
    width: usize,
    edges: &[M],
    edge_size: usize,
    classes: &[M],
    target: Option<usize>,
) -> Vec<usize> {
    let mut incident = alloc::vec![Vec::new(); width];
    for (i, e) in edges.iter().enumerate() {
        let mut rest = e.clone();
        while let Some(v) = rest.first() {
            incident[v].push(i);
            rest.remove(v);
        }
    }
    let mut p = Packing {
        edges,
        edge_size: edge_size.max(1),
        classes,
        incident,
        best: Vec::new(),
        stack: Vec::new(),
        target: target.unwrap_or(usize::MAX),
        nodes: 0,
    };
    p.greedy(width);
    if p.best.len() < p.target {
        let all: Vec<usize> = (0..edges.len()).collect();
        let blocked = M::empty(width);
        p.search(&all, &blocked, width);
    }
    p.best.sort_unstable();
    p.best
}

impl<M: VertexMask> Packing<'_, M> {
    fn greedy(&mut self, width: usize) {
        let mut used = M::empty(width);
        for (i, e) in self.edges.iter().enumerate() {
            if e.is_disjoint(&used) {
                used.union_with(e);
                self.best.push(i);
            }
        }
    }

    fn bound(&self, coverable: &M) -> usize {
        let mut b = coverable.count() / self.edge_size;
        for class in self.classes {
            let mut c = coverable.clone();
            c.intersect_with(class);
            b = b.min(c.count());
        }
        b
    }

    fn search(&mut self, available: &[usize], blocked: &M, width: usize) {
        self.nodes += 1;
        if self.best.len() >= self.target {
            return;
        }
        let mut coverable = M::empty(width);
        for &i in available {
            coverable.union_with(&self.edges[i]);
        }
        if self.stack.len() + self.bound(&coverable) <= self.best.len() {
            return;
        }
        let Some(v) = coverable.first() else {
            return;
        };
        let through: Vec<usize> = self.incident[v]
            .iter()
            .copied()
            .filter(|&i| self.edges[i].is_disjoint(blocked))
            .collect();
        for i in through {
            let e = &self.edges[i];
            let next: Vec<usize> =
                available.iter().copied().filter(|&j| self.edges[j].is_disjoint(e)).collect();
            let mut b = blocked.clone();
            b.union_with(e);
            self.stack.push(i);
            if self.stack.len() > self.best.len() {
                self.best.clone_from(&self.stack);
            }
            self.search(&next, &b, width);
            self.stack.pop();
            if self.best.len() >= self.target {
                return;
            }
        }
        // leave v uncovered
        let next: Vec<usize> =
            available.iter().copied().filter(|&j| !self.edges[j].contains(v)).collect();
        let mut b = blocked.clone();
        b.insert(v);
        self.search(&next, &b, width);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::WideMask;

    fn masks<M: VertexMask>(width: usize, edges: &[&[usize]]) -> Vec<M> {
        edges.iter().map(|e| M::from_bits(width, e.iter().copied())).collect()
    }

    #[test]
    fn triangle_and_path() {
        let e: Vec<u64> = masks(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(max_packing(4, &e, 2, &[], None).len(), 2);
        let e: Vec<u64> = masks(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(max_packing(3, &e, 2, &[], None).len(), 1);
    }

    #[test]
    fn greedy_trap_is_escaped() {
        // Greedy takes {1,2} first and gets stuck at 1; the optimum is 2.
        let e: Vec<u64> = masks(4, &[&[1, 2], &[0, 1], &[2, 3]]);
        let got = max_packing(4, &e, 2, &[], None);
        assert_eq!(got, [1, 2]);
        let w: Vec<WideMask> = masks(100, &[&[1, 2], &[0, 1], &[2, 99]]);
        assert_eq!(max_packing(100, &w, 2, &[], None).len(), 2);
    }

    #[test]
    fn target_stops_early() {
        let e: Vec<u64> = masks(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        assert_eq!(max_packing(6, &e, 2, &[], Some(1)).len(), 3);
        assert!(max_packing(6, &e, 2, &[], Some(2)).len() >= 2);
    }
}
