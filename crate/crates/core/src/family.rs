//! Ordered families `F_1, ..., F_m` of k-graphs on a common vertex set.
//!
//! Member indices in the API are 0-based positions in the family; reports
//! and files print them 1-based.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::KGraph;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Family {
    n: u32,
    k: u32,
    members: Vec<KGraph>,
}

impl Family {
    /// Checks that every member shares `n` and `k` and that `m >= 1`.
    pub fn new(members: Vec<KGraph>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::params("a family needs at least one member"))?;
        let (n, k) = (first.n(), first.k());
        if let Some((i, g)) = members.iter().enumerate().find(|(_, g)| g.n() != n || g.k() != k) {
            return Err(Error::Mismatch(format!(
                "member {} is on (n={}, k={}) but member 1 is on (n={n}, k={k})",
                i + 1,
                g.n(),
                g.k()
            )));
        }
        Ok(Family { n, k, members })
    }

    /// `m` copies of one graph.
    pub fn copies(g: &KGraph, m: usize) -> Result<Self> {
        Self::new(core::iter::repeat_n(g, m).cloned().collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[KGraph] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &KGraph {
        &self.members[i]
    }

    pub(crate) fn member_mut(&mut self, i: usize) -> &mut KGraph {
        &mut self.members[i]
    }

    pub fn into_members(self) -> Vec<KGraph> {
        self.members
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(KGraph::len).collect()
    }

    pub fn is_stable(&self) -> bool {
        self.members.iter().all(KGraph::is_stable)
    }
}
