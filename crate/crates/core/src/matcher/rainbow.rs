//! Rainbow matching search: pick one edge from each member, pairwise
//! disjoint.
//!
//! Members are processed in ascending order of size. A branch is cut when
//! the members still to place exceed `⌊free vertices / k⌋`, or when some
//! unplaced member has no edge avoiding the vertices used so far. Failed
//! `(depth, used)` states are remembered, since the outcome below a node
//! depends on nothing else.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::mask::VertexMask;

struct Search<'a, M> {
    width: usize,
    k: usize,
    members: &'a [Vec<M>],
    order: Vec<usize>,
    chosen: Vec<usize>,
    dead: BTreeSet<(usize, M)>,
}

pub(crate) fn search<M: VertexMask>(
    width: usize,
    k: usize,
    members: &[Vec<M>],
) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| (members[i].len(), i));
    let mut s = Search {
        width,
        k: k.max(1),
        members,
        order,
        chosen: alloc::vec![usize::MAX; members.len()],
        dead: BTreeSet::new(),
    };
    let used = M::empty(width);
    s.descend(0, &used).then_some(s.chosen)
}

impl<M: VertexMask> Search<'_, M> {
    fn descend(&mut self, depth: usize, used: &M) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let remaining = self.order.len() - depth;
        if remaining > (self.width - used.count()) / self.k {
            return false;
        }
        for &later in &self.order[depth + 1..] {
            if !self.members[later].iter().any(|e| e.is_disjoint(used)) {
                return false;
            }
        }
        if self.dead.contains(&(depth, used.clone())) {
            return false;
        }
        let i = self.order[depth];
        for idx in 0..self.members[i].len() {
            let e = &self.members[i][idx];
            if !e.is_disjoint(used) {
                continue;
            }
            let mut next = used.clone();
            next.union_with(e);
            self.chosen[i] = idx;
            if self.descend(depth + 1, &next) {
                return true;
            }
        }
        self.chosen[i] = usize::MAX;
        self.dead.insert((depth, used.clone()));
        false
    }
}
