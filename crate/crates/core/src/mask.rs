//! Fixed-width vertex bitsets used by the solvers.
//!
//! Bit `i` stands for the vertex with 0-based index `i`. Graphs with at most
//! 64 vertices use a bare `u64`; larger ones fall back to [`WideMask`].

use alloc::vec;
use alloc::vec::Vec;

pub trait VertexMask: Clone + Ord + core::fmt::Debug {
    /// An empty mask able to hold `width` vertices.
    fn empty(width: usize) -> Self;
    fn insert(&mut self, bit: usize);
    fn remove(&mut self, bit: usize);
    fn contains(&self, bit: usize) -> bool;
    fn is_disjoint(&self, other: &Self) -> bool;
    fn union_with(&mut self, other: &Self);
    fn difference_with(&mut self, other: &Self);
    fn intersect_with(&mut self, other: &Self);
    fn count(&self) -> usize;
    /// Lowest set bit, if any.
    fn first(&self) -> Option<usize>;
    fn is_empty(&self) -> bool;

    fn from_bits(width: usize, bits: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(width);
        for b in bits {
            m.insert(b);
        }
        m
    }
}

impl VertexMask for u64 {
    #[inline]
    fn empty(width: usize) -> Self {
        debug_assert!(width <= 64);
        0
    }
    #[inline]
    fn insert(&mut self, bit: usize) {
        *self |= 1 << bit;
    }
    #[inline]
    fn remove(&mut self, bit: usize) {
        *self &= !(1 << bit);
    }
    #[inline]
    fn contains(&self, bit: usize) -> bool {
        *self >> bit & 1 == 1
    }
    #[inline]
    fn is_disjoint(&self, other: &Self) -> bool {
        self & other == 0
    }
    #[inline]
    fn union_with(&mut self, other: &Self) {
        *self |= other;
    }
    #[inline]
    fn difference_with(&mut self, other: &Self) {
        *self &= !other;
    }
    #[inline]
    fn intersect_with(&mut self, other: &Self) {
        *self &= other;
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
}

/// Multi-word bitset for more than 64 vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct WideMask {
    words: Vec<u64>,
}

impl VertexMask for WideMask {
    fn empty(width: usize) -> Self {
        WideMask { words: vec![0; width.div_ceil(64).max(1)] }
    }
    fn insert(&mut self, bit: usize) {
        self.words[bit / 64] |= 1 << (bit % 64);
    }
    fn remove(&mut self, bit: usize) {
        self.words[bit / 64] &= !(1 << (bit % 64));
    }
    fn contains(&self, bit: usize) -> bool {
        self.words.get(bit / 64).is_some_and(|w| w >> (bit % 64) & 1 == 1)
    }
    fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
    fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
    fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }
    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exercise<M: VertexMask>(width: usize) {
        let a = M::from_bits(width, [0, 3, width - 1]);
        let b = M::from_bits(width, [1, 2]);
        assert!(a.is_disjoint(&b));
        assert_eq!(a.count(), 3);
        assert_eq!(a.first(), Some(0));
        let mut c = a.clone();
        c.union_with(&b);
        assert_eq!(c.count(), 5);
        c.difference_with(&a);
        assert_eq!(c, b);
        c.intersect_with(&a);
        assert!(c.is_empty());
        assert_eq!(c.first(), None);
        let mut d = a.clone();
        d.remove(0);
        assert_eq!(d.first(), Some(3));
        assert!(d.contains(width - 1));
    }

    #[test]
    fn narrow_and_wide_agree() {
        exercise::<u64>(64);
        exercise::<WideMask>(64);
        exercise::<WideMask>(200);
    }
}
