//! Binomial coefficients and k-subset enumeration.

use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::Vertex;

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for signed `n`, defined as zero for `n < k` (including negative
/// `n`). This is the convention the extremal formulas rely on.
pub fn binomial_signed(n: i64, k: u64) -> BigUint {
    if n < 0 {
        BigUint::zero()
    } else {
        binomial(n as u64, k)
    }
}

/// `C(n, k)` in machine arithmetic, saturating at `u64::MAX`.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All k-subsets of `{lo, ..., hi}` as strictly increasing vectors, in
/// lexicographic order.
pub fn subsets(lo: Vertex, hi: Vertex, k: usize) -> impl Iterator<Item = Vec<Vertex>> {
    (lo..=hi).combinations(k)
}

/// All k-subsets of an arbitrary sorted vertex list, lexicographic in the
/// list order.
pub fn subsets_of(vertices: &[Vertex], k: usize) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    vertices.iter().copied().combinations(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(9, 3), BigUint::from(84u32));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial_signed(-2, 3), BigUint::zero());
        assert_eq!(binomial_u64(100, 3), 161_700);
    }

    #[test]
    fn pascal_rule_holds() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn subsets_are_lexicographic() {
        let all: Vec<_> = subsets(1, 5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], [1, 2, 3]);
        assert_eq!(all[9], [3, 4, 5]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subsets(1, 3, 0).count(), 1);
    }
}
