//! The threshold `f(n, m, k)`, the extremal configurations `S(n, m, k)` and
//! `D(n, m, k)`, and the closeness measure.
//!
//! Everything here is exact: integers are arbitrary precision and closeness
//! is an exact rational.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::combin::{binomial, binomial_signed};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{Edge, KGraph};
use crate::matcher::{reduce_h, AuxGraph};
use crate::Rational;

fn check_domain(n: u64, m: u64, k: u64) -> Result<()> {
    if k == 0 || m == 0 || k * m > n + 1 {
        return Err(Error::params(format!(
            "f(n,m,k) needs k, m >= 1 and n >= km - 1, got n={n}, m={m}, k={k}"
        )));
    }
    Ok(())
}

/// `C(n,k) - C(n-m+1,k)`: the size of `S(n,m,k)`.
pub fn s_size(n: u64, m: u64, k: u64) -> BigUint {
    binomial(n, k) - binomial_signed(n as i64 - m as i64 + 1, k)
}

/// `C(km-1,k)`: the size of `D(n,m,k)`.
pub fn d_size(m: u64, k: u64) -> BigUint {
    binomial_signed((k * m) as i64 - 1, k)
}

/// `f(n,m,k) = max{C(n,k) - C(n-m+1,k), C(km-1,k)}` for `n >= km - 1`.
pub fn f_bound(n: u64, m: u64, k: u64) -> Result<BigUint> {
    check_domain(n, m, k)?;
    Ok(s_size(n, m, k).max(d_size(m, k)))
}

fn check_construction(n: u32, m: u32, k: u32) -> Result<()> {
    if k == 0 || m == 0 || n < k * m {
        return Err(Error::params(format!(
            "construction needs k, m >= 1 and n >= km, got n={n}, m={m}, k={k}"
        )));
    }
    Ok(())
}

/// `S(n,m,k)`: every k-subset of `[n]` meeting `[m-1]`.
pub fn make_s(n: u32, m: u32, k: u32) -> Result<KGraph> {
    check_construction(n, m, k)?;
    let edges = crate::combin::subsets(1, n, k as usize)
        .filter(|e| e[0] < m)
        .map(Edge::from_sorted)
        .collect();
    Ok(KGraph::from_edges(n, k, edges))
}

/// `D(n,m,k)`: every k-subset of `[km-1]`, on the vertex set `[n]`.
pub fn make_d(n: u32, m: u32, k: u32) -> Result<KGraph> {
    check_construction(n, m, k)?;
    Ok(KGraph::complete_on(n, k, k * m - 1))
}

/// `H_S(n,m,k) = H(F)` for `m` copies of `S(n,m,k)`.
pub fn make_hs(n: u32, m: u32, k: u32) -> Result<AuxGraph> {
    reduce_h(&Family::copies(&make_s(n, m, k)?, m as usize)?)
}

/// `H_D(n,m,k) = H(F)` for `m` copies of `D(n,m,k)`.
pub fn make_hd(n: u32, m: u32, k: u32) -> Result<AuxGraph> {
    reduce_h(&Family::copies(&make_d(n, m, k)?, m as usize)?)
}

/// Graphs comparable by the closeness measure.
pub trait EdgeSet {
    /// `|V|`.
    fn vertex_count(&self) -> u64;
    /// Edge size.
    fn edge_size(&self) -> u32;
    /// `|E(self) \ E(other)|`.
    fn missing_from(&self, other: &Self) -> usize;
    /// True iff both live on the same vertex set.
    fn same_vertex_set(&self, other: &Self) -> bool;
}

impl EdgeSet for KGraph {
    fn vertex_count(&self) -> u64 {
        self.n() as u64
    }
    fn edge_size(&self) -> u32 {
        self.k()
    }
    fn missing_from(&self, other: &Self) -> usize {
        self.edges().iter().filter(|e| !other.contains(e)).count()
    }
    fn same_vertex_set(&self, other: &Self) -> bool {
        self.n() == other.n()
    }
}

impl EdgeSet for AuxGraph {
    fn vertex_count(&self) -> u64 {
        self.vertex_count() as u64
    }
    fn edge_size(&self) -> u32 {
        self.k() + 1
    }
    fn missing_from(&self, other: &Self) -> usize {
        self.edges().iter().filter(|e| !other.contains(e)).count()
    }
    fn same_vertex_set(&self, other: &Self) -> bool {
        (self.n(), self.m(), self.r()) == (other.n(), other.m(), other.r())
    }
}

/// `|E(h1) \ E(h2)| / |V|^k`, so that `h2` is ε-close to `h1` iff
/// `closeness(h1, h2) <= ε`. Not symmetric.
pub fn closeness<G: EdgeSet>(h1: &G, h2: &G) -> Result<Rational> {
    if !h1.same_vertex_set(h2) || h1.edge_size() != h2.edge_size() {
        return Err(Error::Mismatch("closeness needs one vertex set and one uniformity".into()));
    }
    let denom = BigInt::from(h1.vertex_count()).pow(h1.edge_size());
    if denom.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(BigInt::from(h1.missing_from(h2)), denom))
}

/// True iff `h2` is `eps`-close to `h1`.
pub fn is_close<G: EdgeSet>(h1: &G, h2: &G, eps: &Rational) -> Result<bool> {
    Ok(&closeness(h1, h2)? <= eps)
}

/// Checks `f(n,m,k) >= f(n-1,m-1,k) + C(n-1,k-1)` at one parameter point
/// (`m >= 2`, `n >= km - 1`).
pub fn check_f_superadditivity(n: u64, m: u64, k: u64) -> Result<bool> {
    if m < 2 || n < 1 {
        return Err(Error::params(format!("need m >= 2, got m={m}")));
    }
    let lhs = f_bound(n, m, k)?;
    let rhs = f_bound(n - 1, m - 1, k)? + binomial(n - 1, k - 1);
    Ok(lhs >= rhs)
}

/// Which half of the pair of shift inequalities for `k = 3` to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShiftIneq {
    /// `f(x,y,3) >= f(x,y-a,3) + C(a,3)`.
    Down,
    /// `f(x,y,3) >= f(x,y+a,3) - 3ax²`.
    Up,
}

/// Evaluates one of the two shift inequalities for `f(·,·,3)` at `(x,y,a)`
/// with `1 <= a < y`. Every `f` involved must be inside its domain
/// (`x >= 3y' - 1`), so the upward form needs `x >= 3(y+a) - 1`.
pub fn check_f_shift_ineq(x: u64, y: u64, a: u64, which: ShiftIneq) -> Result<bool> {
    if a == 0 || a >= y {
        return Err(Error::params(format!("need 1 <= a < y, got a={a}, y={y}")));
    }
    let base = BigInt::from(f_bound(x, y, 3)?);
    Ok(match which {
        ShiftIneq::Down => {
            base >= BigInt::from(f_bound(x, y - a, 3)?) + BigInt::from(binomial(a, 3))
        }
        ShiftIneq::Up => {
            let penalty = BigInt::from(3 * a) * BigInt::from(x) * BigInt::from(x);
            base >= BigInt::from(f_bound(x, y + a, 3)?) - penalty
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use alloc::vec::Vec;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn f_bound_values() {
        for n in 1..12 {
            for k in 1..=n {
                assert_eq!(f_bound(n, 1, k).unwrap(), big(0));
            }
        }
        assert_eq!(f_bound(9, 3, 3).unwrap(), big(56));
        assert_eq!(f_bound(100, 3, 3).unwrap(), big(9604));
        // n = km - 1 is accepted, n = km - 2 is not
        assert!(f_bound(8, 3, 3).is_ok());
        assert!(f_bound(7, 3, 3).is_err());
        assert!(f_bound(9, 0, 3).is_err());
    }

    #[test]
    fn construction_sizes() {
        assert_eq!(make_s(9, 3, 3).unwrap().len(), 49);
        assert_eq!(make_d(9, 3, 3).unwrap().len(), 56);
        assert!(make_s(9, 1, 3).unwrap().is_empty());
        assert!(make_s(8, 3, 3).is_err());
        let hd = make_hd(9, 2, 3).unwrap();
        assert_eq!(hd.len(), 20);
        let hs = make_hs(9, 3, 3).unwrap();
        assert_eq!(hs.len(), 3 * 49);
    }

    #[test]
    fn s_degree_profile() {
        let s = make_s(9, 3, 3).unwrap();
        assert_eq!(s.max_degree(), 28);
        let d = s.degrees();
        assert_eq!(d[0], 28);
        assert_eq!(d[1], 28);
        assert!(d[2..].iter().all(|&x| x < 28));
        let (rest, _) = s.remove(&VertexSet::from([1, 2]));
        assert_eq!(rest.n(), 7);
        assert!(rest.is_empty());
    }

    #[test]
    fn extremal_graphs_are_stable() {
        for (n, m, k) in [(9, 3, 3), (10, 2, 4), (7, 3, 2), (6, 2, 3)] {
            assert!(make_s(n, m, k).unwrap().is_stable());
            assert!(make_d(n, m, k).unwrap().is_stable());
        }
    }

    #[test]
    fn closeness_examples() {
        let s = make_s(9, 3, 3).unwrap();
        let empty = KGraph::empty(9, 3);
        assert_eq!(closeness(&s, &s).unwrap(), Rational::zero());
        assert_eq!(
            closeness(&s, &empty).unwrap(),
            Rational::new(BigInt::from(49), BigInt::from(729))
        );
        assert_eq!(closeness(&empty, &s).unwrap(), Rational::zero());
        assert!(closeness(&s, &KGraph::empty(10, 3)).is_err());
        assert!(closeness(&s, &KGraph::empty(9, 2)).is_err());
    }

    #[test]
    fn superadditivity_examples() {
        assert!(check_f_superadditivity(9, 3, 3).unwrap());
        assert!(check_f_superadditivity(6, 2, 3).unwrap());
        for k in 1..=5u64 {
            for m in 2..=10u64 {
                assert!(check_f_superadditivity(k * m, m, k).unwrap(), "k={k} m={m}");
            }
        }
        assert!(check_f_superadditivity(9, 1, 3).is_err());
    }

    #[test]
    fn shift_inequality_examples() {
        assert!(check_f_shift_ineq(30, 8, 2, ShiftIneq::Down).unwrap());
        assert!(check_f_shift_ineq(30, 8, 2, ShiftIneq::Up).unwrap());
        assert!(check_f_shift_ineq(30, 8, 8, ShiftIneq::Down).is_err());
        // y + a = 11 needs x >= 32
        assert!(check_f_shift_ineq(30, 8, 3, ShiftIneq::Up).is_err());
    }

    #[test]
    fn closeness_monotone_under_additions() {
        let s = make_s(7, 2, 3).unwrap();
        let mut h = KGraph::empty(7, 3);
        let mut last = closeness(&s, &h).unwrap();
        let all: Vec<_> = KGraph::complete(7, 3).edges().to_vec();
        for e in all.into_iter().rev() {
            h.insert(e);
            let c = closeness(&s, &h).unwrap();
            assert!(c <= last);
            last = c;
        }
        assert_eq!(last, Rational::zero());
    }
}
