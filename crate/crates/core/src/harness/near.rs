//! Near-extremal classification, the near-`D` rainbow constructor and the
//! stability probe.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::sample::{random_stable, trim_stable};
use super::{trial_rng, TrialRunner};
use crate::error::{Error, Result};
use crate::extremal::{closeness, f_bound, make_d, make_s};
use crate::family::Family;
use crate::graph::{Edge, KGraph, Vertex};
use crate::matcher::{matching_of_size, RainbowMatching};
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Extremal {
    SClose,
    DClose,
    Both,
    Neither,
}

impl fmt::Display for Extremal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Extremal::SClose => "S_CLOSE",
            Extremal::DClose => "D_CLOSE",
            Extremal::Both => "BOTH",
            Extremal::Neither => "NEITHER",
        })
    }
}

fn check_k3(n: u32, m: u32, k: u32) -> Result<()> {
    if k != 3 || m == 0 || n < 3 * m {
        return Err(Error::params(alloc::format!(
            "need k = 3 and n >= 3m >= 3, got n={n}, m={m}, k={k}"
        )));
    }
    Ok(())
}

/// Whether `h` is `eps`-close to `S(n,m,3)`, to `D(n,m,3)`, both or neither.
pub fn classify_near_extremal(h: &KGraph, m: u32, eps: &Rational) -> Result<Extremal> {
    check_k3(h.n(), m, h.k())?;
    let s = closeness(&make_s(h.n(), m, 3)?, h)? <= *eps;
    let d = closeness(&make_d(h.n(), m, 3)?, h)? <= *eps;
    Ok(match (s, d) {
        (true, true) => Extremal::Both,
        (true, false) => Extremal::SClose,
        (false, true) => Extremal::DClose,
        (false, false) => Extremal::Neither,
    })
}

/// `{2p-1, 2p, 3m-p+1}`, the edge assigned to position `p` (1-based).
pub fn rainbow_pattern_edge(m: u32, p: u32) -> Vec<Vertex> {
    alloc::vec![2 * p - 1, 2 * p, 3 * m - p + 1]
}

/// `⌈6 eps^(1/6) n⌉` clamped to `[0, m]`, computed exactly as the least
/// `b` with `b^6 >= eps (6n)^6`.
fn pattern_depth(eps: &Rational, n: u32, m: u32) -> u32 {
    let scale = Rational::from_integer(BigInt::from(6 * n as u64).pow(6));
    let need = eps * scale;
    (0..=m)
        .find(|&b| Rational::from_integer(BigInt::from(b).pow(6)) >= need)
        .unwrap_or(m)
}

/// One membership `{2j+1, 2j+2, 3m-j} ∈ F_i` from the claim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembershipCheck {
    pub member: usize,
    pub j: u32,
    pub edge: Edge,
    pub present: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NearDOutcome {
    Rainbow(RainbowMatching),
    /// `(member, edge)` pairs of the pattern that the member lacks.
    Missing(Vec<(usize, Edge)>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NearD {
    pub b: u32,
    /// Members that are not `sqrt(eps)`-close to `D(n,m,3)`.
    pub not_close: Vec<usize>,
    /// `order[p - 1]` is the member given the pattern edge of position `p`.
    pub order: Vec<usize>,
    pub claim: Vec<MembershipCheck>,
    pub outcome: NearDOutcome,
}

/// Builds the rainbow matching `{v_i, 2p-1, 2p, 3m-p+1}` for a 3-graph family
/// near `D`: members that are not `sqrt(eps)`-close to `D(n,m,3)` take the
/// first positions, the rest follow in index order. Failure is an outcome,
/// not an error.
pub fn near_d_rainbow(family: &Family, eps: &Rational) -> Result<NearD> {
    let (n, m) = (family.n(), family.m() as u32);
    check_k3(n, m, family.k())?;
    let b = pattern_depth(eps, n, m);
    let d = make_d(n, m, 3)?;
    let mut not_close = Vec::new();
    for (i, g) in family.members().iter().enumerate() {
        let c = closeness(&d, g)?;
        if &c * &c > *eps {
            not_close.push(i);
        }
    }
    let mut claim = Vec::new();
    for (i, g) in family.members().iter().enumerate() {
        for j in (0..=b).filter(|&j| j + 1 < m) {
            let edge = Edge::from_sorted(alloc::vec![2 * j + 1, 2 * j + 2, 3 * m - j]);
            let present = g.contains(&edge);
            claim.push(MembershipCheck { member: i, j, edge, present });
        }
    }
    let order: Vec<usize> = not_close
        .iter()
        .copied()
        .chain((0..family.m()).filter(|i| !not_close.contains(i)))
        .collect();
    let mut pairs = Vec::new();
    let mut missing = Vec::new();
    for (&i, p) in order.iter().zip(1..) {
        let e = Edge::from_sorted(rainbow_pattern_edge(m, p));
        if family.member(i).contains(&e) {
            pairs.push((i, e));
        } else {
            missing.push((i, e));
        }
    }
    let outcome = if missing.is_empty() {
        pairs.sort();
        let rm = RainbowMatching { pairs };
        rm.validate(family)?;
        NearDOutcome::Rainbow(rm)
    } else {
        NearDOutcome::Missing(missing)
    };
    Ok(NearD { b, not_close, order, claim, outcome })
}

/// Counts from [`stability_probe`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbeReport {
    pub f: BigUint,
    /// Graphs in the window have more than `f - eps^4 n^3` edges.
    pub window_low: Rational,
    /// `f <= eps^4 n^3`: the window starts at zero edges.
    pub vacuous: bool,
    pub sampled: u64,
    /// Samples whose source could not be trimmed into the window.
    pub outside_window: u64,
    /// Samples with `ν >= m`, outside the hypothesis.
    pub has_matching: u64,
    pub s_close: u64,
    pub d_close: u64,
    pub both: u64,
    pub neither: u64,
    /// Every `NEITHER` sample, in trial order.
    pub neither_witnesses: Vec<KGraph>,
}

enum Probe {
    Outside,
    Matched,
    Classified(Extremal, KGraph),
}

/// Samples stable 3-graphs with more than `f(n,m,3) - eps^4 n^3` and at most
/// `f` edges and classifies the ones with `ν < m`.
///
/// Trial `i` starts from `S(n,m,3)` when `i % 3 == 0`, from `D(n,m,3)` when
/// `i % 3 == 1` (trimming random maximal edges down to a size drawn from the
/// window), and is a fresh random stable graph otherwise.
pub fn stability_probe<R: TrialRunner>(
    n: u32,
    m: u32,
    eps: &Rational,
    trials: u64,
    seed: u64,
    runner: &R,
) -> Result<ProbeReport> {
    check_k3(n, m, 3)?;
    let f = f_bound(n as u64, m as u64, 3)?;
    let f_small = f.to_usize().expect("threshold fits in memory");
    let delta = eps.pow(4) * Rational::from_integer(BigInt::from(n).pow(3));
    let window_low = Rational::from_integer(BigInt::from(f.clone())) - &delta;
    let vacuous = window_low <= Rational::zero();
    let min_size = if window_low.is_negative() {
        0
    } else {
        (window_low.numer().div_floor(window_low.denom()) + 1u32).to_usize().unwrap_or(0)
    };
    let sources = [make_s(n, m, 3)?, make_d(n, m, 3)?];
    let probes = runner.map(trials, |i| {
        let mut rng = trial_rng(seed, i);
        let h = match i % 3 {
            src @ (0 | 1) => {
                let g = &sources[src as usize];
                let top = g.len().min(f_small);
                if top < min_size {
                    return Probe::Outside;
                }
                let size = rng.gen_range(min_size..=top);
                trim_stable(g, size, &mut rng)
            }
            _ => {
                let size = rng.gen_range(min_size..=f_small);
                random_stable(n, 3, size, &mut rng).expect("size within range")
            }
        };
        if matching_of_size(&h, m as usize).is_some() {
            return Probe::Matched;
        }
        let class = classify_near_extremal(&h, m, eps).expect("parameters checked");
        Probe::Classified(class, h)
    });
    let mut report = ProbeReport {
        f,
        window_low,
        vacuous,
        sampled: trials,
        outside_window: 0,
        has_matching: 0,
        s_close: 0,
        d_close: 0,
        both: 0,
        neither: 0,
        neither_witnesses: Vec::new(),
    };
    for p in probes {
        match p {
            Probe::Outside => report.outside_window += 1,
            Probe::Matched => report.has_matching += 1,
            Probe::Classified(Extremal::SClose, _) => report.s_close += 1,
            Probe::Classified(Extremal::DClose, _) => report.d_close += 1,
            Probe::Classified(Extremal::Both, _) => report.both += 1,
            Probe::Classified(Extremal::Neither, h) => {
                report.neither += 1;
                report.neither_witnesses.push(h);
            }
        }
    }
    Ok(report)
}
