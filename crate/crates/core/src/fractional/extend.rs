//! Extension of partial vertex loads to a perfect fractional matching of the
//! complete 3-graph.
//!
//! Four zero-load vertices `a_1..a_4` are set aside. On the rest, the vertex
//! of largest load (lowest index on ties) is topped up to 1 through the
//! lexicographically least edge of the working set containing it, and
//! saturated vertices leave the working set, until at most two remain. A
//! closing patch on `a_1..a_4` and the leftovers finishes the job.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{int, vertex_edge, FracMatching};
use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};
use crate::Rational;

/// Result of [`extend_complete3`]: `base_loads[v-1] + added.loads()[v-1]`
/// equals 1 for every vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Extension {
    pub base_loads: Vec<Rational>,
    /// The weight added on top of the initial loads.
    pub added: FracMatching,
    /// The reserved zero-load vertices.
    pub reserved: [Vertex; 4],
    /// Vertices left in the working set when the iteration stopped, with
    /// their loads at that moment, largest load first.
    pub leftovers: Vec<(Vertex, Rational)>,
    pub iterations: usize,
}

impl Extension {
    /// Final loads (`base + added`), indexed by `v - 1`.
    pub fn final_loads(&self) -> Vec<Rational> {
        self.added.loads().into_iter().zip(&self.base_loads).map(|(a, b)| a + b).collect()
    }

    /// Every final load is exactly 1 and every added weight is nonnegative.
    pub fn audit(&self) -> Result<()> {
        if self.added.weights().values().any(Signed::is_negative) {
            return Err(Error::precondition("negative added weight"));
        }
        if let Some(v) = self.final_loads().iter().position(|l| !l.is_one()) {
            return Err(Error::precondition(format!("vertex {} does not reach load 1", v + 1)));
        }
        Ok(())
    }
}

/// The closing weights on `a_1..a_4` and up to two leftover vertices
/// (given largest load first). Zero weights are omitted.
///
/// With leftovers `b_1, b_2` of loads `w_1 >= w_2`:
/// `{a_1,a_2,b_1}` gets `1 - w_1`, `{a_1,a_2,b_2}` gets `(w_1 - w_2)/2`,
/// `{a_3,a_4,b_2}` gets `1 - w_1 + (w_1 - w_2)/2`, and each triple inside
/// `{a_1..a_4}` gets `(w_1 + w_2)/6`. With a single leftover `b` of load `w`
/// each `{a_i,a_j,b}` gets `(1 - w)/6` and each triple inside `{a_1..a_4}`
/// gets `(1 + w)/6`; with none, the four inner triples get `1/3` each.
pub fn closing_patch(a: [Vertex; 4], leftovers: &[(Vertex, Rational)]) -> Result<Vec<(Edge, Rational)>> {
    let one = Rational::one();
    let two = int(2);
    let six = int(6);
    let inner = [[a[0], a[1], a[2]], [a[0], a[1], a[3]], [a[0], a[2], a[3]], [a[1], a[2], a[3]]];
    let mut out = Vec::new();
    match leftovers {
        [] => {
            for t in inner {
                out.push((vertex_edge(&t), Rational::new(1.into(), 3.into())));
            }
        }
        [(b, w)] => {
            let side = (&one - w) / &six;
            for i in 0..4 {
                for j in i + 1..4 {
                    out.push((vertex_edge(&[a[i], a[j], *b]), side.clone()));
                }
            }
            let mid = (&one + w) / &six;
            for t in inner {
                out.push((vertex_edge(&t), mid.clone()));
            }
        }
        [(b1, w1), (b2, w2)] => {
            if w1 < w2 {
                return Err(Error::params("leftovers must be given largest load first"));
            }
            let half_gap = (w1 - w2) / &two;
            out.push((vertex_edge(&[a[0], a[1], *b1]), &one - w1));
            out.push((vertex_edge(&[a[0], a[1], *b2]), half_gap.clone()));
            out.push((vertex_edge(&[a[2], a[3], *b2]), &one - w1 + &half_gap));
            let mid = (w1 + w2) / &six;
            for t in inner {
                out.push((vertex_edge(&t), mid.clone()));
            }
        }
        _ => return Err(Error::params("at most two leftover vertices")),
    }
    out.retain(|(_, w)| !w.is_zero());
    if out.iter().any(|(_, w)| w.is_negative()) {
        return Err(Error::precondition("closing patch produced a negative weight"));
    }
    Ok(out)
}

/// Tops up vertex loads `loads[v-1]` on the complete 3-graph over
/// `{1..nv}` to a perfect fractional matching.
///
/// Requires `nv ≡ 0 (mod 3)`, every load in `[0, 1)`, and at least four
/// zero loads. The four lowest-index zero-load vertices are reserved.
pub fn extend_complete3(nv: u32, loads: &[Rational]) -> Result<Extension> {
    if nv % 3 != 0 || loads.len() != nv as usize {
        return Err(Error::params(format!(
            "need nv divisible by 3 and nv loads, got nv={nv}, {} loads",
            loads.len()
        )));
    }
    if let Some(v) = loads.iter().position(|l| l.is_negative() || *l >= Rational::one()) {
        return Err(Error::precondition(format!("load of vertex {} is outside [0,1)", v + 1)));
    }
    let zeros: Vec<Vertex> =
        (1..=nv).filter(|&v| loads[v as usize - 1].is_zero()).take(4).collect();
    let reserved: [Vertex; 4] = zeros
        .try_into()
        .map_err(|_| Error::precondition("fewer than four zero-load vertices"))?;

    let mut cur: Vec<Rational> = loads.to_vec();
    let mut added = FracMatching::new(nv, 3);
    let mut working: Vec<Vertex> = (1..=nv).filter(|v| !reserved.contains(v)).collect();
    let mut iterations = 0;
    while working.len() > 2 {
        iterations += 1;
        let v = *working
            .iter()
            .max_by(|x, y| cur[**x as usize - 1].cmp(&cur[**y as usize - 1]).then(y.cmp(x)))
            .expect("working set is nonempty");
        let mut others = working.iter().copied().filter(|&u| u != v);
        let f = vertex_edge(&[v, others.next().unwrap(), others.next().unwrap()]);
        let raise = Rational::one() - &cur[v as usize - 1];
        for &u in f.iter() {
            cur[u as usize - 1] += &raise;
            debug_assert!(cur[u as usize - 1] <= Rational::one());
        }
        added.add(f, &raise);
        working.retain(|&u| !cur[u as usize - 1].is_one());
    }

    let mut leftovers: Vec<(Vertex, Rational)> =
        working.iter().map(|&v| (v, cur[v as usize - 1].clone())).collect();
    leftovers.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    for (e, w) in closing_patch(reserved, &leftovers)? {
        added.add(e, &w);
    }
    let ext = Extension { base_loads: loads.to_vec(), added, reserved, leftovers, iterations };
    ext.audit()?;
    Ok(ext)
}
