//! Dense tableau simplex over exact rationals with Bland's rule.
//!
//! Solves `max cᵀx` subject to `Ax <= b`, `x >= 0`, for `b >= 0`, so the
//! slack basis is feasible from the start. The dual `y` is read off the
//! objective row under the slack columns.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, primal: Vec<Rational>, dual: Vec<Rational> },
    Unbounded,
}

pub struct Lp {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl Lp {
    /// Runs the simplex method. Panics if some `b[i]` is negative.
    pub fn solve(&self) -> LpOutcome {
        let rows = self.b.len();
        let vars = self.c.len();
        let cols = vars + rows;
        assert!(self.b.iter().all(|x| !x.is_negative()), "rhs must be nonnegative");
        // tableau rows: constraints, then objective row `z_j - c_j`
        let mut t: Vec<Vec<Rational>> = Vec::with_capacity(rows + 1);
        for (i, row) in self.a.iter().enumerate() {
            let mut r = Vec::with_capacity(cols + 1);
            r.extend(row.iter().cloned());
            r.extend((0..rows).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r.push(self.b[i].clone());
            t.push(r);
        }
        let mut obj: Vec<Rational> = self.c.iter().map(|x| -x.clone()).collect();
        obj.extend((0..=rows).map(|_| Rational::zero()));
        t.push(obj);
        let mut basis: Vec<usize> = (vars..cols).collect();

        loop {
            // Bland: lowest-index improving column
            let Some(enter) = (0..cols).find(|&j| t[rows][j].is_negative()) else {
                break;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..rows {
                if t[i][enter].is_positive() {
                    let ratio = &t[i][cols] / &t[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((pr, _)) = leave else {
                return LpOutcome::Unbounded;
            };
            let pivot = t[pr][enter].clone();
            for x in t[pr].iter_mut() {
                *x /= &pivot;
            }
            let prow = t[pr].clone();
            for (i, row) in t.iter_mut().enumerate() {
                if i == pr || row[enter].is_zero() {
                    continue;
                }
                let factor = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
            basis[pr] = enter;
        }

        let mut primal = alloc::vec![Rational::zero(); vars];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < vars {
                primal[bv] = t[i][cols].clone();
            }
        }
        let dual = (vars..cols).map(|j| t[rows][j].clone()).collect();
        LpOutcome::Optimal { value: t[rows][cols].clone(), primal, dual }
    }
}
