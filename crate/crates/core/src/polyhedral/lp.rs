//! Exact feasibility testing for small linear systems.
//!
//! Phase one of the primal simplex method on a dense tableau over
//! [`BigRational`], with Bland's smallest-index rule for both the entering
//! and the leaving variable, so the method terminates without cycling.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }
}

/// Whether some `x >= 0` in Q^nvars satisfies every constraint.
pub(crate) fn is_feasible(nvars: usize, constraints: &[Constraint]) -> bool {
    let mut rows: Vec<Constraint> = constraints
        .iter()
        .map(|c| {
            debug_assert_eq!(c.coeffs.len(), nvars);
            if c.rhs.is_negative() {
                let relation = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                Constraint {
                    coeffs: c.coeffs.iter().map(|a| -a).collect(),
                    relation,
                    rhs: -&c.rhs,
                }
            } else {
                c.clone()
            }
        })
        .collect();
    if rows.is_empty() {
        return true;
    }

    let m = rows.len();
    let slack_count = rows.iter().filter(|c| c.relation != Relation::Eq).count();
    let art_count = rows.iter().filter(|c| c.relation != Relation::Le).count();
    let first_slack = nvars;
    let first_art = nvars + slack_count;
    let ncols = first_art + art_count;

    let zero = BigRational::zero();
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (first_slack, first_art);
    for c in rows.drain(..) {
        let mut row = vec![zero.clone(); ncols + 1];
        for (j, a) in c.coeffs.into_iter().enumerate() {
            row[j] = a;
        }
        row[ncols] = c.rhs;
        match c.relation {
            Relation::Le => {
                row[next_slack] = BigRational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -BigRational::one();
                next_slack += 1;
                row[next_art] = BigRational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = BigRational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        tableau.push(row);
    }
    if art_count == 0 {
        return true;
    }

    // Reduced costs of the phase-one objective (sum of artificials), with
    // the objective value in the last slot, negated.
    let mut cost = vec![zero.clone(); ncols + 1];
    for c in &mut cost[first_art..ncols] {
        *c = BigRational::one();
    }
    for (i, &b) in basis.iter().enumerate() {
        if b >= first_art {
            for (cj, tij) in cost.iter_mut().zip(&tableau[i]) {
                if !tij.is_zero() {
                    *cj -= tij;
                }
            }
        }
    }

    while let Some(enter) = (0..ncols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            let a = &tableau[i][enter];
            if a.is_positive() {
                let ratio = &tableau[i][ncols] / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (pivot_row, _) = leave.expect("phase one objective is bounded");
        pivot(&mut tableau, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }
    cost[ncols].is_zero()
}

fn pivot(tableau: &mut [Vec<BigRational>], cost: &mut [BigRational], pivot_row: usize, col: usize) {
    let inv = tableau[pivot_row][col].recip();
    for v in tableau[pivot_row].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let prow = tableau[pivot_row].clone();
    let eliminate = |row: &mut [BigRational]| {
        let factor = row[col].clone();
        if factor.is_zero() {
            return;
        }
        for (v, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    };
    for (i, row) in tableau.iter_mut().enumerate() {
        if i != pivot_row {
            eliminate(row);
        }
    }
    eliminate(cost);
}
