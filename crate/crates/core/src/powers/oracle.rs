//! Brute-force evaluation of a real power from the generators alone.
//!
//! Every point of the hyperrectangle is classified with the LP membership
//! test. The scaled polyhedron is closed under adding nonnegative vectors,
//! so points above a known member are members and, scanning each column
//! downwards, the first non-member ends the column.

use crate::error::Result;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::polyhedral::{contains_lp, to_exponent, to_rational_point, BoxPoints, HyperRectangle};
use crate::rational::ExactRational;

use super::{GeneratorTrace, TracePoint};

pub(super) struct OracleScan {
    /// Lowest member of each column of the box.
    pub accepted: Vec<ExponentVector>,
    /// Number of LP evaluations.
    pub visited: usize,
    pub trace: Option<GeneratorTrace>,
}

pub(super) fn scan(
    ideal: &MonomialIdeal,
    r: &ExactRational,
    bounds: &HyperRectangle,
    trace: bool,
) -> Result<OracleScan> {
    let dim = ideal.dim();
    let last = dim - 1;
    let lower: Vec<i64> = bounds.lower.iter().map(|&v| v as i64).collect();
    let upper: Vec<i64> = bounds.upper.iter().map(|&v| v as i64).collect();
    let mut trace = trace.then(GeneratorTrace::default);
    let mut accepted: Vec<ExponentVector> = Vec::new();
    let mut visited = 0;

    for prefix in BoxPoints::new(lower[..last].to_vec(), upper[..last].to_vec()) {
        let mut lowest: Option<ExponentVector> = None;
        for t in (lower[last]..=upper[last]).rev() {
            let mut x = prefix.clone();
            x.push(t);
            let point = to_exponent(&x);
            let inside = if accepted.iter().any(|g| g.divides_unchecked(&point)) {
                true
            } else {
                visited += 1;
                let inside = contains_lp(ideal, r, &to_rational_point(&x))?;
                if let Some(tr) = trace.as_mut() {
                    tr.visited.push(TracePoint {
                        point: point.clone(),
                        inside,
                    });
                }
                inside
            };
            if !inside {
                break;
            }
            lowest = Some(point);
        }
        if let Some(g) = lowest {
            if let Some(tr) = trace.as_mut() {
                tr.accepted.push(g.clone());
            }
            accepted.push(g);
        }
    }
    Ok(OracleScan {
        accepted,
        visited,
        trace,
    })
}
