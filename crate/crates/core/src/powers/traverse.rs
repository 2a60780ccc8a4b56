//! Lattice traversals over the hyperrectangle, with membership read from
//! the scaled facet inequalities.

use crate::ideal::ExponentVector;
use crate::polyhedral::{to_exponent, BoxPoints, HyperRectangle, ScaledSystem};

use super::{GeneratorTrace, TracePoint};

pub(super) struct Walker<'a> {
    system: &'a ScaledSystem,
    lower: Vec<i64>,
    upper: Vec<i64>,
    generators: Vec<ExponentVector>,
    visited: usize,
    trace: Option<GeneratorTrace>,
}

impl<'a> Walker<'a> {
    pub fn new(system: &'a ScaledSystem, bounds: &HyperRectangle, trace: bool) -> Self {
        Walker {
            system,
            lower: bounds.lower.iter().map(|&v| v as i64).collect(),
            upper: bounds.upper.iter().map(|&v| v as i64).collect(),
            generators: Vec::new(),
            visited: 0,
            trace: trace.then(GeneratorTrace::default),
        }
    }

    fn dim(&self) -> usize {
        self.lower.len()
    }

    fn inside(&mut self, x: &[i64]) -> bool {
        self.visited += 1;
        let inside = self.system.contains_lattice(x);
        if let Some(t) = self.trace.as_mut() {
            t.visited.push(TracePoint {
                point: to_exponent(x),
                inside,
            });
        }
        inside
    }

    fn in_box(&self, x: &[i64]) -> bool {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(&v, (&lo, &hi))| lo <= v && v <= hi)
    }

    fn append(&mut self, x: &[i64]) {
        let g = to_exponent(x);
        if let Some(t) = self.trace.as_mut() {
            if !t.accepted.contains(&g) {
                t.accepted.push(g.clone());
            }
        }
        self.generators.push(g);
    }

    /// Points of the box whose trailing `fixed` coordinates are pinned to
    /// the given values, in lexicographic order of the free coordinates.
    fn slice_starts(&self, pinned: &[i64]) -> Vec<Vec<i64>> {
        let free = self.dim() - pinned.len();
        BoxPoints::new(self.lower[..free].to_vec(), self.upper[..free].to_vec())
            .map(|mut p| {
                p.extend_from_slice(pinned);
                p
            })
            .collect()
    }

    pub fn finish(self) -> (Vec<ExponentVector>, usize, Option<GeneratorTrace>) {
        (self.generators, self.visited, self.trace)
    }
}

/// Tests every point of the box.
pub(super) fn hyperrect(w: &mut Walker<'_>) {
    let points = BoxPoints::new(w.lower.clone(), w.upper.clone());
    for x in points {
        if w.inside(&x) {
            w.append(&x);
        }
    }
}

/// For each column over the bottom face of the box, moves up until the
/// first point of the scaled polyhedron.
pub(super) fn improved(w: &mut Walker<'_>) {
    let last = w.dim() - 1;
    let top = w.upper[last];
    for mut b in w.slice_starts(&[w.lower[last]]) {
        let mut inside = w.inside(&b);
        while !inside && b[last] <= top {
            b[last] += 1;
            inside = w.inside(&b);
        }
        if inside {
            w.append(&b);
        }
    }
}

/// In each two-dimensional slice (all but the last two coordinates fixed),
/// follows the boundary from the top-left corner of the box: down while
/// inside, right when outside.
pub(super) fn staircase(w: &mut Walker<'_>) {
    let dim = w.dim();
    if dim == 1 {
        // The power of a principal ideal in one variable.
        let x = [w.lower[0]];
        w.append(&x);
        return;
    }
    let (col, row) = (dim - 2, dim - 1);
    for mut a in w.slice_starts(&[w.lower[col], w.upper[row]]) {
        let mut b = a.clone();
        let mut b_inside = false;
        while w.in_box(&a) {
            if w.inside(&a) {
                b.clone_from(&a);
                b_inside = true;
                a[row] -= 1;
            } else {
                if b_inside {
                    w.append(&b.clone());
                }
                b.clone_from(&a);
                b_inside = false;
                a[col] += 1;
            }
        }
        if b_inside {
            w.append(&b.clone());
        }
    }
}
