//! Facets of a Newton polyhedron in one or two variables, read off the lower
//! convex chain of the generators.

use num_integer::Integer;

use crate::ideal::ExponentVector;

/// Facet rows `(normal, offset)` of `conv(gens) + R^d_+` for d <= 2. The
/// generators must form a minimal generating set.
pub(crate) fn planar_rows(gens: &[ExponentVector]) -> Vec<(Vec<u64>, u64)> {
    let dim = gens[0].dim();
    if dim == 1 {
        let m = gens.iter().map(|g| g[0]).min().expect("nonempty");
        return vec![(vec![1], m)];
    }
    debug_assert_eq!(dim, 2);

    // A minimal generating set in two variables, sorted by x, has strictly
    // decreasing y.
    let mut pts: Vec<(i64, i64)> = gens.iter().map(|g| (g[0] as i64, g[1] as i64)).collect();
    pts.sort();
    let mut chain: Vec<(i64, i64)> = Vec::with_capacity(pts.len());
    for p in pts {
        while chain.len() >= 2 {
            let (o, a) = (chain[chain.len() - 2], chain[chain.len() - 1]);
            let cross = (a.0 - o.0) as i128 * (p.1 - o.1) as i128
                - (a.1 - o.1) as i128 * (p.0 - o.0) as i128;
            // Keep only strict left turns; collinear middle points are dropped.
            if cross <= 0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }

    let first = chain[0];
    let last = chain[chain.len() - 1];
    let mut rows = vec![(vec![1, 0], first.0 as u64)];
    for w in chain.windows(2) {
        let (a, b) = (w[0], w[1]);
        let nx = (a.1 - b.1) as u64;
        let ny = (b.0 - a.0) as u64;
        let c = nx * a.0 as u64 + ny * a.1 as u64;
        let g = nx.gcd(&ny).gcd(&c);
        rows.push((vec![nx / g, ny / g], c / g));
    }
    rows.push((vec![0, 1], last.1 as u64));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(pts: &[[u64; 2]]) -> Vec<ExponentVector> {
        pts.iter().map(|&p| ExponentVector::from(p)).collect()
    }

    #[test]
    fn staircase_example() {
        let rows = planar_rows(&gens(&[[0, 8], [2, 5], [4, 3], [9, 0]]));
        assert_eq!(
            rows,
            vec![
                (vec![1, 0], 0),
                (vec![3, 2], 16),
                (vec![1, 1], 7),
                (vec![3, 5], 27),
                (vec![0, 1], 0)
            ]
        );
    }

    #[test]
    fn drops_points_above_the_chain() {
        let rows = planar_rows(&gens(&[[0, 4], [3, 3], [4, 0]]));
        assert_eq!(
            rows,
            vec![(vec![1, 0], 0), (vec![1, 1], 4), (vec![0, 1], 0)]
        );
    }
}
