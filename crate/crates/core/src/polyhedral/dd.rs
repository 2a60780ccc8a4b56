//! Incremental double description over the integers.
//!
//! Given generators of a polyhedron (points and rays), the homogenized cone
//! `cone{(1, v), (0, r)}` is dualized one generator at a time: the dual cone
//! `{y : y.g >= 0}` is kept as a lineality basis plus a list of extreme rays
//! with their zero sets. Extreme rays of the final dual cone are the facets
//! of the polyhedron; the lineality basis gives its affine hull.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::common_denominator;

/// `normal . x >= offset` (or `=` for equalities).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct HalfSpace {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl HalfSpace {
    fn eval_i128(&self, x: &[i64]) -> Option<(i128, i128)> {
        let mut acc: i128 = 0;
        for (a, &xi) in self.normal.iter().zip(x) {
            let a: i128 = a.try_into().ok()?;
            acc = acc.checked_add(a.checked_mul(xi as i128)?)?;
        }
        Some((acc, (&self.offset).try_into().ok()?))
    }

    fn eval_big(&self, x: &[i64]) -> (BigInt, &BigInt) {
        let acc = self
            .normal
            .iter()
            .zip(x)
            .map(|(a, &xi)| a * BigInt::from(xi))
            .sum();
        (acc, &self.offset)
    }

    fn satisfied_by_lattice(&self, x: &[i64], equality: bool) -> bool {
        let cmp = match self.eval_i128(x) {
            Some((lhs, rhs)) => lhs.cmp(&rhs),
            None => {
                let (lhs, rhs) = self.eval_big(x);
                lhs.cmp(rhs)
            }
        };
        if equality {
            cmp == Ordering::Equal
        } else {
            cmp != Ordering::Less
        }
    }

    #[cfg(test)]
    pub fn satisfied_by(&self, x: &[BigRational], equality: bool) -> bool {
        let lhs: BigRational = self
            .normal
            .iter()
            .zip(x)
            .map(|(a, xi)| BigRational::from_integer(a.clone()) * xi)
            .sum();
        let rhs = BigRational::from_integer(self.offset.clone());
        if equality {
            lhs == rhs
        } else {
            lhs >= rhs
        }
    }
}

/// Irredundant outer description of a polyhedron.
#[derive(Clone, Debug, Default)]
pub(crate) struct HalfSpaces {
    pub inequalities: Vec<HalfSpace>,
    pub equalities: Vec<HalfSpace>,
}

impl HalfSpaces {
    pub fn contains_lattice(&self, x: &[i64]) -> bool {
        self.equalities
            .iter()
            .all(|h| h.satisfied_by_lattice(x, true))
            && self
                .inequalities
                .iter()
                .all(|h| h.satisfied_by_lattice(x, false))
    }

    #[cfg(test)]
    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.equalities.iter().all(|h| h.satisfied_by(x, true))
            && self.inequalities.iter().all(|h| h.satisfied_by(x, false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn empty(n: usize) -> Self {
        ZeroSet(vec![0; n.div_ceil(64)])
    }

    fn first(k: usize, n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..k {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `s * a - t * b`, reduced to a primitive vector.
fn combine(s: &BigInt, a: &[BigInt], t: &BigInt, b: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| s * x - t * y).collect();
    make_primitive(&mut v);
    v
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Dual cone of `cone(generators)` in Z^dim: returns (extreme rays, lineality basis).
fn dual_cone(dim: usize, generators: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = generators.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, h) in generators.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(l, h).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut s0 = dot(&l0, h);
            if s0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                s0 = -s0;
            }
            for l in lineality.iter_mut() {
                let s = dot(l, h);
                if !s.is_zero() {
                    *l = combine(&s0, l, &s, &l0);
                }
            }
            for r in rays.iter_mut() {
                let s = dot(&r.v, h);
                if !s.is_zero() {
                    r.v = combine(&s0, &r.v, &s, &l0);
                }
                r.zeros.insert(k);
            }
            rays.push(Ray {
                v: l0,
                zeros: ZeroSet::first(k, n),
            });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(&r.v, h)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, val) in rays.iter().zip(&values) {
            if val.is_positive() {
                next.push(Ray {
                    v: r.v.clone(),
                    zeros: r.zeros.clone(),
                });
            } else if val.is_zero() {
                let mut zeros = r.zeros.clone();
                zeros.insert(k);
                next.push(Ray {
                    v: r.v.clone(),
                    zeros,
                });
            }
        }
        for (i, (p, vp)) in rays.iter().zip(&values).enumerate() {
            if !vp.is_positive() {
                continue;
            }
            for (j, (q, vq)) in rays.iter().zip(&values).enumerate() {
                if !vq.is_negative() {
                    continue;
                }
                let common = p.zeros.intersect(&q.zeros);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, r)| t == i || t == j || !common.is_subset(&r.zeros));
                if adjacent {
                    // vp * q - vq * p vanishes on h and is positive on the rest.
                    let v = combine(vp, &q.v, vq, &p.v);
                    let mut zeros = common;
                    zeros.insert(k);
                    next.push(Ray { v, zeros });
                }
            }
        }
        rays = next;
    }
    (rays.into_iter().map(|r| r.v).collect(), lineality)
}

/// Outer description of `conv(points) + cone(rays)` in Q^dim. At least one
/// point is required.
pub(crate) fn half_spaces(
    dim: usize,
    points: &[Vec<BigRational>],
    rays: &[Vec<BigInt>],
) -> HalfSpaces {
    assert!(!points.is_empty(), "polyhedron needs a point");
    let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(points.len() + rays.len());
    for p in points {
        let den = common_denominator(p);
        let mut g = Vec::with_capacity(dim + 1);
        g.push(den.clone());
        for x in p {
            g.push((x * BigRational::from_integer(den.clone())).to_integer());
        }
        gens.push(g);
    }
    for r in rays {
        let mut g = vec![BigInt::zero()];
        g.extend(r.iter().cloned());
        gens.push(g);
    }
    let (dual_rays, lineality) = dual_cone(dim + 1, &gens);

    let split = |y: Vec<BigInt>| {
        let offset = -y[0].clone();
        HalfSpace {
            normal: y[1..].to_vec(),
            offset,
        }
    };
    let inequalities = dual_rays
        .into_iter()
        .map(split)
        .filter(|h| h.normal.iter().any(|a| !a.is_zero()))
        .collect();
    let equalities = lineality
        .into_iter()
        .map(|mut y| {
            make_primitive(&mut y);
            if let Some(first) = y.iter().find(|a| !a.is_zero()) {
                if first.is_negative() {
                    y.iter_mut().for_each(|x| *x = -&*x);
                }
            }
            split(y)
        })
        .collect();
    HalfSpaces {
        inequalities,
        equalities,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, ratio};

    fn pt(c: &[i64]) -> Vec<BigRational> {
        c.iter().map(|&x| from_int(x)).collect()
    }

    fn hs(normal: &[i64], offset: i64) -> HalfSpace {
        HalfSpace {
            normal: normal.iter().map(|&a| BigInt::from(a)).collect(),
            offset: BigInt::from(offset),
        }
    }

    fn sorted(mut v: Vec<HalfSpace>) -> Vec<(Vec<BigInt>, BigInt)> {
        let mut out: Vec<_> = v.drain(..).map(|h| (h.normal, h.offset)).collect();
        out.sort();
        out
    }

    #[test]
    fn square_has_four_facets() {
        let h = half_spaces(
            2,
            &[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])],
            &[],
        );
        assert!(h.equalities.is_empty());
        let want = vec![
            hs(&[1, 0], 0),
            hs(&[-1, 0], -1),
            hs(&[0, 1], 0),
            hs(&[0, -1], -1),
        ];
        assert_eq!(sorted(h.inequalities), sorted(want));
    }

    #[test]
    fn orthant_translate() {
        let e =
            |i: usize| -> Vec<BigInt> { (0..2).map(|j| BigInt::from((i == j) as u8)).collect() };
        let h = half_spaces(2, &[pt(&[1, 1])], &[e(0), e(1)]);
        assert_eq!(
            sorted(h.inequalities),
            sorted(vec![hs(&[1, 0], 1), hs(&[0, 1], 1)])
        );
    }

    #[test]
    fn lower_dimensional_hulls() {
        // A single point in the plane: two equalities, no inequalities.
        let h = half_spaces(2, &[vec![ratio(1, 2), from_int(3)]], &[]);
        assert_eq!(h.equalities.len(), 2);
        assert!(h.contains(&[ratio(1, 2), from_int(3)]));
        assert!(!h.contains(&[ratio(1, 2), from_int(2)]));
        // A segment: one equality, two inequalities.
        let h = half_spaces(2, &[pt(&[2, 0]), pt(&[0, 2])], &[]);
        assert_eq!(h.equalities.len(), 1);
        assert_eq!(h.inequalities.len(), 2);
        assert!(h.contains_lattice(&[1, 1]));
        assert!(!h.contains_lattice(&[1, 0]));
        assert!(!h.contains_lattice(&[3, -1]));
    }

    #[test]
    fn cube_in_three_dimensions() {
        let mut pts = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    pts.push(pt(&[a, b, c]));
                }
            }
        }
        // Redundant interior and boundary points must not create facets.
        pts.push(vec![ratio(1, 2), ratio(1, 2), ratio(1, 2)]);
        pts.push(vec![ratio(1, 2), from_int(0), ratio(1, 2)]);
        let h = half_spaces(3, &pts, &[]);
        assert_eq!(h.inequalities.len(), 6);
    }
}
