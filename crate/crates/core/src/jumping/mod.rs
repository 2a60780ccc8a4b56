//! Jumping numbers and the step function `r -> I^r`.
//!
//! `r` is a jumping number when `I^r` differs from `I^{r+e}` for every
//! `e > 0`. For `r > 0` this happens exactly when some facet of `NP(I)` with
//! nonzero offset, scaled by `r`, carries a lattice point.

mod semigroup;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::polyhedral::{BoxPoints, Facet, HPolyhedron};
use crate::powers::{Algorithm, PowerContext};
use crate::rational::{from_u64, ExactRational};

pub use semigroup::semigroup_members;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JumpingCertificate {
    /// A lattice point on the facet `facet` of `r * NP(I)`.
    Jumping {
        facet: usize,
        witness: ExponentVector,
    },
    /// `r = 0`, which counts as a jumping number of every nonzero ideal.
    AtZero,
    /// No scaled facet carries a lattice point. The power is constant on
    /// `[r, r + epsilon)`; `epsilon` is `None` when it is constant everywhere.
    NotJumping { epsilon: Option<ExactRational> },
}

impl JumpingCertificate {
    pub fn is_jumping(&self) -> bool {
        !matches!(self, JumpingCertificate::NotJumping { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetMonoid {
    pub facet: usize,
    pub bound: u64,
    /// `{k <= bound : k/c_i * F_i contains a lattice point}`, ascending.
    pub members: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexJump {
    pub vertex: ExponentVector,
    pub multiple: u64,
    pub value: ExactRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepInterval {
    pub from: ExactRational,
    pub to: ExactRational,
    pub ideal: MonomialIdeal,
}

/// The power as a step function on `(0, R]`: on each `(from, to]` it equals
/// the power at `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepTable {
    pub intervals: Vec<StepInterval>,
    /// Set when `R` is not itself a jumping number.
    pub open_right: bool,
}

fn context(ideal: &MonomialIdeal) -> Result<PowerContext> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    PowerContext::new(ideal)
}

fn check_positive(r: &ExactRational) -> Result<()> {
    if r.is_positive() {
        Ok(())
    } else {
        Err(Error::NegativeExponent(crate::rational::format_short(r)))
    }
}

pub fn is_jumping(ideal: &MonomialIdeal, r: &ExactRational) -> Result<JumpingCertificate> {
    crate::rational::ensure_nonnegative(r)?;
    certify(&context(ideal)?, r)
}

/// Decides whether `r` is a jumping number using a precomputed context.
pub fn certify(ctx: &PowerContext, r: &ExactRational) -> Result<JumpingCertificate> {
    crate::rational::ensure_nonnegative(r)?;
    if r.is_zero() {
        return Ok(JumpingCertificate::AtZero);
    }
    let hrep = ctx.hrep();
    for (i, facet) in hrep.facets().iter().enumerate() {
        if facet.offset == 0 {
            continue;
        }
        if let Some(witness) = facet_witness(hrep, facet, r)? {
            return Ok(JumpingCertificate::Jumping { facet: i, witness });
        }
    }
    Ok(JumpingCertificate::NotJumping {
        epsilon: ctx.right_gap(r)?,
    })
}

/// A lattice point `p >= 0` with `a_i . p = r c_i` and `a_j . p >= r c_j`
/// for every other row, if one exists.
fn facet_witness(
    hrep: &HPolyhedron,
    facet: &Facet,
    r: &ExactRational,
) -> Result<Option<ExponentVector>> {
    let level = r * from_u64(facet.offset);
    if !level.is_integer() {
        return Ok(None);
    }
    let level = level.to_integer().to_i128().ok_or(Error::Overflow)?;
    let level_u = u64::try_from(level).map_err(|_| Error::Overflow)?;
    let reachable = semigroup_members(&facet.normal, level_u)?;
    if reachable.last() != Some(&level_u) {
        return Ok(None);
    }

    // A witness can be slid down the facet's recession rays until it lies
    // within one unit of conv(r V_i) along each ray direction.
    let dim = hrep.dim();
    let mut lower = Vec::with_capacity(dim);
    let mut upper = Vec::with_capacity(dim);
    for k in 0..dim {
        let coords = facet.vertices.iter().map(|v| r * from_u64(v[k]));
        let min = coords.clone().min().expect("facet has a vertex");
        let max = coords.max().expect("facet has a vertex");
        let hi = if facet.rays.contains(&k) {
            max.ceil()
        } else {
            max.floor()
        };
        lower.push(min.ceil().to_integer().to_i64().ok_or(Error::Overflow)?);
        upper.push(hi.to_integer().to_i64().ok_or(Error::Overflow)?);
    }

    let thresholds: Vec<BigRational> = hrep
        .facets()
        .iter()
        .map(|f| r * from_u64(f.offset))
        .collect();
    let satisfies_all = |p: &[i64]| {
        hrep.facets()
            .iter()
            .zip(&thresholds)
            .all(|(f, c)| BigRational::from_integer(BigInt::from(f.evaluate(p))) >= *c)
    };

    // Solve the facet equation for one coordinate with a positive coefficient.
    let pivot = (0..dim)
        .find(|&k| facet.normal[k] > 0)
        .expect("facet normal is nonzero");
    let pivot_coeff = facet.normal[pivot] as i128;
    let (mut free_lo, mut free_hi) = (lower.clone(), upper.clone());
    free_lo.remove(pivot);
    free_hi.remove(pivot);
    for free in BoxPoints::new(free_lo, free_hi) {
        let mut p = free;
        p.insert(pivot, 0);
        let rest = facet.evaluate(&p);
        let (value, rem) = (level - rest).div_rem(&pivot_coeff);
        if rem != 0 {
            continue;
        }
        if value < lower[pivot] as i128 || value > upper[pivot] as i128 {
            continue;
        }
        p[pivot] = value as i64;
        if satisfies_all(&p) {
            return Ok(Some(ExponentVector::new(
                p.iter().map(|&v| v as u64).collect(),
            )));
        }
    }
    Ok(None)
}

/// All jumping numbers in `(0, bound]`, ascending.
pub fn jumping_numbers_up_to(
    ideal: &MonomialIdeal,
    bound: &ExactRational,
) -> Result<Vec<ExactRational>> {
    check_positive(bound)?;
    jumping_numbers_in(&context(ideal)?, bound)
}

fn jumping_numbers_in(ctx: &PowerContext, bound: &ExactRational) -> Result<Vec<ExactRational>> {
    let mut candidates = BTreeSet::new();
    for facet in ctx.hrep().facets() {
        if facet.offset == 0 {
            continue;
        }
        let c = from_u64(facet.offset);
        let top = (bound * &c)
            .floor()
            .to_integer()
            .to_u64()
            .ok_or(Error::Overflow)?;
        for k in semigroup_members(&facet.normal, top)? {
            if k > 0 {
                candidates.insert(from_u64(k) / &c);
            }
        }
    }
    let mut out = Vec::new();
    for r in candidates {
        if certify(ctx, &r)?.is_jumping() {
            out.push(r);
        }
    }
    Ok(out)
}

/// `S_i` truncated at `bound`, by the full facet test.
pub fn facet_monoid(ideal: &MonomialIdeal, facet: usize, bound: u64) -> Result<FacetMonoid> {
    let ctx = context(ideal)?;
    let hrep = ctx.hrep();
    let f = hrep.facet(facet)?;
    if f.offset == 0 {
        return Err(Error::ZeroOffset(facet));
    }
    let c = from_u64(f.offset);
    let mut members = vec![0];
    for k in semigroup_members(&f.normal, bound)? {
        if k > 0 && facet_witness(hrep, f, &(from_u64(k) / &c))?.is_some() {
            members.push(k);
        }
    }
    Ok(FacetMonoid {
        facet,
        bound,
        members,
    })
}

/// `n / gcd(v)` for each nonzero vertex `v` of `NP(I)` and `1 <= n <= n_max`.
pub fn vertex_jumping_numbers(ideal: &MonomialIdeal, n_max: u64) -> Result<Vec<VertexJump>> {
    let ctx = context(ideal)?;
    let mut out = Vec::new();
    for v in ctx.hrep().vertices() {
        if v.is_zero() {
            continue;
        }
        let g = v.coords().iter().fold(0u64, |g, &c| g.gcd(&c));
        for n in 1..=n_max {
            out.push(VertexJump {
                vertex: v.clone(),
                multiple: n,
                value: BigRational::new(BigInt::from(n), BigInt::from(g)),
            });
        }
    }
    Ok(out)
}

/// The distinct powers on `(0, bound]` with the intervals where they hold.
pub fn step_table(ideal: &MonomialIdeal, bound: &ExactRational) -> Result<StepTable> {
    check_positive(bound)?;
    let ctx = context(ideal)?;
    let mut ends = jumping_numbers_in(&ctx, bound)?;
    let open_right = ends.last() != Some(bound);
    if open_right {
        ends.push(bound.clone());
    }
    let mut intervals: Vec<StepInterval> = Vec::with_capacity(ends.len());
    let mut from = ExactRational::zero();
    for to in ends {
        let ideal = ctx.power(&to, Algorithm::Staircase)?;
        if let Some(prev) = intervals.last() {
            if prev.ideal == ideal {
                return Err(Error::Inconsistent(format!(
                    "powers at {} and {} coincide",
                    prev.to, to
                )));
            }
        }
        intervals.push(StepInterval {
            from: from.clone(),
            to: to.clone(),
            ideal,
        });
        from = to;
    }
    Ok(StepTable {
        intervals,
        open_right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powers::power_right_limit;
    use crate::rational::{from_int, ratio};

    fn ideal(dim: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens).unwrap()
    }

    fn worked() -> MonomialIdeal {
        ideal(2, &[&[9, 0], &[4, 3], &[2, 5], &[0, 8]])
    }

    fn small() -> MonomialIdeal {
        ideal(2, &[&[4, 0], &[2, 1], &[1, 3]])
    }

    #[test]
    fn small_example_certificates() {
        let i = small();
        assert_eq!(
            is_jumping(&i, &ratio(1, 3)).unwrap(),
            JumpingCertificate::NotJumping {
                epsilon: Some(ratio(1, 15))
            }
        );
        let cert = is_jumping(&i, &ratio(1, 2)).unwrap();
        let JumpingCertificate::Jumping { facet, witness } = cert else {
            panic!("expected a witness, got {cert:?}");
        };
        let h = crate::polyhedral::newton_polyhedron_hrep(&i).unwrap();
        assert_eq!(h.facet(facet).unwrap().normal, vec![1, 2]);
        assert_eq!(witness, ExponentVector::from([2, 0]));
        assert_eq!(
            is_jumping(&i, &from_int(0)).unwrap(),
            JumpingCertificate::AtZero
        );
        assert_eq!(
            is_jumping(&MonomialIdeal::zero(2), &from_int(1)),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn worked_example_boundaries() {
        let i = worked();
        assert!(is_jumping(&i, &ratio(11, 27)).unwrap().is_jumping());
        assert!(!is_jumping(&i, &ratio(10, 27)).unwrap().is_jumping());
        assert_eq!(
            jumping_numbers_up_to(&i, &ratio(1, 4)).unwrap(),
            vec![ratio(1, 9), ratio(1, 8), ratio(2, 9), ratio(1, 4)]
        );
        assert_eq!(jumping_numbers_up_to(&i, &from_int(1)).unwrap().len(), 34);
    }

    #[test]
    fn principal_ideal_in_one_variable() {
        let i = ideal(1, &[&[5]]);
        let want: Vec<_> = (1..=5).map(|k| ratio(k, 5)).collect();
        assert_eq!(jumping_numbers_up_to(&i, &from_int(1)).unwrap(), want);
        let t = step_table(&ideal(1, &[&[1]]), &from_int(1)).unwrap();
        assert_eq!(t.intervals.len(), 1);
        assert_eq!(t.intervals[0].ideal, ideal(1, &[&[1]]));
        assert!(!t.open_right);
    }

    #[test]
    fn monoids_of_worked_example() {
        let i = worked();
        assert_eq!(
            facet_monoid(&i, 1, 20).unwrap().members,
            semigroup_members(&[2, 9], 20).unwrap()
        );
        assert_eq!(
            facet_monoid(&i, 2, 7).unwrap().members,
            vec![0, 2, 3, 4, 5, 6, 7]
        );
        assert_eq!(
            facet_monoid(&i, 3, 16).unwrap().members,
            vec![0, 3, 6, 9, 11, 12, 14, 15]
        );
        assert_eq!(facet_monoid(&i, 0, 5), Err(Error::ZeroOffset(0)));
        assert!(matches!(
            facet_monoid(&i, 9, 5),
            Err(Error::NoSuchFacet { .. })
        ));
    }

    #[test]
    fn vertex_multiples() {
        let jumps = vertex_jumping_numbers(&worked(), 2).unwrap();
        assert_eq!(jumps.len(), 8);
        let first = jumps
            .iter()
            .find(|j| j.vertex == ExponentVector::from([9, 0]))
            .unwrap();
        assert_eq!(first.value, ratio(1, 9));
        for j in &jumps {
            assert!(
                is_jumping(&worked(), &j.value).unwrap().is_jumping(),
                "{j:?}"
            );
        }
        let mid: Vec<_> = jumps
            .iter()
            .filter(|j| j.vertex == ExponentVector::from([4, 3]))
            .collect();
        assert_eq!(mid[0].value, from_int(1));
        assert_eq!(mid[1].value, from_int(2));
    }

    #[test]
    fn step_tables() {
        let t = step_table(&small(), &ratio(1, 2)).unwrap();
        let last = t.intervals.last().unwrap();
        assert_eq!(last.to, ratio(1, 2));
        assert_eq!(last.ideal, ideal(2, &[&[2, 0], &[1, 1]]));
        assert!(!t.open_right);

        let t = step_table(&worked(), &ratio(1, 9)).unwrap();
        assert_eq!(t.intervals.len(), 1);
        assert_eq!(t.intervals[0].ideal, ideal(2, &[&[1, 0], &[0, 1]]));

        let t = step_table(&worked(), &ratio(1, 10)).unwrap();
        assert!(t.open_right);
        assert_eq!(t.intervals.len(), 1);

        assert!(step_table(&worked(), &from_int(0)).is_err());
    }

    #[test]
    fn criterion_matches_definition_on_small_grid() {
        for i in [small(), worked(), ideal(2, &[&[3, 1], &[1, 2]])] {
            for q in 1..=6 {
                for p in 1..=2 * q {
                    let r = ratio(p, q);
                    let by_facets = is_jumping(&i, &r).unwrap().is_jumping();
                    let power = crate::powers::real_power_oracle(&i, &r).unwrap();
                    let by_definition = power != power_right_limit(&i, &r).unwrap();
                    assert_eq!(by_facets, by_definition, "{i:?} at {r}");
                }
            }
        }
    }
}
