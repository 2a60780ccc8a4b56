//! Real powers of monomial ideals.
//!
//! Four traversal strategies plus a brute-force oracle. All of them return
//! the same canonical ideal; they differ in which lattice points they look
//! at and how many candidate generators they produce before interreduction.

mod oracle;
mod traverse;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{interreduce, ExponentVector, MonomialIdeal};
use crate::polyhedral::{
    hyperrectangle, minkowski_sum_with_simplex, newton_polyhedron_hrep, newton_polytope,
    scan_lattice_points, HPolyhedron, HyperRectangle, Region, VPolytope,
};
use crate::rational::{ensure_nonnegative, from_u64, next_integer, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Minkowski,
    Hyperrect,
    Improved,
    Staircase,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Minkowski,
        Algorithm::Hyperrect,
        Algorithm::Improved,
        Algorithm::Staircase,
        Algorithm::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Minkowski => "minkowski",
            Algorithm::Hyperrect => "hyperrect",
            Algorithm::Improved => "improved",
            Algorithm::Staircase => "staircase",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// One membership test made during a traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePoint {
    pub point: ExponentVector,
    pub inside: bool,
}

/// Points examined by a traversal, in visiting order, and the generators it
/// appended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorTrace {
    pub visited: Vec<TracePoint>,
    pub accepted: Vec<ExponentVector>,
}

#[derive(Clone, Debug)]
pub struct PowerResult {
    pub algorithm: Algorithm,
    pub exponent: ExactRational,
    /// Canonical minimal generators.
    pub ideal: MonomialIdeal,
    /// Generators produced before interreduction, sorted and deduplicated.
    pub candidates: Vec<ExponentVector>,
    /// Number of lattice points examined.
    pub visited: usize,
    pub trace: Option<GeneratorTrace>,
}

/// An ideal together with its Newton polytope and facet description, so that
/// several exponents can be evaluated without recomputing the geometry.
#[derive(Clone, Debug)]
pub struct PowerContext {
    ideal: MonomialIdeal,
    hrep: HPolyhedron,
    polytope: VPolytope,
}

impl PowerContext {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        Ok(PowerContext {
            hrep: newton_polyhedron_hrep(ideal)?,
            polytope: newton_polytope(ideal)?,
            ideal: ideal.clone(),
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn hrep(&self) -> &HPolyhedron {
        &self.hrep
    }

    pub fn polytope(&self) -> &VPolytope {
        &self.polytope
    }

    pub fn dim(&self) -> usize {
        self.ideal.dim()
    }

    pub fn hyperrectangle(&self, r: &ExactRational) -> Result<HyperRectangle> {
        hyperrectangle(&self.ideal, r)
    }

    /// `C(I, r) = r * np(I) + (d - 1/q) * S_d` for `r = p/q` in lowest terms.
    pub fn minkowski_region(&self, r: &ExactRational) -> Result<VPolytope> {
        ensure_nonnegative(r)?;
        let q = BigRational::from_integer(r.denom().clone());
        let s = from_u64(self.dim() as u64) - q.recip();
        minkowski_sum_with_simplex(&self.polytope.scale(r)?, &s)
    }

    pub fn power(&self, r: &ExactRational, algorithm: Algorithm) -> Result<MonomialIdeal> {
        Ok(self.run(r, algorithm, false)?.ideal)
    }

    /// Runs one algorithm, optionally recording its traversal.
    pub fn run(&self, r: &ExactRational, algorithm: Algorithm, trace: bool) -> Result<PowerResult> {
        ensure_nonnegative(r)?;
        let dim = self.dim();
        if r.is_zero() {
            let unit = MonomialIdeal::unit(dim);
            return Ok(PowerResult {
                algorithm,
                exponent: r.clone(),
                candidates: unit.generators().to_vec(),
                ideal: unit,
                visited: 0,
                trace: trace.then(GeneratorTrace::default),
            });
        }
        let (candidates, visited, trace) = match algorithm {
            Algorithm::Minkowski => {
                let region = self.minkowski_region(r)?;
                let (points, visited) = scan_lattice_points(Region::Polytope(&region))?;
                let trace = trace.then(|| GeneratorTrace {
                    visited: points
                        .iter()
                        .map(|p| TracePoint {
                            point: p.clone(),
                            inside: true,
                        })
                        .collect(),
                    accepted: points.clone(),
                });
                (points, visited, trace)
            }
            Algorithm::Hyperrect => self.traverse(r, trace, traverse::hyperrect)?,
            Algorithm::Improved => self.traverse(r, trace, traverse::improved)?,
            Algorithm::Staircase => self.traverse(r, trace, traverse::staircase)?,
            Algorithm::Oracle => {
                let bounds = self.hyperrectangle(r)?;
                let out = oracle::scan(&self.ideal, r, &bounds, trace)?;
                (out.accepted.clone(), out.visited, out.trace)
            }
        };
        let mut candidates = candidates;
        candidates.sort();
        candidates.dedup();
        let ideal = interreduce(dim, candidates.iter().cloned())?;
        Ok(PowerResult {
            algorithm,
            exponent: r.clone(),
            ideal,
            candidates,
            visited,
            trace,
        })
    }

    fn traverse(
        &self,
        r: &ExactRational,
        trace: bool,
        walk: fn(&mut traverse::Walker<'_>),
    ) -> Result<(Vec<ExponentVector>, usize, Option<GeneratorTrace>)> {
        let system = self.hrep.scale(r)?;
        let bounds = self.hyperrectangle(r)?;
        let mut walker = traverse::Walker::new(&system, &bounds, trace);
        walk(&mut walker);
        Ok(walker.finish())
    }

    /// The ideal `I^{>r}`, the common value of `I^{r+e}` for all small `e > 0`.
    pub fn right_limit(&self, r: &ExactRational) -> Result<MonomialIdeal> {
        match self.right_gap(r)? {
            Some(eps) => {
                let t = r + eps / BigRational::from_integer(BigInt::from(2));
                self.power(&t, Algorithm::Staircase)
            }
            None => Ok(MonomialIdeal::unit(self.dim())),
        }
    }

    /// The smallest positive `e0` such that the power is constant on
    /// `(r, r + e0)`: the minimum over rows with `c_i != 0` of
    /// `(next(r c_i) - r c_i) / c_i`. `None` when every offset is zero.
    pub fn right_gap(&self, r: &ExactRational) -> Result<Option<ExactRational>> {
        ensure_nonnegative(r)?;
        Ok(self
            .hrep
            .facets()
            .iter()
            .filter(|f| f.offset != 0)
            .map(|f| {
                let c = from_u64(f.offset);
                let rc = r * &c;
                (BigRational::from_integer(next_integer(&rc)) - rc) / c
            })
            .min())
    }
}

fn checked_context(ideal: &MonomialIdeal, r: &ExactRational) -> Result<Option<PowerContext>> {
    ensure_nonnegative(r)?;
    if ideal.is_zero() {
        return if r.is_zero() {
            Ok(None)
        } else {
            Err(Error::ZeroIdeal)
        };
    }
    PowerContext::new(ideal).map(Some)
}

/// `I^r` computed with the chosen algorithm.
pub fn real_power(
    ideal: &MonomialIdeal,
    r: &ExactRational,
    algorithm: Algorithm,
) -> Result<MonomialIdeal> {
    match checked_context(ideal, r)? {
        Some(ctx) => ctx.power(r, algorithm),
        None => Ok(MonomialIdeal::unit(ideal.dim())),
    }
}

pub fn real_power_minkowski(ideal: &MonomialIdeal, r: &ExactRational) -> Result<MonomialIdeal> {
    real_power(ideal, r, Algorithm::Minkowski)
}

pub fn real_power_hyperrect(ideal: &MonomialIdeal, r: &ExactRational) -> Result<MonomialIdeal> {
    real_power(ideal, r, Algorithm::Hyperrect)
}

pub fn real_power_improved(ideal: &MonomialIdeal, r: &ExactRational) -> Result<MonomialIdeal> {
    real_power(ideal, r, Algorithm::Improved)
}

pub fn real_power_staircase(ideal: &MonomialIdeal, r: &ExactRational) -> Result<MonomialIdeal> {
    real_power(ideal, r, Algorithm::Staircase)
}

/// Brute force: every point of the hyperrectangle is tested against the
/// generators by linear programming, without using the facet description.
pub fn real_power_oracle(ideal: &MonomialIdeal, r: &ExactRational) -> Result<MonomialIdeal> {
    real_power(ideal, r, Algorithm::Oracle)
}

/// The integral closure, i.e. the power at `r = 1`.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    real_power(ideal, &BigRational::one(), Algorithm::Staircase)
}

/// `I^{>r}`: the power just to the right of `r`.
pub fn power_right_limit(ideal: &MonomialIdeal, r: &ExactRational) -> Result<MonomialIdeal> {
    ensure_nonnegative(r)?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    PowerContext::new(ideal)?.right_limit(r)
}
