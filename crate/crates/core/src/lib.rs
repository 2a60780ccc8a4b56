//! Exact computation of real and rational powers of monomial ideals.
//!
//! The real power of a monomial ideal `I` at exponent `r` is the ideal
//! generated by the lattice points of `r * NP(I)`, where `NP(I)` is the
//! Newton polyhedron. Everything here is computed with exact rationals.

pub mod error;
pub mod ideal;
pub mod jumping;
pub mod polyhedral;
pub mod powers;
pub mod rational;

pub use error::{Error, Result};
pub use ideal::{
    divides, ideal_equals, ideal_power, interreduce, interreduce_with_report, multiply_ideals,
    ExponentVector, MonomialIdeal,
};
pub use jumping::{
    facet_monoid, is_jumping, jumping_numbers_up_to, semigroup_members, step_table,
    vertex_jumping_numbers, FacetMonoid, JumpingCertificate, StepInterval, StepTable,
};
pub use powers::{
    integral_closure, power_right_limit, real_power, real_power_hyperrect, real_power_improved,
    real_power_minkowski, real_power_oracle, real_power_staircase, Algorithm, PowerContext,
    PowerResult,
};
pub use rational::{format_pq, parse_rational, ExactRational};
