//! Exponent vectors and monomial ideals in canonical form.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A point of N^d, standing for the monomial x^a.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(coords: Vec<u64>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Componentwise order: `self` divides `other` as monomials.
    pub fn divides(&self, other: &ExponentVector) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, k: u64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    #[cfg(test)]
    pub(crate) fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&c| c as i64).collect()
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(coords: Vec<u64>) -> Self {
        ExponentVector(coords)
    }
}

impl From<&[u64]> for ExponentVector {
    fn from(coords: &[u64]) -> Self {
        ExponentVector(coords.to_vec())
    }
}

impl<const N: usize> From<[u64; N]> for ExponentVector {
    fn from(coords: [u64; N]) -> Self {
        ExponentVector(coords.to_vec())
    }
}

impl Index<usize> for ExponentVector {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn divides(a: &ExponentVector, b: &ExponentVector) -> Result<bool> {
    a.divides(b)
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A monomial ideal held by its unique minimal generating set, sorted
/// lexicographically. The zero ideal has no generators; the unit ideal is
/// generated by the zero vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, interreducing them.
    pub fn new<I>(dim: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        interreduce(dim, gens)
    }

    pub fn from_exponents<V: AsRef<[u64]>>(dim: usize, gens: &[V]) -> Result<Self> {
        interreduce(dim, gens.iter().map(|g| ExponentVector::from(g.as_ref())))
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: Vec::new(),
        }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![ExponentVector::zeros(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Whether the monomial x^a lies in the ideal.
    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        check_dim(self.dim, a.dim())?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(a)))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(other
            .gens
            .iter()
            .all(|h| self.gens.iter().any(|g| g.divides_unchecked(h))))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        multiply_ideals(self, other)
    }

    pub fn power(&self, n: u32) -> MonomialIdeal {
        ideal_power(self, n)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{:?}", self.gens)
    }
}

/// Minimal generating set of the ideal generated by `points`, in canonical
/// (lexicographic) order.
pub fn interreduce<I>(dim: usize, points: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    Ok(interreduce_with_report(dim, points)?.0)
}

/// Like [`interreduce`], additionally returning the input points that were
/// dropped as redundant (duplicates included), in input order.
pub fn interreduce_with_report<I>(
    dim: usize,
    points: I,
) -> Result<(MonomialIdeal, Vec<ExponentVector>)>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let points: Vec<ExponentVector> = points.into_iter().collect();
    for p in &points {
        check_dim(dim, p.dim())?;
    }
    // A divisor never has larger degree than what it divides, so scanning in
    // degree order only needs to compare against points already kept.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        (points[i].degree(), &points[i], i).cmp(&(points[j].degree(), &points[j], j))
    });
    let mut keep = vec![false; points.len()];
    let mut kept: Vec<&ExponentVector> = Vec::new();
    for &i in &order {
        let p = &points[i];
        if !kept.iter().any(|g| g.divides_unchecked(p)) {
            keep[i] = true;
            kept.push(p);
        }
    }
    let mut gens: Vec<ExponentVector> = kept.into_iter().cloned().collect();
    gens.sort();
    let redundant = points
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| !k)
        .map(|(p, _)| p.clone())
        .collect();
    Ok((MonomialIdeal { dim, gens }, redundant))
}

pub fn ideal_equals(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    check_dim(i.dim, j.dim)?;
    Ok(i.gens == j.gens)
}

pub fn multiply_ideals(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_dim(i.dim, j.dim)?;
    let sums = i.gens.iter().flat_map(|g| {
        j.gens
            .iter()
            .map(move |h| g.add(h).expect("same dimension"))
    });
    interreduce(i.dim, sums)
}

pub fn ideal_power(i: &MonomialIdeal, n: u32) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit(i.dim);
    for _ in 0..n {
        acc = multiply_ideals(&acc, i).expect("same dimension");
    }
    acc
}
