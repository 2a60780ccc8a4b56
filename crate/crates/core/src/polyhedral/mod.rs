//! Exact convex geometry of Newton polytopes and polyhedra.

mod dd;
pub(crate) mod lp;
mod planar;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{check_dim, ExponentVector, MonomialIdeal};
use crate::rational::{ceil_i64, ensure_nonnegative, floor_i64, from_u64, ExactRational};

use dd::HalfSpaces;
use lp::{Constraint, Relation};

/// A bounded polytope given by its extremal points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Vec<ExactRational>>,
}

impl VPolytope {
    /// Convex hull of `points`, keeping only extremal points (sorted
    /// lexicographically).
    pub fn hull(dim: usize, points: Vec<Vec<ExactRational>>) -> Result<Self> {
        for p in &points {
            check_dim(dim, p.len())?;
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let vertices = (0..points.len())
            .filter(|&i| {
                let others: Vec<&Vec<ExactRational>> = points
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p)
                    .collect();
                !in_convex_hull(dim, &others, &points[i])
            })
            .map(|i| points[i].clone())
            .collect();
        Ok(VPolytope { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<ExactRational>] {
        &self.vertices
    }

    pub fn scale(&self, r: &ExactRational) -> Result<VPolytope> {
        ensure_nonnegative(r)?;
        let scaled = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * r).collect())
            .collect();
        VPolytope::hull(self.dim, scaled)
    }

    /// Membership by exact LP: is `x` a convex combination of the vertices?
    pub fn contains(&self, x: &[ExactRational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        let refs: Vec<&Vec<ExactRational>> = self.vertices.iter().collect();
        Ok(in_convex_hull(self.dim, &refs, x))
    }

    /// Integer bounding box, clipped to the nonnegative orthant.
    fn lattice_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let min = self.vertices.iter().map(|v| &v[k]).min()?;
            let max = self.vertices.iter().map(|v| &v[k]).max()?;
            lo.push(ceil_i64(min).ok()?.max(0));
            hi.push(floor_i64(max).ok()?);
        }
        Some((lo, hi))
    }

    fn half_spaces(&self) -> HalfSpaces {
        dd::half_spaces(self.dim, &self.vertices, &[])
    }
}

fn in_convex_hull(dim: usize, points: &[&Vec<ExactRational>], x: &[ExactRational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let mut rows: Vec<Constraint> = (0..dim)
        .map(|k| {
            Constraint::new(
                points.iter().map(|p| p[k].clone()).collect(),
                Relation::Eq,
                x[k].clone(),
            )
        })
        .collect();
    rows.push(Constraint::new(
        vec![BigRational::one(); points.len()],
        Relation::Eq,
        BigRational::one(),
    ));
    lp::is_feasible(points.len(), &rows)
}

/// One facet `normal . x >= offset` of a Newton polyhedron, with the
/// vertices and coordinate rays it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub offset: u64,
    /// Vertices of the polyhedron on this facet.
    pub vertices: Vec<ExponentVector>,
    /// Indices j with `normal[j] == 0`, i.e. recession rays e_j of the facet.
    pub rays: Vec<usize>,
}

impl Facet {
    pub fn evaluate(&self, x: &[i64]) -> i128 {
        self.normal
            .iter()
            .zip(x)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    /// Renders the inequality over the given variable names, e.g. `3x + 2y >= 16`.
    pub fn render(&self, vars: &[String]) -> String {
        let mut terms = Vec::new();
        for (a, v) in self.normal.iter().zip(vars) {
            match a {
                0 => {}
                1 => terms.push(v.clone()),
                _ => terms.push(format!("{a}{v}")),
            }
        }
        format!("{} >= {}", terms.join(" + "), self.offset)
    }
}

/// The Newton polyhedron `{x >= 0 : A x >= c}` with one gcd-normalized row
/// per facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    dim: usize,
    facets: Vec<Facet>,
    vertices: Vec<ExponentVector>,
}

impl HPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet(&self, index: usize) -> Result<&Facet> {
        self.facets.get(index).ok_or(Error::NoSuchFacet {
            index,
            count: self.facets.len(),
        })
    }

    /// Vertices of the polyhedron (a subset of the minimal generators).
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[u64], u64)> {
        self.facets.iter().map(|f| (f.normal.as_slice(), f.offset))
    }

    pub fn scale(&self, r: &ExactRational) -> Result<ScaledSystem> {
        scale_hrep(self, r)
    }

    pub fn contains(&self, r: &ExactRational, a: &[ExactRational]) -> Result<bool> {
        contains_hrep(self, r, a)
    }

    fn from_rows(ideal: &MonomialIdeal, mut rows: Vec<(Vec<u64>, u64)>) -> Self {
        let dim = ideal.dim();
        rows.sort_by(|a, b| compare_directions(&a.0, &b.0));
        rows.dedup();
        let gens = ideal.generators();
        let tight = |g: &ExponentVector, (normal, offset): &(Vec<u64>, u64)| {
            normal
                .iter()
                .zip(g.coords())
                .map(|(a, x)| a * x)
                .sum::<u64>()
                == *offset
        };
        let vertices: Vec<ExponentVector> = gens
            .iter()
            .filter(|g| {
                let tight_rows: Vec<Vec<BigRational>> = rows
                    .iter()
                    .filter(|row| tight(g, row))
                    .map(|(n, _)| n.iter().map(|&a| from_u64(a)).collect())
                    .collect();
                rank(tight_rows) == dim
            })
            .cloned()
            .collect();
        let facets = rows
            .iter()
            .map(|row| Facet {
                normal: row.0.clone(),
                offset: row.1,
                vertices: vertices.iter().filter(|v| tight(v, row)).cloned().collect(),
                rays: (0..dim).filter(|&j| row.0[j] == 0).collect(),
            })
            .collect();
        HPolyhedron {
            dim,
            facets,
            vertices,
        }
    }
}

/// Facet order: normals compared as directions `a / sum(a)`, lexicographically
/// descending. In two variables this walks the boundary from the vertical
/// ray down to the horizontal one.
fn compare_directions(a: &[u64], b: &[u64]) -> Ordering {
    let sa: u128 = a.iter().map(|&x| x as u128).sum();
    let sb: u128 = b.iter().map(|&x| x as u128).sum();
    for (&x, &y) in a.iter().zip(b) {
        let ord = (y as u128 * sa).cmp(&(x as u128 * sb));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// The system `{x >= 0 : A x >= r c}` describing `r * NP(I)`. Offsets are
/// kept as exact rationals and are not renormalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledSystem {
    dim: usize,
    normals: Vec<Vec<u64>>,
    offsets: Vec<ExactRational>,
    // ceil(r c_i): for integer points A x >= r c is A x >= ceil(r c).
    lattice_offsets: Vec<i128>,
}

impl ScaledSystem {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<u64>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[ExactRational] {
        &self.offsets
    }

    pub fn contains(&self, x: &[ExactRational]) -> bool {
        if x.iter().any(|v| v.is_negative()) {
            return false;
        }
        self.normals.iter().zip(&self.offsets).all(|(n, c)| {
            let lhs: ExactRational = n.iter().zip(x).map(|(&a, v)| from_u64(a) * v).sum();
            lhs >= *c
        })
    }

    /// Membership of an integer point; boundary counts as inside.
    pub fn contains_lattice(&self, x: &[i64]) -> bool {
        if x.iter().any(|&v| v < 0) {
            return false;
        }
        self.normals
            .iter()
            .zip(&self.lattice_offsets)
            .all(|(n, &c)| {
                let lhs: i128 = n.iter().zip(x).map(|(&a, &v)| a as i128 * v as i128).sum();
                lhs >= c
            })
    }
}

/// Componentwise integer bounds of a box in N^d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperRectangle {
    pub lower: Vec<u64>,
    pub upper: Vec<u64>,
}

impl HyperRectangle {
    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(&v, (&lo, &hi))| v >= lo as i64 && v <= hi as i64)
    }

    /// Number of lattice points in the box.
    pub fn len(&self) -> u128 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| (hi - lo + 1) as u128)
            .product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> BoxPoints {
        BoxPoints::new(
            self.lower.iter().map(|&v| v as i64).collect(),
            self.upper.iter().map(|&v| v as i64).collect(),
        )
    }
}

/// Odometer over the integer points of a box, last coordinate fastest.
#[derive(Clone, Debug)]
pub struct BoxPoints {
    lower: Vec<i64>,
    upper: Vec<i64>,
    current: Option<Vec<i64>>,
}

impl BoxPoints {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Self {
        let empty = lower.iter().zip(&upper).any(|(lo, hi)| lo > hi);
        let current = if empty { None } else { Some(lower.clone()) };
        BoxPoints {
            lower,
            upper,
            current,
        }
    }
}

impl Iterator for BoxPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            if cur[k] < self.upper[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = self.lower[k];
        }
        Some(out)
    }
}

/// A bounded region whose lattice points can be listed.
#[derive(Clone, Copy, Debug)]
pub enum Region<'a> {
    Polytope(&'a VPolytope),
    Scaled {
        system: &'a ScaledSystem,
        bounds: Option<&'a HyperRectangle>,
    },
}

pub fn newton_polytope(ideal: &MonomialIdeal) -> Result<VPolytope> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let points = ideal
        .generators()
        .iter()
        .map(|g| g.coords().iter().map(|&c| from_u64(c)).collect())
        .collect();
    VPolytope::hull(ideal.dim(), points)
}

/// Facets of NP(I) = conv(G(I)) + R^d_+. Uses the planar chain for d <= 2
/// and double description otherwise; both yield the same rows.
pub fn newton_polyhedron_hrep(ideal: &MonomialIdeal) -> Result<HPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.dim() <= 2 {
        let rows = planar::planar_rows(ideal.generators());
        Ok(HPolyhedron::from_rows(ideal, rows))
    } else {
        newton_polyhedron_hrep_dd(ideal)
    }
}

/// Facets of NP(I) by double description, in any dimension.
pub fn newton_polyhedron_hrep_dd(ideal: &MonomialIdeal) -> Result<HPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let dim = ideal.dim();
    let points: Vec<Vec<BigRational>> = ideal
        .generators()
        .iter()
        .map(|g| g.coords().iter().map(|&c| from_u64(c)).collect())
        .collect();
    let rays: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect();
    let spaces = dd::half_spaces(dim, &points, &rays);
    debug_assert!(
        spaces.equalities.is_empty(),
        "Newton polyhedra are full-dimensional"
    );
    let mut rows = Vec::with_capacity(spaces.inequalities.len());
    for h in spaces.inequalities {
        let g = h.normal.iter().fold(h.offset.clone(), |g, a| g.gcd(a));
        let normal = h
            .normal
            .iter()
            .map(|a| (a / &g).to_u64().ok_or(Error::Overflow))
            .collect::<Result<Vec<u64>>>()?;
        let offset = (&h.offset / &g).to_u64().ok_or(Error::Overflow)?;
        rows.push((normal, offset));
    }
    Ok(HPolyhedron::from_rows(ideal, rows))
}

pub fn scale_hrep(h: &HPolyhedron, r: &ExactRational) -> Result<ScaledSystem> {
    ensure_nonnegative(r)?;
    let normals: Vec<Vec<u64>> = h.facets.iter().map(|f| f.normal.clone()).collect();
    let offsets: Vec<ExactRational> = h.facets.iter().map(|f| r * from_u64(f.offset)).collect();
    let lattice_offsets = offsets
        .iter()
        .map(|c| c.ceil().to_integer().to_i128().ok_or(Error::Overflow))
        .collect::<Result<Vec<i128>>>()?;
    Ok(ScaledSystem {
        dim: h.dim,
        normals,
        offsets,
        lattice_offsets,
    })
}

/// Whether `a` lies in `r * NP(I)`, read from the facet inequalities.
pub fn contains_hrep(h: &HPolyhedron, r: &ExactRational, a: &[ExactRational]) -> Result<bool> {
    check_dim(h.dim, a.len())?;
    Ok(scale_hrep(h, r)?.contains(a))
}

/// Whether `a` lies in `r * NP(I)`, decided directly from the generators:
/// is there a convex combination `b` of `G(I)` with `a >= r b`? This route
/// never consults the facet description.
pub fn contains_lp(ideal: &MonomialIdeal, r: &ExactRational, a: &[ExactRational]) -> Result<bool> {
    check_dim(ideal.dim(), a.len())?;
    ensure_nonnegative(r)?;
    if ideal.is_zero() || a.iter().any(|v| v.is_negative()) {
        return Ok(false);
    }
    if r.is_zero() {
        return Ok(true);
    }
    let gens = ideal.generators();
    let mut rows: Vec<Constraint> = (0..ideal.dim())
        .map(|k| {
            Constraint::new(
                gens.iter().map(|g| r * from_u64(g[k])).collect(),
                Relation::Le,
                a[k].clone(),
            )
        })
        .collect();
    rows.push(Constraint::new(
        vec![BigRational::one(); gens.len()],
        Relation::Eq,
        BigRational::one(),
    ));
    Ok(lp::is_feasible(gens.len(), &rows))
}

/// Vertices of `P + s * S_d`, where S_d is the standard unit simplex.
pub fn minkowski_sum_with_simplex(p: &VPolytope, s: &ExactRational) -> Result<VPolytope> {
    ensure_nonnegative(s)?;
    let mut candidates = Vec::with_capacity(p.vertices.len() * (p.dim + 1));
    for v in &p.vertices {
        candidates.push(v.clone());
        if !s.is_zero() {
            for j in 0..p.dim {
                let mut w = v.clone();
                w[j] += s;
                candidates.push(w);
            }
        }
    }
    VPolytope::hull(p.dim, candidates)
}

/// `V(I, r) = { ceil(r a) : a in G(I) }`.
pub fn scaled_vertices(ideal: &MonomialIdeal, r: &ExactRational) -> Result<Vec<ExponentVector>> {
    ensure_nonnegative(r)?;
    ideal
        .generators()
        .iter()
        .map(|g| {
            g.coords()
                .iter()
                .map(|&c| {
                    let v = ceil_i64(&(r * from_u64(c)))?;
                    u64::try_from(v).map_err(|_| Error::Overflow)
                })
                .collect::<Result<Vec<u64>>>()
                .map(ExponentVector::new)
        })
        .collect()
}

/// The box spanned by `V(I, r)`.
pub fn hyperrectangle(ideal: &MonomialIdeal, r: &ExactRational) -> Result<HyperRectangle> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let v = scaled_vertices(ideal, r)?;
    let dim = ideal.dim();
    let lower = (0..dim)
        .map(|k| v.iter().map(|a| a[k]).min().unwrap_or(0))
        .collect();
    let upper = (0..dim)
        .map(|k| v.iter().map(|a| a[k]).max().unwrap_or(0))
        .collect();
    Ok(HyperRectangle { lower, upper })
}

/// All integer points of the region, sorted lexicographically.
pub fn lattice_points(region: Region<'_>) -> Result<Vec<ExponentVector>> {
    Ok(scan_lattice_points(region)?.0)
}

/// Lattice points together with the number of box points examined.
pub(crate) fn scan_lattice_points(region: Region<'_>) -> Result<(Vec<ExponentVector>, usize)> {
    let mut out = Vec::new();
    let mut visited = 0usize;
    match region {
        Region::Polytope(p) => {
            let Some((lo, hi)) = p.lattice_box() else {
                return Ok((out, 0));
            };
            let spaces = p.half_spaces();
            for x in BoxPoints::new(lo, hi) {
                visited += 1;
                if spaces.contains_lattice(&x) {
                    out.push(to_exponent(&x));
                }
            }
        }
        Region::Scaled { system, bounds } => {
            let bounds = bounds.ok_or(Error::Unbounded)?;
            check_dim(system.dim, bounds.dim())?;
            for x in bounds.points() {
                visited += 1;
                if system.contains_lattice(&x) {
                    out.push(to_exponent(&x));
                }
            }
        }
    }
    Ok((out, visited))
}

pub(crate) fn to_exponent(x: &[i64]) -> ExponentVector {
    ExponentVector::new(x.iter().map(|&v| v as u64).collect())
}

pub(crate) fn to_rational_point(x: &[i64]) -> Vec<ExactRational> {
    x.iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, ratio};

    fn ideal(dim: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens).unwrap()
    }

    fn q(v: &[(i64, i64)]) -> Vec<ExactRational> {
        v.iter().map(|&(p, d)| ratio(p, d)).collect()
    }

    fn zi(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&x| from_int(x)).collect()
    }

    fn rows(h: &HPolyhedron) -> Vec<(Vec<u64>, u64)> {
        h.rows().map(|(n, c)| (n.to_vec(), c)).collect()
    }

    fn fig1() -> MonomialIdeal {
        ideal(2, &[&[1, 5], &[2, 2], &[4, 1]])
    }

    fn worked() -> MonomialIdeal {
        ideal(2, &[&[9, 0], &[4, 3], &[2, 5], &[0, 8]])
    }

    fn small() -> MonomialIdeal {
        ideal(2, &[&[4, 0], &[2, 1], &[1, 3]])
    }

    #[test]
    fn newton_polytope_vertices() {
        let p = newton_polytope(&fig1()).unwrap();
        assert_eq!(p.vertices(), &[zi(&[1, 5]), zi(&[2, 2]), zi(&[4, 1])]);
        let scaled = p.scale(&ratio(4, 3)).unwrap();
        assert_eq!(
            scaled.vertices(),
            &[
                q(&[(4, 3), (20, 3)]),
                q(&[(8, 3), (8, 3)]),
                q(&[(16, 3), (4, 3)])
            ]
        );
        let single = newton_polytope(&ideal(2, &[&[3, 0]])).unwrap();
        assert_eq!(single.vertices(), &[zi(&[3, 0])]);
        let collinear = newton_polytope(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(collinear.vertices(), &[zi(&[0, 2]), zi(&[2, 0])]);
        assert_eq!(
            newton_polytope(&MonomialIdeal::zero(2)),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn hrep_of_worked_example() {
        let h = newton_polyhedron_hrep(&worked()).unwrap();
        assert_eq!(
            rows(&h),
            vec![
                (vec![1, 0], 0),
                (vec![3, 2], 16),
                (vec![1, 1], 7),
                (vec![3, 5], 27),
                (vec![0, 1], 0)
            ]
        );
        assert_eq!(
            rows(&newton_polyhedron_hrep_dd(&worked()).unwrap()),
            rows(&h)
        );
        let f = h.facet(1).unwrap();
        assert_eq!(
            f.vertices,
            vec![ExponentVector::from([0, 8]), ExponentVector::from([2, 5])]
        );
        assert!(f.rays.is_empty());
        assert_eq!(h.facet(0).unwrap().rays, vec![1]);
        assert_eq!(h.vertices().len(), 4);
        assert_eq!(f.render(&["p".into(), "q".into()]), "3p + 2q >= 16");
    }

    #[test]
    fn hrep_small_cases() {
        let h = newton_polyhedron_hrep(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(rows(&h), vec![(vec![1, 0], 1), (vec![0, 1], 1)]);
        let h = newton_polyhedron_hrep(&small()).unwrap();
        assert_eq!(
            rows(&h),
            vec![
                (vec![1, 0], 1),
                (vec![2, 1], 5),
                (vec![1, 2], 4),
                (vec![0, 1], 0)
            ]
        );
        assert_eq!(
            rows(&newton_polyhedron_hrep_dd(&small()).unwrap()),
            rows(&h)
        );
        // Every generator satisfies every row; vertices are tight on their facets.
        for f in h.facets() {
            for g in small().generators() {
                assert!(f.evaluate(&g.to_i64()) >= f.offset as i128);
            }
            for v in &f.vertices {
                assert_eq!(f.evaluate(&v.to_i64()), f.offset as i128);
            }
        }
        let unit = newton_polyhedron_hrep(&MonomialIdeal::unit(3)).unwrap();
        assert_eq!(unit.facets().len(), 3);
        assert!(unit.facets().iter().all(|f| f.offset == 0));
        let line = newton_polyhedron_hrep(&ideal(1, &[&[5]])).unwrap();
        assert_eq!(rows(&line), vec![(vec![1], 5)]);
    }

    #[test]
    fn scaling_offsets() {
        let h = newton_polyhedron_hrep(&worked()).unwrap();
        let s = h.scale(&ratio(1, 2)).unwrap();
        assert_eq!(
            s.offsets(),
            &[
                from_int(0),
                from_int(8),
                ratio(7, 2),
                ratio(27, 2),
                from_int(0)
            ]
        );
        let s0 = h.scale(&from_int(0)).unwrap();
        assert!(s0.offsets().iter().all(|c| c.is_zero()));
        assert!(s0.contains_lattice(&[0, 0]));
        assert!(h.scale(&from_int(-1)).is_err());
        let f = newton_polyhedron_hrep(&fig1()).unwrap();
        let s = f.scale(&ratio(4, 3)).unwrap();
        assert!(s.contains(&q(&[(4, 3), (20, 3)])));
        assert!(s.contains(&q(&[(8, 3), (8, 3)])));
        assert!(!s.contains(&q(&[(8, 3), (7, 3)])));
    }

    #[test]
    fn membership_routes_agree_on_examples() {
        let i = small();
        let h = newton_polyhedron_hrep(&i).unwrap();
        let eps = ratio(1, 1000);
        let cases = [
            (zi(&[2, 0]), ratio(1, 2), true),
            (zi(&[2, 0]), ratio(1, 2) + &eps, false),
            (zi(&[1, 1]), ratio(3, 5), true),
            (zi(&[1, 1]), ratio(3, 5) + ratio(1, 100), false),
        ];
        for (a, r, want) in cases {
            assert_eq!(contains_hrep(&h, &r, &a).unwrap(), want, "{a:?} at {r}");
            assert_eq!(contains_lp(&i, &r, &a).unwrap(), want, "{a:?} at {r}");
        }
        for g in i.generators() {
            let a: Vec<_> = g.coords().iter().map(|&c| from_u64(c)).collect();
            assert!(contains_hrep(&h, &from_int(1), &a).unwrap());
            assert!(contains_lp(&i, &from_int(1), &a).unwrap());
            let r = ratio(3, 2);
            let ra: Vec<_> = a.iter().map(|x| x * &r).collect();
            assert!(contains_lp(&i, &r, &ra).unwrap());
        }
        assert!(!contains_lp(&i, &ratio(1, 7), &zi(&[0, 0])).unwrap());
        assert!(contains_hrep(&h, &from_int(1), &zi(&[1])).is_err());
    }

    #[test]
    fn minkowski_with_simplex() {
        let p = newton_polytope(&fig1())
            .unwrap()
            .scale(&ratio(4, 3))
            .unwrap();
        let c = minkowski_sum_with_simplex(&p, &ratio(5, 3)).unwrap();
        let mut want = vec![
            q(&[(4, 3), (20, 3)]),
            q(&[(8, 3), (8, 3)]),
            q(&[(16, 3), (4, 3)]),
            q(&[(7, 1), (4, 3)]),
            q(&[(3, 1), (20, 3)]),
            q(&[(4, 3), (25, 3)]),
        ];
        want.sort();
        assert_eq!(c.vertices(), want.as_slice());
        assert_eq!(minkowski_sum_with_simplex(&p, &from_int(0)).unwrap(), p);
        let origin = VPolytope::hull(2, vec![zi(&[0, 0])]).unwrap();
        let s = minkowski_sum_with_simplex(&origin, &from_int(1)).unwrap();
        assert_eq!(s.vertices(), &[zi(&[0, 0]), zi(&[0, 1]), zi(&[1, 0])]);
    }

    #[test]
    fn lattice_point_listing() {
        let p = newton_polytope(&fig1())
            .unwrap()
            .scale(&ratio(4, 3))
            .unwrap();
        let c = minkowski_sum_with_simplex(&p, &ratio(5, 3)).unwrap();
        let pts = lattice_points(Region::Polytope(&c)).unwrap();
        // (5,4) sits on the edge 4x + 3y = 32 between (7,4/3) and (3,20/3).
        let want: Vec<ExponentVector> = [
            [2, 5],
            [2, 6],
            [2, 7],
            [3, 3],
            [3, 4],
            [3, 5],
            [3, 6],
            [4, 2],
            [4, 3],
            [4, 4],
            [4, 5],
            [5, 2],
            [5, 3],
            [5, 4],
            [6, 2],
        ]
        .iter()
        .map(|&p| ExponentVector::from(p))
        .collect();
        assert_eq!(pts, want);

        let origin = VPolytope::hull(2, vec![zi(&[0, 0])]).unwrap();
        let simplex = minkowski_sum_with_simplex(&origin, &from_int(1)).unwrap();
        assert_eq!(lattice_points(Region::Polytope(&simplex)).unwrap().len(), 3);
        let tri = VPolytope::hull(2, vec![zi(&[0, 0]), zi(&[2, 0]), zi(&[0, 2])]).unwrap();
        assert_eq!(lattice_points(Region::Polytope(&tri)).unwrap().len(), 6);

        let h = newton_polyhedron_hrep(&fig1()).unwrap();
        let s = h.scale(&ratio(4, 3)).unwrap();
        assert_eq!(
            lattice_points(Region::Scaled {
                system: &s,
                bounds: None
            }),
            Err(Error::Unbounded)
        );
        let bx = hyperrectangle(&fig1(), &ratio(4, 3)).unwrap();
        let inside = lattice_points(Region::Scaled {
            system: &s,
            bounds: Some(&bx),
        })
        .unwrap();
        assert_eq!(inside.len(), 26);
    }

    #[test]
    fn hyperrectangles() {
        let v = scaled_vertices(&fig1(), &ratio(4, 3)).unwrap();
        assert_eq!(
            v,
            vec![
                ExponentVector::from([2, 7]),
                ExponentVector::from([3, 3]),
                ExponentVector::from([6, 2])
            ]
        );
        let b = hyperrectangle(&fig1(), &ratio(4, 3)).unwrap();
        assert_eq!((b.lower.clone(), b.upper.clone()), (vec![2, 2], vec![6, 7]));
        assert_eq!(b.len(), 30);
        let b = hyperrectangle(&ideal(2, &[&[1, 1]]), &from_int(1)).unwrap();
        assert_eq!((b.lower, b.upper), (vec![1, 1], vec![1, 1]));
        let v = scaled_vertices(&worked(), &ratio(1, 9)).unwrap();
        assert_eq!(
            v,
            vec![
                ExponentVector::from([0, 1]),
                ExponentVector::from([1, 1]),
                ExponentVector::from([1, 1]),
                ExponentVector::from([1, 0])
            ]
        );
        let b = hyperrectangle(&worked(), &ratio(1, 9)).unwrap();
        assert_eq!((b.lower, b.upper), (vec![0, 0], vec![1, 1]));
    }

    #[test]
    fn box_iteration_is_lexicographic() {
        let pts: Vec<Vec<i64>> = BoxPoints::new(vec![0, 1], vec![1, 2]).collect();
        assert_eq!(pts, vec![vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]);
        assert_eq!(BoxPoints::new(vec![2], vec![1]).count(), 0);
    }
}
