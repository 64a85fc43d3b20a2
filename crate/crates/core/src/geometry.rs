//! Exact linear algebra over arbitrary-precision integers and rationals:
//! convex-hull H-representation via the incremental double description
//! method, point membership, interior lattice points, and the dual-polytope
//! integrality test behind the Gorenstein check.
//!
//! Everything is exact. Facet normals are primitive integer vectors, so a
//! polytope with the origin in its interior is reflexive iff every facet has
//! right-hand side 1.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Int = BigInt;
pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    /// Input points do not affinely span R^d.
    NotFullDimensional,
    /// The operation needs the origin strictly inside the polytope.
    OriginNotInterior,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::NotFullDimensional => {
                write!(f, "points do not affinely span the ambient space")
            }
            GeometryError::OriginNotInterior => {
                write!(f, "origin is not strictly interior")
            }
        }
    }
}

/// A point of `Z^d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> LatticePoint {
        LatticePoint(coords)
    }

    pub fn origin(dim: usize) -> LatticePoint {
        LatticePoint(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn negated(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn max_abs_coord(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect()
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> LatticePoint {
        LatticePoint(coords)
    }
}

/// The halfspace `normal . x <= rhs` with a primitive integer normal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfSpace {
    normal: Vec<Int>,
    rhs: Int,
}

impl HalfSpace {
    pub fn normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn rhs(&self) -> &Int {
        &self.rhs
    }

    /// `rhs - normal . p`; nonnegative iff `p` satisfies the inequality.
    pub fn slack_lattice(&self, p: &LatticePoint) -> Int {
        let mut dot = Int::zero();
        for (a, &x) in self.normal.iter().zip(p.coords()) {
            dot += a * Int::from(x);
        }
        &self.rhs - dot
    }

    pub fn slack(&self, p: &[Rational]) -> Rational {
        let mut dot = Rational::zero();
        for (a, x) in self.normal.iter().zip(p) {
            dot += Rational::from_integer(a.clone()) * x;
        }
        Rational::from_integer(self.rhs.clone()) - dot
    }

    pub fn is_tight(&self, p: &LatticePoint) -> bool {
        self.slack_lattice(p).is_zero()
    }
}

/// Irredundant facet list of a full-dimensional polytope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HRep {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HRep {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn contains_lattice(&self, p: &LatticePoint) -> bool {
        assert_eq!(p.dim(), self.dim);
        self.halfspaces.iter().all(|h| !h.slack_lattice(p).is_negative())
    }

    pub fn strictly_contains_lattice(&self, p: &LatticePoint) -> bool {
        assert_eq!(p.dim(), self.dim);
        self.halfspaces.iter().all(|h| h.slack_lattice(p).is_positive())
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        assert_eq!(p.len(), self.dim);
        self.halfspaces.iter().all(|h| !h.slack(p).is_negative())
    }

    pub fn strictly_contains(&self, p: &[Rational]) -> bool {
        assert_eq!(p.len(), self.dim);
        self.halfspaces.iter().all(|h| h.slack(p).is_positive())
    }

    /// The dilation `t * polytope`: same normals, right-hand sides scaled.
    pub fn dilate(&self, t: u64) -> HRep {
        assert!(t >= 1);
        HRep {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| HalfSpace {
                    normal: h.normal.clone(),
                    rhs: &h.rhs * Int::from(t),
                })
                .collect(),
        }
    }

    /// Is the dual polytope integral? With primitive normals this holds iff
    /// every right-hand side equals 1. Requires the origin strictly inside.
    pub fn dual_is_integral(&self) -> Result<bool, GeometryError> {
        if self.halfspaces.iter().any(|h| !h.rhs.is_positive()) {
            return Err(GeometryError::OriginNotInterior);
        }
        Ok(self
            .halfspaces
            .iter()
            .all(|h| h.rhs == Int::from(1)))
    }

    /// All integer points strictly inside, scanned over `[-bound, bound]^d`.
    /// The caller guarantees the polytope fits in that box.
    pub fn interior_lattice_points(&self, bound: i64) -> Vec<LatticePoint> {
        self.scan_box(bound, true)
    }

    /// All integer points of the polytope, scanned over `[-bound, bound]^d`.
    pub fn lattice_points_in_box(&self, bound: i64) -> Vec<LatticePoint> {
        self.scan_box(bound, false)
    }

    fn scan_box(&self, bound: i64, strict: bool) -> Vec<LatticePoint> {
        assert!(bound >= 0);
        let mut out = Vec::new();
        // i64 fast path; any overflow falls back to exact BigInt per point.
        let small: Option<Vec<(Vec<i64>, i64)>> = self
            .halfspaces
            .iter()
            .map(|h| {
                let normal: Option<Vec<i64>> =
                    h.normal.iter().map(|a| i64::try_from(a).ok()).collect();
                Some((normal?, i64::try_from(&h.rhs).ok()?))
            })
            .collect();
        scan_grid(self.dim, bound, |coords| {
            let ok = match &small {
                Some(facets) => match contained_i128(facets, coords, strict) {
                    Some(ok) => ok,
                    None => self.contained_slow(coords, strict),
                },
                None => self.contained_slow(coords, strict),
            };
            if ok {
                out.push(LatticePoint(coords.to_vec()));
            }
        });
        out
    }

    fn contained_slow(&self, coords: &[i64], strict: bool) -> bool {
        let p = LatticePoint(coords.to_vec());
        if strict {
            self.strictly_contains_lattice(&p)
        } else {
            self.contains_lattice(&p)
        }
    }
}

fn contained_i128(facets: &[(Vec<i64>, i64)], coords: &[i64], strict: bool) -> Option<bool> {
    for (normal, rhs) in facets {
        let mut dot: i128 = 0;
        for (&a, &x) in normal.iter().zip(coords) {
            dot = dot.checked_add(a as i128 * x as i128)?;
        }
        let rhs = *rhs as i128;
        if dot > rhs || (strict && dot == rhs) {
            return Some(false);
        }
    }
    Some(true)
}

/// Visit every integer point of `[-bound, bound]^d` in lexicographic order.
pub fn scan_grid(dim: usize, bound: i64, mut visit: impl FnMut(&[i64])) {
    assert!(dim >= 1);
    let mut coords = vec![-bound; dim];
    loop {
        visit(&coords);
        let mut k = dim;
        loop {
            if k == 0 {
                return;
            }
            if coords[k - 1] < bound {
                coords[k - 1] += 1;
                for c in coords.iter_mut().skip(k) {
                    *c = -bound;
                }
                break;
            }
            k -= 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Double description

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> BitSet {
        BitSet(vec![0; bits.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<Int>,
    /// Which of the processed constraints hold with equality.
    zero: BitSet,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

fn reduce_primitive(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g > Int::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `ca * a - cb * b`, componentwise.
fn eliminate(a: &[Int], ca: &Int, b: &[Int], cb: &Int) -> Vec<Int> {
    a.iter()
        .zip(b)
        .map(|(x, y)| ca * x - cb * y)
        .collect()
}

/// Compute the irredundant facet list of `conv(points)`.
///
/// Runs the double description method on the cone dual to
/// `cone{(p, 1) : p in points}`: its extreme rays are exactly the facets of
/// the hull. Rays are kept as primitive integer vectors throughout, which is
/// the canonical exact representation of a rational direction.
pub fn hull_hrep(points: &[LatticePoint]) -> Result<HRep, GeometryError> {
    assert!(!points.is_empty(), "hull of an empty point set");
    let d = points[0].dim();
    assert!(points.iter().all(|p| p.dim() == d));

    let rows: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut row: Vec<Int> = p.coords().iter().map(|&c| Int::from(c)).collect();
            row.push(Int::from(1));
            row
        })
        .collect();
    let n = rows.len();

    let mut lineality: Vec<Vec<Int>> = (0..=d)
        .map(|i| {
            let mut e = vec![Int::zero(); d + 1];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in rows.iter().enumerate() {
        if let Some(idx) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            // The constraint cuts the lineality space: one basis vector
            // becomes an extreme ray, the rest (and all rays) are projected
            // onto the hyperplane.
            let mut pivot = lineality.swap_remove(idx);
            let mut pa = dot(a, &pivot);
            if pa.is_negative() {
                for x in pivot.iter_mut() {
                    *x = -&*x;
                }
                pa = -pa;
            }
            for l in lineality.iter_mut() {
                let la = dot(a, l);
                if !la.is_zero() {
                    *l = eliminate(l, &pa, &pivot, &la);
                    reduce_primitive(l);
                }
            }
            for r in rays.iter_mut() {
                let ra = dot(a, &r.v);
                if !ra.is_zero() {
                    r.v = eliminate(&r.v, &pa, &pivot, &ra);
                    reduce_primitive(&mut r.v);
                }
                r.zero.set(k);
            }
            let mut zero = BitSet::new(n);
            for j in 0..k {
                zero.set(j);
            }
            rays.push(Ray { v: pivot, zero });
        } else {
            let vals: Vec<Int> = rays.iter().map(|r| dot(a, &r.v)).collect();
            if vals.iter().all(|v| !v.is_negative()) {
                for (r, v) in rays.iter_mut().zip(&vals) {
                    if v.is_zero() {
                        r.zero.set(k);
                    }
                }
                continue;
            }
            let mut combined: Vec<Ray> = Vec::new();
            for (i, ri) in rays.iter().enumerate() {
                if !vals[i].is_positive() {
                    continue;
                }
                for (j, rj) in rays.iter().enumerate() {
                    if !vals[j].is_negative() {
                        continue;
                    }
                    let meet = ri.zero.intersect(&rj.zero);
                    let adjacent = rays
                        .iter()
                        .enumerate()
                        .all(|(t, rt)| t == i || t == j || !meet.is_subset(&rt.zero));
                    if !adjacent {
                        continue;
                    }
                    let mut w = eliminate(&rj.v, &vals[i], &ri.v, &vals[j]);
                    reduce_primitive(&mut w);
                    let mut zero = meet;
                    zero.set(k);
                    combined.push(Ray { v: w, zero });
                }
            }
            let mut kept: Vec<Ray> = Vec::new();
            for (r, v) in rays.into_iter().zip(&vals) {
                if v.is_positive() {
                    kept.push(r);
                } else if v.is_zero() {
                    let mut r = r;
                    r.zero.set(k);
                    kept.push(r);
                }
            }
            kept.extend(combined);
            rays = kept;
        }
    }

    if !lineality.is_empty() {
        return Err(GeometryError::NotFullDimensional);
    }

    let mut halfspaces: Vec<HalfSpace> = rays
        .into_iter()
        .map(|r| {
            let mut v = r.v;
            let rhs = v.pop().expect("ray has d+1 entries");
            let normal = v.into_iter().map(|x| -x).collect();
            HalfSpace { normal, rhs }
        })
        .collect();
    halfspaces.sort();
    Ok(HRep {
        dim: d,
        halfspaces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pts(raw: &[&[i64]]) -> Vec<LatticePoint> {
        raw.iter().map(|c| LatticePoint::new(c.to_vec())).collect()
    }

    fn facet(normal: &[i64], rhs: i64) -> HalfSpace {
        HalfSpace {
            normal: normal.iter().map(|&x| Int::from(x)).collect(),
            rhs: Int::from(rhs),
        }
    }

    #[test]
    fn interval_hull() {
        let h = hull_hrep(&pts(&[&[-1], &[0], &[1]])).unwrap();
        assert_eq!(h.halfspaces(), &[facet(&[-1], 1), facet(&[1], 1)]);
    }

    #[test]
    fn unit_square_hull() {
        let h = hull_hrep(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(
            h.halfspaces(),
            &[
                facet(&[-1, 0], 0),
                facet(&[0, -1], 0),
                facet(&[0, 1], 1),
                facet(&[1, 0], 1),
            ]
        );
    }

    #[test]
    fn gamma_of_two_chains_hull() {
        // O(2-chain) u -C(2-chain)
        let points = pts(&[&[0, 0], &[1, 0], &[1, 1], &[-1, 0], &[0, -1]]);
        let h = hull_hrep(&points).unwrap();
        assert_eq!(
            h.halfspaces(),
            &[
                facet(&[-1, -1], 1),
                facet(&[-1, 2], 1),
                facet(&[1, -1], 1),
                facet(&[1, 0], 1),
            ]
        );
        for p in &points {
            assert!(h.contains_lattice(p));
        }
        // every facet supported by at least dim tight generators
        for hs in h.halfspaces() {
            let tight = points.iter().filter(|p| hs.is_tight(p)).count();
            assert!(tight >= 2, "{hs:?} has {tight} tight points");
        }
        assert_eq!(h.dual_is_integral(), Ok(true));
    }

    #[test]
    fn hull_rejects_flat_input() {
        let err = hull_hrep(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap_err();
        assert_eq!(err, GeometryError::NotFullDimensional);
    }

    #[test]
    fn membership_examples() {
        let h = hull_hrep(&pts(&[&[0, 0], &[1, 0], &[1, 1], &[-1, 0], &[0, -1]])).unwrap();
        assert!(h.strictly_contains_lattice(&LatticePoint::origin(2)));
        let vertex = LatticePoint::new(vec![1, 1]);
        assert!(h.contains_lattice(&vertex));
        assert!(!h.strictly_contains_lattice(&vertex));
        assert!(!h.contains_lattice(&LatticePoint::new(vec![2, 0])));
        // rational query: (1/2, 1/2) lies inside
        let half = Rational::new(Int::from(1), Int::from(2));
        assert!(h.strictly_contains(&[half.clone(), half]));
    }

    #[test]
    fn dual_integrality_examples() {
        let interval = hull_hrep(&pts(&[&[-1], &[1]])).unwrap();
        assert_eq!(interval.dual_is_integral(), Ok(true));

        let square = hull_hrep(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(
            square.dual_is_integral(),
            Err(GeometryError::OriginNotInterior)
        );

        // doubled interval: facets x <= 2, -x <= 2, so the dual has
        // half-integral vertices
        let doubled = hull_hrep(&pts(&[&[-2], &[2]])).unwrap();
        assert_eq!(doubled.dual_is_integral(), Ok(false));
        let tri = hull_hrep(&pts(&[&[2, 0], &[0, 2], &[-1, -1]])).unwrap();
        assert_eq!(tri.dual_is_integral(), Ok(false));
    }

    #[test]
    fn interior_point_examples() {
        let gamma = hull_hrep(&pts(&[&[0, 0], &[1, 0], &[1, 1], &[-1, 0], &[0, -1]])).unwrap();
        assert_eq!(
            gamma.interior_lattice_points(1),
            vec![LatticePoint::origin(2)]
        );

        let square = hull_hrep(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(square.interior_lattice_points(1).is_empty());

        let interval = hull_hrep(&pts(&[&[-1], &[1]])).unwrap();
        let doubled = interval.dilate(2);
        assert_eq!(
            doubled.interior_lattice_points(2),
            pts(&[&[-1], &[0], &[1]])
        );
    }

    #[test]
    fn box_scan_matches_slow_path() {
        let h = hull_hrep(&pts(&[&[0, 0], &[1, 0], &[1, 1], &[-1, 0], &[0, -1]])).unwrap();
        let fast = h.lattice_points_in_box(2);
        let mut slow = Vec::new();
        scan_grid(2, 2, |c| {
            if h.contained_slow(c, false) {
                slow.push(LatticePoint::new(c.to_vec()));
            }
        });
        assert_eq!(fast, slow);
        assert_eq!(fast.len(), 5);
    }

    #[test]
    fn duplicated_and_interior_input_points_are_harmless() {
        let h = hull_hrep(&pts(&[&[0, 0], &[0, 0], &[1, 0], &[0, 1], &[1, 1], &[1, 1]])).unwrap();
        assert_eq!(h.halfspaces().len(), 4);
        let with_inner = hull_hrep(&pts(&[&[-2, 0], &[2, 0], &[0, 2], &[0, -2], &[0, 0], &[1, 0]]))
            .unwrap();
        assert_eq!(with_inner.halfspaces().len(), 4);
    }
}
