//! The point configurations under study: order polytopes, chain polytopes,
//! and the Gamma polytopes glued from one factor and the negation of another.
//!
//! A polytope is stored by its generating points; the exact H-representation
//! is computed once on first use and cached. Dilations reuse the cached
//! facets with scaled right-hand sides, so each polytope is hulled once.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::geometry::{hull_hrep, GeometryError, HRep, LatticePoint};
use crate::poset::{Poset, Subset};

/// Indicator vector of a subset: `rho(S) = sum of e_i over i in S`.
pub fn rho(dim: usize, s: Subset) -> LatticePoint {
    let mut coords = alloc::vec![0i64; dim];
    for i in s.indices() {
        assert!(i <= dim);
        coords[i - 1] = 1;
    }
    LatticePoint::new(coords)
}

/// Which convex hull of `A u (-B)` to build.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum GammaKind {
    /// `Gamma(O(P), -C(Q))`, the main object.
    OrderMinusChain,
    /// `Gamma(O(P), -O(Q))`.
    OrderMinusOrder,
    /// `Gamma(C(P), -C(Q))`.
    ChainMinusChain,
    /// Just `O(P)`.
    OrderAlone,
    /// Just `C(P)`.
    ChainAlone,
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GammaKind::OrderMinusChain => "O(P) u -C(Q)",
            GammaKind::OrderMinusOrder => "O(P) u -O(Q)",
            GammaKind::ChainMinusChain => "C(P) u -C(Q)",
            GammaKind::OrderAlone => "O(P)",
            GammaKind::ChainAlone => "C(P)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeMismatch {
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for SizeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "posets must have equal size, got {} and {}", self.p, self.q)
    }
}

/// A full-dimensional lattice polytope given by generating points.
pub struct LatticePolytope {
    dim: usize,
    generators: Vec<LatticePoint>,
    hrep: OnceBox<HRep>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        let copy = LatticePolytope {
            dim: self.dim,
            generators: self.generators.clone(),
            hrep: OnceBox::new(),
        };
        if let Some(h) = self.hrep.get() {
            let _ = copy.hrep.set(Box::new(h.clone()));
        }
        copy
    }
}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LatticePolytope(dim={}, generators={:?})",
            self.dim, self.generators
        )
    }
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Deduplicates and sorts the generating points.
    pub fn from_points(points: Vec<LatticePoint>) -> LatticePolytope {
        assert!(!points.is_empty());
        let dim = points[0].dim();
        assert!(points.iter().all(|p| p.dim() == dim));
        let mut generators = points;
        generators.sort();
        generators.dedup();
        LatticePolytope {
            dim,
            generators,
            hrep: OnceBox::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    /// Largest absolute coordinate over the generators; the polytope fits in
    /// `[-m, m]^d`.
    pub fn coord_bound(&self) -> i64 {
        self.generators
            .iter()
            .map(LatticePoint::max_abs_coord)
            .max()
            .unwrap_or(0)
    }

    /// The exact facet list, computed on first use.
    pub fn hrep(&self) -> Result<&HRep, GeometryError> {
        if let Some(h) = self.hrep.get() {
            return Ok(h);
        }
        let computed = hull_hrep(&self.generators)?;
        let _ = self.hrep.set(Box::new(computed));
        Ok(self.hrep.get().expect("cache was just filled"))
    }

    /// Integer points of the `t`-th dilation, sorted lexicographically.
    pub fn lattice_points(&self, t: u64) -> Result<Vec<LatticePoint>, GeometryError> {
        assert!(t >= 1);
        let hrep = self.hrep()?;
        let bound = self.coord_bound() * t as i64;
        Ok(hrep.dilate(t).lattice_points_in_box(bound))
    }
}

/// `conv{rho(I) : I ideal of P}`.
pub fn order_polytope(p: &Poset) -> LatticePolytope {
    let d = p.size();
    LatticePolytope::from_points(
        p.ideals()
            .into_iter()
            .map(|i| rho(d, i.as_subset()))
            .collect(),
    )
}

/// `conv{rho(A) : A antichain of Q}`.
pub fn chain_polytope(q: &Poset) -> LatticePolytope {
    let d = q.size();
    LatticePolytope::from_points(
        q.antichains()
            .into_iter()
            .map(|a| rho(d, a.as_subset()))
            .collect(),
    )
}

/// The convex hull of the first factor's points together with the negated
/// second factor's points. Both posets must have the same size.
pub fn gamma(kind: GammaKind, p: &Poset, q: &Poset) -> Result<LatticePolytope, SizeMismatch> {
    if p.size() != q.size() {
        return Err(SizeMismatch {
            p: p.size(),
            q: q.size(),
        });
    }
    let (first, second) = match kind {
        GammaKind::OrderMinusChain => (Some(order_polytope(p)), Some(chain_polytope(q))),
        GammaKind::OrderMinusOrder => (Some(order_polytope(p)), Some(order_polytope(q))),
        GammaKind::ChainMinusChain => (Some(chain_polytope(p)), Some(chain_polytope(q))),
        GammaKind::OrderAlone => (Some(order_polytope(p)), None),
        GammaKind::ChainAlone => (Some(chain_polytope(p)), None),
    };
    let mut points: Vec<LatticePoint> = first.expect("first factor always present")
        .generators()
        .to_vec();
    if let Some(neg) = second {
        points.extend(neg.generators().iter().map(LatticePoint::negated));
    }
    Ok(LatticePolytope::from_points(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn point(coords: &[i64]) -> LatticePoint {
        LatticePoint::new(coords.to_vec())
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(3, Subset::EMPTY), point(&[0, 0, 0]));
        assert_eq!(rho(3, Subset::from_indices(&[1, 2, 3])), point(&[1, 1, 1]));
        assert_eq!(rho(4, Subset::from_indices(&[1, 3])), point(&[1, 0, 1, 0]));
    }

    #[test]
    fn order_polytope_generators() {
        let cube = order_polytope(&Poset::antichain(3));
        assert_eq!(cube.generators().len(), 8);

        let two_chain = order_polytope(&Poset::chain(2));
        assert_eq!(
            two_chain.generators(),
            &[point(&[0, 0]), point(&[1, 0]), point(&[1, 1])]
        );

        let p = Poset::from_covers(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(order_polytope(&p).generators().len(), 9);
    }

    #[test]
    fn chain_polytope_generators() {
        let simplex = chain_polytope(&Poset::chain(3));
        assert_eq!(
            simplex.generators(),
            &[
                point(&[0, 0, 0]),
                point(&[0, 0, 1]),
                point(&[0, 1, 0]),
                point(&[1, 0, 0]),
            ]
        );
        assert_eq!(chain_polytope(&Poset::antichain(3)).generators().len(), 8);

        let q = Poset::from_covers(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(chain_polytope(&q).generators().len(), 9);
    }

    #[test]
    fn gamma_generators() {
        let p1 = Poset::chain(1);
        let g = gamma(GammaKind::OrderMinusChain, &p1, &p1).unwrap();
        assert_eq!(
            g.generators(),
            &[point(&[-1]), point(&[0]), point(&[1])]
        );

        let c2 = Poset::chain(2);
        let g = gamma(GammaKind::OrderMinusChain, &c2, &c2).unwrap();
        assert_eq!(
            g.generators(),
            &[
                point(&[-1, 0]),
                point(&[0, -1]),
                point(&[0, 0]),
                point(&[1, 0]),
                point(&[1, 1]),
            ]
        );

        let p = Poset::from_covers(4, &[(1, 3), (2, 4)]).unwrap();
        let g = gamma(GammaKind::OrderMinusChain, &p, &p).unwrap();
        assert_eq!(g.generators().len(), 17);

        assert!(gamma(GammaKind::OrderMinusChain, &p, &c2).is_err());
    }

    #[test]
    fn gamma_origin_interior_and_amounts() {
        let p = Poset::from_covers(4, &[(1, 3), (2, 4)]).unwrap();
        let g = gamma(GammaKind::OrderMinusChain, &p, &p).unwrap();
        assert!(g.hrep().unwrap().strictly_contains_lattice(&LatticePoint::origin(4)));
    }

    #[test]
    fn lattice_point_counts() {
        let p1 = Poset::chain(1);
        let g = gamma(GammaKind::OrderMinusChain, &p1, &p1).unwrap();
        assert_eq!(g.lattice_points(1).unwrap().len(), 3);
        assert_eq!(g.lattice_points(2).unwrap().len(), 5);

        let p = Poset::from_covers(4, &[(1, 3), (2, 4)]).unwrap();
        let g = gamma(GammaKind::OrderMinusChain, &p, &p).unwrap();
        let pts = g.lattice_points(1).unwrap();
        assert_eq!(pts.len(), 17);
        assert_eq!(pts, g.generators());
    }

    #[test]
    fn gamma_relabel_invariance() {
        let p = Poset::from_covers(4, &[(1, 3), (2, 4)]).unwrap();
        let q = Poset::from_covers(4, &[(1, 2), (3, 4)]).unwrap();
        let perm = [3usize, 1, 4, 2];
        let g = gamma(GammaKind::OrderMinusChain, &p, &q).unwrap();
        let g2 = gamma(GammaKind::OrderMinusChain, &p.relabel(&perm), &q.relabel(&perm)).unwrap();
        let mut permuted: Vec<LatticePoint> = g
            .generators()
            .iter()
            .map(|pt| {
                let mut coords = vec![0i64; 4];
                for (i, &c) in pt.coords().iter().enumerate() {
                    coords[perm[i] - 1] = c;
                }
                LatticePoint::new(coords)
            })
            .collect();
        permuted.sort();
        assert_eq!(permuted, g2.generators());
    }
}
