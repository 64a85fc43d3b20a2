//! Ehrhart counts, delta-vectors, and the Fano / Gorenstein / normality
//! checks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::geometry::{GeometryError, LatticePoint};
use crate::polytopes::LatticePolytope;

/// Lattice-point counts `i(P, 1), ..., i(P, t_max)`; `i(P, 0) = 1` is
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartCounts {
    dim: usize,
    counts: Vec<BigInt>,
}

impl EhrhartCounts {
    fn new(dim: usize, counts: Vec<BigInt>) -> EhrhartCounts {
        assert!(!counts.is_empty());
        assert!(counts[0] > BigInt::one(), "full-dimensional counts start above 1");
        for w in counts.windows(2) {
            assert!(w[0] < w[1], "lattice-point counts must strictly increase");
        }
        let out = EhrhartCounts { dim, counts };
        if out.counts.len() > dim {
            out.assert_degree();
        }
        out
    }

    /// When counts beyond `t = d` are available, the `(d+1)`-st finite
    /// difference of `1, i(1), i(2), ...` must vanish everywhere it can be
    /// formed: `i` is a polynomial of degree `d`.
    fn assert_degree(&self) {
        let seq: Vec<BigInt> = core::iter::once(BigInt::one())
            .chain(self.counts.iter().cloned())
            .collect();
        let mut diff = seq;
        for _ in 0..=self.dim {
            diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        assert!(
            diff.iter().all(Zero::is_zero),
            "counts do not fit a degree-{} polynomial",
            self.dim
        );
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `i(P, t)` for `t >= 0`.
    pub fn count(&self, t: usize) -> BigInt {
        if t == 0 {
            BigInt::one()
        } else {
            self.counts[t - 1].clone()
        }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn t_max(&self) -> usize {
        self.counts.len()
    }
}

/// Count lattice points of the dilations `t = 1..=t_max` by box scan.
pub fn ehrhart_counts(
    poly: &LatticePolytope,
    t_max: usize,
) -> Result<EhrhartCounts, GeometryError> {
    assert!(t_max >= 1);
    let mut counts = Vec::with_capacity(t_max);
    for t in 1..=t_max {
        counts.push(BigInt::from(poly.lattice_points(t as u64)?.len()));
    }
    Ok(EhrhartCounts::new(poly.dim(), counts))
}

/// The coefficient vector `(delta_0, ..., delta_d)` of the numerator of the
/// Ehrhart series over `(1 - lambda)^(d+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector(Vec<BigInt>);

impl DeltaVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Entries as `i64`, for reporting. Panics only on values far beyond the
    /// workbench's scale.
    pub fn to_i64(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|x| i64::try_from(x).expect("delta entry exceeds i64"))
            .collect()
    }
}

/// Invert the generating-function identity:
/// `delta_i = sum_j (-1)^j C(d+1, j) i(P, i - j)`.
pub fn delta_vector(counts: &EhrhartCounts) -> DeltaVector {
    let d = counts.dim();
    assert!(counts.t_max() >= d, "need counts up to t = d");
    let mut entries = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            let term = binomial(BigInt::from(d + 1), BigInt::from(j)) * counts.count(i - j);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        entries.push(acc);
    }
    assert!(entries[0].is_one(), "delta_0 must be 1");
    DeltaVector(entries)
}

/// Is the origin the unique interior lattice point?
pub fn is_fano(poly: &LatticePolytope) -> Result<bool, GeometryError> {
    let interior = poly.hrep()?.interior_lattice_points(poly.coord_bound());
    Ok(interior == alloc::vec![LatticePoint::origin(poly.dim())])
}

/// Fano with integral dual. Cross-checked against delta-vector symmetry,
/// which characterizes Gorenstein Fano polytopes independently.
pub fn is_gorenstein_fano(poly: &LatticePolytope) -> Result<bool, GeometryError> {
    if !is_fano(poly)? {
        return Ok(false);
    }
    let dual_integral = poly.hrep()?.dual_is_integral()?;
    let symmetric = delta_vector(&ehrhart_counts(poly, poly.dim())?).is_symmetric();
    assert_eq!(
        dual_integral, symmetric,
        "dual integrality and delta-symmetry disagree on a Fano polytope"
    );
    Ok(dual_integral)
}

/// Check the integer decomposition property up to `n_max`: every lattice
/// point of `N * poly` must split into a sum of `N` lattice points of `poly`,
/// for `N = 2..=n_max`. Verified by iterated sumsets.
pub fn is_normal_up_to(poly: &LatticePolytope, n_max: usize) -> Result<bool, GeometryError> {
    let base: Vec<Vec<i64>> = poly
        .lattice_points(1)?
        .into_iter()
        .map(|p| p.coords().to_vec())
        .collect();
    let mut sums: BTreeSet<Vec<i64>> = base.iter().cloned().collect();
    for n in 2..=n_max {
        let mut next = BTreeSet::new();
        for s in &sums {
            for b in &base {
                next.insert(s.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i64>>());
            }
        }
        sums = next;
        for target in poly.lattice_points(n as u64)? {
            if !sums.contains(target.coords()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
