//! Shared test oracles, independent of the implementation paths they check.

#![allow(dead_code)]
// index-based pivoting reads clearer than iterator chains here
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use ocpoly::{LatticePoint, Poset, Rational};
use rand::Rng;

/// Exact LP-feasibility membership test: is `target` a convex combination of
/// `points`? Solves `lambda >= 0, sum lambda = 1, V lambda = target` by a
/// phase-1 simplex with Bland's rule over rationals.
pub fn lp_membership(points: &[LatticePoint], target: &[Rational]) -> bool {
    let d = target.len();
    let n = points.len();
    let rows = d + 1;
    let cols = n + rows + 1; // lambdas, artificials, rhs

    let mut tableau: Vec<Vec<Rational>> = vec![vec![Rational::zero(); cols]; rows];
    for r in 0..d {
        for (c, p) in points.iter().enumerate() {
            tableau[r][c] = Rational::from_integer(BigInt::from(p.coords()[r]));
        }
        tableau[r][cols - 1] = target[r].clone();
    }
    for c in 0..n {
        tableau[d][c] = Rational::one();
    }
    tableau[d][cols - 1] = Rational::one();

    // make every right-hand side nonnegative, then add artificial basics
    for r in 0..rows {
        if tableau[r][cols - 1].is_negative() {
            for c in 0..cols {
                tableau[r][c] = -tableau[r][c].clone();
            }
        }
        tableau[r][n + r] = Rational::one();
    }
    let mut basis: Vec<usize> = (n..n + rows).collect();

    loop {
        // reduced cost of column c for the objective "sum of artificials"
        let reduced = |tab: &Vec<Vec<Rational>>, basis: &Vec<usize>, c: usize| -> Rational {
            let mut rc = if c >= n { Rational::one() } else { Rational::zero() };
            for r in 0..rows {
                if basis[r] >= n {
                    rc -= tab[r][c].clone();
                }
            }
            rc
        };
        let entering = (0..n + rows)
            .find(|&c| !basis.contains(&c) && reduced(&tableau, &basis, c).is_negative());
        let Some(entering) = entering else {
            // optimal: feasible iff no artificial carries value
            return basis
                .iter()
                .enumerate()
                .all(|(r, &b)| b < n || tableau[r][cols - 1].is_zero());
        };
        // ratio test, Bland tie-break on the leaving basis variable
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if tableau[r][entering].is_positive() {
                let ratio = tableau[r][cols - 1].clone() / tableau[r][entering].clone();
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // unbounded phase-1 objective cannot happen; treat as infeasible
            return false;
        };
        let pivot = tableau[pivot_row][entering].clone();
        for c in 0..cols {
            tableau[pivot_row][c] = tableau[pivot_row][c].clone() / pivot.clone();
        }
        for r in 0..rows {
            if r != pivot_row && !tableau[r][entering].is_zero() {
                let factor = tableau[r][entering].clone();
                for c in 0..cols {
                    let delta = factor.clone() * tableau[pivot_row][c].clone();
                    tableau[r][c] = tableau[r][c].clone() - delta;
                }
            }
        }
        basis[pivot_row] = entering;
    }
}

pub fn lp_membership_lattice(points: &[LatticePoint], target: &LatticePoint) -> bool {
    lp_membership(points, &target.to_rational())
}

/// Rank of the set of difference vectors `p_i - p_0`; a set of `k+1`
/// affinely independent points has affine rank `k`.
pub fn affine_rank(points: &[LatticePoint]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let d = points[0].dim();
    let base = points[0].coords();
    let mut rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base)
                .map(|(a, b)| Rational::from_integer(BigInt::from(a - b)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..d {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() / head.clone();
                for c in col..d {
                    let delta = factor.clone() * rows[rank][c].clone();
                    rows[r][c] = rows[r][c].clone() - delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A random labeled poset: covers drawn on index-increasing pairs (always
/// acyclic), then relabeled by a random permutation.
pub fn random_poset(rng: &mut impl Rng, d: usize) -> Poset {
    let mut covers = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            if rng.gen_bool(0.5) {
                covers.push((i, j));
            }
        }
    }
    let base = Poset::from_covers(d, &covers).expect("index-increasing covers are acyclic");
    let mut perm: Vec<usize> = (1..=d).collect();
    for i in (1..d).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    base.relabel(&perm)
}
