//! Randomized properties complementing the exhaustive small-d sweeps.

use core::cmp::Ordering;

use ocpoly::*;
use proptest::prelude::*;

fn poset_pair(max_d: usize) -> impl Strategy<Value = (Poset, Poset, Vec<usize>)> {
    (1..=max_d).prop_flat_map(|d| {
        let npairs = d * (d - 1) / 2;
        (
            proptest::collection::vec(any::<bool>(), npairs),
            proptest::collection::vec(any::<bool>(), npairs),
            proptest::collection::vec(0..d, d),
        )
            .prop_map(move |(bits_p, bits_q, swaps)| {
                let build = |bits: &[bool]| {
                    let mut covers = Vec::new();
                    let mut k = 0;
                    for i in 1..=d {
                        for j in i + 1..=d {
                            if bits[k] {
                                covers.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    Poset::from_covers(d, &covers).expect("increasing covers are acyclic")
                };
                let mut perm: Vec<usize> = (1..=d).collect();
                for (i, &s) in swaps.iter().enumerate() {
                    perm.swap(i, s);
                }
                (build(&bits_p), build(&bits_q), perm)
            })
    })
}

fn monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..4, nvars).prop_map(move |exps| {
        let mut m = Monomial::one(nvars);
        for (rank, e) in exps.into_iter().enumerate() {
            m = m.mul(&Monomial::power(nvars, rank, e));
        }
        m
    })
}

proptest! {
    #[test]
    fn down_closure_yields_ideals((p, _, _) in poset_pair(5), mask in 0u64..32) {
        let mask = mask & ((1 << p.size()) - 1);
        let closed = p.down_closure(Subset::from_mask(mask));
        prop_assert!(p.is_ideal(closed.as_subset()));
        prop_assert_eq!(closed.mask() & mask, mask);
    }

    #[test]
    fn star_product_stays_inside_intersection((p, q, _) in poset_pair(4)) {
        let _ = p;
        let ideals = q.ideals();
        for &a in &ideals {
            for &b in &ideals {
                let star = q.star_product(a, b);
                prop_assert!(q.is_ideal(star.as_subset()));
                prop_assert_eq!(star.mask() & !a.intersection(b).mask(), 0);
            }
        }
    }

    #[test]
    fn gamma_commutes_with_relabeling((p, q, perm) in poset_pair(4)) {
        let d = p.size();
        let direct = gamma(GammaKind::OrderMinusChain, &p, &q).unwrap();
        let relabeled = gamma(
            GammaKind::OrderMinusChain,
            &p.relabel(&perm),
            &q.relabel(&perm),
        )
        .unwrap();
        let mut permuted: Vec<LatticePoint> = direct
            .generators()
            .iter()
            .map(|pt| {
                let mut coords = vec![0i64; d];
                for (i, &c) in pt.coords().iter().enumerate() {
                    coords[perm[i] - 1] = c;
                }
                LatticePoint::new(coords)
            })
            .collect();
        permuted.sort();
        prop_assert_eq!(permuted.as_slice(), relabeled.generators());
    }

    #[test]
    fn generators_balance_and_lead((p, q, _) in poset_pair(4)) {
        let sys = build_system(&p, &q, TieBreak::MaskDescending).unwrap();
        prop_assert!(sys.kernel_membership_ok());
        prop_assert!(sys.leading_terms_valid());
        let profile = sys.initial_ideal_profile();
        prop_assert!(profile.quadratic && profile.squarefree && profile.z_free);
    }

    #[test]
    fn revlex_is_a_monomial_order(a in monomial(5), b in monomial(5), c in monomial(5)) {
        prop_assert_eq!(a.cmp_revlex(&b), b.cmp_revlex(&a).reverse());
        if a.cmp_revlex(&b) != Ordering::Greater && b.cmp_revlex(&c) != Ordering::Greater {
            prop_assert_ne!(a.cmp_revlex(&c), Ordering::Greater);
        }
        // compatible with multiplication, and 1 is minimal
        prop_assert_eq!(a.mul(&c).cmp_revlex(&b.mul(&c)), a.cmp_revlex(&b));
        prop_assert_ne!(Monomial::one(5).cmp_revlex(&a), Ordering::Greater);
    }
}
