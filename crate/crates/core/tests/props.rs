//! Property tests: ring axioms for the exact polynomial arithmetic,
//! series inversion, and bijection round trips beyond the exhaustive
//! range.

use proptest::prelude::*;

use permtab::bijections::{phi, phi_inverse, psi, psi_inverse};
use permtab::biword::Biword;
use permtab::perm::Permutation;
use permtab::polyalg::{Expo, MPoly, TruncatedSeries};
use permtab::statistics::{alignments_crossings, count_vincular, rembr_vector};

fn arb_poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(
        (0u32..3, -3i64..4, 0u32..3, 0u32..3, -5i64..6),
        0..6,
    )
    .prop_map(|terms| {
        let mut poly = MPoly::zero();
        for (p, q, r, y, c) in terms {
            poly.add_term(Expo { p, q, r, y }, c.into());
        }
        poly
    })
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|word| Permutation::from_word(word).unwrap())
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), MPoly::zero());
        prop_assert_eq!(a.mul(&MPoly::one()), a.clone());
    }

    #[test]
    fn series_reciprocal_inverts(coeffs in proptest::collection::vec(arb_poly(), 1..6), sign in proptest::bool::ANY) {
        let order = coeffs.len();
        let mut s = TruncatedSeries::zero(order);
        s.set_coeff(0, MPoly::constant(if sign { 1 } else { -1 }));
        for (i, c) in coeffs.into_iter().enumerate() {
            if i > 0 {
                s.set_coeff(i, c);
            }
        }
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(s.mul(&r), TruncatedSeries::one(order));
    }

    #[test]
    fn series_multiplication_matches_convolution(
        a in proptest::collection::vec(arb_poly(), 1..4),
        b in proptest::collection::vec(arb_poly(), 1..4),
    ) {
        // With the order beyond all degrees, series multiplication is
        // plain polynomial convolution in x.
        let order = a.len() + b.len();
        let mut sa = TruncatedSeries::zero(order);
        let mut sb = TruncatedSeries::zero(order);
        for (i, c) in a.iter().enumerate() {
            sa.set_coeff(i, c.clone());
        }
        for (i, c) in b.iter().enumerate() {
            sb.set_coeff(i, c.clone());
        }
        let prod = sa.mul(&sb);
        for k in 0..=order {
            let mut direct = MPoly::zero();
            for i in 0..a.len() {
                if k >= i && k - i < b.len() {
                    direct = direct.add(&a[i].mul(&b[k - i]));
                }
            }
            prop_assert_eq!(prod.coeff(k), &direct);
        }
    }

    #[test]
    fn phi_round_trip_beyond_exhaustive(p in arb_perm(12)) {
        let t = phi_inverse(&p);
        prop_assert!(t.is_valid());
        prop_assert_eq!(t.k(), p.wex());
        prop_assert_eq!(phi(&t).unwrap(), p);
    }

    #[test]
    fn psi_round_trip_beyond_exhaustive(p in arb_perm(12)) {
        let tau = psi(&p);
        prop_assert_eq!(psi_inverse(&tau), p);
    }

    #[test]
    fn statistic_identities_beyond_exhaustive(p in arb_perm(12)) {
        let n = p.n() as i64;
        let ac = alignments_crossings(&p);
        let k = p.wex() as i64;
        let total = (ac.total_a_ee() + ac.total_a_nn() + ac.total_a_en()
            + ac.total_a_ne() + ac.total_c_ee() + ac.total_c_nn()) as i64;
        prop_assert_eq!(total, (k - 1) * (n - k));
        let rembr_sum: usize = rembr_vector(&p).iter().sum();
        prop_assert_eq!(rembr_sum, count_vincular(&p, &"2-31".parse().unwrap()));
    }

    #[test]
    fn biword_reduction_properties(
        tops in proptest::collection::btree_set(0usize..40, 0..10),
        bottoms in proptest::collection::btree_set(0usize..40, 0..10),
    ) {
        let len = tops.len().min(bottoms.len());
        let tops: Vec<usize> = tops.into_iter().take(len).collect();
        let mut bottoms: Vec<usize> = bottoms.into_iter().take(len).collect();
        bottoms.reverse();
        let b = Biword::new(tops, bottoms).unwrap();
        let reduced = Biword::from_permutation(&b.reduce());
        prop_assert_eq!(reduced.reduce(), b.reduce());
        prop_assert_eq!(reduced.relative_fixed_points(), b.relative_fixed_points());
    }
}
