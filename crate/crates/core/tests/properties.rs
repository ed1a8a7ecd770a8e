//! Randomized algebra laws for the symbolic layer and the combinatorial
//! reports.

use std::collections::BTreeSet;

use proptest::prelude::*;

use jordan_eisenstein::eisenstein::chi_s_coords;
use jordan_eisenstein::rational::{half, rat, Rat};
use jordan_eisenstein::reducibility::{
    jantzen_pyramid, reducibility_points, CharacterClass, ChiDTag,
};
use jordan_eisenstein::root_system::{build_root_system, CartanType, Family, WeylElement};
use jordan_eisenstein::zeta::{eval_numeric, full_ledger, AffineArg, ZetaProduct, ZetaProfile};

fn affine_arg() -> impl Strategy<Value = AffineArg> {
    (1i64..=2, -8i64..=8).prop_map(|(k, twice_c)| AffineArg::new(k, half(twice_c)))
}

fn zeta_product() -> impl Strategy<Value = ZetaProduct> {
    (
        proptest::collection::vec(affine_arg(), 0..5),
        proptest::collection::vec(affine_arg(), 0..5),
    )
        .prop_map(|(n, d)| ZetaProduct::from_factors(n, d))
}

fn any_family() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (Just(Family::A), 1usize..=5),
        (Just(Family::B), 2usize..=5),
        (Just(Family::C), 2usize..=5),
        (Just(Family::D), 3usize..=5),
        (Just(Family::E), 6usize..=7),
    ]
}

proptest! {
    #[test]
    fn normalize_is_idempotent(zp in zeta_product()) {
        let once = zp.normalize();
        prop_assert_eq!(once.normalize(), once);
    }

    #[test]
    fn normalized_product_has_disjoint_sides(zp in zeta_product()) {
        let n = zp.normalize();
        let numer: BTreeSet<_> = n.numer_factors().map(|(a, _)| a).collect();
        let denom: BTreeSet<_> = n.denom_factors().map(|(a, _)| a).collect();
        prop_assert!(numer.is_disjoint(&denom));
    }

    #[test]
    fn multiply_is_commutative_and_unital(a in zeta_product(), b in zeta_product()) {
        prop_assert_eq!(a.multiply(&b), b.multiply(&a));
        prop_assert_eq!(a.multiply(&ZetaProduct::one()), a.normalize());
    }

    #[test]
    fn inverse_cancels(zp in zeta_product()) {
        prop_assert!(zp.multiply(&zp.inverse()).is_one());
    }

    #[test]
    fn ledger_is_additive_under_multiplication(
        a in zeta_product(),
        b in zeta_product(),
        p_adic in any::<bool>(),
    ) {
        let profile = if p_adic {
            ZetaProfile::p_adic(5).unwrap()
        } else {
            ZetaProfile::RealArchimedean
        };
        let window = (rat(-12), rat(12));
        let la = full_ledger(&a, &profile, window).unwrap();
        let lb = full_ledger(&b, &profile, window).unwrap();
        let lab = full_ledger(&a.multiply(&b), &profile, window).unwrap();
        let mut locations: BTreeSet<Rat> = BTreeSet::new();
        locations.extend(la.entries.iter().map(|e| e.location));
        locations.extend(lb.entries.iter().map(|e| e.location));
        locations.extend(lab.entries.iter().map(|e| e.location));
        for s0 in locations {
            prop_assert_eq!(lab.order_at(s0), la.order_at(s0) + lb.order_at(s0));
        }
    }

    #[test]
    fn evaluation_is_invariant_under_normalization(
        zp in zeta_product(),
        s_eighths in -64i64..=64,
    ) {
        let profile = ZetaProfile::p_adic(3).unwrap();
        let s = s_eighths as f64 / 8.0 + 1.0 / 128.0;
        let raw = eval_numeric(&zp, &profile, s);
        let normalized = eval_numeric(&zp.normalize(), &profile, s);
        if let (Ok(raw), Ok(normalized)) = (raw, normalized) {
            prop_assert!((raw - normalized).abs() <= 1e-12 * normalized.abs().max(1.0));
        }
    }

    #[test]
    fn canonical_string_is_stable(zp in zeta_product()) {
        let n = zp.normalize();
        prop_assert_eq!(n.canonical_string(), n.normalize().canonical_string());
    }

    #[test]
    fn reducibility_reports_are_symmetric(
        r in 1usize..=6,
        d in prop_oneof![Just(1usize), Just(2), Just(4), Just(8)],
        trivial_chi in any::<bool>(),
    ) {
        let chi = if trivial_chi {
            CharacterClass::Trivial
        } else {
            CharacterClass::QuadraticNontrivial
        };
        if let Ok(report) = reducibility_points(r, d, ChiDTag::Trivial, &chi) {
            prop_assert!(report.is_symmetric());
            prop_assert!(report.irreducible_elsewhere);
        }
    }

    #[test]
    fn pyramid_counts_match_the_floor_sum(r in 1usize..=8, i_offset in 0usize..8) {
        let i = 1 + i_offset % r;
        let p = jantzen_pyramid(r, i).unwrap();
        let expected: usize = ((r - i)..=r).map(|t| t + 1).sum();
        prop_assert_eq!(p.cell_count(), expected);
        for (p_coord, q_coord) in &p.cells {
            prop_assert!(p_coord + q_coord >= r - i && p_coord + q_coord <= r);
        }
    }

    #[test]
    fn chi_s_spacing_and_anchor(r in 1usize..=8, d in 0usize..=9, s_halves in -20i64..=20) {
        let c = chi_s_coords(r, d, half(s_halves));
        for w in c.coords.windows(2) {
            prop_assert_eq!(w[1] - w[0], rat(d as i64));
        }
        let anchor = chi_s_coords(r, d, rat(-1) - half((r as i64 - 1) * d as i64));
        for (i, &x) in anchor.coords.iter().enumerate() {
            prop_assert_eq!(x, rat(-1 - (r as i64 - 1 - i as i64) * d as i64));
        }
    }

    #[test]
    fn weyl_words_act_by_root_permutation(
        (family, rank) in any_family(),
        word_seed in proptest::collection::vec(0usize..16, 0..12),
    ) {
        let rs = build_root_system(CartanType::new(family, rank).unwrap());
        let word: Vec<usize> = word_seed.iter().map(|w| 1 + w % rank).collect();
        let w = WeylElement::from_word(word);
        for root in rs.positive_roots() {
            let image = rs.apply_to_root(&w, root);
            prop_assert!(rs.is_root(image.coords()));
        }
        let inversions = rs.inversion_set(&w);
        prop_assert!(inversions.len() <= rs.positive_roots().len());
    }

    #[test]
    fn longest_elements_invert_their_subsystem(
        (family, rank) in any_family(),
        mask in 0usize..32,
    ) {
        let rs = build_root_system(CartanType::new(family, rank).unwrap());
        let nodes: BTreeSet<usize> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let w = rs.longest_element(&nodes);
        let supported = rs.roots_supported_on(&nodes);
        prop_assert_eq!(w.len(), supported.len());
        prop_assert_eq!(rs.inversion_set(&w), supported);
    }
}
