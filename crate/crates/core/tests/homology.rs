mod common;

use std::collections::BTreeMap;

use legendrian::catalog::{catalog_entry, lambda2_product};
use legendrian::homology::{
    betti, cone_feasible, find_augmentations, forced_window, graded_candidates_by_degree,
    linearise, mapping_cone, not_twist_spun_report, BettiVector, ChainMap, Feasibility,
    GradedComplex, HomologyError, Matrix, Verdict,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{f, les_cone_dim, random_chain_map};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cone_homology_matches_the_exact_sequence(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_chain_map(&mut rng, p);
        let cone = betti(&mapping_cone(&psi).unwrap());
        for k in -5..=5 {
            prop_assert_eq!(cone.get(k), les_cone_dim(&psi, k), "degree {}", k);
        }
    }

    #[test]
    fn cone_is_bounded_by_source_and_target(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_chain_map(&mut rng, 3);
        let (src, tgt) = (betti(&psi.source), betti(&psi.target));
        let cone = betti(&mapping_cone(&psi).unwrap());
        for k in -5..=5 {
            let c = cone.get(k);
            prop_assert!(c <= tgt.get(k) + src.get(k - 1));
            // The cokernel and kernel of ψ_* are at least the dimension gaps.
            let low = tgt.get(k).saturating_sub(src.get(k)) + src.get(k - 1).saturating_sub(tgt.get(k - 1));
            prop_assert!(low <= c);
        }
    }

    #[test]
    fn split_windows_are_feasible(h in prop::collection::vec(0usize..4, 1..6), lo in -4i32..2) {
        // cone_k = h_k + h_{k−1} is realised by the zero map.
        let window: BTreeMap<i32, usize> = (0..h.len())
            .map(|i| {
                let below = if i == 0 { 0 } else { h[i - 1] };
                (lo + i as i32, h[i] + below)
            })
            .collect();
        prop_assert!(cone_feasible(&window).unwrap().is_feasible());
    }

    #[test]
    fn feasibility_witnesses_are_valid(dims in prop::collection::vec(0usize..4, 1..6), lo in -4i32..2) {
        let window: BTreeMap<i32, usize> = dims.iter().enumerate().map(|(i, &d)| (lo + i as i32, d)).collect();
        match cone_feasible(&window).unwrap() {
            Feasibility::Feasible { witness } => {
                prop_assert!(witness.values().all(|&v| v >= 0));
                for (&k, &c) in &window {
                    prop_assert_eq!(witness[&k] + witness[&(k - 1)], c as i64);
                }
            }
            Feasibility::Infeasible { steps, first_negative, .. } => {
                prop_assert!(steps.iter().any(|s| s.degree == first_negative && s.value < 0));
                // Brute force over the free top value confirms there is no solution.
                let top = *window.keys().next_back().unwrap();
                for t in 0..=16i64 {
                    let mut d = t;
                    let mut ok = true;
                    for k in (lo..=top).rev() {
                        d = window[&k] as i64 - d;
                        ok &= d >= 0;
                    }
                    prop_assert!(!ok);
                }
            }
        }
    }

    #[test]
    fn zero_differential_betti_is_the_dimension_vector(dims in prop::collection::btree_map(-3i32..4, 1usize..4, 0..5)) {
        let c = GradedComplex::from_dims(f(3), &dims, BTreeMap::new()).unwrap();
        prop_assert_eq!(betti(&c).0, dims);
    }
}

#[test]
fn zero_map_cone_is_the_shifted_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let psi = random_chain_map(&mut rng, 2);
        let zero = ChainMap::zero(psi.source.clone(), psi.target.clone());
        let cone = betti(&mapping_cone(&zero).unwrap());
        assert_eq!(cone, betti(&zero.target).shifted_sum(&betti(&zero.source)));
    }
}

#[test]
fn identity_cone_is_acyclic() {
    let dims = BTreeMap::from([(0, 2), (1, 3)]);
    let c = GradedComplex::from_dims(f(5), &dims, BTreeMap::new()).unwrap();
    let id = BTreeMap::from([(0, Matrix::identity(2)), (1, Matrix::identity(3))]);
    let psi = ChainMap::new(c.clone(), c, id).unwrap();
    assert_eq!(betti(&mapping_cone(&psi).unwrap()).total(), 0);
}

#[test]
fn cone_can_drop_below_the_difference_of_neighbours() {
    // Identity on F in degree 0: target_0 − source_{−1} = 1, yet the cone is acyclic.
    let c = GradedComplex::from_dims(f(2), &BTreeMap::from([(0, 1)]), BTreeMap::new()).unwrap();
    let psi = ChainMap::new(c.clone(), c, BTreeMap::from([(0, Matrix::identity(1))])).unwrap();
    assert_eq!(betti(&mapping_cone(&psi).unwrap()).get(0), 0);
}

#[test]
fn non_chain_maps_are_rejected_with_their_degree() {
    let fld = f(2);
    let c = GradedComplex::from_dims(
        fld,
        &BTreeMap::from([(0, 1), (1, 1)]),
        BTreeMap::from([(1, Matrix::identity(1))]),
    )
    .unwrap();
    let psi = ChainMap::new(c.clone(), c, BTreeMap::from([(1, Matrix::identity(1))])).unwrap();
    assert_eq!(
        mapping_cone(&psi),
        Err(HomologyError::NotAChainMap { degree: 1 })
    );
}

#[test]
fn unknot_linearised_homology() {
    let a = catalog_entry("unknot").unwrap().dga(f(2)).unwrap().unwrap();
    let augs = find_augmentations(&a, 2, 1, 1, true).unwrap();
    assert_eq!(augs.len(), 1);
    let c = linearise(&a, &augs[0], &augs[0]).unwrap();
    assert_eq!(betti(&c), BettiVector::from_pairs(&[(1, 1)]));
}

#[test]
fn spun_unknot_matches_the_zero_cone() {
    let s = catalog_entry("spun:unknot")
        .unwrap()
        .dga(f(2))
        .unwrap()
        .unwrap();
    let augs = find_augmentations(&s, 2, 1, 1, true).unwrap();
    assert_eq!(augs.len(), 1);
    let b = betti(&linearise(&s, &augs[0], &augs[0]).unwrap());
    assert_eq!(b, BettiVector::from_pairs(&[(1, 1), (2, 1)]));

    let knot = BettiVector::from_pairs(&[(1, 1)]);
    let dims = knot.0.clone();
    let c = GradedComplex::from_dims(f(2), &dims, BTreeMap::new()).unwrap();
    let cone = betti(&mapping_cone(&ChainMap::zero(c.clone(), c)).unwrap());
    assert_eq!(cone, b);
}

#[test]
fn toy_bilinearisation_uses_the_prefix_augmentation() {
    let a = catalog_entry("toy").unwrap().dga(f(2)).unwrap().unwrap();
    let all = find_augmentations(&a, 2, 1, 1, true).unwrap();
    let e1 = all.iter().find(|e| e.values == vec![0, 1, 0]).unwrap();
    let e2 = all.iter().find(|e| e.values == vec![0, 0, 0]).unwrap();
    let c = linearise(&a, e1, e2).unwrap();
    // Basis in degree 0 is (y, z); x maps to z.
    assert_eq!(c.d(1), Matrix::from_rows(&[vec![0], vec![1]]));
}

#[test]
fn trefoil_augmentation_counts() {
    let a2 = catalog_entry("trefoil")
        .unwrap()
        .dga(f(2))
        .unwrap()
        .unwrap();
    assert_eq!(graded_candidates_by_degree(&a2.degrees(), 2), 8);
    assert_eq!(find_augmentations(&a2, 2, 1, 1, true).unwrap().len(), 5);
    let a3 = catalog_entry("trefoil")
        .unwrap()
        .dga(f(3))
        .unwrap()
        .unwrap();
    assert!(find_augmentations(&a3, 3, 1, 1, true).unwrap().is_empty());
    assert!(!find_augmentations(&a3, 3, 2, 1, true).unwrap().is_empty());
}

#[test]
fn loose_model_has_no_augmentations() {
    let a = catalog_entry("loose").unwrap().dga(f(5)).unwrap().unwrap();
    assert!(find_augmentations(&a, 5, 4, 1, false).unwrap().is_empty());
}

#[test]
fn product_windows_and_reports() {
    for r in 1..=5u32 {
        let inv = lambda2_product(r).unwrap();
        let k = 1 - 2 * r as i32;
        let w = forced_window(&inv.degrees());
        assert_eq!(w.get(&k), Some(&1));
        assert!(w.iter().filter(|(&d, _)| d != k).all(|(_, &v)| v == 0));
        assert_eq!(*w.keys().next().unwrap(), k - 1);
        let rep = not_twist_spun_report(&inv, r).unwrap();
        assert_eq!(rep.verdict, Verdict::NotTwistSpun);
        assert_eq!(rep.graded_candidates, 1);
        match rep.feasibility {
            Feasibility::Infeasible { first_negative, .. } => {
                assert_eq!(first_negative, -2 * r as i32 - 1)
            }
            other => panic!("r = {r}: {other:?}"),
        }
    }
    assert!(matches!(
        not_twist_spun_report(&lambda2_product(0).unwrap(), 0),
        Err(HomologyError::Unsupported(_))
    ));
    assert!(matches!(
        not_twist_spun_report(&lambda2_product(2).unwrap(), 3),
        Err(HomologyError::NotInRegime(_))
    ));
}
