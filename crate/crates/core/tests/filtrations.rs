mod common;

use std::cmp::Ordering;
use std::ops::ControlFlow;

use proptest::prelude::*;
use quiverstab_core::kempf::optimal_weighted;
use quiverstab_core::quiver::{restrict, Quotient};
use quiverstab_core::stability::hn_filtration_ordered;
use quiverstab_core::{
    hm_semistable, hn_filtration, is_semistable, kempf_filtration, kempf_value, king_theta, numerical_mu_filtration,
    numerical_mu_weights, one_ps_from_filtration, slope, transform_weights, verify_theorem, DirectionalValue,
    EnumerationOrder, Error, Guards, Rational, Subrepresentation, SubrepLattice, TheoremCheck, WeightedFiltration,
};

use common::weighted_representation;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn see_saw_and_king_agree_with_slopes((rep, w) in weighted_representation(2)) {
        let lattice = SubrepLattice::new(&rep, &Guards::default()).unwrap();
        let mu_m = slope(rep.dims(), &w).unwrap();
        for &i in lattice.proper_indices() {
            let s = &lattice.subreps()[i];
            let q = Quotient::new(&rep, s).unwrap();
            let mu_s = slope(&s.dims(), &w).unwrap();
            let mu_q = slope(q.representation().dims(), &w).unwrap();
            let a = mu_s.cmp(&mu_m);
            prop_assert_eq!(a, mu_s.cmp(&mu_q));
            prop_assert_eq!(a, mu_m.cmp(&mu_q));
            // θ(S) < 0 exactly when S destabilizes
            let theta = king_theta(rep.dims(), &s.dims(), &w).unwrap();
            prop_assert_eq!(theta.cmp(&0), Ordering::Equal.cmp(&a));
        }
    }

    #[test]
    fn hn_has_decreasing_slopes_and_semistable_layers((rep, w) in weighted_representation(2)) {
        let g = Guards::default();
        let hn = hn_filtration(&rep, &w, &g).unwrap();
        prop_assert!(hn.slopes.windows(2).all(|p| p[0] > p[1]));
        let mut below = Subrepresentation::zero(&rep);
        for (step, mu) in hn.filtration.steps().iter().zip(&hn.slopes) {
            let q = Quotient::new(&rep, &below).unwrap();
            let layer = restrict(q.representation(), &q.project(step).unwrap()).unwrap();
            prop_assert!(is_semistable(&layer, &w, &g).unwrap());
            prop_assert_eq!(&slope(layer.dims(), &w).unwrap(), mu);
            below = step.clone();
        }
        let reversed = hn_filtration_ordered(&rep, &w, &g, EnumerationOrder::Reversed).unwrap();
        prop_assert_eq!(reversed, hn);
    }

    #[test]
    fn transform_keeps_chains_and_shifts_slopes(
        (rep, w) in weighted_representation(2),
        a in 1i64..=3,
        b in -4i64..=4,
    ) {
        let g = Guards::default();
        let w2 = transform_weights(&w, a, b).unwrap();
        prop_assert_eq!(is_semistable(&rep, &w, &g).unwrap(), is_semistable(&rep, &w2, &g).unwrap());
        let h1 = hn_filtration(&rep, &w, &g).unwrap();
        let h2 = hn_filtration(&rep, &w2, &g).unwrap();
        prop_assert_eq!(&h1.filtration, &h2.filtration);
        let shifted: Vec<Rational> = h1.slopes.iter().map(|m| m * Rational::from_integer(a.into()) + Rational::from_integer(b.into())).collect();
        prop_assert_eq!(h2.slopes, shifted);
    }

    #[test]
    fn both_pairing_forms_agree_on_every_chain((rep, w) in weighted_representation(2), seed in 0u64..1000) {
        let lattice = SubrepLattice::new(&rep, &Guards::default()).unwrap();
        let mut k = seed as i64;
        let _ = lattice.for_each_chain(|chain| {
            let f = lattice.filtration(&rep, chain);
            let weights: Vec<Rational> = (0..f.len() as i64).map(|i| Rational::new((3 * i + k % 5 - 4).into(), (1 + k % 3).into())).collect();
            k += 1;
            let wf = WeightedFiltration::new(f, weights).unwrap();
            let a = numerical_mu_weights(&rep, &one_ps_from_filtration(&wf), &w).unwrap();
            let b = numerical_mu_filtration(&rep, &wf, &w).unwrap();
            assert_eq!(a, b);
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn hilbert_mumford_matches_slope_semistability((rep, w) in weighted_representation(2)) {
        let g = Guards::default();
        prop_assert_eq!(hm_semistable(&rep, &w, &g).unwrap(), is_semistable(&rep, &w, &g).unwrap());
    }

    #[test]
    fn kempf_equals_hn_under_random_weights((rep, w) in weighted_representation(2)) {
        let g = Guards::default();
        match verify_theorem(&rep, &w, &g).unwrap() {
            TheoremCheck::Pass { hn, kempf } => {
                prop_assert_eq!(&hn.filtration, kempf.filtration.filtration());
            }
            TheoremCheck::NotApplicable => {
                prop_assert!(is_semistable(&rep, &w, &g).unwrap());
                prop_assert!(matches!(kempf_filtration(&rep, &w, &g), Err(Error::NotUnstable)));
            }
            TheoremCheck::Fail { reason, .. } => prop_assert!(false, "{}", reason),
        }
    }

    #[test]
    fn no_chain_beats_the_kempf_value((rep, w) in weighted_representation(2)) {
        let g = Guards::default();
        let Ok(k) = kempf_filtration(&rep, &w, &g) else { return Ok(()) };
        prop_assert_eq!(kempf_value(&rep, &k.filtration, &w).unwrap(), DirectionalValue::Value(k.value.clone()));
        let lattice = SubrepLattice::new(&rep, &g).unwrap();
        let _ = lattice.for_each_chain(|chain| {
            let f = lattice.filtration(&rep, chain);
            if let Some(wf) = optimal_weighted(&rep, &f, &w).unwrap() {
                let v = kempf_value(&rep, &wf, &w).unwrap();
                assert!(v <= DirectionalValue::Value(k.value.clone()));
                // equality only for refinements that coarsen back to the Kempf filtration
                if v == DirectionalValue::Value(k.value.clone()) {
                    assert_eq!(wf, k.filtration);
                }
            }
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn refining_the_kempf_chain_coarsens_back((rep, w) in weighted_representation(2)) {
        let g = Guards::default();
        let Ok(k) = kempf_filtration(&rep, &w, &g) else { return Ok(()) };
        let lattice = SubrepLattice::new(&rep, &g).unwrap();
        let steps = k.filtration.filtration().steps();
        for s in lattice.subreps() {
            if s.is_zero() || steps.contains(s) {
                continue;
            }
            if !steps.iter().all(|t| t.leq(s).unwrap() || s.leq(t).unwrap()) {
                continue;
            }
            let mut refined: Vec<Subrepresentation> = steps.to_vec();
            refined.push(s.clone());
            refined.sort_by_key(|x| x.dims().total());
            let f = quiverstab_core::Filtration::new(&rep, refined).unwrap();
            let wf = optimal_weighted(&rep, &f, &w).unwrap().expect("refinement of a destabilizing chain");
            let v = kempf_value(&rep, &wf, &w).unwrap();
            prop_assert!(v <= DirectionalValue::Value(k.value.clone()));
        }
    }
}
