//! Randomized algebraic-law and decider-agreement properties over generated
//! rings.

use finring::constructions::augmentation;
use finring::deciders::{
    classify_with, is_left_morphic, is_regular, is_strongly_nil_clean, is_unit_regular,
    snc_poly_criterion,
};
use finring::harness::{generate_instances, SearchConfig};
use finring::{freeze, Caps, FrozenRing, Kind, RingExpr, Strategy};
use proptest::prelude::*;

fn instance(seed: u64) -> (RingExpr, FrozenRing) {
    let cfg = SearchConfig {
        seed,
        count: 1,
        cap: 128,
        ..SearchConfig::default()
    };
    let e = generate_instances(&cfg).remove(0);
    let r = freeze(&e.build(&Caps::DEFAULT).unwrap(), &Caps::DEFAULT).unwrap();
    (e, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms_hold(seed in any::<u64>()) {
        let (e, r) = instance(seed);
        prop_assert_eq!(r.check_axioms(10_000, seed), None, "{}", e);
    }

    #[test]
    fn flags_respect_implications(seed in any::<u64>()) {
        let (e, r) = instance(seed);
        let report = classify_with(&r, Strategy::Sequential);
        prop_assert_eq!(report.flags.lattice_violation(), None, "{}", e);
        prop_assert!(report.witnesses_verify(&r), "{}", e);
    }

    #[test]
    fn elementwise_criteria_agree(seed in any::<u64>()) {
        let (e, r) = instance(seed);
        for x in r.elements() {
            prop_assert_eq!(
                is_strongly_nil_clean(&r, x).is_some(),
                snc_poly_criterion(&r, x),
                "{} at {}", e, x
            );
            prop_assert_eq!(
                is_unit_regular(&r, x),
                is_regular(&r, x) && is_left_morphic(&r, x),
                "{} at {}", e, x
            );
        }
    }

    #[test]
    fn augmentation_is_a_homomorphism(seed in any::<u64>(), n in 1u64..=6, m in 1usize..=5) {
        let e: RingExpr = format!("GR(Z({n}), C({m}))").parse().unwrap();
        let r = e.build(&Caps::DEFAULT).unwrap();
        let base = r.base().unwrap().clone();
        let eps = |x| augmentation(&r, x).unwrap();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        if r.order() <= 256 {
            pairs.extend((0..r.order()).flat_map(|a| (0..r.order()).map(move |b| (a, b))));
        } else {
            let mut state = seed | 1;
            for _ in 0..10_000 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                pairs.push(((state % r.order() as u64) as usize, ((state >> 32) % r.order() as u64) as usize));
            }
        }
        prop_assert_eq!(eps(r.one()), base.one());
        for (a, b) in pairs {
            let (x, y) = (r.element(a).unwrap(), r.element(b).unwrap());
            prop_assert_eq!(eps(r.add(x, y)), base.add(eps(x), eps(y)));
            prop_assert_eq!(eps(r.mul(x, y)), base.mul(eps(x), eps(y)));
        }
    }
}

#[test]
fn generated_instances_cover_every_kind() {
    let cfg = SearchConfig {
        count: 400,
        ..SearchConfig::default()
    };
    let mut kinds: Vec<Kind> = generate_instances(&cfg)
        .iter()
        .map(|e| e.build(&Caps::DEFAULT).unwrap().kind())
        .collect();
    kinds.sort_by_key(|k| format!("{k:?}"));
    kinds.dedup();
    assert_eq!(kinds.len(), 8, "{kinds:?}");
}
