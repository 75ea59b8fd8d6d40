mod common;

use proptest::prelude::*;
use tableau_dynamics::dynamics::{
    evacuate, evacuate_via_toggles, promote, promote_inverse, promote_power, promote_via_toggles, rectify,
    rectify_with, toggle,
};
use tableau_dynamics::enumerate::enumerate_ssyt;
use tableau_dynamics::homomesy::{verify_homomesy, CellStatistic, SsytSystem};
use tableau_dynamics::posets::{poset_evacuate, poset_promote, poset_promote_inverse, rotate, rotate_reverse};
use tableau_dynamics::posets::{CominusculeFamily, FinitePoset, LinearExtension};
use tableau_dynamics::rsk::{rsk_insert, Word};
use tableau_dynamics::{Partition, Tableau, TableauKind};

/// The `pick`-th semistandard tableau of the `shape`-th partition of `size`.
fn ssyt(size: usize, k: u32, shape: usize, pick: usize) -> Option<Tableau> {
    let all = common::partitions(size);
    let lambda = common::partition(&all[shape % all.len()]);
    let fillings: Vec<Tableau> = enumerate_ssyt(&lambda, k).collect();
    (!fillings.is_empty()).then(|| fillings[pick % fillings.len()].clone())
}

fn arb_ssyt() -> impl Strategy<Value = Tableau> {
    (1usize..=7, 1u32..=5, any::<usize>(), any::<usize>())
        .prop_filter_map("shape taller than k", |(n, k, s, p)| ssyt(n, k, s, p))
}

fn arb_rectangle_ssyt() -> impl Strategy<Value = Tableau> {
    (1usize..=3, 1usize..=3, 1u32..=5, any::<usize>()).prop_filter_map("too tall", |(m, n, k, p)| {
        let all: Vec<Tableau> = enumerate_ssyt(&Partition::rectangle(m, n), k).collect();
        (!all.is_empty()).then(|| all[p % all.len()].clone())
    })
}

fn arb_family() -> impl Strategy<Value = CominusculeFamily> {
    prop_oneof![
        (1usize..=3, 1usize..=4).prop_map(|(rows, cols)| CominusculeFamily::Rectangle { rows, cols }),
        (1usize..=4).prop_map(|n| CominusculeFamily::ShiftedStaircase { n }),
        (3usize..=6).prop_map(|n| CominusculeFamily::Propeller { n }),
        Just(CominusculeFamily::Cayley),
    ]
}

/// A linear extension built by repeatedly choosing among the minimal
/// elements of what is left.
fn extension_from_choices(p: &FinitePoset, choices: &[usize]) -> LinearExtension {
    let mut labels = vec![0u32; p.size()];
    for (step, choice) in choices.iter().enumerate().take(p.size()) {
        let ready: Vec<usize> = (0..p.size())
            .filter(|&x| labels[x] == 0 && (0..p.size()).all(|y| !p.less(y, x) || labels[y] != 0))
            .collect();
        labels[ready[choice % ready.len()]] = step as u32 + 1;
    }
    LinearExtension::new(p, labels).expect("built minimal-first")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evacuation_is_an_involution(t in arb_ssyt()) {
        let e = evacuate(&t);
        prop_assert!(e.validate(TableauKind::Semistandard));
        prop_assert_eq!(e.outer(), t.outer());
        prop_assert_eq!(evacuate(&e), t.clone());
        prop_assert_eq!(evacuate_via_toggles(&t), e);
    }

    #[test]
    fn evacuation_conjugates_promotion(t in arb_ssyt()) {
        prop_assert_eq!(evacuate(&promote(&t)), promote_inverse(&evacuate(&t)));
    }

    #[test]
    fn promotion_is_invertible(t in arb_ssyt()) {
        prop_assert_eq!(promote_inverse(&promote(&t)), t.clone());
        prop_assert_eq!(promote(&promote_inverse(&t)), t.clone());
        prop_assert_eq!(promote_via_toggles(&t), promote(&t));
        prop_assert_eq!(promote_power(&t, -3), promote_inverse(&promote_inverse(&promote_inverse(&t))));
    }

    #[test]
    fn toggles_are_involutions(t in arb_ssyt(), i in 1u32..5) {
        prop_assume!(i < t.ceiling());
        let s = toggle(&t, i);
        prop_assert!(s.validate(TableauKind::Semistandard));
        prop_assert_eq!(toggle(&s, i), t);
    }

    #[test]
    fn rectangles_have_order_k(t in arb_rectangle_ssyt()) {
        prop_assert_eq!(promote_power(&t, t.ceiling() as i64), t.clone());
        prop_assert_eq!(evacuate(&t), t.rotate_complement().unwrap());
    }

    #[test]
    fn rectify_ignores_slide_order(seed in any::<u64>(), choices in proptest::collection::vec(any::<usize>(), 64)) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let skew = common::random_skew(&mut rng, 7, 4);
        let mut it = choices.iter().cycle();
        let other = rectify_with(&skew, |corners| it.next().unwrap() % corners.len());
        prop_assert_eq!(other, rectify(&skew));
    }

    #[test]
    fn insertion_intertwines_complement_reverse(letters in proptest::collection::vec(1u32..=4, 0..7)) {
        let w = Word::new(letters, 4).unwrap();
        prop_assert_eq!(rsk_insert(&w.complement_reverse()), evacuate(&rsk_insert(&w)));
    }

    #[test]
    fn tableau_text_round_trips(t in arb_ssyt()) {
        let text = t.to_string();
        prop_assert_eq!(text.parse::<Tableau>().unwrap(), t);
    }

    #[test]
    fn poset_evacuation_is_rotate_reverse(
        family in arb_family(),
        choices in proptest::collection::vec(any::<usize>(), 16),
    ) {
        let p = family.build().unwrap();
        let r = rotate(&p).unwrap();
        prop_assert!(r.is_involution() && r.is_order_reversing(&p));
        let t = extension_from_choices(&p, &choices);
        let e = poset_evacuate(&p, &t);
        prop_assert_eq!(&e, &rotate_reverse(&r, &t));
        prop_assert_eq!(poset_evacuate(&p, &e), t.clone());
        prop_assert_eq!(poset_promote_inverse(&p, &poset_promote(&p, &t)), t.clone());
        prop_assert_eq!(poset_evacuate(&p, &poset_promote(&p, &t)), poset_promote_inverse(&p, &e));
    }

    #[test]
    fn poset_text_round_trips(family in arb_family()) {
        let p = family.build().unwrap();
        let text = p.to_string();
        let back: FinitePoset = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn reports_serialise_with_exact_fractions() {
    let system = SsytSystem {
        shape: Partition::rectangle(2, 2),
        ceiling: 3,
    };
    let stat = CellStatistic::cells(vec![
        tableau_dynamics::Cell::new(1, 1),
        tableau_dynamics::Cell::new(2, 2),
    ]);
    let report = verify_homomesy(&system, &stat, 100).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["verdict"], "homomesic");
    for orbit in json["orbits"].as_array().unwrap() {
        assert_eq!(orbit["average"], "4/1");
    }
    assert!(json.get("witness").is_none());
}
