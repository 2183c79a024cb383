use proptest::prelude::*;

use localsys::arith::q;
use localsys::rootdata::{CartanType, Coweight, RootSystem, Weight, WeylWord};

const TYPES: [&str; 12] = ["A3", "A5", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7"];

fn system() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(TYPES.to_vec()).prop_map(|t| RootSystem::new(t.parse::<CartanType>().unwrap()))
}

fn system_and_word() -> impl Strategy<Value = (RootSystem, Vec<i64>, WeylWord)> {
    system().prop_flat_map(|rs| {
        let n = rs.rank();
        (
            Just(rs),
            prop::collection::vec(-4i64..=4, n),
            prop::collection::vec(0..n, 0..24).prop_map(WeylWord::new),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_preserve_the_form((rs, m, w) in system_and_word()) {
        let v = Weight::fundamental_ints(&m);
        let image = w.apply(&rs, &v).unwrap();
        prop_assert_eq!(rs.norm(&image).unwrap(), rs.norm(&v).unwrap());
    }

    #[test]
    fn word_then_inverse_is_identity((rs, m, w) in system_and_word()) {
        let v = Weight::fundamental_ints(&m);
        let there = w.apply(&rs, &v).unwrap();
        let back = w.inverse().apply(&rs, &there).unwrap();
        prop_assert_eq!(back, v.clone());
        let both = w.compose(&w.inverse()).apply(&rs, &v).unwrap();
        prop_assert_eq!(both, v);
    }

    #[test]
    fn basis_round_trip((rs, m, w) in system_and_word()) {
        let v = w.apply(&rs, &Weight::fundamental_ints(&m)).unwrap();
        let roots = rs.to_root_basis(&v);
        prop_assert_eq!(rs.to_fundamental_basis(&roots), v.clone());
        // the action commutes with the change of basis
        let moved = w.apply(&rs, &roots).unwrap();
        prop_assert_eq!(rs.to_fundamental_basis(&moved), w.apply(&rs, &v).unwrap());
    }

    #[test]
    fn dominate_is_idempotent((rs, m, _) in system_and_word()) {
        let h = Coweight::from_ints(&m);
        let (dom, w) = rs.dominate(&h);
        prop_assert!(rs.is_dominant(&dom));
        prop_assert_eq!(w.apply(&rs, &h).unwrap(), dom.clone());
        let (again, w2) = rs.dominate(&dom);
        prop_assert_eq!(again, dom);
        prop_assert!(w2.is_empty());
    }

    #[test]
    fn minus_dominant_dominates_back((rs, m, _) in system_and_word()) {
        let (dom, _) = rs.dominate(&Coweight::from_ints(&m));
        let neg = Coweight::new(dom.coords.iter().map(|c| -c).collect());
        let (back, _) = rs.dominate(&neg);
        // -w0 permutes the dominant chamber, so the labels are a permutation
        let mut a = rs.node_values(&back);
        let mut b = rs.node_values(&dom);
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn e6_example_word_matches_dominating_word() {
    let rs = RootSystem::new("E6".parse().unwrap());
    let w = WeylWord::from_labels(&[4, 3, 5, 2, 4, 3, 5, 1, 6]);
    let h1 = Coweight::from_ints(&[0, 4, 4, 6, 4, 0]);
    let h = w.apply(&rs, &h1).unwrap();
    assert_eq!(rs.node_values(&h), vec![q(0), q(0), q(0), q(2), q(0), q(0)]);
}

#[test]
fn exceptional_root_counts() {
    for (t, n) in [("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240)] {
        assert_eq!(RootSystem::new(t.parse().unwrap()).num_roots(), n, "{t}");
    }
}
