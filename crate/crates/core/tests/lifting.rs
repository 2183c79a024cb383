use proptest::prelude::*;

use localsys::balacarter::Atlas;
use localsys::cyclotomic::CyclotomicTrace;
use localsys::goldens::{golden_rows, GroupType};
use localsys::lifting::{
    character, descends, identify_representation, minimal_lift_search, same_value, traces_by_pair, weight_orbit,
    LeviWeight,
};
use localsys::rootdata::{CartanType, Weight};
use localsys::Error;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn levi_weight(atlas: &Atlas, orbit: &str, lambda: &[i64]) -> localsys::Result<LeviWeight> {
    LeviWeight::new(atlas.root_system(), atlas.orbit(orbit)?, lambda.to_vec())
}

#[test]
fn e6_w1_does_not_descend() {
    let atlas = Atlas::get(ty("E6"));
    let lw = levi_weight(&atlas, "D4(a1)", &[1, 0, 0, 0, 0, 0]).unwrap();
    let pair = atlas.bala_carter_pair(atlas.orbit("D4(a1)").unwrap());
    assert!(!descends(atlas.root_system(), &lw, pair).unwrap());
    assert!(matches!(
        identify_representation(&atlas, &lw),
        Err(Error::NotDescending(_))
    ));
}

#[test]
fn zero_weight_descends_everywhere() {
    for t in ["G2", "F4", "E6"] {
        let atlas = Atlas::get(ty(t));
        let rs = atlas.root_system();
        for o in atlas.orbits() {
            let lw = LeviWeight::new(rs, o, vec![0; rs.rank()]).unwrap();
            for p in atlas.class_parameters(o) {
                assert!(descends(rs, &lw, p).unwrap());
                assert_eq!(character(rs, &lw, p).unwrap().to_integer(), Some(1));
            }
        }
    }
}

#[test]
fn mixed_levi_orbit_is_not_descending() {
    // w1+w6 passes for its highest weight but not for the rest of its orbit
    let atlas = Atlas::get(ty("E6"));
    let lw = levi_weight(&atlas, "D4(a1)", &[1, 0, 0, 0, 0, 1]).unwrap();
    let pair = atlas.bala_carter_pair(atlas.orbit("D4(a1)").unwrap());
    assert!(!descends(atlas.root_system(), &lw, pair).unwrap());
}

#[test]
fn pair_of_another_orbit_is_rejected() {
    let atlas = Atlas::get(ty("E6"));
    let lw = levi_weight(&atlas, "D4(a1)", &[0, 1, 0, 0, 0, 0]).unwrap();
    let other = atlas.bala_carter_pair(atlas.orbit("A2").unwrap());
    assert!(matches!(
        descends(atlas.root_system(), &lw, other),
        Err(Error::OrbitMismatch)
    ));
}

#[test]
fn levi_weights_are_validated() {
    let atlas = Atlas::get(ty("E6"));
    assert!(matches!(
        levi_weight(&atlas, "D4(a1)", &[0, -1, 0, 0, 0, 0]),
        Err(Error::NotLeviDominant { node: 2 })
    ));
    assert!(matches!(
        levi_weight(&atlas, "D4(a1)", &[0, 2, 0, 0, 0, 0]),
        Err(Error::NotMinuscule { .. })
    ));
    assert!(matches!(
        levi_weight(&atlas, "D4(a1)", &[0, 1]),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn trivial_pair_gives_dimension() {
    let atlas = Atlas::get(ty("E6"));
    let lw = levi_weight(&atlas, "D4(a1)", &[0, 1, 0, 0, 0, 0]).unwrap();
    let dim = weight_orbit(atlas.root_system(), &lw).len() as u64;
    for (pair, trace) in traces_by_pair(&atlas, &lw).unwrap() {
        if pair.trivial {
            assert_eq!(trace.to_integer(), Some(dim as i64));
        }
        assert_eq!(trace.dimension(), dim);
    }
}

#[test]
fn traces_agree_across_pairs_of_a_class() {
    for t in ["F4", "E7"] {
        let atlas = Atlas::get(ty(t));
        for row in golden_rows().into_iter().filter(|r| r.group == ty(t)) {
            let lw = levi_weight(&atlas, &row.orbit, &row.weight).unwrap();
            // identify_representation fails on disagreement
            identify_representation(&atlas, &lw).unwrap();
        }
    }
}

#[test]
fn same_value_lifts_orders() {
    let a = CyclotomicTrace::from_exponents(3, [1, 2]);
    let b = CyclotomicTrace::from_exponents(6, [2, 4]);
    let c = CyclotomicTrace::from_exponents(1, [0]);
    assert!(same_value(&a, &b));
    assert!(!same_value(&a, &c));
    assert_eq!(a.to_integer(), Some(-1));
}

#[test]
fn minimal_lifts() {
    for (t, orbit, from, expected) in [
        ("E6", "D4(a1)", vec![0, 0, 0, 1, 0, 0], vec![0, 0, 0, 1, 0, 0]),
        ("G2", "G2(a1)", vec![0, 1], vec![0, 1]),
        (
            "E8",
            "E8(a3)",
            vec![0, 0, 0, 1, 0, 0, 0, 0],
            vec![1, 0, 0, -1, 0, 1, 0, 0],
        ),
    ] {
        let atlas = Atlas::get(ty(t));
        let lw = levi_weight(&atlas, orbit, &from).unwrap();
        let target = identify_representation(&atlas, &lw).unwrap();
        let bound = atlas.root_system().norm(&Weight::fundamental_ints(&from)).unwrap();
        let found = minimal_lift_search(&atlas, atlas.orbit(orbit).unwrap(), &target, &bound).unwrap();
        assert_eq!(found.lambda, expected, "{t} {orbit}");
    }
}

/// Pairs of golden sign lifts on the same orbit.
fn sign_pairs() -> Vec<(CartanType, String, Vec<i64>, Vec<i64>)> {
    let rows: Vec<_> = golden_rows()
        .into_iter()
        .filter(|r| r.group_type == GroupType::S2 || r.rep_label == "sign")
        .collect();
    let mut out = vec![];
    for a in &rows {
        for b in &rows {
            if a.group == b.group && a.orbit == b.orbit {
                out.push((a.group, a.orbit.clone(), a.weight.clone(), b.weight.clone()));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_products_multiply_traces(case in prop::sample::select(sign_pairs())) {
        let (t, orbit, a, b) = case;
        let atlas = Atlas::get(t);
        let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let Ok(lw) = levi_weight(&atlas, &orbit, &sum) else {
            // the sum need not be minuscule for the Levi
            return Ok(());
        };
        let la = levi_weight(&atlas, &orbit, &a).unwrap();
        let lb = levi_weight(&atlas, &orbit, &b).unwrap();
        let rs = atlas.root_system();
        // V_a (x) V_b = V_{a+b} only for characters of the Levi
        if weight_orbit(rs, &la).len() > 1 || weight_orbit(rs, &lb).len() > 1 {
            return Ok(());
        }
        let ta = traces_by_pair(&atlas, &la).unwrap();
        let tb = traces_by_pair(&atlas, &lb).unwrap();
        let ts = traces_by_pair(&atlas, &lw).unwrap();
        for ((x, y), z) in ta.iter().zip(&tb).zip(&ts) {
            prop_assert!(same_value(&x.1.tensor(&y.1), &z.1));
        }
    }

    #[test]
    fn descent_is_stable_under_the_levi_group(case in prop::sample::select(sign_pairs())) {
        let (t, orbit, a, _) = case;
        let atlas = Atlas::get(t);
        let rs = atlas.root_system();
        let lw = levi_weight(&atlas, &orbit, &a).unwrap();
        let pair = atlas.bala_carter_pair(atlas.orbit(&orbit).unwrap());
        prop_assert!(descends(rs, &lw, pair).unwrap());
        // every weight of the orbit has an integral character exponent
        let trace = character(rs, &lw, pair).unwrap();
        prop_assert_eq!(trace.dimension() as usize, weight_orbit(rs, &lw).len());
    }
}
