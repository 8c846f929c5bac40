use gkz_core::analysis::{fuchs_polygon, interlacing_test};
use gkz_core::hodge::{fedorov_numbers, operator_from_params, sabbah_yu_numbers, HypergeomParams};
use gkz_core::num::{rat, Rat};
use gkz_core::Error;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Two disjoint lists of distinct values `k / 24` in `[0, 1)`.
fn params(m_prime: usize, m: usize) -> impl Strategy<Value = (Vec<Rat>, Vec<Rat>)> {
    proptest::sample::subsequence((0..24).collect::<Vec<i64>>(), m_prime + m)
        .prop_shuffle()
        .prop_map(move |xs| {
            let v: Vec<Rat> = xs.iter().map(|&x| rat(x, 24)).collect();
            (v[..m_prime].to_vec(), v[m_prime..].to_vec())
        })
}

fn regular() -> impl Strategy<Value = (Vec<Rat>, Vec<Rat>)> {
    (1usize..=5).prop_flat_map(|m| params(m, m))
}

fn confluent() -> impl Strategy<Value = (Vec<Rat>, Vec<Rat>)> {
    (1usize..=5).prop_flat_map(|mp| (0..mp).prop_flat_map(move |m| params(mp, m)))
}

#[test]
fn elliptic_family() {
    let p = HypergeomParams::new(vec![rat(0, 1), rat(0, 1)], vec![rat(1, 2), rat(1, 2)]).unwrap();
    let h = fedorov_numbers(&p).unwrap();
    assert_eq!(h.grading.into_iter().collect::<Vec<_>>(), vec![(rat(0, 1), 1), (rat(1, 1), 1)]);
}

#[test]
fn wrong_case_errors() {
    let p = HypergeomParams::new(vec![rat(0, 1)], vec![]).unwrap();
    assert_eq!(fedorov_numbers(&p).unwrap_err(), Error::NotRegularCase { m_prime: 1, m: 0 });
    let q = HypergeomParams::new(vec![rat(0, 1)], vec![rat(1, 2)]).unwrap();
    assert_eq!(sabbah_yu_numbers(&q).unwrap_err(), Error::NotConfluentCase { m_prime: 1, m: 1 });
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn fedorov_total_is_the_order((l, m) in regular()) {
        let p = HypergeomParams::new(l.clone(), m).unwrap();
        prop_assert_eq!(fedorov_numbers(&p).unwrap().total, l.len());
    }

    #[test]
    fn sabbah_yu_total_is_the_order((l, m) in confluent()) {
        let p = HypergeomParams::new(l.clone(), m).unwrap();
        let h = sabbah_yu_numbers(&p).unwrap();
        prop_assert_eq!(h.total, l.len());
        prop_assert_eq!(h.grading.values().sum::<usize>(), l.len());
    }

    #[test]
    fn input_order_is_irrelevant((l, m) in regular()) {
        let a = HypergeomParams::new(l.clone(), m.clone()).unwrap();
        let mut rl = l.clone();
        rl.reverse();
        let mut rm = m.clone();
        rm.reverse();
        let b = HypergeomParams::new(rl, rm).unwrap();
        prop_assert_eq!(fedorov_numbers(&a).unwrap(), fedorov_numbers(&b).unwrap());
    }

    /// Interlacing parameters give a unitary local system, whose Hodge
    /// numbers sit in a single level.
    #[test]
    fn interlacing_means_one_level((l, m) in regular()) {
        let p = HypergeomParams::new(l.clone(), m.clone()).unwrap();
        let levels: BTreeSet<Rat> = fedorov_numbers(&p).unwrap().grading.into_keys().collect();
        prop_assert_eq!(interlacing_test(&l, &m).unwrap(), levels.len() == 1);
    }

    /// The operator is regular at infinity exactly in the balanced case.
    #[test]
    fn regularity_at_infinity((l, m) in confluent()) {
        let p = HypergeomParams::new(l, m).unwrap();
        let op = operator_from_params(&p).at_infinity().to_diff();
        prop_assert!(!fuchs_polygon(&op).unwrap().regular);
    }
}
