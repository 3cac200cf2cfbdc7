use fracsum::arith::{canonical_rep, euler_phi, orbit, orbit_multiset, units};
use fracsum::conditions::{holds_ss, holds_star, satisfies_condition, satisfies_star, sum_fracs};
use fracsum::cyclotomic::CycloElem;
use fracsum::forms::{build_h, closed_form_minor, is_totally_anisotropic, principal_minors, totally_anisotropic};
use fracsum::{Fraction, ResidueTuple};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(20_240_611),
        failure_persistence: None,
        ..Config::default()
    }
}

fn tuple_strategy(max_d: u32, max_len: usize) -> impl Strategy<Value = ResidueTuple> {
    (2..=max_d).prop_flat_map(move |d| {
        prop::collection::vec(1..d, 3..=max_len).prop_map(move |ks| ResidueTuple::new(d, ks).unwrap())
    })
}

fn unit_of(d: u32, pick: usize) -> u32 {
    let us = units(d).units;
    us[pick % us.len()]
}

fn elem_strategy(d: u32) -> impl Strategy<Value = CycloElem> {
    let phi = euler_phi(d).max(1) as usize;
    prop::collection::vec((-20i64..=20, 1i64..=6), phi).prop_map(move |cs| {
        let coeffs: Vec<Fraction> = cs.into_iter().map(|(n, q)| Fraction::new(n, q)).collect();
        CycloElem::from_coeffs(d, &coeffs).unwrap()
    })
}

fn conductor_and_pair() -> impl Strategy<Value = (CycloElem, CycloElem, usize)> {
    prop::sample::select(vec![3u32, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 30])
        .prop_flat_map(|d| (elem_strategy(d), elem_strategy(d), any::<usize>()))
}

proptest! {
    #![proptest_config(config(512))]

    #[test]
    fn sums_at_s_and_minus_s_add_to_len(t in tuple_strategy(60, 7), pick in any::<usize>()) {
        let d = t.d();
        let s = unit_of(d, pick);
        let neg = if d == 2 { 1 } else { d - s };
        let total = sum_fracs(&t, s).unwrap() + sum_fracs(&t, neg).unwrap();
        prop_assert_eq!(total, Fraction::from_int(t.ks().len() as i64));
    }

    #[test]
    fn canonical_rep_is_idempotent_and_orbit_invariant(t in tuple_strategy(60, 6), pick in any::<usize>()) {
        let c = canonical_rep(&t);
        prop_assert_eq!(canonical_rep(&c), c.clone());
        let s = unit_of(t.d(), pick);
        prop_assert_eq!(canonical_rep(&t.scaled(s).unwrap()), c.clone());
        prop_assert!(orbit(&t).contains(&c));
    }

    #[test]
    fn orbit_size_divides_phi(t in tuple_strategy(60, 6)) {
        let phi = euler_phi(t.d()) as usize;
        prop_assert_eq!(phi % orbit(&t).len(), 0);
        let total: usize = orbit_multiset(&t).values().sum();
        prop_assert_eq!(total, phi);
    }

    #[test]
    fn condition_is_orbit_invariant(t in tuple_strategy(40, 6), pick in any::<usize>()) {
        let s = unit_of(t.d(), pick);
        prop_assert_eq!(satisfies_condition(&t).holds, satisfies_condition(&t.scaled(s).unwrap()).holds);
    }

    #[test]
    fn three_criteria_agree(t in tuple_strategy(40, 7)) {
        let ss = satisfies_condition(&t).holds;
        prop_assert_eq!(ss, satisfies_star(&t).holds);
        prop_assert_eq!(ss, totally_anisotropic(&t).holds);
        let us = units(t.d()).units;
        prop_assert_eq!(ss, holds_ss(t.d(), t.ks(), &us));
        prop_assert_eq!(ss, holds_star(t.d(), t.ks(), &us));
        prop_assert_eq!(ss, is_totally_anisotropic(t.d(), t.ks(), &us));
    }

    #[test]
    fn minors_match_closed_form(t in tuple_strategy(24, 5), pick in any::<usize>()) {
        let s = unit_of(t.d(), pick);
        let m = principal_minors(&build_h(&t, s).unwrap()).unwrap();
        for (j, u) in m.minors.iter().enumerate() {
            prop_assert_eq!(u, &closed_form_minor(&t, s, j + 1).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn galois_is_a_field_automorphism((a, b, pick) in conductor_and_pair()) {
        let d = a.d();
        let s = unit_of(d, pick);
        prop_assert_eq!((&a + &b).galois(s).unwrap(), &a.galois(s).unwrap() + &b.galois(s).unwrap());
        prop_assert_eq!((&a * &b).galois(s).unwrap(), &a.galois(s).unwrap() * &b.galois(s).unwrap());
        prop_assert_eq!(a.galois(1).unwrap(), a.clone());
        let t = unit_of(d, pick / 7 + 1);
        let st = (s as u64 * t as u64 % d as u64) as u32;
        prop_assert_eq!(a.galois(s).unwrap().galois(t).unwrap(), a.galois(st).unwrap());
    }

    #[test]
    fn embedding_agrees_with_exact_arithmetic((a, b, pick) in conductor_and_pair()) {
        let s = unit_of(a.d(), pick);
        let exact = (&a * &b).embed(s).unwrap();
        let float = a.embed(s).unwrap() * b.embed(s).unwrap();
        let scale = 1.0f64.max(float.norm());
        prop_assert!((exact - float).norm() <= 1e-9 * scale);
        let sum = (&a + &b).embed(s).unwrap();
        prop_assert!((sum - (a.embed(s).unwrap() + b.embed(s).unwrap())).norm() <= 1e-9 * scale.max(sum.norm()));
        if !b.is_zero() {
            let q = a.try_div(&b).unwrap().embed(s).unwrap();
            let fq = a.embed(s).unwrap() / b.embed(s).unwrap();
            prop_assert!((q - fq).norm() <= 1e-9 * 1.0f64.max(fq.norm()));
        }
    }

    #[test]
    fn conjugation_symmetric_sums_are_real((a, _b, pick) in conductor_and_pair()) {
        let r = &a + &a.conj().unwrap();
        let s = unit_of(a.d(), pick);
        prop_assert!(r.embed(s).unwrap().im.abs() < 1e-9 * 1.0f64.max(r.embed(s).unwrap().norm()));
    }

    #[test]
    fn inverse_round_trips((a, _b, _pick) in conductor_and_pair()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
    }
}

#[test]
fn root_power_has_expected_order() {
    for d in [1u32, 2, 6, 9, 12, 20, 30] {
        for e in -(d as i64)..(d as i64) {
            let g = fracsum::arith::gcd(d as u64, e.unsigned_abs()) as u32;
            let ord = d / g.max(1);
            let r = CycloElem::root_power(d, e).unwrap();
            assert!(r.pow(ord).unwrap().is_one());
            for m in 1..ord {
                assert!(!r.pow(m).unwrap().is_one(), "d={d} e={e} m={m}");
            }
        }
    }
}
