//! Property tests of the arithmetic, expansion and indecomposability invariants.

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use mcf_core::cubic::codifferent_trace;
use mcf_core::families::{construct, construct_at};
use mcf_core::indecomposables::{catalog, certify_by_codifferent, is_decomposable, is_indecomposable, Certificate};
use mcf_core::mcf::{abs_tau_vector, brun_expand, ijpa_expand, jpa_expand, lockstep_check, semiconvergents};
use mcf_core::pythagoras::min_squares;
use mcf_core::scan::find_unit_basis;
use mcf_core::{AlgInt, FamilyId, FieldElem, OrderSpec, Sign, UnitFactor};

fn family() -> impl Strategy<Value = FamilyId> {
    prop_oneof![
        (3i64..=12).prop_map(FamilyId::EnnolaI),
        (5i64..=12).prop_map(FamilyId::EnnolaII),
        (-1i64..=12).prop_map(FamilyId::SimplestCubic),
    ]
}

fn small_family() -> impl Strategy<Value = FamilyId> {
    prop_oneof![
        (3i64..=6).prop_map(FamilyId::EnnolaI),
        (5i64..=6).prop_map(FamilyId::EnnolaII),
        (-1i64..=6).prop_map(FamilyId::SimplestCubic),
    ]
}

fn element(r: i64) -> impl Strategy<Value = AlgInt> {
    prop::array::uniform3(-r..=r).prop_map(AlgInt::from_i64)
}

fn nonzero(r: i64) -> impl Strategy<Value = AlgInt> {
    element(r).prop_filter("nonzero", |x| !x.is_zero())
}

fn unit_factor(r: i64) -> impl Strategy<Value = UnitFactor> {
    (any::<bool>(), -r..=r, -r..=r).prop_map(|(neg, k, l)| UnitFactor { sign: if neg { Sign::Neg } else { Sign::Pos }, k, l })
}

fn order_at(f: FamilyId, root: usize) -> OrderSpec {
    construct_at(f, root).expect("valid family")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn norm_is_multiplicative_and_trace_is_linear(f in family(), x in element(30), y in element(30), k in -9i64..=9) {
        let o = construct(f).unwrap();
        prop_assert_eq!(o.norm(&o.mul(&x, &y)), o.norm(&x) * o.norm(&y));
        prop_assert_eq!(o.trace(&(&x + &y)), o.trace(&x) + o.trace(&y));
        prop_assert_eq!(o.trace(&(&x * k)), o.trace(&x) * k);
    }

    #[test]
    fn signature_is_multiplicative(f in family(), x in nonzero(30), y in nonzero(30)) {
        let o = construct(f).unwrap();
        prop_assert_eq!(o.signature(&o.mul(&x, &y)).unwrap(), o.signature(&x).unwrap() * o.signature(&y).unwrap());
    }

    #[test]
    fn same_signature_sums_have_larger_norm(f in family(), x in nonzero(30), y in nonzero(30)) {
        let o = construct(f).unwrap();
        prop_assume!(o.signature(&x).unwrap() == o.signature(&y).unwrap());
        let n = o.norm(&(&x + &y)).abs();
        prop_assert!(n > o.norm(&x).abs() && n > o.norm(&y).abs());
    }

    #[test]
    fn unit_decomposition_inverts_composition(f in family(), e in unit_factor(3)) {
        let o = construct(f).unwrap();
        let u = o.unit_compose(e).unwrap();
        prop_assert!(o.is_unit(&u));
        prop_assert_eq!(o.unit_decompose(&u).unwrap(), e);
    }

    #[test]
    fn jpa_steps_follow_the_digits_and_run_in_lockstep(f in family(), root in 0usize..3) {
        let o = order_at(f, root);
        let jpa = jpa_expand(&o, abs_tau_vector(&o, root), root, 200).unwrap();
        let states = jpa.states.integral().unwrap();
        for (k, d) in jpa.digits.iter().enumerate() {
            let [b1, b2, b3] = &states[k];
            let next = [b2 - &(b1 * &d[0]), b3 - &(b1 * &d[1]), b1.clone()];
            prop_assert_eq!(&states[k + 1], &next, "step {}", k);
        }
        let [b1, b2, b3] = states[0].clone().map(FieldElem::from_int);
        let theta = [b2.div(&b1, &o).unwrap(), b3.div(&b1, &o).unwrap()];
        let ijpa = ijpa_expand(&o, theta, root, 200).unwrap();
        prop_assert!(lockstep_check(&o, &jpa, &ijpa));
    }

    #[test]
    fn semiconvergent_multiples_stop_at_the_digit(f in family(), root in 0usize..3) {
        let o = order_at(f, root);
        let rec = jpa_expand(&o, abs_tau_vector(&o, root), root, 200).unwrap();
        prop_assume!(rec.is_periodic());
        let rows = semiconvergents(&o, &rec).unwrap();
        let states = rec.states.integral().unwrap();
        let end = rec.l0.unwrap() + rec.l1.unwrap();
        for k in 0..end {
            let b1 = &states[k][0];
            for i in [2usize, 3] {
                let digit = &rec.digits[k][i - 2];
                let js: Vec<u64> = rows.iter().filter(|r| (r.k, r.i) == (k, i)).map(|r| r.j).collect();
                let want: Vec<u64> = (0..digit.try_into().unwrap_or(0u64)).collect();
                prop_assert_eq!(&js, &want, "k={} i={}", k, i);
                // One more multiple would leave the range [0, beta_1) in the tracking embedding.
                let past = &states[k][i - 1] - &(b1 * digit);
                prop_assert_eq!(o.floor_ratio(&past, b1, root).unwrap(), BigInt::from(0));
            }
        }
    }

    #[test]
    fn brun_states_ascend_in_the_tracking_embedding(f in family(), root in 0usize..3) {
        let o = order_at(f, root);
        let rec = brun_expand(&o, abs_tau_vector(&o, root), root, 300).unwrap();
        for s in rec.states.integral().unwrap() {
            prop_assert!(o.cmp_at(&s[0], &s[1], root).is_le() && o.cmp_at(&s[1], &s[2], root).is_le());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn decomposability_is_invariant_under_units(f in small_family(), x in nonzero(4), e in unit_factor(1)) {
        let o = construct(f).unwrap();
        let u = o.unit_compose(e).unwrap();
        prop_assert_eq!(is_indecomposable(&o, &x).unwrap(), is_indecomposable(&o, &o.mul(&x, &u)).unwrap());
    }

    #[test]
    fn catalog_entries_are_indecomposable(f in small_family(), pick in any::<prop::sample::Index>()) {
        let o = construct(f).unwrap();
        let cat = catalog(f).unwrap();
        let entry = &cat.entries[pick.index(cat.len())];
        prop_assert!(is_indecomposable(&o, &entry.value).unwrap(), "{}", o.show(&entry.value));
    }

    #[test]
    fn codifferent_certificates_are_sound(f in small_family(), x in nonzero(6)) {
        let o = construct(f).unwrap();
        let s = o.signature(&x).unwrap();
        if let Certificate::Found(d) = certify_by_codifferent(&o, &x, s, 12).unwrap() {
            prop_assert_eq!(codifferent_trace(&o, &d, &x).unwrap(), BigInt::from(1));
            prop_assert!(is_decomposable(&o, &x, s).unwrap().is_indecomposable());
        }
    }

    #[test]
    fn adding_a_square_costs_at_most_one_more(a in 3i64..=5, n in 1i64..=4, y in nonzero(2)) {
        let o = construct(FamilyId::EnnolaI(a)).unwrap();
        let gamma = AlgInt::int(n);
        let sq = o.square(&y);
        let before = min_squares(&o, &gamma, 8).unwrap();
        let after = min_squares(&o, &(&gamma + &sq), 8).unwrap();
        prop_assert!(after <= before + 1, "{} then {}", before, after);
    }

    #[test]
    fn unit_search_generates_the_family_units(f in family()) {
        let o = construct(f).unwrap();
        let [u1, u2] = find_unit_basis(&o.without_units(), 40.0).unwrap();
        let e1 = o.unit_decompose(&u1).unwrap();
        let e2 = o.unit_decompose(&u2).unwrap();
        prop_assert_eq!((e1.k * e2.l - e1.l * e2.k).abs(), 1);
    }
}
