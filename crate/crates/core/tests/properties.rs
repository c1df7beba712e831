//! Property tests for the exact field and structural invariants that are
//! cheap enough to sweep on every run.

use num_bigint::BigInt;
use proptest::prelude::*;
use qcat_core::rep::verify_relations_on_word;
use qcat_core::{qint, CoproductSide, LaurentPoly, QComplex, ScalarQ, TensorWord};

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-9i64..=9, 1..6), -6i64..=6).prop_map(|(coeffs, low)| {
        LaurentPoly::from_coeffs(low, coeffs.into_iter().map(BigInt::from).collect())
    })
}

fn scalar_strategy() -> impl Strategy<Value = ScalarQ> {
    (poly_strategy(), poly_strategy())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| ScalarQ::fraction(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        // associativity and commutativity
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // additive and multiplicative inverses
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        // neutral elements
        prop_assert_eq!(&a + &ScalarQ::zero(), a.clone());
        prop_assert_eq!(&a * &ScalarQ::one(), a.clone());
    }

    #[test]
    fn evaluation_is_ring_homomorphism(
        a in scalar_strategy(),
        b in scalar_strategy(),
        t in 0.05f64..0.95,
    ) {
        let (ea, eb) = match (a.eval_at(t), b.eval_at(t)) {
            (Ok(x), Ok(y)) => (x, y),
            // near-singular denominators are reported, not evaluated
            _ => return Ok(()),
        };
        let prod = &a * &b;
        let sum = &a + &b;
        if let Ok(ep) = prod.eval_at(t) {
            prop_assert!(ep.dist(ea * eb) < 1e-10 * (1.0 + ep.abs()));
        }
        if let Ok(es) = sum.eval_at(t) {
            prop_assert!(es.dist(ea + eb) < 1e-10 * (1.0 + es.abs()));
        }
    }

    #[test]
    fn text_form_round_trips(a in scalar_strategy()) {
        let s = a.to_string();
        let parsed: ScalarQ = s.parse().unwrap();
        prop_assert_eq!(&parsed, &a);
        prop_assert_eq!(parsed.to_string(), s);
    }
}

#[test]
fn qint_shift_identity_exact() {
    // [m+n] = [m] q^n + q^-m [n] for all |m|, |n| <= 20
    for m in -20i64..=20 {
        for n in -20i64..=20 {
            let lhs = qint(m + n);
            let rhs = qint(m) * ScalarQ::q_pow(n) + ScalarQ::q_pow(-m) * qint(n);
            assert_eq!(lhs, rhs, "m={m}, n={n}");
        }
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ScalarQ>();
    assert_send_sync::<LaurentPoly>();
    assert_send_sync::<qcat_core::LinMap>();
    assert_send_sync::<qcat_core::Cache>();
    assert_send_sync::<qcat_core::SixJTable>();
}

#[test]
fn eval_of_unit_scalar() {
    for &t in &[0.1, 0.37, 0.73] {
        assert!(ScalarQ::one().eval_at(t).unwrap().dist(QComplex::ONE) < 1e-15);
    }
}

/// All ordered words with positive letters summing to at most `max_sum`.
fn words_with_sum_up_to(max_sum: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    while let Some(word) = frontier.pop() {
        let used: usize = word.iter().sum();
        for next in 1..=max_sum.saturating_sub(used) {
            let mut w = word.clone();
            w.push(next);
            out.push(w.clone());
            frontier.push(w);
        }
    }
    out
}

#[test]
fn coproduct_actions_satisfy_relations_on_all_small_words() {
    let mut words = words_with_sum_up_to(8);
    // a few words with unit letters interleaved
    words.push(vec![0, 3]);
    words.push(vec![2, 0, 1]);
    words.push(vec![0, 0]);
    for letters in words {
        let word = TensorWord::new(letters.clone());
        for side in [CoproductSide::Delta, CoproductSide::DeltaOp] {
            let report = verify_relations_on_word(&word, side);
            assert!(report.all_pass(), "word {letters:?} side {side:?}: {report:?}");
        }
    }
}
