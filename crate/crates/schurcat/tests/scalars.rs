use proptest::prelude::*;
use schurcat::scalars::{qbinom, qfact, qfrac, qint, qr, LaurentQ, Q};

fn lp(s: &str) -> LaurentQ {
    s.parse().unwrap()
}

/// `(q^a - q^-a)/(q - q^-1)` at a rational point, by plain field arithmetic.
fn qint_at(a: i64, q: &Q) -> Q {
    let pow = |k: i64| if k >= 0 { num_traits::pow(q.clone(), k as usize) } else { num_traits::pow(q.recip(), (-k) as usize) };
    (pow(a) - pow(-a)) / (q.clone() - q.recip())
}

fn arb_laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(|terms| {
        terms.into_iter().fold(LaurentQ::zero(), |acc, (k, c)| &acc + &LaurentQ::monomial(qr(c), k))
    })
}

#[test]
fn quantum_integer_examples() {
    assert_eq!(qint(2), lp("q^1 + q^-1"));
    assert!(qint(0).is_zero());
    assert_eq!(qint(-3), lp("-q^2 - 1 - q^-2"));
    assert_eq!(qint(1), LaurentQ::one());
}

#[test]
fn quantum_factorial_examples() {
    assert_eq!(qfact(1), LaurentQ::one());
    assert_eq!(qfact(0), LaurentQ::one());
    assert_eq!(qfact(3), lp("q^3 + 2*q^1 + 2*q^-1 + q^-3"));
    assert_eq!(qbinom(2, 1).unwrap(), lp("q^1 + q^-1"));
    assert!(qbinom(2, 3).is_err());
}

#[test]
fn quantum_integers_match_pointwise_quotient() {
    for a in -6..=6 {
        for q in [qr(2), qr(3), qfrac(5, 7), qfrac(-3, 2)] {
            assert_eq!(qint(a).eval(&q), qint_at(a, &q), "a={a}");
        }
    }
}

#[test]
fn quantum_integer_recursion() {
    for a in -6..=6 {
        for b in -6..=6 {
            let lhs = &qint(a).shift(b) + &qint(b).shift(-a);
            assert_eq!(lhs, qint(a + b), "a={a} b={b}");
        }
    }
}

#[test]
fn quantum_binomials_are_symmetric_and_positive() {
    for m in 0..=8 {
        for k in 0..=m {
            let c = qbinom(m, k).unwrap();
            assert_eq!(c, qbinom(m, m - k).unwrap());
            assert!(c.is_nonneg_integral(), "{m} {k}");
            assert_eq!(c.bar(), c);
        }
    }
}

#[test]
fn quantum_binomial_pascal_rule() {
    // [m k] = q^k [m-1 k] + q^{k-m} [m-1 k-1]
    for m in 1..=7u32 {
        for k in 1..m {
            let lhs = qbinom(m, k).unwrap();
            let rhs = &qbinom(m - 1, k).unwrap().shift(k as i64) + &qbinom(m - 1, k - 1).unwrap().shift(k as i64 - m as i64);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn text_form_is_canonical() {
    assert_eq!(qint(3).to_string(), "1*q^2 + 1*q^0 + 1*q^-2");
    assert_eq!(LaurentQ::zero().to_string(), "0");
    assert_eq!(lp("-1/2*q^3 + 1*q^-1").to_string(), "-1/2*q^3 + 1*q^-1");
}

proptest! {
    #[test]
    fn bar_is_a_ring_involution(p in arb_laurent(), r in arb_laurent()) {
        prop_assert_eq!((&p * &r).bar(), &p.bar() * &r.bar());
        prop_assert_eq!((&p + &r).bar(), &p.bar() + &r.bar());
        prop_assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn text_round_trips(p in arb_laurent()) {
        prop_assert_eq!(p.to_string().parse::<LaurentQ>().unwrap(), p);
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_laurent(), r in arb_laurent()) {
        prop_assume!(!r.is_zero());
        prop_assert_eq!((&p * &r).div_exact(&r).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in arb_laurent(), r in arb_laurent(), n in 1i64..6, m in 1i64..6) {
        let q = qfrac(n, m);
        prop_assert_eq!((&p * &r).eval(&q), p.eval(&q) * r.eval(&q));
    }
}
