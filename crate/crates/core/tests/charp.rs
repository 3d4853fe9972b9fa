mod common;

use common::{ev, q};
use fpure::algebra::{Polynomial, Rational, Ring};
use fpure::charp::{
    cartier_period, is_sharply_fpure, sigma, sigma_fast_cartier, sigma_step, standard_ring, tau_b,
    QDivisor, SigmaOptions, Triple,
};
use fpure::groebner::Ideal;
use fpure::newton::{newton_ideal, MembershipMode, MonomialIdeal};
use fpure::Error;
use proptest::prelude::*;

fn monomial_case() -> impl Strategy<Value = (u64, MonomialIdeal, Rational)> {
    let prime = prop::sample::select(vec![2u64, 3, 5, 7]);
    let gens = prop::collection::vec((0u32..5, 0u32..5), 1..4);
    (prime, gens, 1i64..=12, 1i64..=6).prop_filter_map("proper", |(p, g, n, d)| {
        let a = MonomialIdeal::new(2, g.iter().map(|&(x, y)| ev(&[x, y]))).unwrap();
        a.is_proper().then(|| (p, a, q(n, d)))
    })
}

/// Binomials `x^a + c·y^b` with a random exponent `t`.
fn divisor_case() -> impl Strategy<Value = (u64, u32, u32, i64, Rational)> {
    let prime = prop::sample::select(vec![2u64, 3, 5]);
    (prime, 1u32..5, 1u32..5, 1i64..4, (1i64..=6, 1i64..=4)).prop_map(|(p, a, b, c, (n, d))| (p, a, b, c, q(n, d)))
}

fn binomial_triple(p: u64, a: u32, b: u32, c: i64, t: Rational) -> Triple {
    let r = Ring::new(p, &["x", "y"]).unwrap();
    let x = Polynomial::var(&r, 0).unwrap();
    let y = Polynomial::var(&r, 1).unwrap();
    let f = &x.pow(a as u64) + &y.pow(b as u64).scale(c as u64 % p);
    Triple::pair(QDivisor::single(t, f).unwrap())
}

fn opts() -> SigmaOptions {
    SigmaOptions::default().with_e_max(3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sigma_inside_closed_newton((p, a, t) in monomial_case()) {
        let r = standard_ring(p, 2).unwrap();
        let s = sigma(&Triple::monomial(&r, a.clone(), t.clone()).unwrap(), &opts()).unwrap();
        let newton = newton_ideal(&a, &t, MembershipMode::Closed).unwrap().to_ideal(&r).unwrap();
        prop_assert!(newton.contains_ideal(&s.ideal).unwrap());
    }

    #[test]
    fn chain_descends((p, a, t) in monomial_case()) {
        let r = standard_ring(p, 2).unwrap();
        let triple = Triple::monomial(&r, a, t).unwrap();
        let mut prev = sigma_step(&Ideal::unit(&r), &triple, &opts()).unwrap();
        for _ in 0..3 {
            let next = sigma_step(&prev, &triple, &opts()).unwrap();
            prop_assert!(prev.contains_ideal(&next).unwrap());
            prev = next;
        }
    }

    #[test]
    fn divisor_sigma_monotone((p, a, b, c, t) in divisor_case()) {
        let big = binomial_triple(p, a, b, c, t.clone());
        let small = binomial_triple(p, a, b, c, &t / Rational::from_integer(2.into()));
        let s_big = sigma(&big, &opts()).unwrap().ideal;
        let s_small = sigma(&small, &opts()).unwrap().ideal;
        prop_assert!(s_small.contains_ideal(&s_big).unwrap());
        prop_assert_eq!(is_sharply_fpure(&big, &opts()).unwrap(), s_big.is_unit().unwrap());
    }

    #[test]
    fn fast_path_agrees((p, a, b, c, t) in divisor_case()) {
        let triple = binomial_triple(p, a, b, c, t);
        prop_assume!(cartier_period(&triple).is_some());
        let slow = sigma(&triple, &SigmaOptions::default()).unwrap();
        let fast = sigma_fast_cartier(&triple, &SigmaOptions::default()).unwrap();
        prop_assert!(slow.ideal.equals(&fast.ideal).unwrap(), "{} vs {}", slow.ideal, fast.ideal);
    }

    #[test]
    fn sigma_inside_tau_below((p, a, b, c, t) in divisor_case()) {
        let triple = binomial_triple(p, a, b, c, t.clone());
        let eps = q(1, 64);
        let shrunk = triple.with_divisor(triple.divisor().scaled(&(Rational::from_integer(1.into()) - eps)).unwrap()).unwrap();
        let s = sigma(&triple, &opts()).unwrap().ideal;
        let tau = tau_b(&shrunk, &opts()).unwrap();
        prop_assert!(tau.contains_ideal(&s).unwrap());
    }
}

#[test]
fn cartier_periods() {
    let r = Ring::new(5, &["x", "y"]).unwrap();
    let x = Polynomial::var(&r, 0).unwrap();
    let pair = |t: Rational| Triple::pair(QDivisor::single(t, x.clone()).unwrap());
    assert_eq!(cartier_period(&pair(q(1, 1))), Some(1));
    assert_eq!(cartier_period(&pair(q(1, 2))), Some(1));
    assert_eq!(cartier_period(&pair(q(1, 3))), Some(2));
    assert_eq!(cartier_period(&pair(q(4, 5))), None);
    let with_a = Triple::monomial(&r, MonomialIdeal::new(2, [ev(&[1, 0])]).unwrap(), q(1, 1)).unwrap();
    assert!(matches!(sigma_fast_cartier(&with_a, &opts()), Err(Error::Precondition(_))));
}

#[test]
fn nonconvergence_is_reported() {
    let r = Ring::new(2, &["x", "y"]).unwrap();
    let x = Polynomial::var(&r, 0).unwrap();
    let y = Polynomial::var(&r, 1).unwrap();
    let t = Triple::pair(QDivisor::single(q(1, 1), &x.pow(3) - &y.pow(2)).unwrap());
    let tight = SigmaOptions { n_max: 1, ..SigmaOptions::default() };
    assert!(matches!(sigma(&t, &tight), Err(Error::NonConvergence { iterations: 1 })));
}
