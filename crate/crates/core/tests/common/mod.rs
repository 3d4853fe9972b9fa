#![allow(dead_code)]

use fpure::algebra::{ExponentVector, Polynomial, Rational, RingRef};
use fpure::newton::MonomialIdeal;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::from_slice(e)
}

/// Linear inequalities `a·λ <= b`, decided by Fourier–Motzkin elimination.
pub fn fm_feasible(mut rows: Vec<(Vec<Rational>, Rational)>, nvars: usize) -> bool {
    for k in (0..nvars).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in rows {
            if a[k].is_positive() {
                pos.push((a, b));
            } else if a[k].is_negative() {
                neg.push((a, b));
            } else {
                rest.push((a, b));
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                // scale so the k-th coefficients cancel
                let sp = -an[k].clone();
                let sn = ap[k].clone();
                let a: Vec<Rational> = ap.iter().zip(an).map(|(x, y)| x * &sp + y * &sn).collect();
                let b = bp * &sp + bn * &sn;
                rest.push((a, b));
            }
        }
        rows = rest;
    }
    rows.iter().all(|(_, b)| !b.is_negative())
}

/// Is `u` in `t·P(a)`, decided by searching for a convex combination of
/// the generators lying below `u / t`.
pub fn in_scaled_newton(a: &MonomialIdeal, u: &[u32], t: &Rational) -> bool {
    let gens = a.generators();
    let m = gens.len();
    let mut rows = Vec::new();
    for (i, &ui) in u.iter().enumerate() {
        let coeffs = gens.iter().map(|g| Rational::from_integer(g.get(i).into())).collect();
        rows.push((coeffs, Rational::from_integer(ui.into()) / t));
    }
    for k in 0..m {
        let mut c = vec![Rational::zero(); m];
        c[k] = -Rational::one();
        rows.push((c, Rational::zero()));
    }
    rows.push((vec![Rational::one(); m], Rational::one()));
    rows.push((vec![-Rational::one(); m], -Rational::one()));
    fm_feasible(rows, m)
}

/// Closed Newton-ideal membership of `x^v` at `t`: `v + 1 ∈ t·P(a)`.
pub fn closed_member(a: &MonomialIdeal, v: &ExponentVector, t: &Rational) -> bool {
    let shifted: Vec<u32> = v.iter().map(|e| e + 1).collect();
    in_scaled_newton(a, &shifted, t)
}

/// A proper nonzero monomial ideal with up to `max_gens` generators.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, nvars: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let k = rng.gen_range(1..=max_gens);
        let gens: Vec<ExponentVector> = (0..k)
            .map(|_| (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
            .collect();
        let m = MonomialIdeal::new(nvars, gens).unwrap();
        if m.is_proper() {
            return m;
        }
    }
}

/// Positive rational with denominator in `1..=max_den`, optionally coprime
/// to `p`, and value at most `max`.
pub fn random_t(rng: &mut ChaCha8Rng, max_den: i64, coprime_to: Option<u64>, max: i64) -> Rational {
    loop {
        let d = rng.gen_range(1..=max_den);
        let n = rng.gen_range(1..=max * d);
        let t = q(n, d);
        let den = t.denom().clone();
        if let Some(p) = coprime_to {
            if (&den % p).is_zero() {
                continue;
            }
        }
        return t;
    }
}

pub fn choose<T: Copy>(rng: &mut ChaCha8Rng, items: &[T]) -> T {
    *items.choose(rng).unwrap()
}

/// Random polynomial with at most `terms` terms of degree at most `deg`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, ring: &RingRef, terms: usize, deg: u32) -> Polynomial {
    let p = ring.characteristic();
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        (0..rng.gen_range(1..=terms)).map(|_| {
            let e: ExponentVector = (0..n).map(|_| rng.gen_range(0..=deg)).collect();
            (e, rng.gen_range(1..p))
        }),
    )
}
