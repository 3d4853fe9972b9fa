//! `p^e`-adic decomposition of polynomials and Frobenius roots
//! `I^{[1/p^e]}`.
//!
//! Over `R = F_p[x_1..x_n]` the monomials `x^μ` with `0 <= μ_i < q = p^e`
//! form a free basis of `R` over `R^q`. Writing each generator as
//! `f = Σ_μ g_μ^q x^μ`, the smallest ideal `J` with `J^{[q]} ⊇ I` is the
//! ideal generated by all the coefficients `g_μ`. Coefficient roots are the
//! identity because `c^p = c` in `F_p`.

use std::collections::BTreeMap;

use crate::algebra::{ExponentVector, Polynomial, RingRef};
use crate::error::Result;
use crate::groebner::Ideal;
use crate::newton::MonomialIdeal;

/// `f = Σ_μ (g_μ)^{p^e} · x^μ` with every `μ_i < p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeDecomposition {
    ring: RingRef,
    e: u32,
    parts: BTreeMap<ExponentVector, Polynomial>,
}

impl PeDecomposition {
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Nonzero coefficient polynomials keyed by basis exponent `μ`.
    pub fn parts(&self) -> &BTreeMap<ExponentVector, Polynomial> {
        &self.parts
    }

    /// `Σ_μ g_μ^{p^e} x^μ`.
    pub fn reconstruct(&self) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for (mu, g) in &self.parts {
            let shifted = g.frobenius_power(self.e).mul_term(mu, 1);
            acc = &acc + &shifted;
        }
        acc
    }
}

fn power_of_p(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("p^e overflows u64")
}

/// Splits every term `c x^a` as `a = q s + r` and files `c x^s` under `x^r`.
pub fn pe_decompose(f: &Polynomial, e: u32) -> PeDecomposition {
    let ring = f.ring().clone();
    let q = power_of_p(ring.characteristic(), e);
    let mut buckets: BTreeMap<ExponentVector, Vec<(ExponentVector, u64)>> = BTreeMap::new();
    for t in f.terms() {
        let quot: ExponentVector = t.exp.iter().map(|a| (a as u64 / q) as u32).collect();
        let rem: ExponentVector = t.exp.iter().map(|a| (a as u64 % q) as u32).collect();
        buckets.entry(rem).or_default().push((quot, t.coeff));
    }
    let parts = buckets
        .into_iter()
        .map(|(mu, terms)| (mu, Polynomial::from_terms(&ring, terms)))
        .filter(|(_, g)| !g.is_zero())
        .collect();
    PeDecomposition { ring, e, parts }
}

/// `I^{[1/p^e]}`, returned with its reduced Gröbner basis as generators.
pub fn frobenius_root(ideal: &Ideal, e: u32) -> Result<Ideal> {
    if e == 0 {
        return ideal.canonical();
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let dec = pe_decompose(g, e);
        if dec.parts.values().any(Polynomial::is_unit) {
            return Ok(Ideal::unit(ideal.ring()).with_budget(ideal.budget()));
        }
        gens.extend(dec.parts.into_values());
    }
    Ideal::new(ideal.ring(), gens)?
        .with_budget(ideal.budget())
        .canonical()
}

/// Floor formula: generated by `⌊u / p^e⌋` over the generators `u`.
pub fn monomial_frobenius_root(m: &MonomialIdeal, p: u64, e: u32) -> MonomialIdeal {
    m.floor_root(power_of_p(p, e))
}

/// `(base · Π f_i^{N_i})^{[1/p^e]}` without expanding the full power.
///
/// Uses `(J · K^{[p]})^{[1/p]} = J^{[1/p]} · K` digit by digit: with
/// `N = Σ_k d_k p^k`, each round multiplies by `f^{d_k}` (`d_k < p`) and
/// takes a single p-th root; the part of `N` above `p^e` survives as an
/// ordinary factor `f^{⌊N/p^e⌋}`.
pub fn root_of_product(base: &Ideal, factors: &[(Polynomial, u64)], e: u32) -> Result<Ideal> {
    let ring = base.ring().clone();
    let p = ring.characteristic();
    let mut current = base.canonical()?;
    let mut rest: Vec<u64> = factors.iter().map(|(_, n)| *n).collect();
    for _ in 0..e {
        let mut factor = Polynomial::one(&ring);
        for ((f, _), n) in factors.iter().zip(rest.iter_mut()) {
            let digit = *n % p;
            if digit > 0 {
                factor = &factor * &f.pow_by_squaring(digit);
            }
            *n /= p;
        }
        let multiplied = if factor.is_unit() {
            current
        } else {
            current.mul_poly(&factor)?
        };
        current = frobenius_root(&multiplied, 1)?;
    }
    let mut tail = Polynomial::one(&ring);
    for ((f, _), n) in factors.iter().zip(&rest) {
        if *n > 0 {
            tail = &tail * &f.pow(*n);
        }
    }
    if tail.is_unit() {
        Ok(current)
    } else {
        current.mul_poly(&tail)?.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn ring(p: u64) -> (RingRef, Polynomial, Polynomial) {
        let r = Ring::new(p, &["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0).unwrap();
        let y = Polynomial::var(&r, 1).unwrap();
        (r, x, y)
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(e)
    }

    #[test]
    fn decomposition_examples() {
        let (r, x, y) = ring(2);
        let d = pe_decompose(&(&x.pow(3) + &y.pow(2)), 1);
        assert_eq!(d.parts().len(), 2);
        assert_eq!(d.parts()[&ev(&[1, 0])], x);
        assert_eq!(d.parts()[&ev(&[0, 0])], y);

        let d = pe_decompose(&x.pow(2), 1);
        assert_eq!(d.parts()[&ev(&[0, 0])], x);

        let c = Polynomial::constant(&r, 1);
        assert_eq!(pe_decompose(&c, 1).parts()[&ev(&[0, 0])], c);
    }

    #[test]
    fn root_examples() {
        let (r, x, y) = ring(5);
        assert!(frobenius_root(&Ideal::principal(x.pow(4)), 1).unwrap().is_unit().unwrap());
        assert_eq!(frobenius_root(&Ideal::principal(x.pow(5)), 1).unwrap().generators(), std::slice::from_ref(&x));

        let (r2, x2, y2) = ring(2);
        let f = (&x2.pow(3) + &y2.pow(2)).pow(3);
        let root = frobenius_root(&Ideal::principal(f), 2).unwrap();
        assert!(root.equals(&Ideal::new(&r2, [x2, y2]).unwrap()).unwrap());
        let _ = (r, y);
    }

    #[test]
    fn product_root_matches_direct_route() {
        let (r, x, y) = ring(3);
        let f = &x.pow(3) - &y.pow(2);
        let g = &x + &y.pow(2);
        let base = Ideal::new(&r, [x.clone(), y.clone()]).unwrap();
        for e in 1..=3 {
            for (nf, ng) in [(0u64, 0u64), (8, 1), (13, 5), (26, 2), (40, 0)] {
                let q = 3u64.pow(e);
                let direct = base.mul_poly(&(&f.pow(nf) * &g.pow(ng))).unwrap();
                let expected = frobenius_root(&direct, e).unwrap();
                let got = root_of_product(&base, &[(f.clone(), nf), (g.clone(), ng)], e).unwrap();
                assert!(got.equals(&expected).unwrap(), "e={e} q={q} nf={nf} ng={ng}");
            }
        }
    }

    #[test]
    fn monomial_floor() {
        let m = MonomialIdeal::new(2, [ev(&[3, 5])]).unwrap();
        assert_eq!(monomial_frobenius_root(&m, 2, 1).generators(), &[ev(&[1, 2])]);
        let m = MonomialIdeal::new(1, [ev(&[24])]).unwrap();
        assert!(monomial_frobenius_root(&m, 5, 2).is_unit());
        let m = MonomialIdeal::new(1, [ev(&[25])]).unwrap();
        assert_eq!(monomial_frobenius_root(&m, 5, 2).generators(), &[ev(&[1])]);
    }
}
