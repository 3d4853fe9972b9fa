use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::FieldElement;
use super::monomial::ExponentVector;
use super::ring::{same_ring, RingRef};
use crate::error::{Error, Result};

/// A single nonzero term `coeff * x^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: ExponentVector,
    pub coeff: u64,
}

/// Sparse polynomial over a prime field.
///
/// Terms are stored sorted by the ring's monomial order, largest first, with
/// no zero coefficients and no repeated exponent vectors.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        Self::monomial(ring, ExponentVector::zero(ring.nvars()), c)
    }

    pub fn monomial(ring: &RingRef, exp: ExponentVector, c: i64) -> Self {
        assert_eq!(exp.len(), ring.nvars(), "exponent vector length");
        let coeff = ring.field().reduce_i64(c);
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { exp, coeff }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable with index `i`.
    pub fn var(ring: &RingRef, i: usize) -> Result<Self> {
        ring.check_index(i)?;
        Ok(Self::monomial(ring, ExponentVector::unit(ring.nvars(), i, 1), 1))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted)
    /// terms; coefficients are residues mod p.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, u64)>,
    {
        let field = ring.field();
        let p = field.characteristic();
        let mut acc: HashMap<ExponentVector, u64> = HashMap::new();
        for (exp, c) in terms {
            debug_assert_eq!(exp.len(), ring.nvars());
            let slot = acc.entry(exp).or_insert(0);
            *slot = field.add(*slot, c % p);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef, acc: HashMap<ExponentVector, u64>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(exp, coeff)| Term { exp, coeff })
            .collect();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.exp, &a.exp));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exp.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.terms
            .first()
            .map(|t| self.ring.field().element(t.coeff as i64))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.degree()).max()
    }

    /// Coefficient of `x^exp` (zero if absent).
    pub fn coefficient(&self, exp: &ExponentVector) -> FieldElement {
        let c = self
            .terms
            .iter()
            .find(|t| &t.exp == exp)
            .map_or(0, |t| t.coeff);
        self.ring.field().element(c as i64)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: u64| if negate { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].exp, &b[j].exp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        exp: b[j].exp.clone(),
                        coeff: rhs(b[j].coeff),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a[i].coeff, rhs(b[j].coeff));
                    if c != 0 {
                        out.push(Term {
                            exp: a[i].exp.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            exp: t.exp.clone(),
            coeff: rhs(t.coeff),
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.is_monomial() {
            let t = &other.terms[0];
            return self.mul_term(&t.exp, t.coeff);
        }
        if self.is_monomial() {
            let t = &self.terms[0];
            return other.mul_term(&t.exp, t.coeff);
        }
        let field = self.ring.field();
        let mut acc: HashMap<ExponentVector, u64> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for o in &other.terms {
                let slot = acc.entry(s.exp.add(&o.exp)).or_insert(0);
                *slot = field.add(*slot, field.mul(s.coeff, o.coeff));
            }
        }
        Self::from_map(&self.ring, acc)
    }

    /// Multiplication by `coeff * x^exp`; the order is preserved, so no
    /// re-sorting is needed.
    pub fn mul_term(&self, exp: &ExponentVector, coeff: u64) -> Polynomial {
        let field = self.ring.field();
        let coeff = coeff % field.characteristic();
        if coeff == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.add(exp),
                    coeff: field.mul(t.coeff, coeff),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        self.mul_term(&ExponentVector::zero(self.ring.nvars()), c)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(self.ring.field().inv(t.coeff)),
        }
    }

    /// `self^n` by repeated squaring on the base-p digits of `n`: writing
    /// `n = sum d_k p^k` gives `f^n = prod_k (f^{d_k})^{p^k}`, and the p^k-th
    /// powers are free over F_p.
    pub fn pow(&self, n: u64) -> Polynomial {
        let p = self.ring.characteristic();
        let mut result = Polynomial::one(&self.ring);
        let mut rest = n;
        let mut k = 0u32;
        while rest > 0 {
            let digit = rest % p;
            if digit > 0 {
                let factor = self.pow_by_squaring(digit).frobenius_power(k);
                result = result.mul_impl(&factor);
            }
            rest /= p;
            k += 1;
        }
        result
    }

    pub(crate) fn pow_by_squaring(&self, mut n: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// `f^{p^e}`: over F_p this only scales exponent vectors.
    pub fn frobenius_power(&self, e: u32) -> Polynomial {
        if e == 0 {
            return self.clone();
        }
        let q = self
            .ring
            .characteristic()
            .checked_pow(e)
            .and_then(|q| u32::try_from(q).ok())
            .expect("Frobenius exponent overflow");
        // scaling by q preserves both lex and grevlex comparisons
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.scale(q),
                    coeff: t.coeff,
                })
                .collect(),
        }
    }

    /// Sets variable `k` to zero, landing in the ring without `x_k`.
    pub fn substitute_zero(&self, k: usize) -> Result<Polynomial> {
        let target = self.ring.without(k)?;
        self.substitute_zero_into(k, &target)
    }

    /// As [`substitute_zero`](Self::substitute_zero) with a prebuilt target
    /// ring (which must be `self.ring().without(k)`).
    pub fn substitute_zero_into(&self, k: usize, target: &RingRef) -> Result<Polynomial> {
        self.ring.check_index(k)?;
        if target.nvars() + 1 != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .filter(|t| t.exp.get(k) == 0)
                .map(|t| (t.exp.remove(k), t.coeff)),
        ))
    }

    /// Re-expresses the polynomial in a ring with the same variables and a
    /// different monomial order.
    pub fn to_ring(&self, ring: &RingRef) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| (t.exp.clone(), t.coeff)),
        ))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, t) in self.terms.iter().enumerate() {
            let c = field.element(t.coeff as i64).signed();
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.exp.is_constant() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", self.ring.format_monomial(&t.exp))?;
            } else {
                write!(f, "{mag}*{}", self.ring.format_monomial(&t.exp))?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods where
// the operands come from untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.characteristic() - 1)
    }
}
