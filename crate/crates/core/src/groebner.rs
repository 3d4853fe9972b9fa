//! Reduced Gröbner bases (Buchberger) and ideal arithmetic with decidable
//! membership and equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{same_ring, ExponentVector, Polynomial, RingRef};
use crate::error::{Error, Result};

/// Limits that abort a Buchberger run before it can exhaust memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_elements: usize,
    pub max_degree: u64,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget {
            max_elements: 5_000,
            max_degree: 1_000_000,
        }
    }
}

/// A reduced Gröbner basis: monic, autoreduced, sorted by leading monomial
/// in decreasing order. For a fixed monomial order it is the canonical
/// representative of its ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }
}

fn leading_exp(f: &Polynomial) -> &ExponentVector {
    &f.leading_term().expect("nonzero polynomial").exp
}

/// Remainder of `f` on division by `divisors` (all terms fully reduced).
fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    'outer: while let Some(lt) = rest.leading_term().cloned() {
        for g in divisors {
            let glt = g.leading_term().expect("nonzero divisor");
            if let Some(shift) = lt.exp.checked_sub(&glt.exp) {
                let c = field.mul(lt.coeff, field.inv(glt.coeff));
                rest = &rest - &g.mul_term(&shift, c);
                continue 'outer;
            }
        }
        remainder.push((lt.exp.clone(), lt.coeff));
        rest = Polynomial::from_terms(ring, rest.terms()[1..].iter().map(|t| (t.exp.clone(), t.coeff)));
    }
    Polynomial::from_terms(ring, remainder)
}

/// Remainder of `f` on division by a Gröbner basis; zero iff `f` lies in the
/// ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if !same_ring(f.ring(), &basis.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(reduce(f, &basis.elements))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (a, b) = (leading_exp(f), leading_exp(g));
    let lcm = a.lcm(b);
    // both operands are monic
    let fa = f.mul_term(&lcm.checked_sub(a).unwrap(), 1);
    let gb = g.mul_term(&lcm.checked_sub(b).unwrap(), 1);
    &fa - &gb
}

struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

fn check_budget(f: &Polynomial, count: usize, budget: &GroebnerBudget) -> Result<()> {
    if count > budget.max_elements {
        return Err(Error::DegreeGuard(format!(
            "more than {} basis elements",
            budget.max_elements
        )));
    }
    let deg = f.total_degree().unwrap_or(0);
    if deg > budget.max_degree {
        return Err(Error::DegreeGuard(format!(
            "basis element of degree {deg} exceeds {}",
            budget.max_degree
        )));
    }
    Ok(())
}

/// Buchberger completion with the normal selection strategy (smallest lcm
/// first, ties broken by pair index), the coprime criterion and the chain
/// criterion, followed by minimalization and autoreduction.
///
/// Inputs are fed in increasing leading-monomial order and each is reduced
/// against the basis built so far, so redundant generators cost one
/// reduction rather than a batch of S-pairs.
pub fn reduced_groebner(
    ring: &RingRef,
    generators: &[Polynomial],
    budget: &GroebnerBudget,
) -> Result<GroebnerBasis> {
    let order = ring.order();
    let mut inputs: Vec<Polynomial> = Vec::with_capacity(generators.len());
    for g in generators {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_unit() {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                elements: vec![Polynomial::one(ring)],
            });
        }
        if !g.is_zero() {
            inputs.push(g.monic());
        }
    }
    inputs.sort_by(|a, b| order.cmp(leading_exp(a), leading_exp(b)).then(a.num_terms().cmp(&b.num_terms())));
    inputs.dedup();

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed: std::collections::HashSet<(usize, usize)> = Default::default();

    let add = |h: Polynomial,
                   basis: &mut Vec<Polynomial>,
                   pairs: &mut Vec<Pair>|
     -> Result<bool> {
        check_budget(&h, basis.len() + 1, budget)?;
        let unit = h.is_unit();
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.push(Pair {
                i,
                j,
                lcm: leading_exp(g).lcm(leading_exp(&h)),
            });
        }
        basis.push(h);
        Ok(unit)
    };

    for input in inputs {
        let h = reduce(&input, &basis);
        if h.is_zero() {
            continue;
        }
        if add(h.monic(), &mut basis, &mut pairs)? {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                elements: vec![Polynomial::one(ring)],
            });
        }
        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    order
                        .cmp(&pa.lcm, &pb.lcm)
                        .then((pa.j, pa.i).cmp(&(pb.j, pb.i)))
                })
                .unwrap();
            let Pair { i, j, lcm } = pairs.swap_remove(best);
            processed.insert((i, j));
            let (fi, fj) = (&basis[i], &basis[j]);
            // coprime leading monomials: S-polynomial reduces to zero
            if leading_exp(fi).add(leading_exp(fj)) == lcm {
                continue;
            }
            let pending = |a: usize, b: usize| {
                let key = if a < b { (a, b) } else { (b, a) };
                !processed.contains(&key)
            };
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && leading_exp(&basis[k]).divides(&lcm)
                    && !pending(i, k)
                    && !pending(j, k)
            });
            if chain {
                continue;
            }
            let s = reduce(&s_polynomial(fi, fj), &basis);
            if s.is_zero() {
                continue;
            }
            if add(s.monic(), &mut basis, &mut pairs)? {
                return Ok(GroebnerBasis {
                    ring: ring.clone(),
                    elements: vec![Polynomial::one(ring)],
                });
            }
        }
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: autoreduce(basis),
    })
}

fn autoreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = basis.first() else {
        return basis;
    };
    let order = first.ring().order().clone();
    basis.sort_by(|a, b| order.cmp(leading_exp(a), leading_exp(b)));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| leading_exp(m).divides(leading_exp(&g))) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        // leading term is irreducible by minimality, so only tails change
        reduced.push(reduce(&minimal[i], &others).monic());
    }
    reduced.sort_by(|a, b| order.cmp(leading_exp(b), leading_exp(a)));
    reduced
}

/// An ideal of a polynomial ring, given by generators, with its reduced
/// Gröbner basis computed lazily and at most once.
///
/// Equality and containment always go through reduced bases; the generator
/// list itself carries no canonical meaning.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    budget: GroebnerBudget,
    basis: OnceLock<Result<GroebnerBasis>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Zero generators are dropped, the rest made monic and deduplicated.
    pub fn new(ring: &RingRef, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            budget: GroebnerBudget::default(),
            basis: OnceLock::new(),
        })
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, [Polynomial::one(ring)]).unwrap()
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::new(ring, []).unwrap()
    }

    pub fn principal(f: Polynomial) -> Self {
        let ring = f.ring().clone();
        Self::new(&ring, [f]).unwrap()
    }

    pub fn with_budget(mut self, budget: GroebnerBudget) -> Self {
        if budget != self.budget {
            self.budget = budget;
            self.basis = OnceLock::new();
        }
        self
    }

    pub fn budget(&self) -> GroebnerBudget {
        self.budget
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn check_ring(&self, other: &RingRef) -> Result<()> {
        if same_ring(&self.ring, other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        self.basis
            .get_or_init(|| reduced_groebner(&self.ring, &self.generators, &self.budget))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The same ideal with its reduced basis as generator list.
    pub fn canonical(&self) -> Result<Ideal> {
        let basis = self.groebner()?.clone();
        let cell = OnceLock::new();
        let generators = basis.elements.clone();
        let _ = cell.set(Ok(basis));
        Ok(Ideal {
            ring: self.ring.clone(),
            generators,
            budget: self.budget,
            basis: cell,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.generators.iter().any(Polynomial::is_unit) {
            return Ok(true);
        }
        Ok(self.groebner()?.is_unit())
    }

    /// True if the ideal is generated by monomials (its reduced basis then
    /// consists of monomials).
    pub fn is_monomial(&self) -> Result<bool> {
        if self.generators.iter().all(Polynomial::is_monomial) {
            return Ok(true);
        }
        Ok(self.groebner()?.elements.iter().all(Polynomial::is_monomial))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_ring(f.ring())?;
        Ok(normal_form(f, self.groebner()?)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(&other.ring)?;
        if self.is_unit()? {
            return Ok(true);
        }
        let basis = self.groebner()?;
        Ok(other
            .generators
            .iter()
            .all(|g| reduce(g, &basis.elements).is_zero()))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(&other.ring)?;
        Ok(self.groebner()?.elements == other.groebner()?.elements)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let gens = self.generators.iter().chain(&other.generators).cloned();
        Ideal::new(&self.ring, gens)?.with_budget(self.budget).canonical()
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.ring)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)?.with_budget(self.budget).canonical()
    }

    /// `self · (f)` without re-canonicalizing.
    pub fn mul_poly(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_ring(f.ring())?;
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| g * f).collect();
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    /// `I^{[p^e]}`, generated by the `p^e`-th powers of the generators.
    pub fn bracket_power(&self, e: u32) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.frobenius_power(e));
        Ideal::new(&self.ring, gens)?.with_budget(self.budget).canonical()
    }

    /// Image in `R/(x_k)`, expressed in the ring without `x_k`.
    pub fn image_in_quotient(&self, k: usize) -> Result<Ideal> {
        let target = self.ring.without(k)?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute_zero_into(k, &target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, gens)?.with_budget(self.budget).canonical()
    }

    /// The same ideal over the same variables with a different order.
    pub fn to_ring(&self, ring: &RingRef) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens)?.with_budget(self.budget))
    }
}

/// Compares two leading monomials under the ring order; exposed for callers
/// that sort generator lists.
pub fn compare_leading(a: &Polynomial, b: &Polynomial) -> Ordering {
    match (a.leading_term(), b.leading_term()) {
        (Some(x), Some(y)) => a.ring().order().cmp(&x.exp, &y.exp),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
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

    fn ideal(r: &RingRef, gens: &[&Polynomial]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| (*g).clone())).unwrap()
    }

    #[test]
    fn normal_forms() {
        let (r, x, y) = ring(5);
        let i = ideal(&r, &[&x.pow(2), &y]);
        assert!(normal_form(&y, i.groebner().unwrap()).unwrap().is_zero());
        let j = ideal(&r, &[&y]);
        assert_eq!(normal_form(&x, j.groebner().unwrap()).unwrap(), x);
        assert_eq!(normal_form(&(&x.pow(2) + &y), j.groebner().unwrap()).unwrap(), x.pow(2));
    }

    #[test]
    fn reduced_bases() {
        let (r, x, y) = ring(5);
        let gb = ideal(&r, &[&(&x + &y), &y]).groebner().unwrap().clone();
        assert_eq!(gb.elements(), &[x.clone(), y.clone()]);

        let f = &x.pow(3) - &y.pow(2);
        let gb = ideal(&r, &[&f.scale(3)]).groebner().unwrap().clone();
        assert_eq!(gb.elements(), std::slice::from_ref(&f));

        let gb = ideal(&r, &[&x.pow(2), &y]).groebner().unwrap().clone();
        assert_eq!(gb.elements(), &[x.pow(2), y.clone()]);
    }

    #[test]
    fn membership() {
        let (r, x, y) = ring(5);
        let m = ideal(&r, &[&x, &y]);
        assert!(m.contains(&(&x.pow(3) + &(&x * &y))).unwrap());
        assert!(!ideal(&r, &[&x.pow(2), &y]).contains(&x).unwrap());
        let f = &x.pow(3) - &y.pow(2);
        assert!(ideal(&r, &[&f]).contains(&f.pow(2)).unwrap());
    }

    #[test]
    fn equality() {
        let (r, x, y) = ring(5);
        assert!(ideal(&r, &[&x, &y]).equals(&ideal(&r, &[&(&x + &y), &y])).unwrap());
        assert!(!ideal(&r, &[&x]).equals(&ideal(&r, &[&x.pow(2)])).unwrap());
        let one = Polynomial::one(&r);
        assert!(Ideal::unit(&r)
            .equals(&ideal(&r, &[&x, &(&x + &one)]))
            .unwrap());
        assert!(!Ideal::unit(&r).equals(&Ideal::zero(&r)).unwrap());
    }

    #[test]
    fn sums_and_products() {
        let (r, x, y) = ring(5);
        let sum = ideal(&r, &[&x]).sum(&ideal(&r, &[&y])).unwrap();
        assert!(sum.equals(&ideal(&r, &[&x, &y])).unwrap());
        let prod = ideal(&r, &[&x]).product(&ideal(&r, &[&y])).unwrap();
        assert_eq!(prod.generators(), &[&x * &y]);
        let m = ideal(&r, &[&x, &y]);
        let sq = m.product(&m).unwrap();
        assert_eq!(sq.generators(), &[x.pow(2), &x * &y, y.pow(2)]);
    }

    #[test]
    fn bracket_powers() {
        let (r, x, y) = ring(2);
        let b = ideal(&r, &[&x, &y]).bracket_power(1).unwrap();
        assert_eq!(b.generators(), &[x.pow(2), y.pow(2)]);
        assert_eq!(
            ideal(&r, &[&x.pow(2)]).bracket_power(2).unwrap().generators(),
            &[x.pow(8)]
        );
        let (r, x, y) = ring(3);
        let b = ideal(&r, &[&(&x + &y)]).bracket_power(1).unwrap();
        assert_eq!(b.generators(), &[&x.pow(3) + &y.pow(3)]);
    }

    #[test]
    fn quotient_images() {
        let (r, x, y) = ring(5);
        let img = ideal(&r, &[&x.pow(2), &y]).image_in_quotient(0).unwrap();
        assert_eq!(img.to_string(), "(y)");
        assert!(ideal(&r, &[&x]).image_in_quotient(0).unwrap().is_zero());
        let img = ideal(&r, &[&(&x + &y.pow(2))]).image_in_quotient(0).unwrap();
        assert_eq!(img.to_string(), "(y^2)");
        assert!(matches!(
            ideal(&r, &[&x]).image_in_quotient(3),
            Err(Error::InvalidVariable { .. })
        ));
    }

    #[test]
    fn budget_aborts() {
        let (r, x, y) = ring(7);
        let tiny = GroebnerBudget {
            max_elements: 1,
            max_degree: 100,
        };
        let i = ideal(&r, &[&(&x.pow(2) - &y), &(&(&x * &y) - &Polynomial::one(&r))]).with_budget(tiny);
        assert!(matches!(i.groebner(), Err(Error::DegreeGuard(_))));
    }

    #[test]
    fn cyclic_example() {
        // grevlex basis of (x^2 - y, xy - 1): x^2 - y, xy - 1, y^2 - x
        let (r, x, y) = ring(7);
        let one = Polynomial::one(&r);
        let i = ideal(&r, &[&(&x.pow(2) - &y), &(&(&x * &y) - &one)]);
        let gb = i.groebner().unwrap();
        assert_eq!(gb.elements().len(), 3);
        assert_eq!(gb.elements()[2], &y.pow(2) - &x);
        assert!(i.contains(&(&y.pow(3) - &one)).unwrap());
        assert!(i.contains(&(&x - &y.pow(2))).unwrap());
    }
}
