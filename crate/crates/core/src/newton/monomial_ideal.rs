use std::fmt;

use crate::algebra::{ExponentVector, Polynomial, Ring, RingRef};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// A monomial ideal, stored as the antichain of its minimal generators in
/// increasing lexicographic order of exponent vectors.
///
/// The unit ideal is the single generator `0`; the zero ideal has no
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

pub(crate) fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| (g.degree(), g.clone()));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let gens: Vec<ExponentVector> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.len() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: bad.len(),
            });
        }
        Ok(MonomialIdeal {
            nvars,
            generators: minimalize(gens),
        })
    }

    pub(crate) fn from_minimal(nvars: usize, generators: Vec<ExponentVector>) -> Self {
        MonomialIdeal {
            nvars,
            generators: minimalize(generators),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: vec![ExponentVector::zero(nvars)],
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Proper and nonzero.
    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(v))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.nvars, other.nvars);
        Self::from_minimal(
            self.nvars,
            self.generators.iter().chain(&other.generators).cloned().collect(),
        )
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.add(b));
            }
        }
        Self::from_minimal(self.nvars, gens)
    }

    /// Ordinary power `a^n`.
    pub fn pow(&self, mut n: u64) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.nvars);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.product(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Generated by the componentwise floors `⌊u / q⌋` of the generators.
    pub fn floor_root(&self, q: u64) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|e| (e as u64 / q) as u32).collect())
            .collect();
        Self::from_minimal(self.nvars, gens)
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.nvars];
        for g in &self.generators {
            for (i, e) in g.iter().enumerate() {
                m[i] = m[i].max(e);
            }
        }
        m
    }

    pub fn to_ideal(&self, ring: &RingRef) -> Result<Ideal> {
        if ring.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: self.nvars,
            });
        }
        Ideal::new(
            ring,
            self.generators
                .iter()
                .map(|g| Polynomial::monomial(ring, g.clone(), 1)),
        )?
        .canonical()
    }

    /// The monomial ideal equal to `ideal`, if `ideal` is monomial.
    pub fn from_ideal(ideal: &Ideal) -> Result<Option<MonomialIdeal>> {
        let n = ideal.ring().nvars();
        if ideal.generators().iter().all(Polynomial::is_monomial) {
            let gens = ideal
                .generators()
                .iter()
                .map(|g| g.leading_term().unwrap().exp.clone());
            return Ok(Some(Self::from_minimal(n, gens.collect())));
        }
        let basis = ideal.groebner()?;
        if !basis.elements().iter().all(Polynomial::is_monomial) {
            return Ok(None);
        }
        let gens = basis
            .elements()
            .iter()
            .map(|g| g.leading_term().unwrap().exp.clone());
        Ok(Some(Self::from_minimal(n, gens.collect())))
    }

    /// Renders as `(x^2, x*y, y^3)` with the ring's variable names.
    pub fn format_with(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.generators.iter().map(|g| ring.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// Minimal generators of an up-closed set of lattice points described by
/// the smallest admissible last coordinate for each prefix.
///
/// `min_last(prefix)` must return the least `v_n` with `(prefix, v_n)` in
/// the set, or `None` when no such point exists. Prefixes range over the box
/// `[0, bound_i]` for the first `n - 1` coordinates, which must contain every
/// minimal generator's prefix. For `n == 0` the set is decided by
/// `min_last(&[])`.
pub(crate) fn staircase<F>(nvars: usize, bounds: &[u32], mut min_last: F) -> MonomialIdeal
where
    F: FnMut(&[u32]) -> Option<u32>,
{
    if nvars == 0 {
        return match min_last(&[]) {
            Some(_) => MonomialIdeal::unit(0),
            None => MonomialIdeal::zero(0),
        };
    }
    let mut gens = Vec::new();
    let mut prefix = vec![0u32; nvars - 1];
    // odometer over the prefix box
    'outer: loop {
        if let Some(last) = min_last(&prefix) {
            let mut v = prefix.clone();
            v.push(last);
            gens.push(ExponentVector::from_slice(&v));
        }
        for i in (0..nvars - 1).rev() {
            if prefix[i] < bounds[i] {
                prefix[i] += 1;
                for slot in prefix.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                continue 'outer;
            }
        }
        break;
    }
    MonomialIdeal::from_minimal(nvars, gens)
}
