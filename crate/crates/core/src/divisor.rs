use std::fmt;

use num_traits::{One, Signed};

use crate::algebra::{ceil_mul, same_ring, Polynomial, Rational, RingRef};
use crate::error::{Error, Result};
use crate::newton::MonomialIdeal;

/// One summand `coefficient · div(poly)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorEntry {
    pub coefficient: Rational,
    pub poly: Polynomial,
}

/// A formal effective Q-divisor `Σ t_i div(f_i)`.
///
/// Entries are taken literally: the pair `(t, f)` contributes `f^{⌈t N⌉}`
/// as written, without factoring `f`. So `1/p · div(x^p)` and `1 · div(x)`
/// are different inputs, and can have different non-F-pure ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDivisor {
    ring: RingRef,
    entries: Vec<DivisorEntry>,
}

impl QDivisor {
    pub fn empty(ring: &RingRef) -> Self {
        QDivisor {
            ring: ring.clone(),
            entries: Vec::new(),
        }
    }

    pub fn new(ring: &RingRef, entries: impl IntoIterator<Item = (Rational, Polynomial)>) -> Result<Self> {
        let mut out = Vec::new();
        for (coefficient, poly) in entries {
            if !same_ring(ring, poly.ring()) {
                return Err(Error::RingMismatch);
            }
            if !coefficient.is_positive() {
                return Err(Error::InvalidInput(format!(
                    "divisor coefficient {coefficient} must be positive"
                )));
            }
            if poly.is_constant() {
                return Err(Error::InvalidInput(format!(
                    "divisor component {poly} must be nonconstant"
                )));
            }
            out.push(DivisorEntry { coefficient, poly });
        }
        Ok(QDivisor {
            ring: ring.clone(),
            entries: out,
        })
    }

    /// `coefficient · div(poly)`.
    pub fn single(coefficient: Rational, poly: Polynomial) -> Result<Self> {
        let ring = poly.ring().clone();
        Self::new(&ring, [(coefficient, poly)])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn entries(&self) -> &[DivisorEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Formal sum (entries are concatenated).
    pub fn plus(&self, other: &QDivisor) -> Result<QDivisor> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(QDivisor {
            ring: self.ring.clone(),
            entries,
        })
    }

    /// Every coefficient multiplied by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Result<QDivisor> {
        Self::new(
            &self.ring,
            self.entries
                .iter()
                .map(|e| (&e.coefficient * factor, e.poly.clone())),
        )
    }

    /// `(f_i, ⌈t_i · n⌉)` for every entry.
    pub fn exponents(&self, n: u64) -> Vec<(Polynomial, u64)> {
        self.entries
            .iter()
            .map(|e| (e.poly.clone(), ceil_mul(&e.coefficient, n)))
            .collect()
    }
}

pub(crate) fn format_rational(t: &Rational) -> String {
    if t.denom().is_one() {
        t.numer().to_string()
    } else {
        format!("{}/{}", t.numer(), t.denom())
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*({})", format_rational(&e.coefficient), e.poly)?;
        }
        Ok(())
    }
}

/// A triple `(R, Δ, a^t)` over a polynomial ring `R = F_p[x_1..x_n]`, with
/// `a` a monomial ideal (or the unit ideal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    divisor: QDivisor,
    ideal: Option<MonomialIdeal>,
    t: Rational,
}

impl Triple {
    /// `a = None` stands for the unit ideal, where `t` plays no role.
    pub fn new(divisor: QDivisor, ideal: Option<MonomialIdeal>, t: Rational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::InvalidInput(format!("exponent t = {t} must be positive")));
        }
        let ideal = match ideal {
            Some(a) if a.nvars() != divisor.ring().nvars() => {
                return Err(Error::DimensionMismatch {
                    expected: divisor.ring().nvars(),
                    got: a.nvars(),
                })
            }
            Some(a) if a.is_zero() => {
                return Err(Error::InvalidInput("the ideal a must be nonzero".into()))
            }
            Some(a) if a.is_unit() => None,
            other => other,
        };
        Ok(Triple { divisor, ideal, t })
    }

    /// The pair `(R, Δ)`.
    pub fn pair(divisor: QDivisor) -> Self {
        Triple {
            divisor,
            ideal: None,
            t: Rational::one(),
        }
    }

    /// The pair `(R, a^t)`.
    pub fn monomial(ring: &RingRef, ideal: MonomialIdeal, t: Rational) -> Result<Self> {
        Self::new(QDivisor::empty(ring), Some(ideal), t)
    }

    pub fn ring(&self) -> &RingRef {
        self.divisor.ring()
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    /// `None` when `a` is the unit ideal.
    pub fn ideal(&self) -> Option<&MonomialIdeal> {
        self.ideal.as_ref()
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn with_divisor(&self, divisor: QDivisor) -> Result<Self> {
        Self::new(divisor, self.ideal.clone(), self.t.clone())
    }

    pub fn with_exponent(&self, t: Rational) -> Result<Self> {
        Self::new(self.divisor.clone(), self.ideal.clone(), t)
    }
}
