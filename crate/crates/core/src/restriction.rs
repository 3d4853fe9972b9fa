//! The restriction theorem for non-F-pure ideals along a coordinate
//! hyperplane `D = V(x_k)`.
//!
//! For `D` a coordinate hyperplane the F-different `B_{R/Q}` is the literal
//! reduction of the pairs `(t_i, f_i)` modulo `x_k`, and the theorem reads
//! `σ(R, D + B)|_D = σ(R/(x_k), B_{R/Q})`.

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::algebra::{Polynomial, Rational, RingRef};
use crate::charp::{sigma, QDivisor, SigmaOptions, SigmaResult, Triple};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

#[derive(Debug, Clone)]
pub struct RestrictionProblem {
    ring: RingRef,
    k: usize,
    b: QDivisor,
    pub opts: SigmaOptions,
}

impl RestrictionProblem {
    pub fn new(k: usize, b: QDivisor, opts: SigmaOptions) -> Result<Self> {
        let ring = b.ring().clone();
        ring.check_index(k)?;
        for entry in b.entries() {
            if entry.poly.substitute_zero(k)?.is_zero() {
                return Err(Error::Precondition(format!(
                    "{} vanishes on the hyperplane {} = 0",
                    entry.poly,
                    ring.vars()[k]
                )));
            }
        }
        Ok(RestrictionProblem { ring, k, b, opts })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn hyperplane(&self) -> usize {
        self.k
    }

    pub fn boundary(&self) -> &QDivisor {
        &self.b
    }

    /// `D + B` with `D = 1·div(x_k)`.
    pub fn total_divisor(&self) -> Result<QDivisor> {
        let d = QDivisor::single(Rational::one(), Polynomial::var(&self.ring, self.k)?)?;
        d.plus(&self.b)
    }
}

#[derive(Debug, Clone)]
pub struct RestrictionReport {
    /// `σ(R, D + B)` reduced modulo `x_k`.
    pub lhs: Ideal,
    /// `σ(R/(x_k), B_{R/Q})`.
    pub rhs: Ideal,
    pub equal: bool,
    /// `σ(R, D + B)` before restriction.
    pub ambient: Ideal,
    pub lhs_diagnostics: SigmaResult,
    pub rhs_diagnostics: SigmaResult,
}

/// `B_{R/Q}`: each `f_i` reduced modulo `x_k` and made monic.
///
/// Entries that become nonzero constants are units on `D` and are dropped.
pub fn different_on_hyperplane(b: &QDivisor, k: usize) -> Result<QDivisor> {
    let target = b.ring().without(k)?;
    let mut entries = Vec::new();
    for entry in b.entries() {
        let reduced = entry.poly.substitute_zero_into(k, &target)?;
        if reduced.is_zero() {
            return Err(Error::Precondition(format!(
                "{} vanishes on the hyperplane {} = 0",
                entry.poly,
                b.ring().vars()[k]
            )));
        }
        if !reduced.is_constant() {
            entries.push((entry.coefficient.clone(), reduced.monic()));
        }
    }
    QDivisor::new(&target, entries)
}

fn check_index(p: u64, divisor: &QDivisor) -> Result<()> {
    let mut lcm = 1u64;
    for entry in divisor.entries() {
        let d = entry
            .coefficient
            .denom()
            .to_u64()
            .ok_or_else(|| Error::InvalidInput("coefficient denominator too large".into()))?;
        lcm = lcm.lcm(&d);
    }
    if lcm.is_multiple_of(p) {
        return Err(Error::Precondition(format!(
            "index {lcm} of D + B is divisible by p = {p}"
        )));
    }
    Ok(())
}

pub fn check_restriction(problem: &RestrictionProblem) -> Result<RestrictionReport> {
    let total = problem.total_divisor()?;
    check_index(problem.ring.characteristic(), &total)?;
    let lhs_diagnostics = sigma(&Triple::pair(total), &problem.opts)?;
    let ambient = lhs_diagnostics.ideal.clone();
    let lhs = ambient.image_in_quotient(problem.k)?;
    let reduced = different_on_hyperplane(&problem.b, problem.k)?;
    let rhs_diagnostics = sigma(&Triple::pair(reduced), &problem.opts)?;
    let rhs = rhs_diagnostics.ideal.clone();
    let equal = lhs.equals(&rhs)?;
    Ok(RestrictionReport {
        lhs,
        rhs,
        equal,
        ambient,
        lhs_diagnostics,
        rhs_diagnostics,
    })
}
