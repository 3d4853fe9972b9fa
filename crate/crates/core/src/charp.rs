//! Non-F-pure ideals, big test ideals and the F-singularity predicates.
//!
//! Over `R = F_p[x_1..x_n]` the module `Hom(F^e_* R, R)` is free of rank one
//! over `F^e_* R`, generated by the trace map. Every sum over maps
//! `φ: F^e_* R → R` of `φ(F^e_* M)` therefore equals the single Frobenius
//! root `M^{[1/p^e]}`, and a step of the σ chain becomes
//!
//! ```text
//! σ_{n+1} = Σ_{e=1}^{e_max} ( σ_n · Π f_i^{⌈t_i (p^e - 1)⌉} · closure(a^{⌈t (p^e - 1)⌉}) )^{[1/p^e]}
//! ```
//!
//! The infinite sum over `e` is truncated at `e_max`. Results carry a
//! `probe_stable` flag recording whether the next `probe` exponents would
//! have changed the answer.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::algebra::{ceil_mul, Rational, Ring, RingRef};
use crate::error::{Error, Result};
use crate::frobenius::root_of_product;
use crate::groebner::Ideal;
use crate::newton::{
    closure_power_of, newton_hull, newton_ideal_of, MembershipMode, MonomialIdeal, NewtonPolyhedron,
};

pub use crate::divisor::{DivisorEntry, QDivisor, Triple};

/// Default search bound for [`cartier_period`].
pub const DEFAULT_CARTIER_BOUND: u32 = 12;

/// Truncation and stopping parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaOptions {
    /// Largest Frobenius exponent `e` in each step.
    pub e_max: u32,
    /// Extra exponents checked after convergence.
    pub probe: u32,
    /// Iteration cap.
    pub n_max: usize,
    /// Number of consecutive equalities required to stop.
    pub window: usize,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            e_max: 4,
            probe: 2,
            n_max: 20,
            window: 2,
        }
    }
}

impl SigmaOptions {
    pub fn with_e_max(mut self, e_max: u32) -> Self {
        self.e_max = e_max;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.e_max == 0 || self.n_max == 0 || self.window == 0 {
            return Err(Error::InvalidInput(
                "e_max, n_max and window must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SigmaResult {
    pub ideal: Ideal,
    /// Index of the first term of the stable tail.
    pub iterations: usize,
    pub e_max_used: u32,
    pub converged: bool,
    pub probe_stable: bool,
}

/// Precomputed data of a triple shared by every step.
struct Prepared<'a> {
    triple: &'a Triple,
    p: u64,
    hull: Option<NewtonPolyhedron>,
}

impl<'a> Prepared<'a> {
    fn new(triple: &'a Triple) -> Result<Self> {
        let hull = triple.ideal().map(newton_hull).transpose()?;
        Ok(Prepared {
            triple,
            p: triple.ring().characteristic(),
            hull,
        })
    }

    fn ring(&self) -> &RingRef {
        self.triple.ring()
    }

    fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    fn monomial(&self) -> bool {
        self.triple.divisor().is_empty()
    }

    fn q(&self, e: u32) -> Result<u64> {
        self.p
            .checked_pow(e)
            .ok_or_else(|| Error::DegreeGuard(format!("{}^{e} overflows", self.p)))
    }

    /// `(J · closure(a^{⌈t(q-1)⌉}))^{[1/q]}` for monomial `J` and empty divisor.
    fn monomial_sigma_term(&self, j: &MonomialIdeal, e: u32) -> Result<MonomialIdeal> {
        let q = self.q(e)?;
        let power = ceil_mul(self.triple.t(), q - 1);
        Ok(match &self.hull {
            Some(hull) if power > 0 => root_of_closure_product(j, hull, power, q),
            _ => j.floor_root(q),
        })
    }

    fn sigma_term(&self, j: &Ideal, e: u32) -> Result<Ideal> {
        let q = self.q(e)?;
        let base = match &self.hull {
            Some(hull) => {
                let power = ceil_mul(self.triple.t(), q - 1);
                j.product(&closure_power_of(hull, power).to_ideal(self.ring())?)?
            }
            None => j.clone(),
        };
        root_of_product(&base, &self.triple.divisor().exponents(q - 1), e)
    }

    fn monomial_sigma_sum(&self, j: &MonomialIdeal, es: impl IntoIterator<Item = u32>) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::zero(self.nvars());
        for e in es {
            acc = acc.sum(&self.monomial_sigma_term(j, e)?);
            if acc.is_unit() {
                break;
            }
        }
        Ok(acc)
    }

    fn sigma_sum(&self, j: &Ideal, es: impl IntoIterator<Item = u32>) -> Result<Ideal> {
        let mut acc = Ideal::zero(self.ring());
        for e in es {
            acc = acc.sum(&self.sigma_term(j, e)?)?;
            if acc.is_unit()? {
                break;
            }
        }
        Ok(acc)
    }

    /// The exponents `t_i` (and `t` when `a` is proper).
    fn tau_exponents_target(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .triple
            .divisor()
            .entries()
            .iter()
            .map(|e| e.coefficient.clone())
            .collect();
        if self.triple.ideal().is_some() {
            v.push(self.triple.t().clone());
        }
        v
    }

    /// The exponents rounded up to multiples of `1 / p^e`.
    fn tau_exponents(&self, e: u32) -> Result<Vec<Rational>> {
        let q = self.q(e)?;
        let qr = Rational::from_integer(q.into());
        Ok(self
            .tau_exponents_target()
            .iter()
            .map(|t| Rational::from_integer(ceil_mul(t, q).into()) / &qr)
            .collect())
    }

    /// `(Π f_i^{⌈t_i q⌉} · a^{⌈t q⌉})^{[1/q]}`.
    fn tau_term(&self, e: u32) -> Result<Ideal> {
        let q = self.q(e)?;
        let a_power = self
            .triple
            .ideal()
            .map(|a| a.pow(ceil_mul(self.triple.t(), q)));
        if self.monomial() {
            let m = a_power.unwrap_or_else(|| MonomialIdeal::unit(self.nvars()));
            return m.floor_root(q).to_ideal(self.ring());
        }
        let base = match a_power {
            Some(m) => m.to_ideal(self.ring())?,
            None => Ideal::unit(self.ring()),
        };
        root_of_product(&base, &self.triple.divisor().exponents(q), e)
    }
}

/// Lattice points `v` with `q v + (q-1)·1 ∈ J · N·P(a)`.
fn root_of_closure_product(j: &MonomialIdeal, hull: &NewtonPolyhedron, power: u64, q: u64) -> MonomialIdeal {
    let n = hull.nvars();
    let max_j = j.max_exponents();
    let bounds: Vec<u32> = hull
        .max_exponents()
        .iter()
        .zip(&max_j)
        .map(|(&m, &g)| ((g as u64 + power * m as u64) / q) as u32)
        .collect();
    let (q, power) = (q as i128, power as i128);
    crate::newton::staircase(n, &bounds, |prefix| {
        let u: Vec<i128> = prefix.iter().map(|&v| q * v as i128 + q - 1).collect();
        let mut best: Option<i128> = None;
        'gens: for g in j.generators() {
            let w: Vec<i128> = u.iter().zip(g.iter()).map(|(&ui, gi)| ui - gi as i128).collect();
            if w.iter().any(|&x| x < 0) {
                continue;
            }
            let mut need: i128 = 0;
            for f in hull.facets() {
                let rhs = power * f.offset as i128 - f.eval(w.iter().copied());
                let wn = f.normal[n - 1] as i128;
                if wn == 0 {
                    if rhs > 0 {
                        continue 'gens;
                    }
                } else {
                    need = need.max(Integer::div_ceil(&rhs, &wn));
                }
            }
            // q v_n + q - 1 - g_n >= need
            let v = Integer::div_ceil(&(need + g.get(n - 1) as i128 - q + 1), &q).max(0);
            best = Some(best.map_or(v, |b: i128| b.min(v)));
        }
        best.map(|v| v as u32)
    })
}

/// Runs `next` until `window` consecutive values agree.
///
/// Returns the final value and the index at which the stable value first
/// appeared.
fn stabilize<T>(
    start: T,
    start_index: usize,
    n_max: usize,
    window: usize,
    mut next: impl FnMut(&T, usize) -> Result<T>,
    mut same: impl FnMut(&T, &T) -> Result<bool>,
) -> Result<(T, usize)> {
    let mut current = start;
    let mut first = start_index;
    let mut run = 0;
    for n in start_index + 1..=n_max {
        let value = next(&current, n)?;
        if same(&value, &current)? {
            run += 1;
        } else {
            run = 0;
            first = n;
        }
        current = value;
        if run >= window {
            return Ok((current, first));
        }
    }
    Err(Error::NonConvergence { iterations: n_max })
}

/// One step of the σ chain starting from `j`.
pub fn sigma_step(j: &Ideal, triple: &Triple, opts: &SigmaOptions) -> Result<Ideal> {
    opts.validate()?;
    if j.is_zero() {
        return Err(Error::Precondition("sigma_step needs a nonzero ideal".into()));
    }
    let prep = Prepared::new(triple)?;
    if prep.monomial() {
        if let Some(m) = MonomialIdeal::from_ideal(j)? {
            return prep.monomial_sigma_sum(&m, 1..=opts.e_max)?.to_ideal(triple.ring());
        }
    }
    prep.sigma_sum(j, 1..=opts.e_max)
}

/// The non-F-pure ideal `σ((R, Δ); a^t)`.
pub fn sigma(triple: &Triple, opts: &SigmaOptions) -> Result<SigmaResult> {
    opts.validate()?;
    let prep = Prepared::new(triple)?;
    let es = 1..=opts.e_max;
    let probe = opts.e_max + 1..=opts.e_max + opts.probe;
    if prep.monomial() {
        let (m, first) = stabilize(
            MonomialIdeal::unit(prep.nvars()),
            0,
            opts.n_max,
            opts.window,
            |j, _| prep.monomial_sigma_sum(j, es.clone()),
            |a, b| Ok(a == b),
        )?;
        let extra = prep.monomial_sigma_sum(&m, probe)?;
        return Ok(SigmaResult {
            ideal: m.to_ideal(triple.ring())?,
            iterations: first,
            e_max_used: opts.e_max,
            converged: true,
            probe_stable: m.contains_ideal(&extra),
        });
    }
    let (ideal, first) = stabilize(
        Ideal::unit(triple.ring()),
        0,
        opts.n_max,
        opts.window,
        |j, _| prep.sigma_sum(j, es.clone()),
        |a, b| a.equals(b),
    )?;
    let extra = prep.sigma_sum(&ideal, probe)?;
    let probe_stable = ideal.contains_ideal(&extra)?;
    Ok(SigmaResult {
        ideal,
        iterations: first,
        e_max_used: opts.e_max,
        converged: true,
        probe_stable,
    })
}

/// `p^e mod d == 1` for the least such `e`, or `None` when `p` and `d`
/// share a factor.
fn multiplicative_order(p: u64, d: u64) -> Option<u32> {
    if d == 1 {
        return Some(1);
    }
    if p.gcd(&d) != 1 {
        return None;
    }
    let mut acc = p % d;
    for e in 1..=d as u32 {
        if acc == 1 {
            return Some(e);
        }
        acc = acc * p % d;
    }
    None
}

fn denominator(t: &Rational) -> Option<u64> {
    t.denom().to_u64()
}

/// Least `e0 <= 12` with every `t_i (p^{e0} - 1)` integral, and also
/// `t (p^{e0} - 1)` when `a` is a proper ideal.
pub fn cartier_period(triple: &Triple) -> Option<u32> {
    cartier_period_within(triple, DEFAULT_CARTIER_BOUND)
}

pub fn cartier_period_within(triple: &Triple, bound: u32) -> Option<u32> {
    let p = triple.ring().characteristic();
    let mut dens: Vec<u64> = Vec::new();
    for entry in triple.divisor().entries() {
        dens.push(denominator(&entry.coefficient)?);
    }
    if triple.ideal().is_some() {
        dens.push(denominator(triple.t())?);
    }
    let d = dens.iter().fold(1u64, |acc, &x| acc.lcm(&x));
    multiplicative_order(p, d).filter(|&e| e <= bound)
}

/// σ via `I_l = (Π f_i^{t_i (p^{l e0} - 1)})^{[1/p^{l e0}]}` for a principal
/// divisor with unit `a`.
pub fn sigma_fast_cartier(triple: &Triple, opts: &SigmaOptions) -> Result<SigmaResult> {
    opts.validate()?;
    if triple.ideal().is_some() {
        return Err(Error::Precondition("the Cartier fast path needs a = R".into()));
    }
    let e0 = cartier_period(triple)
        .ok_or_else(|| Error::Precondition("no Cartier period for this divisor".into()))?;
    let ring = triple.ring().clone();
    let p = ring.characteristic();
    let term = |l: usize| -> Result<Ideal> {
        let e = e0 * l as u32;
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::DegreeGuard(format!("{p}^{e} overflows")))?;
        let exps: Vec<_> = triple
            .divisor()
            .entries()
            .iter()
            .map(|entry| {
                let n = &entry.coefficient * Rational::from_integer((q - 1).into());
                (entry.poly.clone(), n.to_integer().to_u64().expect("nonnegative exponent"))
            })
            .collect();
        root_of_product(&Ideal::unit(&ring), &exps, e)
    };
    let (ideal, first) = stabilize(
        term(1)?,
        1,
        opts.n_max,
        opts.window,
        |_, l| term(l),
        |a, b| a.equals(b),
    )?;
    Ok(SigmaResult {
        ideal,
        iterations: first,
        e_max_used: e0 * (first + opts.window) as u32,
        converged: true,
        probe_stable: true,
    })
}

/// The big test ideal `τ_b((R, Δ); a^t)`, with diagnostics.
///
/// The `e`-th term is the test ideal at the rounded exponents
/// `⌈t_i p^e⌉ / p^e`; these terms ascend with `e`. A term whose rounded
/// exponents equal the previous ones is the previous term again and is
/// skipped without counting towards `window`. Once every `t_i p^e` is an
/// integer the term is exact and the sum stops. Otherwise the sum stops
/// when it is `R` or unchanged over `window` informative exponents. The
/// test element is `1`.
pub fn tau_b_report(triple: &Triple, opts: &SigmaOptions) -> Result<SigmaResult> {
    opts.validate()?;
    let prep = Prepared::new(triple)?;
    let exact = prep.tau_exponents_target();
    let mut sum = Ideal::zero(triple.ring());
    let mut previous: Option<Vec<Rational>> = None;
    let mut first = 1;
    let mut run = 0;
    for e in 1..=opts.n_max as u32 {
        let rounded = prep.tau_exponents(e)?;
        if previous.as_ref() == Some(&rounded) {
            continue;
        }
        let next = sum.sum(&prep.tau_term(e)?)?;
        if previous.is_some() && next.equals(&sum)? {
            run += 1;
        } else {
            run = 0;
            first = e as usize;
        }
        sum = next;
        previous = Some(rounded);
        let is_exact = previous.as_ref() == Some(&exact);
        if is_exact || run >= opts.window || sum.is_unit()? {
            return Ok(SigmaResult {
                ideal: sum,
                iterations: first,
                e_max_used: e,
                converged: true,
                probe_stable: true,
            });
        }
    }
    Err(Error::NonConvergence { iterations: opts.n_max })
}

pub fn tau_b(triple: &Triple, opts: &SigmaOptions) -> Result<Ideal> {
    tau_b_report(triple, opts).map(|r| r.ideal)
}

/// `σ = R`. Since the chain descends, this is decided by `σ_1`.
pub fn is_sharply_fpure(triple: &Triple, opts: &SigmaOptions) -> Result<bool> {
    sigma_step(&Ideal::unit(triple.ring()), triple, opts)?.is_unit()
}

/// `τ_b = R`.
pub fn is_strongly_fregular(triple: &Triple, opts: &SigmaOptions) -> Result<bool> {
    tau_b(triple, opts)?.is_unit()
}

/// `Σ_{e=n}^{n+e_max}` of the σ-step roots applied to `R`.
pub fn sigma_prime_n(triple: &Triple, n: u32, opts: &SigmaOptions) -> Result<Ideal> {
    opts.validate()?;
    if n == 0 {
        return Err(Error::InvalidInput("sigma_prime_n needs n >= 1".into()));
    }
    let prep = Prepared::new(triple)?;
    let es = n..=n + opts.e_max;
    if prep.monomial() {
        return prep
            .monomial_sigma_sum(&MonomialIdeal::unit(prep.nvars()), es)?
            .to_ideal(triple.ring());
    }
    prep.sigma_sum(&Ideal::unit(triple.ring()), es)
}

#[derive(Debug, Clone)]
pub struct MonomialReport {
    pub equal: bool,
    pub sigma: Ideal,
    pub newton: MonomialIdeal,
    pub diagnostics: SigmaResult,
}

/// A ring `F_p[x, y, z]` (or `F_p[x1, …, xn]` beyond three variables).
pub fn standard_ring(p: u64, nvars: usize) -> Result<RingRef> {
    let names: Vec<String> = if nvars <= 3 {
        ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ring::new(p, &refs)
}

/// Compares `σ(F_p[x], a^t)` with the closed Newton ideal of `a` at `t`.
///
/// The truncation is raised to at least the order of `p` modulo the
/// denominator of `t`, so that some `e` in range makes `t(p^e - 1)` an
/// integer.
pub fn verify_monomial_theorem(a: &MonomialIdeal, t: &Rational, p: u64, opts: &SigmaOptions) -> Result<MonomialReport> {
    let ring = standard_ring(p, a.nvars())?;
    let d = denominator(t).ok_or_else(|| Error::InvalidInput(format!("denominator of {t} too large")))?;
    if d % p == 0 {
        return Err(Error::Precondition(format!(
            "p = {p} divides the denominator of t = {t}"
        )));
    }
    let order = multiplicative_order(p, d).expect("p coprime to d");
    let opts = opts.with_e_max(opts.e_max.max(order));
    let triple = Triple::monomial(&ring, a.clone(), t.clone())?;
    let diagnostics = sigma(&triple, &opts)?;
    let newton = if a.is_unit() {
        MonomialIdeal::unit(a.nvars())
    } else {
        newton_ideal_of(&newton_hull(a)?, t, MembershipMode::Closed)
    };
    let equal = diagnostics.ideal.equals(&newton.to_ideal(&ring)?)?;
    Ok(MonomialReport {
        equal,
        sigma: diagnostics.ideal.clone(),
        newton,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExponentVector, Polynomial};

    fn xy(p: u64) -> (RingRef, Polynomial, Polynomial) {
        let r = Ring::new(p, &["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0).unwrap();
        let y = Polynomial::var(&r, 1).unwrap();
        (r, x, y)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn cusp(p: u64, t: Rational) -> (RingRef, Triple) {
        let (r, x, y) = xy(p);
        let f = &x.pow(3) - &y.pow(2);
        let div = QDivisor::single(t, f).unwrap();
        (r, Triple::pair(div))
    }

    fn maximal(r: &RingRef) -> Ideal {
        Ideal::new(r, [Polynomial::var(r, 0).unwrap(), Polynomial::var(r, 1).unwrap()]).unwrap()
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(e)
    }

    #[test]
    fn cusp_step_and_sigma() {
        let (r, t) = cusp(2, q(1, 1));
        let opts = SigmaOptions::default().with_e_max(2);
        let step = sigma_step(&Ideal::unit(&r), &t, &opts).unwrap();
        assert!(step.equals(&maximal(&r)).unwrap());
        assert!(sigma_prime_n(&t, 1, &opts).unwrap().equals(&maximal(&r)).unwrap());
        for p in [2, 3, 5, 7] {
            let (r, t) = cusp(p, q(1, 1));
            let res = sigma(&t, &SigmaOptions::default().with_e_max(3)).unwrap();
            assert!(res.ideal.equals(&maximal(&r)).unwrap(), "p = {p}: {}", res.ideal);
            assert!(res.probe_stable);
        }
    }

    #[test]
    fn formal_power() {
        let r = Ring::new(5, &["x"]).unwrap();
        let x = Polynomial::var(&r, 0).unwrap();
        let a = MonomialIdeal::new(1, [ev(&[1])]).unwrap();
        let t = Triple::monomial(&r, a, q(1, 1)).unwrap();
        assert!(sigma(&t, &SigmaOptions::default()).unwrap().ideal.is_unit().unwrap());

        let t = Triple::pair(QDivisor::single(q(1, 5), x.pow(5)).unwrap());
        let opts = SigmaOptions::default().with_e_max(2);
        let step = sigma_step(&Ideal::unit(&r), &t, &opts).unwrap();
        assert!(step.equals(&Ideal::principal(x.clone())).unwrap());
        assert!(!is_sharply_fpure(&t, &opts).unwrap());
        let prime = sigma_prime_n(&t, 2, &opts).unwrap();
        assert!(prime.equals(&Ideal::principal(x)).unwrap());
    }

    #[test]
    fn threshold_cusp() {
        let (r, t) = cusp(5, q(4, 5));
        let res = sigma(&t, &SigmaOptions::default()).unwrap();
        assert!(res.ideal.equals(&maximal(&r)).unwrap());
        let (_, below) = cusp(5, q(79, 100));
        assert!(tau_b(&below, &SigmaOptions::default()).unwrap().is_unit().unwrap());
        assert_eq!(cartier_period(&t), None);
    }

    #[test]
    fn tau_examples() {
        let (_, x, y) = xy(5);
        let f = &x.pow(3) - &y.pow(2);
        let (_, t) = cusp(5, q(1, 1));
        let opts = SigmaOptions::default();
        assert!(tau_b(&t, &opts).unwrap().equals(&Ideal::principal(f)).unwrap());
        assert!(!is_strongly_fregular(&t, &opts).unwrap());
        let (_, half) = cusp(5, q(1, 2));
        assert!(is_strongly_fregular(&half, &opts).unwrap());
        let (r, _, _) = xy(5);
        assert!(is_strongly_fregular(&Triple::pair(QDivisor::empty(&r)), &opts).unwrap());
    }

    #[test]
    fn fast_cartier() {
        let (r, x, y) = xy(5);
        let f = &x * &(&x.pow(3) - &y.pow(2));
        let t = Triple::pair(QDivisor::single(q(1, 1), f).unwrap());
        assert_eq!(cartier_period(&t), Some(1));
        let fast = sigma_fast_cartier(&t, &SigmaOptions::default()).unwrap();
        let expected = Ideal::new(&r, [x.pow(2), y.clone()]).unwrap();
        assert!(fast.ideal.equals(&expected).unwrap());
        let slow = sigma(&t, &SigmaOptions::default()).unwrap();
        assert!(slow.ideal.equals(&expected).unwrap());

        let (r2, t2) = cusp(2, q(1, 1));
        let fast = sigma_fast_cartier(&t2, &SigmaOptions::default()).unwrap();
        assert!(fast.ideal.equals(&maximal(&r2)).unwrap());
        assert_eq!(fast.iterations, 1);

        let ry = Ring::new(5, &["y"]).unwrap();
        let y = Polynomial::var(&ry, 0).unwrap();
        let t3 = Triple::pair(QDivisor::single(q(2, 1), y.clone()).unwrap());
        let fast = sigma_fast_cartier(&t3, &SigmaOptions::default()).unwrap();
        assert!(fast.ideal.equals(&Ideal::principal(y)).unwrap());

        let (_, half) = cusp(5, q(1, 2));
        assert_eq!(cartier_period(&half), Some(1));
    }

    #[test]
    fn sharply_fpure_examples() {
        let (_, x, _) = xy(5);
        let t = Triple::pair(QDivisor::single(q(1, 1), x).unwrap());
        assert!(is_sharply_fpure(&t, &SigmaOptions::default()).unwrap());
        let (_, t) = cusp(2, q(1, 1));
        assert!(!is_sharply_fpure(&t, &SigmaOptions::default()).unwrap());
    }

    #[test]
    fn monomial_theorem_examples() {
        let opts = SigmaOptions::default();
        let a = MonomialIdeal::new(2, [ev(&[2, 0]), ev(&[0, 3])]).unwrap();
        let rep = verify_monomial_theorem(&a, &q(5, 6), 5, &opts).unwrap();
        assert!(rep.equal);
        assert!(rep.newton.is_unit());
        let rep = verify_monomial_theorem(&a, &q(1, 1), 7, &opts).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.newton.generators(), &[ev(&[0, 1]), ev(&[1, 0])]);
        let x = MonomialIdeal::new(1, [ev(&[1])]).unwrap();
        assert!(verify_monomial_theorem(&x, &q(1, 1), 2, &opts).unwrap().equal);
        assert!(matches!(
            verify_monomial_theorem(&a, &q(1, 5), 5, &opts),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn monomial_path_matches_general_path() {
        let (r, _, _) = xy(3);
        let a = MonomialIdeal::new(2, [ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 3])]).unwrap();
        let t = Triple::monomial(&r, a.clone(), q(3, 4)).unwrap();
        let prep = Prepared::new(&t).unwrap();
        let j = MonomialIdeal::new(2, [ev(&[1, 0]), ev(&[0, 2])]).unwrap();
        for e in 1..=3 {
            let fast = prep.monomial_sigma_term(&j, e).unwrap().to_ideal(&r).unwrap();
            let slow = prep.sigma_term(&j.to_ideal(&r).unwrap(), e).unwrap();
            assert!(fast.equals(&slow).unwrap(), "e = {e}: {fast} vs {slow}");
        }
    }

    #[test]
    fn trivial_inputs() {
        let (r, _, _) = xy(7);
        let t = Triple::pair(QDivisor::empty(&r));
        let opts = SigmaOptions::default();
        assert!(sigma_step(&Ideal::unit(&r), &t, &opts).unwrap().is_unit().unwrap());
        assert!(sigma_prime_n(&t, 3, &opts).unwrap().is_unit().unwrap());
        assert!(sigma_step(&Ideal::zero(&r), &t, &opts).is_err());
        assert!(SigmaOptions { window: 0, ..opts }.validate().is_err());
    }
}
