//! Newton-polyhedron geometry of monomial ideals over exact rationals.
//!
//! For a monomial ideal `a` and `t > 0` the ideal generated by the `x^v`
//! with `v + 1` in the closed polyhedron `t·P(a)` is the maximal non-lc
//! ideal of `a^t` in characteristic zero and the non-F-pure ideal of `a^t`
//! in characteristic `p` (when `p` does not divide the denominator of
//! `t`). Requiring `v + 1` to lie in the interior gives the multiplier
//! ideal instead (Howald).

mod hull;
mod monomial_ideal;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub use hull::{newton_hull, Facet, NewtonPolyhedron};
pub use monomial_ideal::MonomialIdeal;
pub(crate) use monomial_ideal::staircase;

use crate::algebra::{ExponentVector, Rational};
use crate::error::{Error, Result};

/// Closed membership realizes the maximal non-lc / non-F-pure ideal;
/// interior membership realizes the multiplier ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MembershipMode {
    Closed,
    Interior,
}

fn positive(t: &Rational) -> Result<()> {
    if t.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("exponent {t} must be positive")))
    }
}

/// Numerator and denominator of `t` as `i128` (both positive for `t > 0`).
fn split(t: &Rational) -> (i128, i128) {
    (
        t.numer().to_i128().expect("exponent numerator overflow"),
        t.denom().to_i128().expect("exponent denominator overflow"),
    )
}

/// Is `v + 1` in `t·P`?
pub fn member(p: &NewtonPolyhedron, v: &ExponentVector, t: &Rational, mode: MembershipMode) -> Result<bool> {
    if v.len() != p.nvars() {
        return Err(Error::DimensionMismatch {
            expected: p.nvars(),
            got: v.len(),
        });
    }
    positive(t)?;
    let (num, den) = split(t);
    Ok(p.facets().iter().all(|f| {
        let lhs = den * f.eval(v.iter().map(|e| e as i128 + 1));
        let rhs = num * f.offset as i128;
        match mode {
            MembershipMode::Closed => lhs >= rhs,
            MembershipMode::Interior => lhs > rhs,
        }
    }))
}

fn div_ceil(a: i128, b: i128) -> i128 {
    Integer::div_ceil(&a, &b)
}

fn div_floor(a: i128, b: i128) -> i128 {
    Integer::div_floor(&a, &b)
}

/// Minimal generators of `{x^v : v + 1 ∈ t·P(a)}` (closed) or of the
/// interior version.
pub fn newton_ideal(a: &MonomialIdeal, t: &Rational, mode: MembershipMode) -> Result<MonomialIdeal> {
    positive(t)?;
    let hull = newton_hull(a)?;
    Ok(newton_ideal_of(&hull, t, mode))
}

pub(crate) fn newton_ideal_of(hull: &NewtonPolyhedron, t: &Rational, mode: MembershipMode) -> MonomialIdeal {
    let n = hull.nvars();
    let (num, den) = split(t);
    let bounds: Vec<u32> = hull
        .max_exponents()
        .iter()
        .map(|&m| div_ceil(num * m as i128, den) as u32)
        .collect();
    staircase(n, &bounds, |prefix| {
        let mut last: i128 = 0;
        for f in hull.facets() {
            // den * (<w', prefix + 1> + w_n (v_n + 1)) >= num * c
            let partial: i128 = f.eval(prefix.iter().map(|&e| e as i128 + 1));
            let rhs = num * f.offset as i128 - den * partial;
            let wn = f.normal[n - 1] as i128 * den;
            let need = if wn == 0 {
                let ok = match mode {
                    MembershipMode::Closed => rhs <= 0,
                    MembershipMode::Interior => rhs < 0,
                };
                if !ok {
                    return None;
                }
                0
            } else {
                match mode {
                    MembershipMode::Closed => div_ceil(rhs, wn) - 1,
                    MembershipMode::Interior => div_floor(rhs, wn),
                }
            };
            last = last.max(need);
        }
        Some(last as u32)
    })
}

/// Minimal generators of the integral closure of `a^N`, i.e. the lattice
/// points of `N·P(a)`.
pub fn integral_closure_power(a: &MonomialIdeal, power: u64) -> MonomialIdeal {
    if power == 0 || a.is_unit() {
        return MonomialIdeal::unit(a.nvars());
    }
    if a.is_zero() {
        return MonomialIdeal::zero(a.nvars());
    }
    let hull = newton_hull(a).expect("proper ideal");
    closure_power_of(&hull, power)
}

pub(crate) fn closure_power_of(hull: &NewtonPolyhedron, power: u64) -> MonomialIdeal {
    let n = hull.nvars();
    let bounds: Vec<u32> = hull
        .max_exponents()
        .iter()
        .map(|&m| u32::try_from(m as u64 * power).expect("exponent overflow"))
        .collect();
    staircase(n, &bounds, |prefix| {
        let mut last: i128 = 0;
        for f in hull.facets() {
            let rhs = power as i128 * f.offset as i128 - f.eval(prefix.iter().map(|&e| e as i128));
            let wn = f.normal[n - 1] as i128;
            if wn == 0 {
                if rhs > 0 {
                    return None;
                }
            } else {
                last = last.max(div_ceil(rhs, wn));
            }
        }
        Some(last as u32)
    })
}

/// Log canonical threshold: `min over facets of <w, 1> / c`.
pub fn lct_monomial(a: &MonomialIdeal) -> Result<Rational> {
    let hull = newton_hull(a)?;
    Ok(hull
        .facets()
        .iter()
        .map(|f| {
            let s: i64 = f.normal.iter().sum();
            Rational::new(BigInt::from(s), BigInt::from(f.offset))
        })
        .min()
        .expect("proper ideal has a facet"))
}

/// Jumping numbers of the multiplier ideals `J(a^t)` in `(0, t_max]`.
///
/// Candidates `<w, v + 1> / c` are generated from facets and lattice points
/// and kept only when the ideal really jumps there, i.e. when the closed
/// ideal at `t` (equal to `J(a^{t - ε})`) differs from the interior one.
pub fn jumping_candidates(a: &MonomialIdeal, t_max: &Rational) -> Result<Vec<Rational>> {
    positive(t_max)?;
    let hull = newton_hull(a)?;
    let n = hull.nvars();
    let (num, den) = split(t_max);
    let bounds: Vec<u32> = hull
        .max_exponents()
        .iter()
        .map(|&m| div_ceil(num * m as i128, den) as u32)
        .collect();
    let mut candidates: Vec<Rational> = Vec::new();
    let mut v = vec![0u32; n];
    loop {
        for f in hull.facets() {
            let s = f.eval(v.iter().map(|&e| e as i128 + 1));
            let t = Rational::new(BigInt::from(s), BigInt::from(f.offset));
            if !t.is_zero() && &t <= t_max {
                candidates.push(t);
            }
        }
        // odometer over the full box
        let mut i = n;
        loop {
            if i == 0 {
                candidates.sort();
                candidates.dedup();
                return Ok(candidates
                    .into_iter()
                    .filter(|t| {
                        newton_ideal_of(&hull, t, MembershipMode::Closed)
                            != newton_ideal_of(&hull, t, MembershipMode::Interior)
                    })
                    .collect());
            }
            i -= 1;
            if v[i] < bounds[i] {
                v[i] += 1;
                v[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| ExponentVector::from_slice(g))).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(e)
    }

    #[test]
    fn membership_examples() {
        let p = newton_hull(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        use MembershipMode::*;
        assert!(!member(&p, &ev(&[0, 0]), &q(1, 1), Closed).unwrap());
        assert!(member(&p, &ev(&[0, 0]), &q(5, 6), Closed).unwrap());
        assert!(!member(&p, &ev(&[0, 0]), &q(5, 6), Interior).unwrap());
        assert!(member(&p, &ev(&[1, 0]), &q(1, 1), Closed).unwrap());
        assert!(matches!(
            member(&p, &ev(&[0]), &q(1, 1), Closed),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn newton_ideals() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        use MembershipMode::*;
        assert_eq!(newton_ideal(&a, &q(1, 1), Closed).unwrap(), m);
        assert_eq!(newton_ideal(&a, &q(5, 6), Closed).unwrap(), MonomialIdeal::unit(2));
        assert_eq!(newton_ideal(&a, &q(5, 6), Interior).unwrap(), m);
        assert_eq!(newton_ideal(&a, &q(1, 1), Interior).unwrap(), m);
        assert!(newton_ideal(&MonomialIdeal::unit(2), &q(1, 1), Closed).is_err());
    }

    #[test]
    fn closures() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            integral_closure_power(&a, 1),
            ideal(2, &[&[2, 0], &[1, 2], &[0, 3]])
        );
        assert_eq!(integral_closure_power(&ideal(1, &[&[1]]), 3), ideal(1, &[&[3]]));
        assert_eq!(
            integral_closure_power(&ideal(2, &[&[1, 0], &[0, 1]]), 2),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert!(integral_closure_power(&a, 0).is_unit());
    }

    #[test]
    fn thresholds() {
        assert_eq!(lct_monomial(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(), q(5, 6));
        assert_eq!(lct_monomial(&ideal(1, &[&[1]])).unwrap(), q(1, 1));
        assert_eq!(lct_monomial(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), q(2, 1));
    }

    #[test]
    fn jumps() {
        let j = jumping_candidates(&ideal(2, &[&[2, 0], &[0, 3]]), &q(1, 1)).unwrap();
        assert_eq!(j.first(), Some(&q(5, 6)));
        assert_eq!(
            jumping_candidates(&ideal(1, &[&[1]]), &q(2, 1)).unwrap(),
            vec![q(1, 1), q(2, 1)]
        );
        assert_eq!(
            jumping_candidates(&ideal(2, &[&[1, 0], &[0, 1]]), &q(2, 1)).unwrap(),
            vec![q(2, 1)]
        );
    }
}
