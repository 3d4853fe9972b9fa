//! Exact H-representation of a Newton polyhedron by the double description
//! method.
//!
//! Valid inequalities `<w, u> >= c` of `P = conv(V) + R^n_{>=0}` with `w >= 0`
//! form the polyhedral cone
//! `C = {(w, c) : w_i >= 0, <w, v> - c >= 0 for v in V}` in `R^{n+1}`.
//! `C` is pointed, and its extreme rays with `c > 0` are exactly the
//! non-coordinate facets of `P`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{ExponentVector, Rational};
use crate::error::{Error, Result};

use super::MonomialIdeal;

/// A facet inequality `<normal, u> >= offset` with a primitive integer
/// normal and `offset > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn normal_rational(&self) -> Vec<Rational> {
        self.normal.iter().map(|&w| Rational::from_integer(w.into())).collect()
    }

    pub fn offset_rational(&self) -> Rational {
        Rational::from_integer(self.offset.into())
    }

    /// `<normal, u>` in 128-bit arithmetic.
    #[inline]
    pub fn eval(&self, u: impl IntoIterator<Item = i128>) -> i128 {
        self.normal.iter().zip(u).map(|(&w, x)| w as i128 * x).sum()
    }
}

/// Newton polyhedron `P(a) = conv(exponents of a) + R^n_{>=0}` in both
/// representations. The coordinate half-spaces `u_i >= 0` are implicit and
/// not listed among the facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    nvars: usize,
    generators: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Largest generator exponent per coordinate.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.nvars];
        for g in &self.generators {
            for (i, e) in g.iter().enumerate() {
                m[i] = m[i].max(e);
            }
        }
        m
    }

    /// `u ∈ N·P` for a lattice point `u` and integer scale `N`.
    pub fn contains_scaled(&self, u: &[i128], scale: u64) -> bool {
        u.iter().all(|&x| x >= 0)
            && self
                .facets
                .iter()
                .all(|f| f.eval(u.iter().copied()) >= scale as i128 * f.offset as i128)
    }
}

type Vector = Vec<BigInt>;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vector) -> Vector {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Inverse of a square integer matrix over the rationals; `None` if singular.
fn inverse(rows: &[Vector]) -> Option<Vec<Vec<BigRational>>> {
    let d = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().cloned().map(BigRational::from_integer).collect();
            row.extend((0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d..].to_vec()).collect())
}

fn rank(rows: &[&Vector]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                let pr = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Extreme rays of the pointed cone `{x : A x >= 0}`; `A` must have full
/// column rank. Rays are primitive integer vectors.
pub(crate) fn extreme_rays(constraints: &[Vector]) -> Vec<Vector> {
    let d = constraints.first().map_or(0, Vec::len);
    // greedy choice of d independent rows for the initial simplicial cone
    let mut basis: Vec<usize> = Vec::new();
    for (i, row) in constraints.iter().enumerate() {
        let mut trial: Vec<&Vector> = basis.iter().map(|&b| &constraints[b]).collect();
        trial.push(row);
        if rank(&trial) == trial.len() {
            basis.push(i);
        }
        if basis.len() == d {
            break;
        }
    }
    assert_eq!(basis.len(), d, "constraint matrix must have full column rank");
    let inv = inverse(&basis.iter().map(|&b| constraints[b].clone()).collect::<Vec<_>>())
        .expect("independent rows");
    // columns of the inverse generate the initial cone
    let mut rays: Vec<Vector> = (0..d)
        .map(|j| {
            let col: Vec<BigRational> = (0..d).map(|i| inv[i][j].clone()).collect();
            let l = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            primitive(col.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect())
        })
        .collect();
    let mut processed: Vec<usize> = basis.clone();

    for (j, row) in constraints.iter().enumerate() {
        if basis.contains(&j) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, r)).collect();
        let zero_set = |r: &Vector| -> Vec<usize> {
            processed
                .iter()
                .copied()
                .filter(|&k| dot(&constraints[k], r).is_zero())
                .collect()
        };
        let zsets: Vec<Vec<usize>> = rays.iter().map(zero_set).collect();
        let mut next: Vec<Vector> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (a, va) in values.iter().enumerate() {
            if !va.is_positive() {
                continue;
            }
            for (b, vb) in values.iter().enumerate() {
                if !vb.is_negative() {
                    continue;
                }
                let common: Vec<usize> = zsets[a].iter().copied().filter(|k| zsets[b].contains(k)).collect();
                if common.len() + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|c| {
                    c == a || c == b || !common.iter().all(|k| zsets[c].contains(k))
                });
                if !adjacent {
                    continue;
                }
                let combo: Vector = rays[a]
                    .iter()
                    .zip(&rays[b])
                    .map(|(ra, rb)| va * rb - vb * ra)
                    .collect();
                next.push(primitive(combo));
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(j);
    }
    rays.sort();
    rays
}

/// H-representation of the Newton polyhedron of a proper monomial ideal.
pub fn newton_hull(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if !a.is_proper() {
        return Err(Error::InvalidInput(
            "Newton polyhedron needs a proper nonzero monomial ideal".into(),
        ));
    }
    let n = a.nvars();
    let mut constraints: Vec<Vector> = Vec::with_capacity(n + a.generators().len());
    for i in 0..n {
        let mut row = vec![BigInt::zero(); n + 1];
        row[i] = BigInt::one();
        constraints.push(row);
    }
    for g in a.generators() {
        let mut row: Vector = g.iter().map(BigInt::from).collect();
        row.push(-BigInt::one());
        constraints.push(row);
    }
    let mut facets: Vec<Facet> = extreme_rays(&constraints)
        .into_iter()
        .filter(|r| r[n].is_positive())
        .map(|r| Facet {
            normal: r[..n].iter().map(|x| x.to_i64().expect("facet normal overflow")).collect(),
            offset: r[n].to_i64().expect("facet offset overflow"),
        })
        .collect();
    facets.sort();
    Ok(NewtonPolyhedron {
        nvars: n,
        generators: a.generators().to_vec(),
        facets,
    })
}
