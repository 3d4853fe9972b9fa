use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[u32; 4]>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(entries: &[u32]) -> Self {
        ExponentVector(SmallVec::from_slice(entries))
    }

    pub fn unit(n: usize, i: usize, exponent: u32) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = exponent;
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` if `other` divides `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExponentVector(out))
    }

    /// Componentwise `<=`, i.e. the monomial `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, factor: u32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * factor).collect())
    }

    /// Drops entry `k`.
    pub fn remove(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(k);
        ExponentVector(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<u32> for ExponentVector {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ExponentVector(iter.into_iter().collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order: lexicographic or graded reverse lexicographic with
/// respect to a permutation of the variables.
///
/// `priority[0]` is the most significant variable. With the identity
/// permutation the first declared variable is the largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            priority: (0..n).collect(),
        }
    }

    /// Returns `None` unless `priority` is a permutation of `0..n`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match a.get(i).cmp(&b.get(i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for &i in self.priority.iter().rev() {
                        match a.get(i).cmp(&b.get(i)) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
        }
    }

    /// The same order on the ring with variable `k` removed.
    pub fn without(&self, k: usize) -> Self {
        MonomialOrder {
            kind: self.kind,
            priority: self
                .priority
                .iter()
                .filter(|&&i| i != k)
                .map(|&i| if i > k { i - 1 } else { i })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(e)
    }

    #[test]
    fn lex_and_grevlex() {
        let lex = MonomialOrder::lex(3);
        let grevlex = MonomialOrder::grevlex(3);
        // x > y^5 in lex, not in grevlex
        assert_eq!(lex.cmp(&ev(&[1, 0, 0]), &ev(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(grevlex.cmp(&ev(&[1, 0, 0]), &ev(&[0, 5, 0])), Ordering::Less);
        // x*z < y^2 in grevlex
        assert_eq!(grevlex.cmp(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])), Ordering::Less);
        assert_eq!(lex.cmp(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn permuted_priority() {
        let o = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&ev(&[5, 0]), &ev(&[0, 1])), Ordering::Less);
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![0, 0]).is_none());
        let w = MonomialOrder::with_priority(OrderKind::Lex, vec![2, 0, 1]).unwrap().without(0);
        assert_eq!(w.priority(), &[1, 0]);
    }

    #[test]
    fn divisibility() {
        assert!(ev(&[1, 2]).divides(&ev(&[1, 3])));
        assert!(!ev(&[2, 0]).divides(&ev(&[1, 3])));
        assert_eq!(ev(&[1, 3]).checked_sub(&ev(&[1, 2])), Some(ev(&[0, 1])));
        assert_eq!(ev(&[1, 3]).lcm(&ev(&[2, 0])), ev(&[2, 3]));
    }
}
