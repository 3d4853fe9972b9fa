//! Exact arithmetic: prime fields, rationals, exponent vectors and sparse
//! multivariate polynomials.

mod field;
mod monomial;
mod polynomial;
mod rational;
mod ring;

pub use field::{FieldElement, PrimeField};
pub use monomial::{ExponentVector, MonomialOrder, OrderKind};
pub use polynomial::{Polynomial, Term};
pub use rational::{ceil_mul, parse_rational, Rational};
pub use ring::{Ring, RingRef};
pub(crate) use ring::same_ring;
