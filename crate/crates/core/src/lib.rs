//! Exact computation of non-F-pure ideals, big test ideals, Frobenius roots
//! and Newton-polyhedron ideals over `F_p[x_1, …, x_n]`.
//!
//! ```
//! use fpure::algebra::{Polynomial, Rational, Ring};
//! use fpure::charp::{sigma, QDivisor, SigmaOptions, Triple};
//!
//! let r = Ring::new(3, &["x", "y"])?;
//! let x = Polynomial::var(&r, 0)?;
//! let y = Polynomial::var(&r, 1)?;
//! let cusp = QDivisor::single(Rational::from_integer(1.into()), &x.pow(3) - &y.pow(2))?;
//! let s = sigma(&Triple::pair(cusp), &SigmaOptions::default())?;
//! assert_eq!(s.ideal.canonical()?.to_string(), "(x, y)");
//! # Ok::<(), fpure::Error>(())
//! ```

pub mod algebra;
pub mod charp;
pub mod cli;
mod divisor;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod newton;
pub mod parse;
pub mod restriction;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/sigma.md")]
    mod sigma {}
    #[doc = include_str!("../../../book/src/newton.md")]
    mod newton {}
    #[doc = include_str!("../../../book/src/restriction.md")]
    mod restriction {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
