//! Text formats for polynomials, divisors and monomial ideals.
//!
//! ```text
//! polynomial  := ["+" | "-"] term (("+" | "-") term)*
//! term        := unary ("*" unary)*
//! unary       := "-" unary | power
//! power       := atom ["^" integer]
//! atom        := integer | variable | "(" polynomial ")"
//! divisor     := "0" | entry ("+" entry)*
//! entry       := rational "*" "(" polynomial ")"
//! generators  := "[" [polynomial ("," polynomial)*] "]"
//! ```
//!
//! Juxtaposition (`2x`, `x y`) is rejected; write `2*x`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{ExponentVector, Polynomial, Rational, RingRef};
use crate::charp::QDivisor;
use crate::error::{Error, Result};
use crate::newton::MonomialIdeal;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
            }
            column += s.len();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_lowercase() {
            let mut s = String::new();
            while i < chars.len()
                && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit() || chars[i] == '_')
            {
                s.push(chars[i]);
                i += 1;
            }
            column += s.len();
            Tok::Ident(s)
        } else if "+-*^()[],/".contains(c) {
            i += 1;
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unexpected character '{c}'"),
            });
        };
        out.push(Token {
            tok,
            line: start.0,
            column: start.1,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ring: &'a RingRef) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            ring,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Parse {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn at(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.at(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!("expected '{c}'")))
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek().tok {
            Tok::End => Ok(()),
            _ => Err(self.error_here("unexpected trailing input")),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek().tok, Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut acc = if self.at('-') {
            self.bump();
            -&self.term()?
        } else {
            if self.at('+') {
                self.bump();
            }
            self.term()?
        };
        loop {
            if self.at('+') {
                self.bump();
                acc = &acc + &self.term()?;
            } else if self.at('-') {
                self.bump();
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.at('*') {
                self.bump();
                acc = &acc * &self.unary()?;
            } else if self.starts_atom() {
                return Err(self.error_here("implicit multiplication is not allowed; use '*'"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.at('-') {
            self.bump();
            return Ok(-&self.unary()?);
        }
        let base = self.atom()?;
        if self.at('^') {
            self.bump();
            let n = self.exponent()?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u64> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                let v = n.to_u64().ok_or_else(|| self.error_here("exponent too large"))?;
                self.bump();
                Ok(v)
            }
            _ => Err(self.error_here("expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.bump();
                let p = BigInt::from(self.ring.characteristic());
                let r = (n % p).to_i64().expect("residue");
                Ok(Polynomial::constant(self.ring, r))
            }
            Tok::Ident(name) => {
                let k = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.error_here(format!("unknown variable '{name}'")))?;
                self.bump();
                Polynomial::var(self.ring, k)
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.polynomial()?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => Err(self.error_here("expected a number, variable or '('")),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = match self.peek().tok.clone() {
            Tok::Int(n) => n,
            _ => return Err(self.error_here("expected a rational coefficient")),
        };
        self.bump();
        let den = if self.at('/') {
            self.bump();
            match self.peek().tok.clone() {
                Tok::Int(d) if !d.is_zero() => {
                    self.bump();
                    d
                }
                Tok::Int(_) => return Err(self.error_here("zero denominator")),
                _ => return Err(self.error_here("expected a denominator")),
            }
        } else {
            BigInt::from(1)
        };
        Ok(Rational::new(num, den))
    }

    fn divisor(&mut self) -> Result<QDivisor> {
        if let Tok::Int(n) = &self.peek().tok {
            if n.is_zero() && self.tokens[self.pos + 1].tok == Tok::End {
                return Ok(QDivisor::empty(self.ring));
            }
        }
        let mut entries = Vec::new();
        loop {
            let at = self.peek().clone();
            let coefficient = self.rational()?;
            if coefficient.is_zero() {
                return Err(Error::Parse {
                    line: at.line,
                    column: at.column,
                    message: "divisor coefficients must be positive".into(),
                });
            }
            self.expect('*')?;
            let open = self.peek().clone();
            self.expect('(')?;
            let poly = self.polynomial()?;
            self.expect(')')?;
            if poly.is_constant() {
                return Err(Error::Parse {
                    line: open.line,
                    column: open.column,
                    message: "divisor components must be nonconstant".into(),
                });
            }
            entries.push((coefficient, poly));
            if self.at('+') {
                self.bump();
            } else {
                break;
            }
        }
        self.expect_end()?;
        QDivisor::new(self.ring, entries)
    }

    fn generators(&mut self) -> Result<Vec<(Token, Polynomial)>> {
        self.expect('[')?;
        let mut out = Vec::new();
        if !self.at(']') {
            loop {
                let at = self.peek().clone();
                out.push((at, self.polynomial()?));
                if self.at(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(']')?;
        self.expect_end()?;
        Ok(out)
    }
}

pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let mut p = Parser::new(text, ring)?;
    let f = p.polynomial()?;
    p.expect_end()?;
    Ok(f)
}

/// `"t1*(f1) + t2*(f2)"`, or `"0"` for the empty divisor.
pub fn parse_divisor(text: &str, ring: &RingRef) -> Result<QDivisor> {
    Parser::new(text, ring)?.divisor()
}

/// `"[f1, f2, ...]"`.
pub fn parse_generators(text: &str, ring: &RingRef) -> Result<Vec<Polynomial>> {
    Ok(Parser::new(text, ring)?
        .generators()?
        .into_iter()
        .map(|(_, f)| f)
        .collect())
}

/// `"[m1, m2, ...]"` with each `m_i` a monic monomial (`1` for the unit).
pub fn parse_monomial_ideal(text: &str, ring: &RingRef) -> Result<MonomialIdeal> {
    let mut gens: Vec<ExponentVector> = Vec::new();
    for (at, f) in Parser::new(text, ring)?.generators()? {
        match f.terms() {
            [t] if t.coeff == 1 => gens.push(t.exp.clone()),
            _ => {
                return Err(Error::Parse {
                    line: at.line,
                    column: at.column,
                    message: format!("'{f}' is not a monomial"),
                })
            }
        }
    }
    MonomialIdeal::new(ring.nvars(), gens)
}

/// Inverse of [`parse_monomial_ideal`].
pub fn format_monomial_ideal(m: &MonomialIdeal, ring: &RingRef) -> String {
    let gens: Vec<String> = m.generators().iter().map(|g| ring.format_monomial(g)).collect();
    format!("[{}]", gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn polynomials() {
        let r = Ring::new(5, &["x", "y"]).unwrap();
        let f = parse_polynomial("x^3 - y^2", &r).unwrap();
        assert_eq!(f.coefficient(&ExponentVector::from_slice(&[0, 2])).value(), 4);
        assert_eq!(f.to_string(), "x^3 - y^2");
        let g = parse_polynomial("-(x + 2*y)^2 * 3 + 12", &r).unwrap();
        assert_eq!(parse_polynomial(&g.to_string(), &r).unwrap(), g);
        assert_eq!(parse_polynomial("--x", &r).unwrap().to_string(), "x");
    }

    #[test]
    fn errors_have_positions() {
        let r = Ring::new(5, &["x", "y"]).unwrap();
        let pos = |s: &str| match parse_polynomial(s, &r) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("{other:?}"),
        };
        assert_eq!(pos("2x"), (1, 2));
        assert_eq!(pos("x + z"), (1, 5));
        assert_eq!(pos("x +\n  # y"), (2, 3));
        assert_eq!(pos("(x + y"), (1, 7));
        assert_eq!(pos("x^y"), (1, 3));
    }

    #[test]
    fn divisors() {
        let r = Ring::new(5, &["x", "y"]).unwrap();
        let d = parse_divisor("1*(x) + 1*(x^3 - y^2)", &r).unwrap();
        assert_eq!(d.entries().len(), 2);
        assert_eq!(d.to_string(), "1*(x) + 1*(x^3 - y^2)");
        let d = parse_divisor("4/5*(x^3 - y^2)", &r).unwrap();
        assert_eq!(d.entries()[0].coefficient, Rational::new(4.into(), 5.into()));
        assert!(parse_divisor("0", &r).unwrap().is_empty());
        assert!(parse_divisor("0*(x)", &r).is_err());
        assert!(parse_divisor("1*(3)", &r).is_err());
        assert!(parse_divisor("1/0*(x)", &r).is_err());
    }

    #[test]
    fn monomial_ideals() {
        let r = Ring::new(2, &["x", "y"]).unwrap();
        let m = parse_monomial_ideal("[x^2, y^3, x*y^5]", &r).unwrap();
        assert_eq!(m.generators().len(), 2);
        assert_eq!(format_monomial_ideal(&m, &r), "[y^3, x^2]");
        assert_eq!(parse_monomial_ideal(&format_monomial_ideal(&m, &r), &r).unwrap(), m);
        assert!(parse_monomial_ideal("[x + y]", &r).is_err());
        assert!(parse_monomial_ideal("[1]", &r).unwrap().is_unit());
    }
}
