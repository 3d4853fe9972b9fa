use std::fmt::Write;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{ExponentVector, MonomialOrder};
use crate::error::{Error, Result};

/// Shared handle to a ring descriptor.
pub type RingRef = Arc<Ring>;

/// Descriptor of `F_p[x_1, ..., x_n]` together with the monomial order used
/// for canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Ring {
    /// Ring with the default graded reverse lexicographic order.
    pub fn new(p: u64, vars: &[&str]) -> Result<RingRef> {
        Self::with_order(p, vars, MonomialOrder::grevlex(vars.len()))
    }

    pub fn with_order(p: u64, vars: &[&str], order: MonomialOrder) -> Result<RingRef> {
        let field = PrimeField::new(p)?;
        if order.nvars() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: order.nvars(),
            });
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidInput(format!("invalid variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(Ring {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn check_index(&self, k: usize) -> Result<()> {
        if k < self.nvars() {
            Ok(())
        } else {
            Err(Error::InvalidVariable {
                index: k,
                nvars: self.nvars(),
            })
        }
    }

    /// The ring with variable `k` deleted, i.e. `R/(x_k)`.
    pub fn without(&self, k: usize) -> Result<RingRef> {
        self.check_index(k)?;
        let mut vars = self.vars.clone();
        vars.remove(k);
        Ok(Arc::new(Ring {
            field: self.field,
            vars,
            order: self.order.without(k),
        }))
    }

    /// Same variables and field, different order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<RingRef> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Self::with_order(self.characteristic(), &vars, order)
    }

    /// Renders a monomial as `x^2*y`; the constant monomial renders as `1`.
    pub fn format_monomial(&self, exp: &ExponentVector) -> String {
        let mut out = String::new();
        for (i, e) in exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.vars[i]);
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Structural equality with a pointer fast path.
pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
