use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// A polynomial ring `GF(p)[x_1..x_d]` with a fixed monomial order and grading.
///
/// Cloning is cheap; rings compare structurally.
#[derive(Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.characteristic(), self.0.vars.join(","))
    }
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(characteristic: u32, vars: &[S], order: MonomialOrder) -> Result<Self> {
        let field = PrimeField::new(characteristic)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let weights = match &order {
            MonomialOrder::WeightedGrevlex(w) => w.clone(),
            _ => vec![1; vars.len()],
        };
        Self::build(field, vars, weights, order)
    }

    /// Ring with an explicit grading; `order` is refined by these weights.
    pub fn with_weights<S: AsRef<str>>(
        characteristic: u32,
        vars: &[S],
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let field = PrimeField::new(characteristic)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        Self::build(field, vars, weights, order)
    }

    fn build(field: PrimeField, vars: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("more than {MAX_VARS} variables")));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if weights.len() != vars.len() {
            return Err(Error::InvalidRing("one weight per variable required".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        match &order {
            MonomialOrder::WeightedGrevlex(w) if *w != weights => {
                return Err(Error::InvalidRing("order weights differ from grading".into()))
            }
            MonomialOrder::Block { split } if *split > vars.len() => {
                return Err(Error::InvalidRing("block split beyond variable count".into()))
            }
            _ => {}
        }
        Ok(PolyRing(Arc::new(RingInner { field, vars, weights, order })))
    }

    /// `GF(p)[vars]` with grevlex.
    pub fn grevlex<S: AsRef<str>>(characteristic: u32, vars: &[S]) -> Result<Self> {
        Self::new(characteristic, vars, MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        Polynomial::monomial(self, Monomial::var(i, 1), 1)
    }

    pub fn var_by_name(&self, name: &str) -> Result<Polynomial> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(a, b, &self.0.weights)
    }

    #[inline]
    pub fn degree_of(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.0.weights)
    }

    /// The same variables and grading under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        let weights = match &order {
            MonomialOrder::WeightedGrevlex(w) => w.clone(),
            _ => self.0.weights.clone(),
        };
        PolyRing::with_weights(self.characteristic(), &self.0.vars, weights, order)
    }

    /// Same characteristic, new variables and weights, graded reverse lex.
    pub fn derived(&self, vars: &[String], weights: Vec<u32>) -> Result<PolyRing> {
        PolyRing::with_weights(self.characteristic(), vars, weights, MonomialOrder::Grevlex)
    }

    /// A variable name not in use, built from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }

    /// All monomials of weighted degree exactly `deg`.
    pub fn monomials_of_degree(&self, deg: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if deg < 0 {
            return out;
        }
        let w = self.weights().to_vec();
        fn rec(i: usize, left: i64, w: &[u32], cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(*cur);
                }
                return;
            }
            let mut e = 0i64;
            while e * w[i] as i64 <= left {
                cur.set_exponent(i, e as u8);
                rec(i + 1, left - e * w[i] as i64, w, cur, out);
                e += 1;
            }
            cur.set_exponent(i, 0);
        }
        let mut cur = Monomial::ONE;
        rec(0, deg, &w, &mut cur, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rules() {
        assert!(PolyRing::grevlex(32003, &["x", "y"]).is_ok());
        assert!(PolyRing::grevlex(32003, &["x", "x"]).is_err());
        assert!(PolyRing::grevlex(32003, &[] as &[&str]).is_err());
        assert!(PolyRing::grevlex(10, &["x"]).is_err());
        assert!(PolyRing::new(7, &["x", "y"], MonomialOrder::WeightedGrevlex(vec![1, 0])).is_err());
    }

    #[test]
    fn monomial_enumeration() {
        let r = PolyRing::grevlex(7, &["x", "y", "z"]).unwrap();
        assert_eq!(r.monomials_of_degree(2).len(), 6);
        let w = PolyRing::new(7, &["x", "y"], MonomialOrder::WeightedGrevlex(vec![1, 2])).unwrap();
        // degree 4: x^4, x^2 y, y^2
        assert_eq!(w.monomials_of_degree(4).len(), 3);
    }
}
