use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// A polynomial in normal form: terms sorted descending in the ring's order,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Fallible arithmetic that reports ring mismatches instead of panicking.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add_ref(b),
        ArithOp::Sub => a.sub_ref(b),
        ArithOp::Mul => a.mul_ref(b),
    })
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &PolyRing, c: i64) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: i64) -> Self {
        let c = ring.field().reduce(c);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let c = f.reduce(c);
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &PolyRing, acc: HashMap<Monomial, u32>) -> Self {
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &PolyRing, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (Monomial, FieldElement)> + '_ {
        self.terms.iter().map(|&(m, c)| (m, FieldElement(c)))
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        FieldElement(self.terms.iter().find(|(t, _)| t == m).map_or(0, |&(_, c)| c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Maximal weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| self.ring.degree_of(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.degree_of(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.ring.field();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|&(t, a)| (t.mul(m), f.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(self.ring == other.ring, "ring mismatch");
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let fix = |c: u32| if negate { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, fix(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, fix(b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, fix(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        assert!(self.ring == other.ring, "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for &(m1, c1) in &self.terms {
            for &(m2, c2) in &other.terms {
                let e = acc.entry(m1.mul(&m2)).or_insert(0);
                *e = f.add(*e, f.mul(c1, c2));
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one(&self.ring);
        for _ in 0..e {
            r = r.mul_ref(self);
        }
        r
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(self.ring == d.ring, "ring mismatch");
        let (lm, lc) = d.terms.first().copied()?;
        let f = self.ring.field();
        let inv = f.inv(lc);
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, u32)> = Vec::new();
        while let Some(&(m, c)) = rem.terms.first() {
            let q = m.div(&lm)?;
            let qc = f.mul(c, inv);
            quot.push((q, qc));
            rem = rem.sub_ref(&d.mul_monomial(&q, qc));
        }
        Some(Polynomial::from_sorted(&self.ring, quot))
    }

    /// Greatest common monomial divisor of all terms (ONE for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some(&(m, _)) => it.fold(m, |g, (t, _)| g.gcd(t)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|&(t, c)| t.div(m).map(|q| (q, c)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Reinterprets in `target`, sending variable `i` to variable `var_map[i]`.
    pub fn map_vars(&self, target: &PolyRing, var_map: &[usize]) -> Polynomial {
        let n = self.ring.nvars();
        let terms = self.terms.iter().map(|&(m, c)| {
            let mut t = Monomial::ONE;
            for (i, &j) in var_map.iter().enumerate().take(n) {
                let e = m.exponent(i);
                if e > 0 {
                    t.set_exponent(j, e);
                }
            }
            (t, c as i64)
        });
        Polynomial::from_terms(target, terms)
    }

    /// Ring homomorphism into `target` given by images of the variables.
    pub fn substitute(&self, target: &PolyRing, images: &[Polynomial]) -> Polynomial {
        let n = self.ring.nvars();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; n];
        let mut out = Polynomial::zero(target);
        for &(m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c as i64);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul_ref(&images[i]);
                    pw.push(next);
                }
                if e > 0 {
                    t = t.mul_ref(&pw[e]);
                }
            }
            out = out.add_ref(&t);
        }
        out
    }

    /// Re-sorts the terms for a ring with the same variables but another order.
    pub fn in_ring(&self, target: &PolyRing) -> Polynomial {
        assert_eq!(self.ring.nvars(), target.nvars());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: target.clone(), terms }
    }

    /// Sum of the terms of weighted degree `d`.
    pub fn homogeneous_part(&self, d: i64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .copied()
            .filter(|(m, _)| self.ring.degree_of(m) == d)
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let n = self.ring.nvars();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let s = field.symmetric(c);
            let (neg, abs) = (s < 0, s.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..n {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    e => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_ref(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_ref(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_ref(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::zero(&self.ring).sub_ref(self)
    }
}
