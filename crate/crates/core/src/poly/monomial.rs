use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Upper bound on the number of variables of any ring.
pub const MAX_VARS: usize = 32;

/// Exponent vector stored inline. Entries beyond the ring's variable count are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("more than {MAX_VARS} variables")));
        }
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e)
                .map_err(|_| Error::InvalidRing(format!("exponent {e} exceeds 255")))?;
        }
        Ok(m)
    }

    pub fn var(i: usize, e: u8) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    #[inline]
    pub(crate) fn set_exponent(&mut self, i: usize, e: u8) {
        self.exps[i] = e;
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        weights
            .iter()
            .zip(self.exps.iter())
            .map(|(&w, &e)| w as i64 * e as i64)
            .sum()
    }

    /// Product; panics on exponent overflow past 255.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` if `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_sub(b)?;
        }
        Some(out)
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(b);
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(b);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Monomial orders. Grevlex and the blocks of `Block` use the ring's grading weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Elimination order: the first `split` variables are compared first (grevlex within each block).
    Block { split: usize },
    /// Grevlex with respect to the given positive weights.
    WeightedGrevlex(Vec<u32>),
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, weights: &[u32], lo: usize, hi: usize) -> Ordering {
    let da: i64 = (lo..hi).map(|i| weights[i] as i64 * a.exps[i] as i64).sum();
    let db: i64 = (lo..hi).map(|i| weights[i] as i64 * b.exps[i] as i64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compares two monomials in `nvars` variables under grading `weights`.
    #[inline]
    pub(crate) fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let n = weights.len();
        match self {
            MonomialOrder::Grevlex | MonomialOrder::WeightedGrevlex(_) => {
                grevlex_range(a, b, weights, 0, n)
            }
            MonomialOrder::Lex => a.exps[..n].cmp(&b.exps[..n]),
            MonomialOrder::Block { split } => grevlex_range(a, b, weights, 0, *split)
                .then_with(|| grevlex_range(a, b, weights, *split, n)),
        }
    }
}

/// Compares exponent vectors directly under `order` (unit weights unless weighted).
pub fn monomial_cmp(m1: &[u32], m2: &[u32], order: &MonomialOrder) -> Result<Ordering> {
    if m1.len() != m2.len() {
        return Err(Error::LengthMismatch(m1.len(), m2.len()));
    }
    let weights = match order {
        MonomialOrder::WeightedGrevlex(w) => {
            if w.len() != m1.len() {
                return Err(Error::LengthMismatch(w.len(), m1.len()));
            }
            w.clone()
        }
        MonomialOrder::Block { split } if *split > m1.len() => {
            return Err(Error::LengthMismatch(*split, m1.len()))
        }
        _ => vec![1; m1.len()],
    };
    let a = Monomial::from_exponents(m1)?;
    let b = Monomial::from_exponents(m2)?;
    Ok(order.compare(&a, &b, &weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    /// Textbook grevlex: higher total degree wins; ties broken by the last differing
    /// exponent, smaller exponent wins.
    fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        if da != db {
            return da.cmp(&db);
        }
        let diff: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x as i64 - y as i64).collect();
        match diff.iter().rev().find(|&&d| d != 0) {
            None => Ordering::Equal,
            Some(&d) if d < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    #[test]
    fn grevlex_degree_two_in_three_vars() {
        let mut monos = Vec::new();
        for a in 0..=2u32 {
            for b in 0..=(2 - a) {
                monos.push(vec![a, b, 2 - a - b]);
            }
        }
        for m1 in &monos {
            for m2 in &monos {
                assert_eq!(
                    monomial_cmp(m1, m2, &MonomialOrder::Grevlex).unwrap(),
                    grevlex_oracle(m1, m2),
                    "{m1:?} vs {m2:?}"
                );
            }
        }
        // xz < y^2
        assert_eq!(
            monomial_cmp(&[1, 0, 1], &[0, 2, 0], &MonomialOrder::Grevlex).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn lex_first_variable_dominates() {
        assert_eq!(
            monomial_cmp(&[1, 0], &[0, 100], &MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            monomial_cmp(&[3, 1], &[3, 1], &MonomialOrder::Lex).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(monomial_cmp(&[1, 0], &[1], &MonomialOrder::Grevlex).is_err());
    }

    #[test]
    fn block_eliminates_first_block() {
        let o = MonomialOrder::Block { split: 1 };
        assert_eq!(
            o.compare(&mono(&[1, 0, 0]), &mono(&[0, 5, 5]), &[1, 1, 1]),
            Ordering::Greater
        );
    }

    #[test]
    fn divisibility_helpers() {
        let a = mono(&[1, 2, 0]);
        let b = mono(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(b.div(&a), Some(mono(&[1, 0, 1])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&mono(&[0, 3, 1])), mono(&[1, 3, 1]));
        assert!(mono(&[1, 0]).is_coprime(&mono(&[0, 4])));
    }
}
