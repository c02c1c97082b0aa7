//! Coefficients, monomials, monomial orders and polynomial arithmetic.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomial_cmp, Monomial, MonomialOrder, MAX_VARS};
pub use parse::parse_poly;
pub use polynomial::{poly_arith, ArithOp, Polynomial};
pub use ring::PolyRing;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    proptest! {
        #[test]
        fn order_axioms(a in prop::collection::vec(0u32..5, 3),
                        b in prop::collection::vec(0u32..5, 3),
                        c in prop::collection::vec(0u32..5, 3),
                        which in 0usize..4) {
            let order = match which {
                0 => MonomialOrder::Grevlex,
                1 => MonomialOrder::Lex,
                2 => MonomialOrder::Block { split: 1 },
                _ => MonomialOrder::WeightedGrevlex(vec![1, 2, 3]),
            };
            let ab = monomial_cmp(&a, &b, &order).unwrap();
            let ba = monomial_cmp(&b, &a, &order).unwrap();
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            let ac: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
            let bc: Vec<u32> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            prop_assert_eq!(monomial_cmp(&ac, &bc, &order).unwrap(), ab);
            prop_assert_ne!(monomial_cmp(&[0, 0, 0], &a, &order).unwrap(), Ordering::Greater);
        }
    }
}
