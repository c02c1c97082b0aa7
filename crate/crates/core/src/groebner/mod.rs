//! Gröbner bases of ideals and submodules of free modules, and the ideal
//! operations built on them.

pub(crate) mod engine;
mod ideal;

pub use ideal::{
    eliminate, groebner_basis, height, ideal_membership, intersect, is_groebner_basis, krull_dimension, normal_form,
    quotient_ideal, saturate, Height, Ideal, Quotient, Saturation,
};
