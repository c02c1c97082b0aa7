//! Finitely presented graded modules over a polynomial ring.

mod matrix;
mod module;
pub(crate) mod ops;

pub use matrix::PolyMatrix;
pub use module::{
    annihilator, colon_into, depth, direct_sum, ext_module, fitting_ideal, free_resolution,
    is_torsionfree, module_from_ideal, mu, projective_dimension, rank, submodule_intersect,
    syzygy_matrix, ExtModule, FreeResolution, Minimized, PresentedModule, Submodule,
};

#[cfg(test)]
mod tests;
