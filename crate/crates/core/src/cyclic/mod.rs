//! Hochschild and Connes complexes of the coaugmentation coideal.
//!
//! A [`Word`] `(a₀, a₁, …, aₙ)` lists basis positions of `C`; slot 0 carries
//! its plain degree and the other slots the `C[1]` shift, so its degree is
//! `Σ|aᵢ| - n`. Connes classes `N(w)` are stored by their lexicographically
//! least rotation with the rotation sign folded into the coefficient.

mod check;
mod complex;
mod hochschild;
mod word;

pub use check::check_complexes;
pub use complex::{
    class_boundary, connes_complex_basis, hochschild_basis, homology_ranks, words_of_degree,
    ComplexKind, HomologyTable,
};
pub use hochschild::{connes_b, hochschild_b, hochschild_b_normalized, hochschild_b_open};
pub use word::{canonical, cyclic_t, norm_expand, norm_n, CyclicClass, Word};

use crate::exact::Lin;

/// Linear combination of words.
pub type Chain = Lin<Word>;
