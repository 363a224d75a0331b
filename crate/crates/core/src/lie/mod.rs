//! The necklace Lie bialgebra on `L = CC(C)[m-1]`.
//!
//! Elements are combinations of Connes classes. A class `N[x₁|…|xₙ]` has
//! `L`-degree `Σ(|xᵢ|-1) + 2 - m`. Letters are treated as symbols of their
//! shifted degree `|x|-1` and every rearrangement is signed by the Koszul rule.

mod check;
mod ops;

pub use check::{check_lie_bialgebra, classes_over, classes_up_to, LieSweep};
pub use ops::{
    act, bracket, bracket_classes, bracket_raw, cobracket, cobracket_class, cobracket_raw,
    differential, l_degree, tau, tau3, LieElement, TensorCube, TensorSquare,
};
