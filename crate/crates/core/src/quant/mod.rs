//! The height quantization: products of height-labeled necklaces modulo the
//! swap relations, with the PBW normal form, the product, the labeling
//! coproduct, the antipode and the verification suites.

mod check;
mod coproduct;
mod diff;
mod monomial;
mod rewrite;

pub use check::{
    check_differential, check_hopf, check_quantization, coefficients, lift, lift_element,
    pbw_basis, pbw_check, random_monomial, HopfSweep, PbwReport, PbwRow,
};
pub use coproduct::{enumerate_labelings, Labeling, LabelingTerm};
pub use monomial::*;
pub use rewrite::{Quantizer, Strategy};
