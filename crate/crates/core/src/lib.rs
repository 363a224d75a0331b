//! Exact computations with DG open Frobenius algebras: the Hochschild and
//! Connes complexes of the coaugmentation coideal, the necklace Lie
//! bialgebra on cyclic words, and its height-labeled Hopf quantization.
//!
//! Every scalar is an exact rational. Signs of permuted homogeneous symbols
//! all come from [`sign`].

pub mod cyclic;
pub mod error;
pub mod exact;
pub mod frobenius;
pub mod lie;
pub mod quant;
pub mod report;
pub mod sign;

pub use error::Error;
pub use exact::{HPoly, Lin, Rational, SparseMatrix};
pub use frobenius::FrobeniusAlgebra;
