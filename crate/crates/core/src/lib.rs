//! Exact apolarity computations for graded Artinian Gorenstein algebras.
//!
//! The crate computes annihilator ideals and Hilbert vectors of
//! `Q/Ann(f)` from catalecticant ranks over the rationals, models the
//! monomial cell complex of a polynomial, extracts structured generators of
//! `Ann(f)` for coefficient-1 polynomials, analyses supports of standard
//! forms and Perazzo polynomials, and runs seeded sampling experiments on
//! the minimality of full Perazzo Hilbert vectors.

pub mod apolarity;
pub mod complex;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod locus;
pub mod monomial;
pub mod perazzo;
pub mod rng;
pub mod text;

pub use apolarity::{
    ann_basis, ann_dimension, catalecticant, compare_hilbert, contract, hilbert_vector,
    is_standard, Convention, HilbertOrder, HilbertVector, Limits, Polynomial,
};
pub use error::{Error, Result};
pub use linalg::{Rational, RationalMatrix};
pub use monomial::Monomial;
