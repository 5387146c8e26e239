//! Exact square-free factorizations over the integers, the Gaussian
//! integers, rational polynomials and the non-GCD order `Z[√-5]`.
//!
//! Seven factorization shapes are supported, from `a = b²c` through the
//! dyadic product `s_n^{2^n} ⋯ s_1² s_0`, divisibility chains, and the
//! classical `s_1 s_2² ⋯ s_n^n`, together with the conversions between them
//! and executable checks of the surrounding divisibility lemmas. See the
//! `examples/` directory for one runnable program per capability.

pub mod algebra;
pub mod cli;
pub mod document;
pub mod domain;
pub mod element;
pub mod error;
pub mod factorization;
pub mod instances;
pub mod verification;

pub use algebra::UnitNormalForm;
pub use domain::{Capability, DomainDescriptor, DomainId};
pub use element::RingElement;
pub use error::{Error, Result};
pub use factorization::{BinaryExpansion, Factor, Factorization, Form};
pub use verification::{EquivalenceReport, PropertyCase, PropertyId};
