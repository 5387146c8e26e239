//! Concrete domains: arithmetic, norms, parsing and rendering, and the
//! per-domain square-divisor search.

pub mod gaussian;
pub mod integer;
pub mod modp;
pub mod poly;
pub mod poly_factor;
pub mod quadratic;
pub mod random;
pub mod text;

mod ops;

pub use ops::{
    factor_irreducible, find_square_divisor, is_unit, norm, parse, IrreducibleFactors, Norm, ParsedElement,
};

/// Arithmetic shared by the four concrete element types.
pub(crate) trait Arith: Clone + PartialEq + Eq + std::fmt::Debug {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `q · d = self` when `d` divides `self`; `d` nonzero.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn is_unit(&self) -> bool;
    /// `(unit, canonical)` with `unit · canonical = self`; `self` nonzero.
    fn normalize(&self) -> (Self, Self);
}
