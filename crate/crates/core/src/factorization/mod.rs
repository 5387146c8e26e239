//! The seven square-free factorization shapes and the constructions that
//! produce and convert between them.
//!
//! | form | shape |
//! |------|-------|
//! | I    | `u · b² · c`, `c` square-free |
//! | II   | `s_n^{2^n} ⋯ s_1² s_0`, every `s_j` square-free (units allowed), unit 1 |
//! | III  | `u · ∏ s_j^{2^{k_j}}`, canonical non-unit bases, `k_1 < ⋯ < k_n` |
//! | IV   | `u · s_1 ⋯ s_n`, square-free, `s_i | s_{i+1}` |
//! | V    | `u · ∏ s_i^{k_i}`, canonical non-units, `s_i | s_{i+1}`, `s_i ≁ s_{i+1}` |
//! | VI   | `u · s_1 s_2² ⋯ s_n^n`, square-free, pairwise coprime |
//! | VII  | `u · ∏ s_i^{k_i}`, canonical non-units, pairwise coprime, `k_1 < ⋯ < k_n` |

mod compute;
mod convert;

use std::fmt;
use std::str::FromStr;

pub use compute::{
    chain_factorization, coprime_factorization, dyadic_factorization, extract_square_part, factorize, is_square_free,
};
pub use convert::{
    chain_to_coprime, convert, coprime_to_chain, coprime_to_dyadic, dyadic_to_coprime, dyadic_to_square_part,
    strip_units,
};

use crate::domain::DomainId;
use crate::element::RingElement;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl Form {
    pub const ALL: [Form; 7] = [Form::I, Form::II, Form::III, Form::IV, Form::V, Form::VI, Form::VII];

    pub fn as_str(self) -> &'static str {
        match self {
            Form::I => "i",
            Form::II => "ii",
            Form::III => "iii",
            Form::IV => "iv",
            Form::V => "v",
            Form::VI => "vi",
            Form::VII => "vii",
        }
    }

    /// Forms compared against each other by the uniqueness checks.
    pub fn family(self) -> Family {
        match self {
            Form::I => Family::SquarePart,
            Form::II | Form::III => Family::Dyadic,
            Form::IV | Form::V => Family::Chain,
            Form::VI | Form::VII => Family::Coprime,
        }
    }

    /// III, V and VII: canonical non-unit bases with the unit split off.
    pub fn is_reduced(self) -> bool {
        matches!(self, Form::III | Form::V | Form::VII)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.trim().to_ascii_lowercase();
        Form::ALL
            .into_iter()
            .find(|f| f.as_str() == lower)
            .ok_or_else(|| Error::usage(format!("unknown form `{s}` (expected i, ii, iii, iv, v, vi or vii)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SquarePart,
    Dyadic,
    Chain,
    Coprime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub base: RingElement,
    pub exponent: u64,
}

impl Factor {
    pub fn new(base: RingElement, exponent: u64) -> Self {
        Factor { base, exponent }
    }
}

/// A form-tagged product `unit · ∏ baseᵉˣᵖ`. Well-formedness for the tag is
/// checked by [`crate::verification::check_well_formed`], not enforced on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub domain: DomainId,
    pub form: Form,
    pub unit: RingElement,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(form: Form, unit: RingElement, factors: Vec<Factor>) -> Self {
        Factorization { domain: unit.domain(), form, unit, factors }
    }

    /// Unit 1 with the given `(base, exponent)` list.
    pub fn from_pairs(form: Form, domain: DomainId, pairs: Vec<(RingElement, u64)>) -> Self {
        Factorization {
            domain,
            form,
            unit: RingElement::one(domain),
            factors: pairs.into_iter().map(|(b, e)| Factor::new(b, e)).collect(),
        }
    }

    /// Form II with `s_0, s_1, …` given in order.
    pub fn dyadic(domain: DomainId, levels: Vec<RingElement>) -> Self {
        let pairs = levels.into_iter().enumerate().map(|(j, s)| (s, 1u64 << j)).collect();
        Factorization::from_pairs(Form::II, domain, pairs)
    }

    /// Form IV from the chain `s_1 | s_2 | ⋯`.
    pub fn chain(domain: DomainId, links: Vec<RingElement>) -> Self {
        let pairs = links.into_iter().map(|s| (s, 1)).collect();
        Factorization::from_pairs(Form::IV, domain, pairs)
    }

    /// Form VI with `s_1, s_2, …` given in order.
    pub fn coprime(domain: DomainId, bases: Vec<RingElement>) -> Self {
        let pairs = bases.into_iter().zip(1u64..).collect();
        Factorization::from_pairs(Form::VI, domain, pairs)
    }

    pub fn bases(&self) -> Vec<&RingElement> {
        self.factors.iter().map(|f| &f.base).collect()
    }

    /// The represented element `unit · ∏ baseᵉˣᵖ`.
    pub fn product(&self) -> RingElement {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, f| &acc * &f.base.pow(f.exponent))
    }

    pub fn with_form(mut self, form: Form) -> Self {
        self.form = form;
        self
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.form, self.unit)?;
        for factor in &self.factors {
            write!(f, " · ({})^{}", factor.base, factor.exponent)?;
        }
        Ok(())
    }
}

/// Binary digits of a positive integer, lowest first; the top stored bit
/// is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryExpansion {
    pub value: u64,
    pub bits: Vec<bool>,
}

impl BinaryExpansion {
    pub fn new(value: u64) -> Self {
        assert!(value > 0, "binary expansion of a positive integer");
        let width = 64 - value.leading_zeros() as usize;
        BinaryExpansion { value, bits: (0..width).map(|i| value >> i & 1 == 1).collect() }
    }

    /// `c_i`, zero beyond the stored width.
    pub fn bit(&self, i: usize) -> bool {
        self.bits.get(i).copied().unwrap_or(false)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_expansion_reconstructs() {
        for k in 1..500u64 {
            let b = BinaryExpansion::new(k);
            assert_eq!(b.bits.iter().enumerate().map(|(i, &c)| (c as u64) << i).sum::<u64>(), k);
            assert_eq!(b.bits.last(), Some(&true));
        }
        assert_eq!(BinaryExpansion::new(6).bits, vec![false, true, true]);
        assert_eq!(BinaryExpansion::new(5).ones().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn form_tags_round_trip() {
        for f in Form::ALL {
            assert_eq!(f.as_str().parse::<Form>().unwrap(), f);
        }
        assert_eq!("VII".parse::<Form>().unwrap(), Form::VII);
        assert!("viii".parse::<Form>().is_err());
    }

    #[test]
    fn product_of_worked_example() {
        let f = Factorization::coprime(
            DomainId::Z,
            vec![RingElement::integer(5), RingElement::integer(3), RingElement::integer(2)],
        );
        assert_eq!(f.product(), RingElement::integer(360));
        let d = Factorization::dyadic(DomainId::Z, vec![RingElement::integer(10), RingElement::integer(6)]);
        assert_eq!(d.factors[1].exponent, 2);
        assert_eq!(d.product(), RingElement::integer(360));
    }
}
