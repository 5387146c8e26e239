use num_bigint::{BigInt, BigUint};

use super::text;
use crate::domain::{Capability, DomainId};
use crate::element::RingElement;
use crate::error::{Error, Result};

/// An element together with the text it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedElement {
    pub text: String,
    pub element: RingElement,
}

impl ParsedElement {
    pub fn parse(domain: DomainId, text: &str) -> Result<Self> {
        Ok(ParsedElement { text: text.to_string(), element: parse(domain, text)? })
    }
}

pub fn parse(domain: DomainId, text: &str) -> Result<RingElement> {
    text::parse(domain, text)
}

pub fn is_unit(a: &RingElement) -> bool {
    a.is_unit()
}

/// Multiplicative size: `|a|` on Z, `a² + b²` on Z\[i\], `a² + 5b²` on
/// Z\[s\]. Units are exactly the elements of norm 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Norm(pub BigUint);

/// `None` on Q\[x\], where the degree plays the role of a size measure.
pub fn norm(a: &RingElement) -> Option<Norm> {
    let n: BigInt = match a {
        RingElement::Integer(n) => n.clone(),
        RingElement::Gaussian(g) => g.norm(),
        RingElement::Quadratic(q) => q.norm(),
        RingElement::Polynomial(_) => return None,
    };
    Some(Norm(n.magnitude().clone()))
}

fn require_nonzero_nonunit(a: &RingElement) -> Result<()> {
    if a.is_zero() || a.is_unit() {
        Err(Error::usage("non-zero non-unit required"))
    } else {
        Ok(())
    }
}

/// Some non-unit `b` with `b² | a`, or `None` exactly when `a` is square-free.
/// The witness is not canonical.
pub fn find_square_divisor(a: &RingElement) -> Result<Option<RingElement>> {
    require_nonzero_nonunit(a)?;
    let b = match a {
        RingElement::Integer(n) => RingElement::Integer(super::integer::square_part(n)),
        RingElement::Gaussian(g) => {
            let (_, primes) = g.factor();
            let parts: Vec<RingElement> = primes
                .into_iter()
                .map(|(p, e)| RingElement::Gaussian(p).pow(u64::from(e / 2)))
                .collect();
            RingElement::product(DomainId::Zi, &parts)
        }
        RingElement::Polynomial(p) => {
            let parts: Vec<RingElement> = p
                .squarefree_decomposition()
                .into_iter()
                .zip(1u64..)
                .map(|(g, mult)| RingElement::Polynomial(g).pow(mult / 2))
                .collect();
            RingElement::product(DomainId::Qx, &parts)
        }
        RingElement::Quadratic(q) => match q.square_divisor() {
            Some(b) => RingElement::Quadratic(b),
            None => return Ok(None),
        },
    };
    Ok((!b.is_unit()).then_some(b))
}

/// Irreducible factorization in a UFD instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactors {
    pub unit: RingElement,
    /// Canonical, pairwise non-associate primes in the fixed per-domain order.
    pub primes: Vec<(RingElement, u32)>,
}

impl IrreducibleFactors {
    pub fn product(&self) -> RingElement {
        self.primes
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| &acc * &p.pow(u64::from(*e)))
    }
}

pub fn factor_irreducible(a: &RingElement) -> Result<IrreducibleFactors> {
    a.domain().require(Capability::Ufd)?;
    if a.is_zero() {
        return Err(Error::usage("cannot factor zero"));
    }
    Ok(match a {
        RingElement::Integer(n) => {
            let (sign, primes) = super::integer::factor(n);
            IrreducibleFactors {
                unit: RingElement::Integer(sign),
                primes: primes.into_iter().map(|(p, e)| (RingElement::Integer(p), e)).collect(),
            }
        }
        RingElement::Gaussian(g) => {
            let (unit, primes) = g.factor();
            IrreducibleFactors {
                unit: RingElement::Gaussian(unit),
                primes: primes.into_iter().map(|(p, e)| (RingElement::Gaussian(p), e)).collect(),
            }
        }
        RingElement::Polynomial(p) => {
            let (unit, primes) = p.factor();
            IrreducibleFactors {
                unit: RingElement::Polynomial(unit),
                primes: primes.into_iter().map(|(p, e)| (RingElement::Polynomial(p), e)).collect(),
            }
        }
        RingElement::Quadratic(_) => unreachable!("capability checked above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_divisor_examples() {
        let b = find_square_divisor(&RingElement::integer(360)).unwrap().unwrap();
        assert_eq!(b, RingElement::integer(6));
        assert_eq!(find_square_divisor(&RingElement::integer(30)).unwrap(), None);
        let b = find_square_divisor(&RingElement::gaussian(2, 0)).unwrap().unwrap();
        assert_eq!(b, RingElement::gaussian(1, 1));
        let b = find_square_divisor(&RingElement::poly(&[0, 0, 1, 1])).unwrap().unwrap();
        assert_eq!(b, RingElement::poly(&[0, 1]));
        assert!(find_square_divisor(&RingElement::integer(-1)).is_err());
        assert!(find_square_divisor(&RingElement::integer(0)).is_err());
    }

    #[test]
    fn irreducible_examples() {
        let f = factor_irreducible(&RingElement::integer(360)).unwrap();
        assert_eq!(f.unit, RingElement::integer(1));
        assert_eq!(
            f.primes,
            vec![
                (RingElement::integer(2), 3),
                (RingElement::integer(3), 2),
                (RingElement::integer(5), 1)
            ]
        );
        let f = factor_irreducible(&RingElement::poly(&[-1, 0, 1])).unwrap();
        assert_eq!(f.primes, vec![(RingElement::poly(&[-1, 1]), 1), (RingElement::poly(&[1, 1]), 1)]);
        let f = factor_irreducible(&RingElement::integer(-2)).unwrap();
        assert_eq!(f.unit, RingElement::integer(-1));
        assert_eq!(f.primes, vec![(RingElement::integer(2), 1)]);
        assert!(matches!(
            factor_irreducible(&RingElement::quadratic(9, 0)),
            Err(Error::Capability { .. })
        ));
    }

    #[test]
    fn units_and_norms() {
        assert!(is_unit(&RingElement::integer(-1)));
        assert!(is_unit(&RingElement::poly(&[3])));
        assert!(!is_unit(&RingElement::gaussian(1, 1)));
        assert_eq!(norm(&RingElement::gaussian(1, 1)), Some(Norm(BigUint::from(2u32))));
        assert_eq!(norm(&RingElement::quadratic(2, 1)), Some(Norm(BigUint::from(9u32))));
        assert!(norm(&RingElement::poly(&[1, 1])).is_none());
        assert!(Norm(BigUint::from(1u32)) < Norm(BigUint::from(2u32)));
    }
}
