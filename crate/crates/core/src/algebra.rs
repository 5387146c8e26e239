//! Domain-generic divisibility, gcd/lcm, unit normalization, and the
//! associate and coprimality predicates.

use crate::domain::{Capability, DomainId};
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::instances::integer;

/// `unit · canonical` decomposition of a nonzero element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalForm {
    pub unit: RingElement,
    pub canonical: RingElement,
}

/// `Some(q)` with `b · q = a` when `b | a`.
pub fn exact_div(a: &RingElement, b: &RingElement) -> Result<Option<RingElement>> {
    a.same_domain(b)?;
    if b.is_zero() {
        return Err(Error::usage("division by zero"));
    }
    Ok(a.div_exact_raw(b))
}

/// `b | a`. Zero divides only zero.
pub fn divides(b: &RingElement, a: &RingElement) -> bool {
    if b.domain() != a.domain() {
        return false;
    }
    if b.is_zero() {
        return a.is_zero();
    }
    a.div_exact_raw(b).is_some()
}

/// Canonical greatest common divisor; `gcd(a, 0)` is the canonical
/// associate of `a`.
pub fn gcd(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.same_domain(b)?;
    a.domain().require(Capability::Gcd)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::usage("gcd(0, 0) is undefined"));
    }
    Ok(match (a, b) {
        (RingElement::Integer(x), RingElement::Integer(y)) => RingElement::Integer(integer::gcd(x, y)),
        (RingElement::Gaussian(x), RingElement::Gaussian(y)) => RingElement::Gaussian(x.gcd(y)),
        (RingElement::Polynomial(x), RingElement::Polynomial(y)) => RingElement::Polynomial(x.gcd(y)),
        _ => unreachable!("capability and domain checked above"),
    })
}

/// Canonical least common multiple; zero if either argument is zero.
pub fn lcm(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.same_domain(b)?;
    a.domain().require(Capability::Gcd)?;
    if a.is_zero() || b.is_zero() {
        return Ok(RingElement::zero(a.domain()));
    }
    let g = gcd(a, b)?;
    let q = b.div_exact_raw(&g).expect("gcd divides its arguments");
    Ok((a * &q).canonical())
}

/// gcd of a non-empty list.
pub fn gcd_all(items: &[RingElement]) -> Result<RingElement> {
    let (first, rest) = items
        .split_first()
        .ok_or_else(|| Error::usage("gcd of an empty list"))?;
    first.domain().require(Capability::Gcd)?;
    rest.iter().try_fold(first.canonical(), |acc, x| {
        if acc.is_zero() && x.is_zero() {
            Ok(acc)
        } else {
            gcd(&acc, x)
        }
    })
}

/// lcm of a list; the empty lcm is 1.
pub fn lcm_all(domain: DomainId, items: &[RingElement]) -> Result<RingElement> {
    domain.require(Capability::Gcd)?;
    items.iter().try_fold(RingElement::one(domain), |acc, x| lcm(&acc, x))
}

pub fn normalize(a: &RingElement) -> Result<UnitNormalForm> {
    if a.is_zero() {
        return Err(Error::usage("cannot normalize zero"));
    }
    let (unit, canonical) = a.normalize_raw();
    Ok(UnitNormalForm { unit, canonical })
}

/// `a = u · b` for some unit `u`. Elements of different domains are never
/// associates.
pub fn is_associate(a: &RingElement, b: &RingElement) -> bool {
    a.domain() == b.domain() && a.canonical() == b.canonical()
}

/// The unit `u` with `a = u · b`, if `a` and `b` are associates.
pub fn associate_witness(a: &RingElement, b: &RingElement) -> Option<RingElement> {
    if !is_associate(a, b) {
        return None;
    }
    if b.is_zero() {
        return Some(RingElement::one(a.domain()));
    }
    a.div_exact_raw(b)
}

/// No common non-unit divisor. `0` and `0` are never coprime.
pub fn is_coprime(a: &RingElement, b: &RingElement) -> bool {
    if a.domain() != b.domain() || (a.is_zero() && b.is_zero()) {
        return false;
    }
    match (a, b) {
        (RingElement::Quadratic(x), RingElement::Quadratic(y)) => x.coprime(y),
        _ => gcd(a, b).map(|g| g.is_unit()).unwrap_or(false),
    }
}

/// Splits `a | bc` as `a = a₁a₂` with `a₁ | b` and `a₂ | c`, taking
/// `a₁ = gcd(a, b)`.
pub fn primal_split(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
) -> Result<(RingElement, RingElement)> {
    a.same_domain(b)?;
    a.same_domain(c)?;
    a.domain().require(Capability::Gcd)?;
    if a.is_zero() {
        return Err(Error::usage("primal split needs a non-zero element"));
    }
    if !divides(a, &(b * c)) {
        return Err(Error::usage(format!("{a} does not divide ({b})·({c})")));
    }
    let a1 = gcd(a, b)?;
    let a2 = a.div_exact_raw(&a1).expect("gcd divides a");
    Ok((a1, a2))
}
