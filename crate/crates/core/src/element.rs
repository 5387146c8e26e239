use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::domain::DomainId;
use crate::error::{Error, Result};
use crate::instances::gaussian::GaussianInt;
use crate::instances::poly::QPoly;
use crate::instances::quadratic::QuadInt;
use crate::instances::{text, Arith};

/// An exact element of one of the four compiled-in domains.
///
/// Arithmetic through the operator traits panics when the operands come
/// from different domains; the fallible entry points in [`crate::algebra`]
/// report [`Error::DomainMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    Gaussian(GaussianInt),
    Polynomial(QPoly),
    Quadratic(QuadInt),
}

macro_rules! dispatch_bin {
    ($a:expr, $b:expr, $method:ident) => {
        match ($a, $b) {
            (RingElement::Integer(x), RingElement::Integer(y)) => RingElement::Integer(Arith::$method(x, y)),
            (RingElement::Gaussian(x), RingElement::Gaussian(y)) => RingElement::Gaussian(Arith::$method(x, y)),
            (RingElement::Polynomial(x), RingElement::Polynomial(y)) => {
                RingElement::Polynomial(Arith::$method(x, y))
            }
            (RingElement::Quadratic(x), RingElement::Quadratic(y)) => RingElement::Quadratic(Arith::$method(x, y)),
            (x, y) => panic!("domain mismatch: {} vs {}", x.domain(), y.domain()),
        }
    };
}

macro_rules! dispatch_un {
    ($a:expr, $x:ident => $body:expr) => {
        match $a {
            RingElement::Integer($x) => $body,
            RingElement::Gaussian($x) => $body,
            RingElement::Polynomial($x) => $body,
            RingElement::Quadratic($x) => $body,
        }
    };
}

impl RingElement {
    pub fn domain(&self) -> DomainId {
        match self {
            RingElement::Integer(_) => DomainId::Z,
            RingElement::Gaussian(_) => DomainId::Zi,
            RingElement::Polynomial(_) => DomainId::Qx,
            RingElement::Quadratic(_) => DomainId::ZSqrtM5,
        }
    }

    /// The image of the integer `n` in `domain`.
    pub fn from_int(domain: DomainId, n: impl Into<BigInt>) -> Self {
        let n = n.into();
        match domain {
            DomainId::Z => RingElement::Integer(n),
            DomainId::Zi => RingElement::Gaussian(GaussianInt::new(n, 0)),
            DomainId::Qx => RingElement::Polynomial(QPoly::constant(BigRational::from_integer(n))),
            DomainId::ZSqrtM5 => RingElement::Quadratic(QuadInt::new(n, 0)),
        }
    }

    pub fn zero(domain: DomainId) -> Self {
        RingElement::from_int(domain, 0)
    }

    pub fn one(domain: DomainId) -> Self {
        RingElement::from_int(domain, 1)
    }

    pub fn integer(n: i64) -> Self {
        RingElement::Integer(BigInt::from(n))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RingElement::Gaussian(GaussianInt::new(re, im))
    }

    pub fn quadratic(a: i64, b: i64) -> Self {
        RingElement::Quadratic(QuadInt::new(a, b))
    }

    /// Polynomial from integer coefficients, lowest degree first.
    pub fn poly(coeffs: &[i64]) -> Self {
        RingElement::Polynomial(QPoly::from_ints(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        dispatch_un!(self, x => Arith::is_zero_elem(x))
    }

    pub fn is_one(&self) -> bool {
        *self == RingElement::one(self.domain())
    }

    pub fn is_unit(&self) -> bool {
        dispatch_un!(self, x => Arith::is_unit(x))
    }

    pub fn same_domain(&self, other: &Self) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch { left: self.domain(), right: other.domain() })
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        dispatch_bin!(self, other, add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        dispatch_bin!(self, other, sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_domain(other)?;
        Ok(dispatch_bin!(self, other, mul))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = RingElement::one(self.domain());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product of `items` in `domain`; the empty product is 1.
    pub fn product<'a>(domain: DomainId, items: impl IntoIterator<Item = &'a RingElement>) -> Self {
        items.into_iter().fold(RingElement::one(domain), |acc, x| &acc * x)
    }

    /// Quotient when `d` divides `self`. `d` must be nonzero and from the
    /// same domain.
    pub(crate) fn div_exact_raw(&self, d: &Self) -> Option<Self> {
        match (self, d) {
            (RingElement::Integer(x), RingElement::Integer(y)) => x.div_exact(y).map(RingElement::Integer),
            (RingElement::Gaussian(x), RingElement::Gaussian(y)) => x.div_exact(y).map(RingElement::Gaussian),
            (RingElement::Polynomial(x), RingElement::Polynomial(y)) => {
                x.div_exact(y).map(RingElement::Polynomial)
            }
            (RingElement::Quadratic(x), RingElement::Quadratic(y)) => x.div_exact(y).map(RingElement::Quadratic),
            (x, y) => panic!("domain mismatch: {} vs {}", x.domain(), y.domain()),
        }
    }

    /// `(unit, canonical)`; `self` nonzero.
    pub(crate) fn normalize_raw(&self) -> (Self, Self) {
        match self {
            RingElement::Integer(x) => {
                let (u, c) = x.normalize();
                (RingElement::Integer(u), RingElement::Integer(c))
            }
            RingElement::Gaussian(x) => {
                let (u, c) = x.normalize();
                (RingElement::Gaussian(u), RingElement::Gaussian(c))
            }
            RingElement::Polynomial(x) => {
                let (u, c) = x.normalize();
                (RingElement::Polynomial(u), RingElement::Polynomial(c))
            }
            RingElement::Quadratic(x) => {
                let (u, c) = x.normalize();
                (RingElement::Quadratic(u), RingElement::Quadratic(c))
            }
        }
    }

    /// Canonical associate; zero maps to zero.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            self.normalize_raw().1
        }
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        RingElement::one(self.domain()).div_exact_raw(self)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        dispatch_bin!(self, rhs, mul)
    }
}

impl Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        match self {
            RingElement::Integer(x) => RingElement::Integer(Arith::neg(x)),
            RingElement::Gaussian(x) => RingElement::Gaussian(Arith::neg(x)),
            RingElement::Polynomial(x) => RingElement::Polynomial(Arith::neg(x)),
            RingElement::Quadratic(x) => RingElement::Quadratic(Arith::neg(x)),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}
