//! The order `Z[s]`, `s² = -5`: atomic and ACCP, but not a GCD domain.
//! Every question that would normally go through a gcd is answered here by
//! a search bounded by the multiplicative norm.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{integer, Arith};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    /// Rational part.
    pub a: BigInt,
    /// Coefficient of `s`.
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + BigInt::from(5) * &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        QuadInt { a: self.a.clone(), b: -&self.b }
    }

    /// All elements of norm exactly `n`, in canonical form (one per `±` pair).
    pub fn canonical_of_norm(n: &BigUint) -> Vec<QuadInt> {
        let mut out = Vec::new();
        let n = BigInt::from(n.clone());
        let five = BigInt::from(5);
        let mut b = BigInt::zero();
        while &five * &b * &b <= n {
            let rest = &n - &five * &b * &b;
            if let Some(a) = rest.to_biguint().and_then(|r| integer::exact_sqrt(&r)) {
                let a = BigInt::from(a);
                if a.is_zero() {
                    if b.is_positive() {
                        out.push(QuadInt::new(0, b.clone()));
                    }
                } else if b.is_zero() {
                    out.push(QuadInt::new(a, 0));
                } else {
                    out.push(QuadInt::new(a.clone(), b.clone()));
                    out.push(QuadInt::new(a, -&b));
                }
            }
            b += 1;
        }
        out
    }

    /// Canonical non-unit divisors of `self`, found by enumerating elements
    /// whose norm divides `N(self)`.
    pub fn nonunit_divisors(&self) -> Vec<QuadInt> {
        let n = self.norm().to_biguint().expect("norm is non-negative");
        assert!(!n.is_zero(), "divisors of zero are unbounded");
        let mut out = Vec::new();
        for d in integer::divisors(&n) {
            if d.is_one() {
                continue;
            }
            for cand in QuadInt::canonical_of_norm(&d) {
                if self.div_exact(&cand).is_some() {
                    out.push(cand);
                }
            }
        }
        out
    }

    /// Any common non-unit divisor has norm dividing `gcd(N(x), N(y))`.
    pub fn coprime(&self, other: &Self) -> bool {
        match (Arith::is_zero_elem(self), Arith::is_zero_elem(other)) {
            (true, true) => false,
            (true, false) => other.is_unit(),
            (false, true) => self.is_unit(),
            (false, false) => {
                let g = integer::gcd(&self.norm(), &other.norm())
                    .to_biguint()
                    .expect("non-negative");
                if g.is_one() {
                    return true;
                }
                for d in integer::divisors(&g) {
                    if d.is_one() {
                        continue;
                    }
                    for cand in QuadInt::canonical_of_norm(&d) {
                        if self.div_exact(&cand).is_some() && other.div_exact(&cand).is_some() {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// A non-unit `b` with `b² | self`, searching `N(b)² | N(self)`.
    pub fn square_divisor(&self) -> Option<QuadInt> {
        let n = self.norm().to_biguint().expect("non-negative");
        for d in integer::divisors(&n) {
            if d.is_one() {
                continue;
            }
            let d2 = &d * &d;
            if d2 > n {
                break;
            }
            if !(&n % &d2).is_zero() {
                continue;
            }
            for cand in QuadInt::canonical_of_norm(&d) {
                if self.div_exact(&cand.mul(&cand)).is_some() {
                    return Some(cand);
                }
            }
        }
        None
    }

    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?))
    }
}

impl Arith for QuadInt {
    fn zero_elem() -> Self {
        QuadInt::new(0, 0)
    }
    fn one_elem() -> Self {
        QuadInt::new(1, 0)
    }
    fn is_zero_elem(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        QuadInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn sub(&self, o: &Self) -> Self {
        QuadInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn mul(&self, o: &Self) -> Self {
        QuadInt {
            a: &self.a * &o.a - BigInt::from(5) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    fn neg(&self) -> Self {
        QuadInt { a: -&self.a, b: -&self.b }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        let num = self.mul(&d.conj());
        let (a, r1) = num.a.div_rem(&n);
        let (b, r2) = num.b.div_rem(&n);
        (r1.is_zero() && r2.is_zero()).then_some(QuadInt { a, b })
    }
    fn is_unit(&self) -> bool {
        self.b.is_zero() && self.a.magnitude().is_one()
    }
    /// Of `±x`, the one with positive rational part, or positive `s`
    /// coefficient when the rational part vanishes.
    fn normalize(&self) -> (Self, Self) {
        let positive = self.a.is_positive() || (self.a.is_zero() && self.b.is_positive());
        if positive {
            (QuadInt::one_elem(), self.clone())
        } else {
            (QuadInt::one_elem().neg(), self.neg())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    #[test]
    fn six_has_two_factorizations() {
        assert_eq!(q(2, 0).mul(&q(3, 0)), q(6, 0));
        assert_eq!(q(1, 1).mul(&q(1, -1)), q(6, 0));
    }

    #[test]
    fn conjugates_of_norm_nine_are_coprime() {
        assert!(q(2, 1).coprime(&q(2, -1)));
        assert!(q(2, 0).coprime(&q(1, 1)));
        assert!(!q(3, 0).coprime(&q(6, 0)));
    }

    #[test]
    fn square_divisor_search() {
        assert_eq!(q(9, 0).square_divisor(), Some(q(3, 0)));
        assert_eq!(q(2, 1).square_divisor(), None);
        assert_eq!(q(6, 0).square_divisor(), None);
        assert!(q(-4, 0).square_divisor().is_some());
    }

    #[test]
    fn norm_enumeration() {
        assert!(QuadInt::canonical_of_norm(&BigUint::from(3u32)).is_empty());
        let nine = QuadInt::canonical_of_norm(&BigUint::from(9u32));
        assert_eq!(nine, vec![q(3, 0), q(2, 1), q(2, -1)]);
        assert_eq!(QuadInt::canonical_of_norm(&BigUint::from(5u32)), vec![q(0, 1)]);
    }

    #[test]
    fn normalize_sign() {
        assert_eq!(q(-2, 1).normalize(), (q(-1, 0), q(2, -1)));
        assert_eq!(q(0, -3).normalize(), (q(-1, 0), q(0, 3)));
    }
}
