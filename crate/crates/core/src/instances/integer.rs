//! Rational integers: trial-division factorization and the arithmetic
//! helpers shared with the quadratic instances.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Arith;

impl Arith for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn normalize(&self) -> (Self, Self) {
        if self.is_negative() {
            (-BigInt::one(), -self)
        } else {
            (BigInt::one(), self.clone())
        }
    }
}

/// Euclid's algorithm; the result is non-negative.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut x, mut y) = (a.abs(), b.abs());
    while !y.is_zero() {
        let r = &x % &y;
        x = std::mem::replace(&mut y, r);
    }
    x
}

/// Prime factorization of a positive integer by trial division, primes in
/// increasing order. Intended for desk-scale inputs; a cofactor with a
/// large prime factor costs time proportional to the square root of that
/// factor.
pub fn factor_natural(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    if let Some(small) = n.to_u64() {
        return factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        if let Some(small) = rest.to_u64() {
            let tail = factor_u64_from(small, d.to_u64().unwrap_or(u64::MAX));
            out.extend(tail.into_iter().map(|(p, e)| (BigUint::from(p), e)));
            return out;
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor_u64_from(n, 2)
}

// Trial division of `n`, which is known to have no prime factor below `start`.
fn factor_u64_from(mut n: u64, start: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |n: &mut u64, d: u64| {
        let mut e = 0;
        while *n % d == 0 {
            *n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
    };
    let mut d = start.max(2);
    if d == 2 {
        push(&mut n, 2);
        d = 3;
    }
    if d % 2 == 0 {
        d += 1;
    }
    while d.saturating_mul(d) <= n {
        push(&mut n, d);
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Signed factorization: `(sign, primes)` with `sign · ∏ pᵉ = n`.
pub fn factor(n: &BigInt) -> (BigInt, Vec<(BigInt, u32)>) {
    let sign = if n.sign() == Sign::Minus { -BigInt::one() } else { BigInt::one() };
    let primes = factor_natural(n.magnitude())
        .into_iter()
        .map(|(p, e)| (BigInt::from(p), e))
        .collect();
    (sign, primes)
}

/// Largest `b ≥ 1` with `b² | n`.
pub fn square_part(n: &BigInt) -> BigInt {
    let (_, primes) = factor(n);
    primes
        .iter()
        .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), (*e / 2) as usize))
}

/// Integer square root of a non-negative integer when it is exact.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Positive divisors of `n`, increasing.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factor_natural(n) {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_360() {
        let (s, f) = factor(&BigInt::from(360));
        assert_eq!(s, BigInt::one());
        let f: Vec<(i64, u32)> = f.iter().map(|(p, e)| (p.to_i64().unwrap(), *e)).collect();
        assert_eq!(f, vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn factor_negative_and_prime() {
        let (s, f) = factor(&BigInt::from(-2));
        assert_eq!(s, -BigInt::one());
        assert_eq!(f, vec![(BigInt::from(2), 1)]);
        assert_eq!(factor_u64(1_000_003), vec![(1_000_003, 1)]);
        assert_eq!(factor_u64(1), vec![]);
    }

    #[test]
    fn factor_beyond_u64() {
        // 2^70 · 3 · 1000003
        let n = (BigUint::one() << 70u32) * 3u32 * 1_000_003u32;
        let f = factor_natural(&n);
        assert_eq!(
            f,
            vec![
                (BigUint::from(2u32), 70),
                (BigUint::from(3u32), 1),
                (BigUint::from(1_000_003u32), 1)
            ]
        );
    }

    #[test]
    fn factor_matches_brute_force() {
        for n in 1u64..3000 {
            let f = factor_u64(n);
            assert_eq!(f.iter().map(|(p, e)| p.pow(*e)).product::<u64>(), n);
            for (p, _) in &f {
                assert!((2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0));
            }
        }
    }

    #[test]
    fn divisors_of_36() {
        let d: Vec<u32> = divisors(&BigUint::from(36u32))
            .iter()
            .map(|x| x.to_u32().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn square_part_values() {
        assert_eq!(square_part(&BigInt::from(360)), BigInt::from(6));
        assert_eq!(square_part(&BigInt::from(48)), BigInt::from(4));
        assert_eq!(square_part(&BigInt::from(30)), BigInt::from(1));
    }
}
