//! Gaussian integers `a + b i`.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{integer, Arith};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by `i`.
    fn rotate(&self) -> Self {
        GaussianInt { re: -&self.im, im: self.re.clone() }
    }

    /// Quotient rounded to the nearest lattice point, so the remainder has
    /// norm at most half the divisor's norm.
    pub fn div_round(&self, d: &Self) -> Self {
        let n = d.norm();
        let num = self.mul(&d.conj());
        GaussianInt { re: round_div(&num.re, &n), im: round_div(&num.im, &n) }
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.sub(&self.div_round(d).mul(d))
    }

    /// Euclidean gcd, canonical associate. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !Arith::is_zero_elem(&b) {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        if Arith::is_zero_elem(&a) {
            a
        } else {
            a.normalize().1
        }
    }

    /// Ordering used for canonical factor lists: norm, then real part, then
    /// imaginary part.
    pub fn factor_order(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.re.cmp(&other.re))
            .then_with(|| self.im.cmp(&other.im))
    }

    /// Canonical Gaussian primes with multiplicities and the leftover unit.
    pub fn factor(&self) -> (Self, Vec<(Self, u32)>) {
        assert!(!Arith::is_zero_elem(self), "cannot factor zero");
        let mut rest = self.clone();
        let mut out = Vec::new();
        let norm = self.norm().to_biguint().expect("norm is non-negative");
        if norm.is_one() {
            return (rest, out);
        }
        for (p, _) in integer::factor_natural(&norm) {
            for pi in primes_over(&p) {
                let mut e = 0;
                while let Some(q) = rest.div_exact(&pi) {
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((pi, e));
                }
            }
        }
        debug_assert!(rest.is_unit());
        out.sort_by(|a, b| a.0.factor_order(&b.0));
        (rest, out)
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    // floor((2n + d) / 2d), d > 0
    let two = BigInt::from(2);
    (&two * n + d).div_floor(&(&two * d))
}

/// Canonical Gaussian primes lying over the rational prime `p`.
fn primes_over(p: &BigUint) -> Vec<GaussianInt> {
    let four = BigUint::from(4u32);
    let pz = BigInt::from(p.clone());
    if *p == BigUint::from(2u32) {
        return vec![GaussianInt::new(1, 1)];
    }
    if p % &four == BigUint::from(3u32) {
        return vec![GaussianInt::new(pz, 0)];
    }
    let x = sqrt_minus_one(p);
    let pi = GaussianInt::new(pz, 0).gcd(&GaussianInt::new(BigInt::from(x), 1));
    let other = pi.conj().normalize().1;
    let mut v = vec![pi, other];
    v.sort_by(|a, b| a.factor_order(b));
    v
}

/// A square root of -1 modulo a prime `p ≡ 1 (mod 4)`.
fn sqrt_minus_one(p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let pm1 = p - &one;
    let half = &pm1 >> 1u32;
    let quarter = &pm1 >> 2u32;
    let mut c = BigUint::from(2u32);
    loop {
        if c.modpow(&half, p) == pm1 {
            return c.modpow(&quarter, p);
        }
        c += &one;
    }
}

impl Arith for GaussianInt {
    fn zero_elem() -> Self {
        GaussianInt::new(0, 0)
    }
    fn one_elem() -> Self {
        GaussianInt::new(1, 0)
    }
    fn is_zero_elem(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        let num = self.mul(&d.conj());
        let (re, r1) = num.re.div_rem(&n);
        let (im, r2) = num.im.div_rem(&n);
        (r1.is_zero() && r2.is_zero()).then_some(GaussianInt { re, im })
    }
    fn is_unit(&self) -> bool {
        self.norm().is_one()
    }
    /// The canonical associate has positive real part and non-negative
    /// imaginary part.
    fn normalize(&self) -> (Self, Self) {
        // Of z, iz, -z, -iz exactly one lies in { re > 0, im >= 0 }.
        let mut cand = self.clone();
        let mut unit_inv = GaussianInt::one_elem();
        for _ in 0..4 {
            if cand.re.is_positive() && !cand.im.is_negative() {
                // self = unit_inv⁻¹ · cand
                return (unit_inv.conj(), cand);
            }
            cand = cand.rotate();
            unit_inv = unit_inv.rotate();
        }
        unreachable!("normalize called on zero")
    }
}

impl GaussianInt {
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.re.to_i64()?, self.im.to_i64()?))
    }
}
