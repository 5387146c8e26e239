//! Dense univariate polynomials over the rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Arith;

/// Coefficients lowest degree first, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        QPoly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Division with remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic gcd by the Euclidean remainder sequence; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !Arith::is_zero_elem(&b) {
            let r = a.div_rem(&b).1;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = QPoly::from_ints(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Ordering for canonical factor lists: degree, then coefficients from
    /// the constant term upward.
    pub fn factor_order(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// `(c, F)` with `self = c · F`, `F` an integer polynomial with content 1
    /// and positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRational, Vec<BigInt>) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        if content.is_zero() {
            return (BigRational::zero(), ints);
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        let prim = ints.iter().map(|c| c / &content).collect();
        (BigRational::new(content, den), prim)
    }

    pub fn from_int_coeffs(coeffs: &[BigInt]) -> Self {
        QPoly::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Square-free decomposition of a nonzero polynomial (Yun): monic,
    /// pairwise coprime, square-free `g_i` with `self ~ ∏ g_i^i`. Entry
    /// `k` of the result is `g_{k+1}`; trailing entries are non-constant.
    pub fn squarefree_decomposition(&self) -> Vec<QPoly> {
        let f = self.monic();
        let one = QPoly::from_ints(&[1]);
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        while b != one {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            out.push(a);
        }
        while out.last().is_some_and(|p: &QPoly| p.is_constant()) {
            out.pop();
        }
        out
    }
}

impl Arith for QPoly {
    fn zero_elem() -> Self {
        QPoly::new(Vec::new())
    }
    fn one_elem() -> Self {
        QPoly::from_ints(&[1])
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new(
            (0..n)
                .map(|i| {
                    let z = BigRational::zero();
                    self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)
                })
                .collect(),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return QPoly::zero_elem();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
    fn neg(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        Arith::is_zero_elem(&r).then_some(q)
    }
    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }
    fn normalize(&self) -> (Self, Self) {
        let lc = self.leading().expect("normalize called on zero").clone();
        (QPoly::constant(lc.clone()), self.scale(&lc.recip()))
    }
}
