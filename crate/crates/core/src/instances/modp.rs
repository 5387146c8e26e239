//! Polynomial arithmetic over a prime field and Cantor-Zassenhaus
//! factorization of square-free polynomials. Only used as the modular
//! stage of rational polynomial factorization.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coefficients in `[0, p)`, lowest degree first, no trailing zeros.
pub type FpPoly = Vec<BigInt>;

pub struct PrimeField {
    p: BigInt,
}

impl PrimeField {
    pub fn new(p: BigInt) -> Self {
        PrimeField { p }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.p
    }

    fn red(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.p)
    }

    fn inv(&self, x: &BigInt) -> BigInt {
        x.modpow(&(&self.p - 2), &self.p)
    }

    fn trim(mut v: FpPoly) -> FpPoly {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn reduce(&self, v: &[BigInt]) -> FpPoly {
        Self::trim(v.iter().map(|c| self.red(c)).collect())
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> FpPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        Self::trim(
            (0..n)
                .map(|i| self.red(&(a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))))
                .collect(),
        )
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(&out)
    }

    pub fn div_rem(&self, a: &[BigInt], d: &[BigInt]) -> (FpPoly, FpPoly) {
        let dd = d.len() - 1;
        let lc_inv = self.inv(&d[dd]);
        let mut rem = a.to_vec();
        if rem.len() <= dd {
            return (Vec::new(), Self::trim(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = self.red(&(&rem[i + dd] * &lc_inv));
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] = self.red(&(&rem[i + j] - &c * dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::trim(quot), Self::trim(rem))
    }

    pub fn rem(&self, a: &[BigInt], d: &[BigInt]) -> FpPoly {
        self.div_rem(a, d).1
    }

    pub fn monic(&self, a: &[BigInt]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) => {
                let inv = self.inv(lc);
                self.reduce(&a.iter().map(|c| c * &inv).collect::<Vec<_>>())
            }
        }
    }

    pub fn gcd(&self, a: &[BigInt], b: &[BigInt]) -> FpPoly {
        let (mut x, mut y) = (self.reduce(a), self.reduce(b));
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = std::mem::replace(&mut y, r);
        }
        self.monic(&x)
    }

    pub fn derivative(&self, a: &[BigInt]) -> FpPoly {
        self.reduce(
            &a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect::<Vec<_>>(),
        )
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &[BigInt], e: &BigUint, m: &[BigInt]) -> FpPoly {
        let mut result: FpPoly = vec![BigInt::one()];
        let mut b = self.rem(base, m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
            b = self.rem(&self.mul(&b, &b), m);
        }
        self.rem(&result, m)
    }

    pub fn is_squarefree(&self, f: &[BigInt]) -> bool {
        self.gcd(f, &self.derivative(f)).len() == 1
    }

    /// Monic irreducible factors of a monic square-free polynomial. The
    /// random splitting is seeded so the output order is reproducible.
    pub fn factor_squarefree(&self, f: &[BigInt]) -> Vec<FpPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            self.equal_degree(&g, d, &mut rng, &mut out);
        }
        out
    }

    fn distinct_degree(&self, f: &[BigInt]) -> Vec<(FpPoly, usize)> {
        let x: FpPoly = vec![BigInt::zero(), BigInt::one()];
        let p = self.p.to_biguint().expect("positive modulus");
        let mut rest = self.monic(f);
        let mut h = self.rem(&x, &rest);
        let mut out = Vec::new();
        let mut d = 1;
        while rest.len() > 2 * d {
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
            d += 1;
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    fn equal_degree(&self, g: &[BigInt], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.to_vec());
            return;
        }
        let p = self.p.to_biguint().expect("positive modulus");
        let exp = (num_traits::pow(p.clone(), d) - 1u32) / 2u32;
        loop {
            let a: FpPoly = self.reduce(
                &(0..n)
                    .map(|_| BigInt::from(rng.gen_biguint_below(&p)))
                    .collect::<Vec<_>>(),
            );
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &exp, g), &[BigInt::one()]);
            let u = self.gcd(&b, g);
            if u.len() > 1 && u.len() < g.len() {
                let v = self.div_rem(g, &u).0;
                self.equal_degree(&u, d, rng, out);
                self.equal_degree(&v, d, rng, out);
                return;
            }
        }
    }
}

/// Deterministic Miller-Rabin; exact below 3.3·10²⁴ with these bases.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let nm1 = n - 1u32;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'outer: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}
