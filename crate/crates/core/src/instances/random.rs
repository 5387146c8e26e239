//! Seeded samplers for property suites and examples.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::poly::QPoly;
use super::Arith;
use crate::domain::DomainId;
use crate::element::RingElement;

/// Element with coordinates in `[-bound, bound]`; on Q\[x\], degree at most
/// 3 with small integer or half-integer coefficients.
pub fn element<R: Rng + ?Sized>(rng: &mut R, domain: DomainId, bound: i64) -> RingElement {
    let mut c = || rng.gen_range(-bound..=bound);
    match domain {
        DomainId::Z => RingElement::integer(c()),
        DomainId::Zi => RingElement::gaussian(c(), c()),
        DomainId::ZSqrtM5 => RingElement::quadratic(c(), c()),
        DomainId::Qx => {
            let deg = rng.gen_range(0..=3usize);
            let coeffs = (0..=deg)
                .map(|_| {
                    let num = rng.gen_range(-bound..=bound);
                    let den = if rng.gen_bool(0.2) { 2 } else { 1 };
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect();
            RingElement::Polynomial(QPoly::new(coeffs))
        }
    }
}

pub fn nonzero<R: Rng + ?Sized>(rng: &mut R, domain: DomainId, bound: i64) -> RingElement {
    loop {
        let e = element(rng, domain, bound);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn nonzero_nonunit<R: Rng + ?Sized>(rng: &mut R, domain: DomainId, bound: i64) -> RingElement {
    loop {
        let e = element(rng, domain, bound);
        if !e.is_zero() && !e.is_unit() {
            return e;
        }
    }
}

/// Uniform over nonzero non-units with `a² + b² ≤ max_norm`.
pub fn gaussian_by_norm<R: Rng + ?Sized>(rng: &mut R, max_norm: i64) -> RingElement {
    let r = (max_norm as f64).sqrt() as i64;
    loop {
        let (a, b) = (rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        let n = a * a + b * b;
        if n > 1 && n <= max_norm {
            return RingElement::gaussian(a, b);
        }
    }
}

/// Uniform over nonzero non-units with `a² + 5b² ≤ max_norm`.
pub fn quadratic_by_norm<R: Rng + ?Sized>(rng: &mut R, max_norm: i64) -> RingElement {
    let ra = (max_norm as f64).sqrt() as i64;
    let rb = ((max_norm / 5) as f64).sqrt() as i64;
    loop {
        let (a, b) = (rng.gen_range(-ra..=ra), rng.gen_range(-rb..=rb));
        let n = a * a + 5 * b * b;
        if n > 1 && n <= max_norm {
            return RingElement::quadratic(a, b);
        }
    }
}

/// Irreducible building blocks for random polynomial products.
fn irreducible_pool() -> Vec<QPoly> {
    let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
    let mut pool: Vec<QPoly> = (-3..=3).map(|r| QPoly::from_ints(&[-r, 1])).collect();
    pool.push(QPoly::new(vec![half(1), BigRational::from_integer(1.into())]));
    pool.push(QPoly::new(vec![half(-3), BigRational::from_integer(1.into())]));
    pool.push(QPoly::from_ints(&[1, 3]));
    pool.extend(
        [
            &[1, 0, 1][..],
            &[-2, 0, 1],
            &[1, 1, 1],
            &[3, 2, 1],
            &[-3, 0, 2],
            &[-2, 0, 0, 1],
            &[1, 1, 0, 1],
            &[1, 0, 0, 0, 1],
        ]
        .iter()
        .map(|c| QPoly::from_ints(c)),
    );
    pool
}

/// Random product of irreducibles with multiplicities, total degree in
/// `1..=max_degree`, times a random nonzero rational constant.
pub fn poly_product<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> RingElement {
    let pool = irreducible_pool();
    let target = rng.gen_range(1..=max_degree);
    let mut acc = QPoly::from_ints(&[1]);
    let mut deg = 0;
    let mut attempts = 0;
    while deg < target && attempts < 32 {
        attempts += 1;
        let f = &pool[rng.gen_range(0..pool.len())];
        let d = f.degree().unwrap_or(0);
        let max_mult = (target - deg) / d;
        if max_mult == 0 {
            continue;
        }
        let e = rng.gen_range(1..=max_mult.min(4));
        acc = acc.mul(&f.pow(e as u64));
        deg += d * e;
    }
    if deg == 0 {
        acc = QPoly::x();
    }
    let num = loop {
        let n = rng.gen_range(-6i64..=6);
        if n != 0 {
            break n;
        }
    };
    let den = rng.gen_range(1i64..=3);
    RingElement::Polynomial(acc.scale(&BigRational::new(num.into(), den.into())))
}

