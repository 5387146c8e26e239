//! Irreducible factorization over Q.
//!
//! Square-free parts come from Yun's decomposition. Each square-free part is
//! made primitive over Z, factored modulo a single prime larger than twice
//! the Mignotte coefficient bound (so no Hensel lifting is needed), and the
//! modular factors are recombined by trial division over subsets.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::modp::{is_probable_prime, FpPoly, PrimeField};
use super::poly::QPoly;
use super::Arith;

impl QPoly {
    /// `(unit, [(monic irreducible, multiplicity)])` sorted by
    /// [`QPoly::factor_order`].
    pub fn factor(&self) -> (QPoly, Vec<(QPoly, u32)>) {
        let (unit, monic) = self.normalize();
        let mut out = Vec::new();
        for (i, part) in monic.squarefree_decomposition().iter().enumerate() {
            if part.is_constant() {
                continue;
            }
            for p in factor_squarefree(part) {
                out.push((p, i as u32 + 1));
            }
        }
        out.sort_by(|a, b| a.0.factor_order(&b.0));
        (unit, out)
    }
}

/// Monic irreducible factors of a monic square-free polynomial.
pub fn factor_squarefree(g: &QPoly) -> Vec<QPoly> {
    if g.degree().unwrap_or(0) <= 1 {
        return vec![g.clone()];
    }
    let (_, f) = g.primitive_part();
    let field = PrimeField::new(choose_prime(&f));
    let modular = field.factor_squarefree(&field.monic(&field.reduce(&f)));
    let mut out: Vec<QPoly> = recombine(&f, modular, &field)
        .into_iter()
        .map(|h| QPoly::from_int_coeffs(&h).monic())
        .collect();
    out.sort_by(|a, b| a.factor_order(b));
    out
}

/// Smallest prime exceeding `2·|lc|·2^deg·‖f‖₂` for which `f` stays
/// square-free.
fn choose_prime(f: &[BigInt]) -> BigInt {
    let deg = f.len() - 1;
    let sumsq: BigInt = f.iter().map(|c| c * c).sum();
    let l2 = sumsq.to_biguint().expect("non-negative").sqrt() + 1u32;
    let lc = f[deg].magnitude().clone();
    let bound: BigUint = (BigUint::from(2u32) * lc * l2) << deg;
    let mut cand = bound + 1u32;
    if (&cand % 2u32).is_zero() {
        cand += 1u32;
    }
    loop {
        if is_probable_prime(&cand) {
            let p = BigInt::from(cand.clone());
            let field = PrimeField::new(p.clone());
            if field.is_squarefree(&field.reduce(f)) {
                return p;
            }
        }
        cand += 2u32;
    }
}

fn symmetric(c: &BigInt, p: &BigInt) -> BigInt {
    if c * 2 > *p {
        c - p
    } else {
        c.clone()
    }
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v
        .iter()
        .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
    let sign = if v.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    v.into_iter().map(|c| c / &content * &sign).collect()
}

/// Exact quotient over Z, if `d` divides `f`.
fn int_div(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let q = QPoly::from_int_coeffs(f).div_exact(&QPoly::from_int_coeffs(d))?;
    q.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

fn recombine(f: &[BigInt], mut modular: Vec<FpPoly>, field: &PrimeField) -> Vec<Vec<BigInt>> {
    let p = field.modulus();
    let mut f = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= modular.len() {
        let mut hit = None;
        for subset in subsets(modular.len(), size) {
            let lc = f.last().expect("nonzero").clone();
            let prod = subset
                .iter()
                .fold(vec![BigInt::one()], |acc, &i| field.mul(&acc, &modular[i]));
            let lifted: Vec<BigInt> = field
                .reduce(&prod.iter().map(|c| c * &lc).collect::<Vec<_>>())
                .iter()
                .map(|c| symmetric(c, p))
                .collect();
            let h = primitive(lifted);
            if let Some(q) = int_div(&f, &h) {
                hit = Some((subset, h, q));
                break;
            }
        }
        match hit {
            Some((subset, h, q)) => {
                found.push(h);
                f = q;
                let mut idx = 0;
                modular.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        let (u, f) = p(&[-1, 0, 1]).factor();
        assert_eq!(u, p(&[1]));
        assert_eq!(f, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_style_inputs_stay_irreducible() {
        // x⁴ + 1 and x⁴ − 10x² + 1 are irreducible over Q but reducible mod every prime.
        for f in [p(&[1, 0, 0, 0, 1]), p(&[1, 0, -10, 0, 1])] {
            let (_, facs) = f.factor();
            assert_eq!(facs, vec![(f.clone(), 1)]);
        }
    }

    #[test]
    fn mixed_product() {
        // 3 (x² + 1)² (x³ − 2) (x − 1/2)
        let f = p(&[1, 0, 1])
            .pow(2)
            .mul(&p(&[-2, 0, 0, 1]))
            .mul(&QPoly::new(vec![num_rational::BigRational::new((-1).into(), 2.into()), num_rational::BigRational::from_integer(1.into())]))
            .mul(&p(&[3]));
        let (u, facs) = f.factor();
        assert_eq!(u, p(&[3]));
        assert_eq!(facs.len(), 3);
        assert_eq!(facs[0].1, 1);
        assert_eq!(facs[1], (p(&[1, 0, 1]), 2));
        assert_eq!(facs[2], (p(&[-2, 0, 0, 1]), 1));
        let back = facs.iter().fold(u, |acc, (q, e)| acc.mul(&q.pow(*e as u64)));
        assert_eq!(back, f);
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        // (x² + x + 1)(x² − 2)
        let f = p(&[1, 1, 1]).mul(&p(&[-2, 0, 1]));
        let (_, facs) = f.factor();
        assert_eq!(facs, vec![(p(&[-2, 0, 1]), 1), (p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
    }
}
