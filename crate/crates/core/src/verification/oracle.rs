//! Reference computations that share no code path with the factorization
//! pipeline: brute-force square-divisor searches on machine integers, a
//! resultant test for polynomials, and every form assembled directly from
//! the irreducible multiplicities.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::domain::Capability;
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization, Form};
use crate::instances::factor_irreducible;

pub const MAX_INTEGER: i64 = 1_000_000;
pub const MAX_NORM: i64 = 10_000;
pub const MAX_DEGREE: usize = 8;

fn out_of_bounds(what: impl std::fmt::Display) -> Error {
    Error::OutOfBounds(format!("{what} exceeds the oracle bounds"))
}

/// Exhaustive search for a non-unit `b` with `b² | a`.
pub fn oracle_is_square_free(a: &RingElement) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::usage("non-zero element required"));
    }
    match a {
        RingElement::Integer(n) => {
            let n = n.to_i64().filter(|n| n.abs() <= MAX_INTEGER).ok_or_else(|| out_of_bounds(a))?.abs();
            Ok((2..).take_while(|b| b * b <= n).all(|b| n % (b * b) != 0))
        }
        RingElement::Gaussian(g) => {
            let (x, y) = g.to_i64_pair().ok_or_else(|| out_of_bounds(a))?;
            lattice_search(x, y, 1, a)
        }
        RingElement::Quadratic(q) => {
            let (x, y) = q.to_i64_pair().ok_or_else(|| out_of_bounds(a))?;
            lattice_search(x, y, 5, a)
        }
        RingElement::Polynomial(p) => {
            let deg = p.degree().expect("non-zero");
            if deg > MAX_DEGREE {
                return Err(out_of_bounds(a));
            }
            if deg <= 1 {
                return Ok(true);
            }
            Ok(!resultant(p.coeffs(), p.derivative().coeffs()).is_zero())
        }
    }
}

/// Square-freeness of `x + y·ω` in `Z[ω]`, `ω² = -d`, by trying every
/// `b = u + vω` with `1 < N(b)` and `N(b)² ≤ N(a)`.
fn lattice_search(x: i64, y: i64, d: i64, a: &RingElement) -> Result<bool> {
    let n = x * x + d * y * y;
    if n > MAX_NORM {
        return Err(out_of_bounds(a));
    }
    let bound = (n as f64).sqrt() as i64 + 1;
    for v in 0..=bound {
        for u in -bound..=bound {
            let nb = u * u + d * v * v;
            if nb < 2 || nb * nb > n {
                continue;
            }
            // b² = (u² - d v²) + 2uv ω; a / b² = a·conj(b²) / N(b)².
            let (p, q) = (u * u - d * v * v, 2 * u * v);
            let re = x * p + d * y * q;
            let im = y * p - x * q;
            let nb2 = nb * nb;
            if re % nb2 == 0 && im % nb2 == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Determinant of the Sylvester matrix, by fraction-exact elimination.
fn resultant(f: &[BigRational], g: &[BigRational]) -> BigRational {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(size);
    for (poly, shifts) in [(f, n), (g, m)] {
        for s in 0..shifts {
            let mut row = vec![BigRational::zero(); size];
            for (k, c) in poly.iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    let mut det = BigRational::from_integer(1.into());
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &p;
            for k in col..size {
                let delta = &factor * &rows[col][k];
                rows[r][k] -= delta;
            }
        }
    }
    det
}

/// All seven forms of one element, built straight from its multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleForms {
    pub forms: Vec<Factorization>,
}

impl OracleForms {
    pub fn get(&self, form: Form) -> &Factorization {
        self.forms.iter().find(|f| f.form == form).expect("all forms present")
    }
}

pub fn oracle_factorization_forms(a: &RingElement) -> Result<OracleForms> {
    let domain = a.domain();
    domain.require(Capability::Ufd)?;
    if a.is_zero() || a.is_unit() {
        return Err(Error::usage("non-zero non-unit required"));
    }
    let within = match a {
        RingElement::Polynomial(p) => p.degree().is_some_and(|d| d <= MAX_DEGREE),
        RingElement::Integer(_) => crate::instances::norm(a).is_some_and(|n| n.0 <= (MAX_INTEGER as u64).into()),
        _ => crate::instances::norm(a).is_some_and(|n| n.0 <= (MAX_NORM as u64).into()),
    };
    if !within {
        return Err(out_of_bounds(a));
    }
    let irr = factor_irreducible(a)?;
    let unit = irr.unit.clone();
    let one = RingElement::one(domain);
    let mults: Vec<(&RingElement, u64)> = irr.primes.iter().map(|(p, e)| (p, u64::from(*e))).collect();
    let top = mults.iter().map(|(_, e)| *e).max().unwrap_or(0);
    let product_where = |keep: &dyn Fn(u64) -> bool| {
        RingElement::product(domain, mults.iter().filter(|(_, e)| keep(*e)).map(|(p, _)| *p))
    };
    let build = |form: Form, unit: RingElement, pairs: Vec<(RingElement, u64)>| Factorization {
        domain,
        form,
        unit,
        factors: pairs.into_iter().map(|(b, e)| Factor::new(b, e)).collect(),
    };
    let drop_units = |pairs: &[(RingElement, u64)]| -> Vec<(RingElement, u64)> {
        pairs.iter().filter(|(b, _)| !b.is_unit()).cloned().collect()
    };

    let b = RingElement::product(
        domain,
        &mults.iter().map(|(p, e)| p.pow(e / 2)).collect::<Vec<_>>(),
    );
    let c = product_where(&|e| e % 2 == 1);
    let form_i = build(Form::I, unit.clone(), vec![(b, 2), (c, 1)]);

    let vi: Vec<(RingElement, u64)> = (1..=top).map(|j| (product_where(&|e| e == j), j)).collect();
    let form_vii = build(Form::VII, unit.clone(), drop_units(&vi));
    let form_vi = build(Form::VI, unit.clone(), vi);

    let iv: Vec<(RingElement, u64)> = (1..=top).map(|j| (product_where(&|e| e > top - j), 1)).collect();
    let mut v: Vec<(RingElement, u64)> = Vec::new();
    for (link, _) in drop_units(&iv) {
        match v.last_mut() {
            Some((prev, k)) if *prev == link => *k += 1,
            _ => v.push((link, 1)),
        }
    }
    let form_v = build(Form::V, unit.clone(), v);
    let form_iv = build(Form::IV, unit.clone(), iv);

    let width = 64 - top.leading_zeros() as u64;
    let mut ii: Vec<(RingElement, u64)> =
        (0..width).map(|j| (product_where(&|e| e >> j & 1 == 1), 1u64 << j)).collect();
    let form_iii = build(Form::III, unit.clone(), drop_units(&ii));
    ii[0].0 = &unit * &ii[0].0;
    let form_ii = build(Form::II, one, ii);

    Ok(OracleForms { forms: vec![form_i, form_ii, form_iii, form_iv, form_v, form_vi, form_vii] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::check_factorization_of;

    fn z(n: i64) -> RingElement {
        RingElement::integer(n)
    }

    fn pairs(f: &Factorization) -> Vec<(RingElement, u64)> {
        f.factors.iter().map(|x| (x.base.clone(), x.exponent)).collect()
    }

    #[test]
    fn square_free_oracle_examples() {
        assert!(!oracle_is_square_free(&z(49)).unwrap());
        assert!(oracle_is_square_free(&z(-30)).unwrap());
        assert!(oracle_is_square_free(&z(1)).unwrap());
        assert!(!oracle_is_square_free(&RingElement::quadratic(9, 0)).unwrap());
        assert!(oracle_is_square_free(&RingElement::quadratic(2, 1)).unwrap());
        assert!(!oracle_is_square_free(&RingElement::gaussian(2, 0)).unwrap());
        assert!(oracle_is_square_free(&RingElement::gaussian(3, 0)).unwrap());
        assert!(!oracle_is_square_free(&RingElement::gaussian(-4, 3)).unwrap());
        assert!(oracle_is_square_free(&RingElement::poly(&[1, 0, 1])).unwrap());
        assert!(!oracle_is_square_free(&RingElement::poly(&[1, 2, 1])).unwrap());
        assert!(!oracle_is_square_free(&RingElement::poly(&[0, 0, 1, 1])).unwrap());
        assert!(oracle_is_square_free(&z(2_000_000)).is_err());
        assert!(oracle_is_square_free(&z(0)).is_err());
    }

    #[test]
    fn resultant_matches_known_discriminants() {
        // x² + bx + c with f' = 2x + b: Res = -(b² - 4c).
        let q = |c: &[i64]| c.iter().map(|&v| BigRational::from_integer(v.into())).collect::<Vec<_>>();
        assert_eq!(resultant(&q(&[3, 5, 1]), &q(&[5, 2])), BigRational::from_integer((-13).into()));
        assert!(resultant(&q(&[1, 2, 1]), &q(&[2, 2])).is_zero());
    }

    #[test]
    fn forms_of_360() {
        let o = oracle_factorization_forms(&z(360)).unwrap();
        assert_eq!(pairs(o.get(Form::VI)), vec![(z(5), 1), (z(3), 2), (z(2), 3)]);
        assert_eq!(pairs(o.get(Form::II)), vec![(z(10), 1), (z(6), 2)]);
        assert_eq!(pairs(o.get(Form::IV)), vec![(z(2), 1), (z(6), 1), (z(30), 1)]);
        assert_eq!(pairs(o.get(Form::I)), vec![(z(6), 2), (z(10), 1)]);
        for f in &o.forms {
            assert!(check_factorization_of(f, &z(360)).well_formed, "{f}");
        }
        let o = oracle_factorization_forms(&z(49)).unwrap();
        assert_eq!(pairs(o.get(Form::I)), vec![(z(7), 2), (z(1), 1)]);
        let o = oracle_factorization_forms(&z(-8)).unwrap();
        assert_eq!(pairs(o.get(Form::V)), vec![(z(2), 3)]);
        assert_eq!(pairs(o.get(Form::II)), vec![(z(-2), 1), (z(2), 2)]);
        assert_eq!(pairs(o.get(Form::III)), vec![(z(2), 1), (z(2), 2)]);
        assert_eq!(o.get(Form::III).unit, z(-1));
        for f in &o.forms {
            assert!(check_factorization_of(f, &z(-8)).well_formed, "{f}");
        }
    }

    #[test]
    fn forms_require_ufd() {
        assert!(oracle_factorization_forms(&RingElement::quadratic(9, 0)).is_err());
        assert!(oracle_factorization_forms(&z(1)).is_err());
    }
}
