use crate::domain::{Capability, DomainId};
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::instances::{factor_irreducible, find_square_divisor};

use super::{coprime_to_chain, Factor, Factorization, Form};

/// Zero is never square-free; units always are.
pub fn is_square_free(a: &RingElement) -> bool {
    if a.is_zero() {
        return false;
    }
    if a.is_unit() {
        return true;
    }
    matches!(find_square_divisor(a), Ok(None))
}

pub(crate) fn require_nonzero_nonunit(a: &RingElement) -> Result<()> {
    if a.is_zero() || a.is_unit() {
        Err(Error::usage("non-zero non-unit required"))
    } else {
        Ok(())
    }
}

/// Makes every nonzero base canonical, moving the split-off units into the
/// unit field.
pub(crate) fn normalize_bases(f: Factorization) -> Factorization {
    let mut unit = f.unit;
    let factors = f
        .factors
        .into_iter()
        .map(|Factor { base, exponent }| {
            if base.is_zero() {
                return Factor { base, exponent };
            }
            let (u, c) = base.normalize_raw();
            unit = &unit * &u.pow(exponent);
            Factor { base: c, exponent }
        })
        .collect();
    Factorization { domain: f.domain, form: f.form, unit, factors }
}

/// Moves the unit field into the first base (the exponent-1 base for form
/// II and VI outputs).
pub(crate) fn fold_unit_into_first(mut f: Factorization) -> Factorization {
    if let Some(first) = f.factors.first_mut() {
        first.base = &f.unit * &first.base;
        f.unit = RingElement::one(f.domain);
    }
    f
}

/// `a = u · b² · c` with `c` square-free, by repeatedly removing a square
/// divisor. Terminates in any ACCP domain: every removal strictly enlarges
/// the principal ideal generated by the cofactor.
pub fn extract_square_part(a: &RingElement) -> Result<Factorization> {
    a.domain().require(Capability::Accp)?;
    require_nonzero_nonunit(a)?;
    let domain = a.domain();
    let mut b = RingElement::one(domain);
    let mut c = a.clone();
    while !c.is_unit() {
        let Some(d) = find_square_divisor(&c)? else { break };
        c = c.div_exact_raw(&(&d * &d)).expect("square divisor divides");
        b = &b * &d;
    }
    let f = Factorization::new(
        Form::I,
        RingElement::one(domain),
        vec![Factor::new(b, 2), Factor::new(c, 1)],
    );
    Ok(normalize_bases(f))
}

/// `a = s_n^{2^n} ⋯ s_1² s_0` by iterating [`extract_square_part`] on the
/// square root part. Levels above 0 are canonical, the top level is a
/// non-unit, and every unit ends up in `s_0`.
pub fn dyadic_factorization(a: &RingElement) -> Result<Factorization> {
    a.domain().require(Capability::Accp)?;
    require_nonzero_nonunit(a)?;
    let domain = a.domain();
    let mut levels = Vec::new();
    let mut cur = a.clone();
    loop {
        let step = extract_square_part(&cur)?;
        let b = &step.factors[0].base;
        let c = &step.factors[1].base;
        if b.is_unit() {
            levels.push(cur);
            break;
        }
        // cur = u b² c, so cur^{2^j} = (u c)^{2^j} · b^{2^{j+1}}
        levels.push(&step.unit * c);
        cur = b.clone();
    }
    let f = normalize_bases(Factorization::dyadic(domain, levels));
    Ok(fold_unit_into_first(f))
}

/// Form VI from the irreducible factorization: `s_j` is the product of the
/// primes of multiplicity exactly `j`.
pub fn coprime_factorization(a: &RingElement) -> Result<Factorization> {
    a.domain().require(Capability::Ufd)?;
    require_nonzero_nonunit(a)?;
    let irr = factor_irreducible(a)?;
    Ok(coprime_from_multiplicities(a.domain(), &irr.unit, &irr.primes))
}

pub(crate) fn coprime_from_multiplicities(
    domain: DomainId,
    unit: &RingElement,
    primes: &[(RingElement, u32)],
) -> Factorization {
    let n = primes.iter().map(|(_, e)| *e).max().unwrap_or(0);
    let bases = (1..=n)
        .map(|j| {
            let group: Vec<&RingElement> = primes.iter().filter(|(_, e)| *e == j).map(|(p, _)| p).collect();
            RingElement::product(domain, group)
        })
        .collect();
    let mut f = Factorization::coprime(domain, bases);
    f.unit = unit.clone();
    normalize_bases(f)
}

/// Form IV, computed as the coprime factorization followed by the
/// telescoping products.
pub fn chain_factorization(a: &RingElement) -> Result<Factorization> {
    coprime_to_chain(&coprime_factorization(a)?)
}

/// Computes the requested form of `a` with the standard route for it:
/// square-part extraction for I–III (any ACCP domain), the irreducible
/// factorization for IV–VII (UFD instances only).
pub fn factorize(a: &RingElement, form: Form) -> Result<Factorization> {
    match form {
        Form::I => extract_square_part(a),
        Form::II => dyadic_factorization(a),
        Form::III => super::strip_units(&dyadic_factorization(a)?, Form::III),
        Form::IV => chain_factorization(a),
        Form::V => super::strip_units(&chain_factorization(a)?, Form::V),
        Form::VI => coprime_factorization(a),
        Form::VII => super::strip_units(&coprime_factorization(a)?, Form::VII),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> RingElement {
        RingElement::integer(n)
    }

    fn pairs(f: &Factorization) -> Vec<(RingElement, u64)> {
        f.factors.iter().map(|x| (x.base.clone(), x.exponent)).collect()
    }

    #[test]
    fn square_free_examples() {
        assert!(is_square_free(&z(30)));
        assert!(!is_square_free(&z(12)));
        assert!(!is_square_free(&z(0)));
        assert!(is_square_free(&z(-1)));
        assert!(is_square_free(&RingElement::quadratic(2, 1)));
        assert!(!is_square_free(&RingElement::quadratic(9, 0)));
    }

    #[test]
    fn extract_examples() {
        let f = extract_square_part(&z(360)).unwrap();
        assert_eq!(f.unit, z(1));
        assert_eq!(pairs(&f), vec![(z(6), 2), (z(10), 1)]);
        let f = extract_square_part(&z(30)).unwrap();
        assert_eq!(pairs(&f), vec![(z(1), 2), (z(30), 1)]);
        let f = extract_square_part(&RingElement::poly(&[0, 0, 1, 1])).unwrap();
        assert_eq!(
            pairs(&f),
            vec![(RingElement::poly(&[0, 1]), 2), (RingElement::poly(&[1, 1]), 1)]
        );
        let f = extract_square_part(&z(-4)).unwrap();
        assert_eq!(f.unit, z(-1));
        assert_eq!(pairs(&f), vec![(z(2), 2), (z(1), 1)]);
        assert!(extract_square_part(&z(1)).is_err());
    }

    #[test]
    fn dyadic_examples() {
        let f = dyadic_factorization(&z(360)).unwrap();
        assert_eq!(pairs(&f), vec![(z(10), 1), (z(6), 2)]);
        let f = dyadic_factorization(&z(48)).unwrap();
        assert_eq!(pairs(&f), vec![(z(3), 1), (z(1), 2), (z(2), 4)]);
        let f = dyadic_factorization(&z(7)).unwrap();
        assert_eq!(pairs(&f), vec![(z(7), 1)]);
        let f = dyadic_factorization(&z(-360)).unwrap();
        assert_eq!(pairs(&f), vec![(z(-10), 1), (z(6), 2)]);
        assert_eq!(f.unit, z(1));
        let f = dyadic_factorization(&z(-16)).unwrap();
        assert_eq!(f.product(), z(-16));
    }

    #[test]
    fn coprime_and_chain_examples() {
        let f = coprime_factorization(&z(360)).unwrap();
        assert_eq!(pairs(&f), vec![(z(5), 1), (z(3), 2), (z(2), 3)]);
        let f = coprime_factorization(&z(12)).unwrap();
        assert_eq!(pairs(&f), vec![(z(3), 1), (z(2), 2)]);
        let f = coprime_factorization(&z(30)).unwrap();
        assert_eq!(pairs(&f), vec![(z(30), 1)]);
        let f = coprime_factorization(&z(8)).unwrap();
        assert_eq!(pairs(&f), vec![(z(1), 1), (z(1), 2), (z(2), 3)]);

        let c = chain_factorization(&z(360)).unwrap();
        assert_eq!(pairs(&c), vec![(z(2), 1), (z(6), 1), (z(30), 1)]);
        let c = chain_factorization(&z(12)).unwrap();
        assert_eq!(pairs(&c), vec![(z(2), 1), (z(6), 1)]);
        let c = chain_factorization(&z(30)).unwrap();
        assert_eq!(pairs(&c), vec![(z(30), 1)]);
    }

    #[test]
    fn capability_gates() {
        let nine = RingElement::quadratic(9, 0);
        assert!(matches!(coprime_factorization(&nine), Err(Error::Capability { .. })));
        assert!(matches!(chain_factorization(&nine), Err(Error::Capability { .. })));
        let f = extract_square_part(&nine).unwrap();
        assert_eq!(f.product(), nine);
        let d = dyadic_factorization(&nine).unwrap();
        assert_eq!(d.product(), nine);
    }
}
