use std::fmt;

use crate::algebra::{divides, is_associate, is_coprime};
use crate::element::RingElement;
use crate::factorization::{is_square_free, Factorization, Form};

/// One failed clause of a form's definition. Indices are positions in the
/// factor list, starting at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    DomainMismatch { index: usize },
    ZeroBase { index: usize },
    UnitNotInvertible,
    UnitNotOne,
    EntryCount { expected: usize, found: usize },
    Exponent { index: usize, expected: String, found: u64 },
    ExponentsNotIncreasing { index: usize },
    NotSquareFree { index: usize },
    NotCanonical { index: usize },
    UnitBase { index: usize },
    NotCoprime { i: usize, j: usize },
    ChainBreak { index: usize, lower: String, upper: String },
    RepeatedLink { index: usize },
    TrivialElement,
    ProductMismatch { expected: String, found: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no factors"),
            Violation::DomainMismatch { index } => write!(f, "base {index} is from another domain"),
            Violation::ZeroBase { index } => write!(f, "base {index} is zero"),
            Violation::UnitNotInvertible => write!(f, "unit field is not invertible"),
            Violation::UnitNotOne => write!(f, "unit field must be 1 in this form"),
            Violation::EntryCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Violation::Exponent { index, expected, found } => {
                write!(f, "exponent of base {index} is {found}, expected {expected}")
            }
            Violation::ExponentsNotIncreasing { index } => {
                write!(f, "exponents not strictly increasing at base {index}")
            }
            Violation::NotSquareFree { index } => write!(f, "base {index} is not square-free"),
            Violation::NotCanonical { index } => write!(f, "base {index} is not canonical"),
            Violation::UnitBase { index } => write!(f, "base {index} is a unit"),
            Violation::NotCoprime { i, j } => write!(f, "bases not coprime: {i} and {j}"),
            Violation::ChainBreak { index, lower, upper } => {
                write!(f, "chain broken at base {index}: {lower} ∤ {upper}")
            }
            Violation::RepeatedLink { index } => {
                write!(f, "bases {index} and {} are associates", index + 1)
            }
            Violation::TrivialElement => write!(f, "factored element is zero or a unit"),
            Violation::ProductMismatch { expected, found } => {
                write!(f, "product is {found}, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellFormedReport {
    pub well_formed: bool,
    pub violations: Vec<Violation>,
}

impl WellFormedReport {
    fn from(violations: Vec<Violation>) -> Self {
        WellFormedReport { well_formed: violations.is_empty(), violations }
    }
}

/// Checks every clause of the definition of `f.form`.
pub fn check_well_formed(f: &Factorization) -> WellFormedReport {
    WellFormedReport::from(violations(f))
}

/// [`check_well_formed`] plus the requirement that `f` represents `a`.
pub fn check_factorization_of(f: &Factorization, a: &RingElement) -> WellFormedReport {
    let mut v = violations(f);
    if v.iter().all(|x| !matches!(x, Violation::DomainMismatch { .. })) && a.domain() == f.domain {
        let p = f.product();
        if p != *a {
            v.push(Violation::ProductMismatch { expected: a.to_string(), found: p.to_string() });
        }
    } else if a.domain() != f.domain {
        v.push(Violation::ProductMismatch { expected: a.to_string(), found: format!("an element of {}", f.domain) });
    }
    WellFormedReport::from(v)
}

fn violations(f: &Factorization) -> Vec<Violation> {
    let mut v = Vec::new();
    if f.unit.domain() != f.domain || !f.unit.is_unit() {
        v.push(Violation::UnitNotInvertible);
    }
    for (index, x) in f.factors.iter().enumerate() {
        if x.base.domain() != f.domain {
            v.push(Violation::DomainMismatch { index });
        } else if x.base.is_zero() {
            v.push(Violation::ZeroBase { index });
        }
    }
    if !v.is_empty() {
        return v;
    }
    if f.factors.is_empty() {
        v.push(Violation::Empty);
        return v;
    }
    let bases: Vec<&RingElement> = f.bases();
    let exps: Vec<u64> = f.factors.iter().map(|x| x.exponent).collect();
    let sqf = |v: &mut Vec<Violation>| {
        for (index, b) in bases.iter().enumerate() {
            if !is_square_free(b) {
                v.push(Violation::NotSquareFree { index });
            }
        }
    };
    let reduced = |v: &mut Vec<Violation>| {
        for (index, b) in bases.iter().enumerate() {
            if b.is_unit() {
                v.push(Violation::UnitBase { index });
            } else if b.canonical() != **b {
                v.push(Violation::NotCanonical { index });
            }
        }
    };
    let exponent_is = |v: &mut Vec<Violation>, index: usize, expected: u64| {
        if exps[index] != expected {
            v.push(Violation::Exponent { index, expected: expected.to_string(), found: exps[index] });
        }
    };
    let increasing = |v: &mut Vec<Violation>| {
        for index in 1..exps.len() {
            if exps[index] <= exps[index - 1] {
                v.push(Violation::ExponentsNotIncreasing { index });
            }
        }
    };
    let coprime = |v: &mut Vec<Violation>| {
        for i in 0..bases.len() {
            for j in i + 1..bases.len() {
                if !is_coprime(bases[i], bases[j]) {
                    v.push(Violation::NotCoprime { i, j });
                }
            }
        }
    };
    let chain = |v: &mut Vec<Violation>| {
        for index in 0..bases.len().saturating_sub(1) {
            if !divides(bases[index], bases[index + 1]) {
                v.push(Violation::ChainBreak {
                    index,
                    lower: bases[index].to_string(),
                    upper: bases[index + 1].to_string(),
                });
            }
        }
    };

    match f.form {
        Form::I => {
            if bases.len() != 2 {
                v.push(Violation::EntryCount { expected: 2, found: bases.len() });
                return v;
            }
            exponent_is(&mut v, 0, 2);
            exponent_is(&mut v, 1, 1);
            if !is_square_free(bases[1]) {
                v.push(Violation::NotSquareFree { index: 1 });
            }
        }
        Form::II => {
            if !f.unit.is_one() {
                v.push(Violation::UnitNotOne);
            }
            for j in 0..exps.len() {
                match 1u64.checked_shl(j as u32).filter(|_| j < 64) {
                    Some(e) => exponent_is(&mut v, j, e),
                    None => v.push(Violation::Exponent {
                        index: j,
                        expected: format!("2^{j}"),
                        found: exps[j],
                    }),
                }
            }
            sqf(&mut v);
        }
        Form::III => {
            reduced(&mut v);
            for (index, &e) in exps.iter().enumerate() {
                if !e.is_power_of_two() {
                    v.push(Violation::Exponent { index, expected: "a power of two".into(), found: e });
                }
            }
            increasing(&mut v);
            sqf(&mut v);
        }
        Form::IV => {
            for j in 0..exps.len() {
                exponent_is(&mut v, j, 1);
            }
            sqf(&mut v);
            chain(&mut v);
        }
        Form::V => {
            reduced(&mut v);
            for (index, &e) in exps.iter().enumerate() {
                if e == 0 {
                    v.push(Violation::Exponent { index, expected: "at least 1".into(), found: e });
                }
            }
            sqf(&mut v);
            chain(&mut v);
            for index in 0..bases.len().saturating_sub(1) {
                if is_associate(bases[index], bases[index + 1]) {
                    v.push(Violation::RepeatedLink { index });
                }
            }
        }
        Form::VI => {
            for j in 0..exps.len() {
                exponent_is(&mut v, j, j as u64 + 1);
            }
            sqf(&mut v);
            coprime(&mut v);
        }
        Form::VII => {
            reduced(&mut v);
            if exps[0] == 0 {
                v.push(Violation::Exponent { index: 0, expected: "at least 1".into(), found: 0 });
            }
            increasing(&mut v);
            sqf(&mut v);
            coprime(&mut v);
        }
    }
    if v.is_empty() {
        let p = f.product();
        if p.is_zero() || p.is_unit() {
            v.push(Violation::TrivialElement);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::DomainId;

    fn z(n: i64) -> RingElement {
        RingElement::integer(n)
    }

    #[test]
    fn worked_examples() {
        let good = Factorization::coprime(DomainId::Z, vec![z(5), z(3), z(2)]);
        assert!(check_well_formed(&good).well_formed);
        assert!(check_factorization_of(&good, &z(360)).well_formed);
        assert!(!check_factorization_of(&good, &z(361)).well_formed);

        let bad = Factorization::coprime(DomainId::Z, vec![z(6), z(2)]);
        let r = check_well_formed(&bad);
        assert!(!r.well_formed);
        assert_eq!(r.violations, vec![Violation::NotCoprime { i: 0, j: 1 }]);
        assert!(r.violations[0].to_string().starts_with("bases not coprime"));

        let r = check_well_formed(&Factorization::chain(DomainId::Z, vec![z(6), z(2)]));
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].to_string(), "chain broken at base 0: 6 ∤ 2");
    }

    #[test]
    fn per_form_clauses() {
        let ii = Factorization::dyadic(DomainId::Z, vec![z(10), z(6)]);
        assert!(check_well_formed(&ii).well_formed);
        let mut ii_unit = ii.clone();
        ii_unit.unit = z(-1);
        assert!(check_well_formed(&ii_unit).violations.contains(&Violation::UnitNotOne));

        let iii = Factorization::from_pairs(Form::III, DomainId::Z, vec![(z(3), 1), (z(2), 4)]);
        assert!(check_well_formed(&iii).well_formed);
        let iii_bad = Factorization::from_pairs(Form::III, DomainId::Z, vec![(z(3), 3), (z(-2), 2)]);
        let r = check_well_formed(&iii_bad);
        assert!(r.violations.contains(&Violation::NotCanonical { index: 1 }));
        assert!(r.violations.contains(&Violation::ExponentsNotIncreasing { index: 1 }));

        let v = Factorization::from_pairs(Form::V, DomainId::Z, vec![(z(2), 2), (z(2), 1)]);
        assert!(check_well_formed(&v).violations.contains(&Violation::RepeatedLink { index: 0 }));

        let vii = Factorization::from_pairs(Form::VII, DomainId::Z, vec![(z(1), 1), (z(4), 2)]);
        let r = check_well_formed(&vii);
        assert!(r.violations.contains(&Violation::UnitBase { index: 0 }));
        assert!(r.violations.contains(&Violation::NotSquareFree { index: 1 }));

        let i = Factorization::from_pairs(Form::I, DomainId::Z, vec![(z(6), 2)]);
        assert_eq!(
            check_well_formed(&i).violations,
            vec![Violation::EntryCount { expected: 2, found: 1 }]
        );

        let units = Factorization::coprime(DomainId::Z, vec![z(1)]);
        assert_eq!(check_well_formed(&units).violations, vec![Violation::TrivialElement]);

        let zero = Factorization::coprime(DomainId::Z, vec![z(0)]);
        assert_eq!(check_well_formed(&zero).violations, vec![Violation::ZeroBase { index: 0 }]);
    }
}
