//! Executable forms of the coprimality and square-freeness lemmas. Each
//! check first tests the lemma's hypotheses on the given arguments; if they
//! fail the case is vacuous, otherwise the conclusion is evaluated. In a
//! domain that is not pre-Schreier a conclusion may legitimately be false.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{divides, gcd, is_associate, is_coprime, primal_split};
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::factorization::is_square_free;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyId {
    /// Factors of a square-free element are square-free and pairwise coprime.
    L1,
    /// `a | bc`, `a ⊥ b` ⟹ `a | c`.
    L2a,
    /// `ab = cd`, `a ⊥ c`, `b ⊥ d` ⟹ `a ∼ d`, `b ∼ c`.
    L2b,
    /// `ab = c²`, `a ⊥ b` ⟹ `a ∼ c₁²`, `b ∼ c₂²`, `c = c₁c₂` for some `c₁, c₂`.
    L2c,
    /// `a_i ⊥ b` for all `i` ⟹ `a_1 ⋯ a_n ⊥ b`.
    L2d,
    /// square-free, pairwise coprime `a_i` ⟹ `a_1 ⋯ a_n` square-free.
    L2e,
}

impl PropertyId {
    pub const ALL: [PropertyId; 6] =
        [PropertyId::L1, PropertyId::L2a, PropertyId::L2b, PropertyId::L2c, PropertyId::L2d, PropertyId::L2e];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::L1 => "L1",
            PropertyId::L2a => "L2a",
            PropertyId::L2b => "L2b",
            PropertyId::L2c => "L2c",
            PropertyId::L2d => "L2d",
            PropertyId::L2e => "L2e",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::usage(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCase {
    pub property: PropertyId,
    pub inputs: Vec<RingElement>,
    /// Conclusion holds; `true` for vacuous cases.
    pub holds: bool,
    /// Hypotheses failed, so nothing was tested.
    pub vacuous: bool,
    /// Constructive witness (primal split for L2a, `(c₁, c₂)` for L2c).
    pub witness: Option<Vec<RingElement>>,
}

impl PropertyCase {
    fn vacuous(property: PropertyId, inputs: &[RingElement]) -> Self {
        PropertyCase { property, inputs: inputs.to_vec(), holds: true, vacuous: true, witness: None }
    }

    fn tested(property: PropertyId, inputs: &[RingElement], holds: bool, witness: Option<Vec<RingElement>>) -> Self {
        PropertyCase { property, inputs: inputs.to_vec(), holds, vacuous: false, witness: holds.then_some(witness).flatten() }
    }

    pub fn failed(&self) -> bool {
        !self.vacuous && !self.holds
    }
}

fn same_domain(args: &[RingElement]) -> Result<()> {
    if let Some(first) = args.first() {
        for x in &args[1..] {
            first.same_domain(x)?;
        }
    }
    Ok(())
}

fn arity(property: PropertyId, args: &[RingElement], ok: bool, shape: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::usage(format!("{property} expects {shape}, got {} arguments", args.len())))
    }
}

fn pairwise_coprime(xs: &[RingElement]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs[i + 1..].iter().all(|y| is_coprime(x, y)))
}

/// `a` square-free and `a = ∏ parts` ⟹ every part is square-free
/// and the parts are pairwise coprime. Holds in every commutative ring.
pub fn lemma1_check(a: &RingElement, parts: &[RingElement]) -> Result<PropertyCase> {
    let mut inputs = vec![a.clone()];
    inputs.extend_from_slice(parts);
    same_domain(&inputs)?;
    if parts.is_empty() {
        return Err(Error::usage("L1 expects at least one part"));
    }
    if RingElement::product(a.domain(), parts) != *a {
        return Err(Error::usage(format!("parts do not multiply to {a}")));
    }
    if !is_square_free(a) {
        return Ok(PropertyCase::vacuous(PropertyId::L1, &inputs));
    }
    let holds = parts.iter().all(is_square_free) && pairwise_coprime(parts);
    Ok(PropertyCase::tested(PropertyId::L1, &inputs, holds, None))
}

/// Evaluates one of the lemmas on `args`:
///
/// * `L1`: `[a, b_1, …, b_n]`
/// * `L2a`: `[a, b, c]`
/// * `L2b`: `[a, b, c, d]`
/// * `L2c`: `[a, b, c]`
/// * `L2d`: `[a_1, …, a_n, b]`
/// * `L2e`: `[a_1, …, a_n]`
pub fn lemma2_check(property: PropertyId, args: &[RingElement]) -> Result<PropertyCase> {
    same_domain(args)?;
    let gcd_domain = args.first().is_some_and(|a| a.domain().descriptor().is_gcd);
    match property {
        PropertyId::L1 => {
            arity(property, args, args.len() >= 2, "[a, b_1, ..., b_n]")?;
            lemma1_check(&args[0], &args[1..])
        }
        PropertyId::L2a => {
            arity(property, args, args.len() == 3, "[a, b, c]")?;
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            if a.is_zero() || !divides(a, &(b * c)) || !is_coprime(a, b) {
                return Ok(PropertyCase::vacuous(property, args));
            }
            let holds = divides(a, c);
            let witness = if gcd_domain {
                let (a1, a2) = primal_split(a, b, c)?;
                Some(vec![a1, a2])
            } else {
                None
            };
            Ok(PropertyCase::tested(property, args, holds, witness))
        }
        PropertyId::L2b => {
            arity(property, args, args.len() == 4, "[a, b, c, d]")?;
            let (a, b, c, d) = (&args[0], &args[1], &args[2], &args[3]);
            if a * b != c * d || !is_coprime(a, c) || !is_coprime(b, d) {
                return Ok(PropertyCase::vacuous(property, args));
            }
            let holds = is_associate(a, d) && is_associate(b, c);
            Ok(PropertyCase::tested(property, args, holds, None))
        }
        PropertyId::L2c => {
            arity(property, args, args.len() == 3, "[a, b, c]")?;
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            if a * b != c * c || !is_coprime(a, b) {
                return Ok(PropertyCase::vacuous(property, args));
            }
            let witness = square_split(a, b, c, gcd_domain)?;
            Ok(PropertyCase::tested(property, args, witness.is_some(), witness))
        }
        PropertyId::L2d => {
            arity(property, args, args.len() >= 2, "[a_1, ..., a_n, b]")?;
            let (b, xs) = args.split_last().expect("arity checked");
            if !xs.iter().all(|x| is_coprime(x, b)) {
                return Ok(PropertyCase::vacuous(property, args));
            }
            let prod = RingElement::product(b.domain(), xs);
            Ok(PropertyCase::tested(property, args, is_coprime(&prod, b), None))
        }
        PropertyId::L2e => {
            arity(property, args, !args.is_empty(), "[a_1, ..., a_n]")?;
            if !args.iter().all(is_square_free) || !pairwise_coprime(args) {
                return Ok(PropertyCase::vacuous(property, args));
            }
            let prod = RingElement::product(args[0].domain(), args);
            Ok(PropertyCase::tested(property, args, is_square_free(&prod), None))
        }
    }
}

/// `(c₁, c₂)` with `c = c₁c₂`, `a ∼ c₁²`, `b ∼ c₂²`. In a GCD domain
/// `c₁ = gcd(a, c)` is the only candidate that needs checking; otherwise
/// every divisor of `c` is tried.
fn square_split(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    gcd_domain: bool,
) -> Result<Option<Vec<RingElement>>> {
    let domain = c.domain();
    let fits = |c1: &RingElement, c2: &RingElement| is_associate(a, &(c1 * c1)) && is_associate(b, &(c2 * c2));
    if c.is_zero() {
        let (zero, one) = (RingElement::zero(domain), RingElement::one(domain));
        for (c1, c2) in [(zero.clone(), one.clone()), (one, zero)] {
            if fits(&c1, &c2) {
                return Ok(Some(vec![c1, c2]));
            }
        }
        return Ok(None);
    }
    let candidates: Vec<RingElement> = if gcd_domain {
        vec![gcd(a, c)?]
    } else {
        match c {
            RingElement::Quadratic(q) => std::iter::once(RingElement::one(domain))
                .chain(q.nonunit_divisors().into_iter().map(RingElement::Quadratic))
                .collect(),
            _ => unreachable!("only Z[s] lacks gcds"),
        }
    };
    for c1 in candidates {
        let c2 = c.div_exact_raw(&c1).expect("candidate divides c");
        if fits(&c1, &c2) {
            return Ok(Some(vec![c1, c2]));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> RingElement {
        RingElement::integer(n)
    }
    fn q(a: i64, b: i64) -> RingElement {
        RingElement::quadratic(a, b)
    }

    #[test]
    fn lemma2c_square_split() {
        let case = lemma2_check(PropertyId::L2c, &[z(4), z(9), z(6)]).unwrap();
        assert!(case.holds && !case.vacuous);
        assert_eq!(case.witness, Some(vec![z(2), z(3)]));
    }

    #[test]
    fn lemma2a_holds_with_primal_witness() {
        let case = lemma2_check(PropertyId::L2a, &[z(5), z(3), z(10)]).unwrap();
        assert!(case.holds && !case.vacuous);
        assert_eq!(case.witness, Some(vec![z(1), z(5)]));
        let vac = lemma2_check(PropertyId::L2a, &[z(5), z(5), z(1)]).unwrap();
        assert!(vac.vacuous && vac.holds);
    }

    #[test]
    fn lemma2e_fails_in_non_gcd_order() {
        let case = lemma2_check(PropertyId::L2e, &[q(2, 1), q(2, -1)]).unwrap();
        assert!(!case.vacuous);
        assert!(!case.holds);
        assert!(case.failed());
    }

    #[test]
    fn lemma2b_and_2c_fail_in_non_gcd_order() {
        // 2·3 = (1+s)(1-s)
        let case = lemma2_check(PropertyId::L2b, &[q(2, 0), q(3, 0), q(1, 1), q(1, -1)]).unwrap();
        assert!(case.failed());
        // (2+s)(2-s) = 3²
        let case = lemma2_check(PropertyId::L2c, &[q(2, 1), q(2, -1), q(3, 0)]).unwrap();
        assert!(case.failed());
        // 2 | (1+s)(1-s), 2 ⊥ 1+s, 2 ∤ 1-s
        let case = lemma2_check(PropertyId::L2a, &[q(2, 0), q(1, 1), q(1, -1)]).unwrap();
        assert!(case.failed());
    }

    #[test]
    fn lemma2c_succeeds_by_search_when_it_can() {
        let case = lemma2_check(PropertyId::L2c, &[q(4, 0), q(9, 0), q(6, 0)]).unwrap();
        assert!(case.holds && !case.vacuous);
        let w = case.witness.unwrap();
        assert_eq!(&w[0] * &w[1], q(6, 0));
    }

    #[test]
    fn lemma2d_and_lemma1() {
        let case = lemma2_check(PropertyId::L2d, &[z(3), z(5), z(7), z(4)]).unwrap();
        assert!(case.holds && !case.vacuous);
        assert!(lemma1_check(&z(30), &[z(5), z(6)]).unwrap().holds);
        assert!(lemma1_check(&z(30), &[z(2), z(3), z(5)]).unwrap().holds);
        assert!(lemma1_check(&z(21), &[z(3), z(7)]).unwrap().holds);
        assert!(lemma1_check(&z(12), &[z(2), z(6)]).unwrap().vacuous);
        assert!(lemma1_check(&z(30), &[z(5), z(7)]).is_err());
        let case = lemma1_check(&q(6, 0), &[q(2, 0), q(3, 0)]).unwrap();
        assert!(case.holds && !case.vacuous);
    }

    #[test]
    fn argument_shapes() {
        assert!(lemma2_check(PropertyId::L2b, &[z(1)]).is_err());
        assert!(lemma2_check(PropertyId::L2a, &[z(1), z(2), RingElement::gaussian(1, 0)]).is_err());
        assert!("L2f".parse::<PropertyId>().is_err());
        assert_eq!("l2c".parse::<PropertyId>().unwrap(), PropertyId::L2c);
    }
}
