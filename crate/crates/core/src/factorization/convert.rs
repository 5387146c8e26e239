//! Conversions between the factorization forms.

use crate::algebra::{gcd, gcd_all, lcm_all};
use crate::domain::Capability;
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::verification::check_well_formed;

use super::compute::{fold_unit_into_first, normalize_bases};
use super::{BinaryExpansion, Factor, Factorization, Form};

/// Largest dyadic depth `n` accepted by [`dyadic_to_coprime`], which
/// visits all `2^{n+1} - 1` bit patterns.
pub const MAX_DYADIC_DEPTH: usize = 24;

fn expect_well_formed(f: &Factorization, form: Form) -> Result<()> {
    if f.form != form {
        return Err(Error::Validation(format!("expected form {form}, got form {}", f.form)));
    }
    let report = check_well_formed(f);
    if report.well_formed {
        Ok(())
    } else {
        let msgs: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        Err(Error::Validation(msgs.join("; ")))
    }
}

/// Puts `target / ∏ baseᵉˣᵖ` into the unit field.
fn settle_unit(mut f: Factorization, target: &RingElement) -> Factorization {
    f.unit = RingElement::one(f.domain);
    let rest = target
        .div_exact_raw(&f.product())
        .expect("conversion preserves the element up to a unit");
    debug_assert!(rest.is_unit());
    f.unit = rest;
    f
}

/// (iv) → (vi): with `t_1 = s_1` and `t_{i+1} = s_{i+1} / s_i`,
/// `s_1 ⋯ s_n = t_1^n t_2^{n-1} ⋯ t_n`.
pub fn chain_to_coprime(f: &Factorization) -> Result<Factorization> {
    expect_well_formed(f, Form::IV)?;
    let links: Vec<&RingElement> = f.bases();
    let mut t = vec![links[0].clone()];
    for w in links.windows(2) {
        t.push(w[1].div_exact_raw(w[0]).expect("chain links divide"));
    }
    t.reverse();
    let mut out = Factorization::coprime(f.domain, t);
    out.unit = f.unit.clone();
    Ok(normalize_bases(out))
}

/// (vi) → (iv): entry `j` of the chain is `s_n s_{n-1} ⋯ s_{n+1-j}`.
pub fn coprime_to_chain(f: &Factorization) -> Result<Factorization> {
    expect_well_formed(f, Form::VI)?;
    let mut links = Vec::with_capacity(f.factors.len());
    let mut acc = RingElement::one(f.domain);
    for factor in f.factors.iter().rev() {
        acc = &acc * &factor.base;
        links.push(acc.clone());
    }
    let mut out = Factorization::chain(f.domain, links);
    out.unit = f.unit.clone();
    Ok(normalize_bases(out))
}

/// (vi) → (ii): level `i` is the product of the `s_k` whose exponent `k`
/// has bit `i` set.
pub fn coprime_to_dyadic(f: &Factorization) -> Result<Factorization> {
    expect_well_formed(f, Form::VI)?;
    let n = f.factors.len() as u64;
    let width = BinaryExpansion::new(n).bits.len();
    let mut levels = vec![RingElement::one(f.domain); width];
    for (k, factor) in (1u64..).zip(&f.factors) {
        for i in BinaryExpansion::new(k).ones() {
            levels[i] = &levels[i] * &factor.base;
        }
    }
    while levels.len() > 1 && levels.last().is_some_and(RingElement::is_unit) {
        levels.pop();
    }
    let mut out = Factorization::dyadic(f.domain, levels);
    out.unit = f.unit.clone();
    Ok(fold_unit_into_first(normalize_bases(out)))
}

/// (ii) → (vi) in a GCD domain. For each `k < 2^{n+1}` with binary digits
/// `c_i`, `t'_k = gcd(s_i : c_i = 1)`, `t''_k = lcm(s_i : c_i = 0)` (empty
/// lcm is 1) and `t_k = t'_k / gcd(t'_k, t''_k)`; then
/// `gcd(s_i, t_k) = t_k^{c_i}` and `∏ s_i^{2^i} = ∏ t_k^k` up to a unit.
pub fn dyadic_to_coprime(f: &Factorization) -> Result<Factorization> {
    f.domain.require(Capability::Gcd)?;
    expect_well_formed(f, Form::II)?;
    let levels: Vec<RingElement> = f.factors.iter().map(|x| x.base.clone()).collect();
    if levels.len() > MAX_DYADIC_DEPTH + 1 {
        return Err(Error::OutOfBounds(format!(
            "dyadic depth {} exceeds {MAX_DYADIC_DEPTH}",
            levels.len() - 1
        )));
    }
    let top = 1u64 << levels.len();
    let mut t = Vec::with_capacity(top as usize - 1);
    for k in 1..top {
        let bits = BinaryExpansion::new(k);
        let (ones, zeros): (Vec<_>, Vec<_>) = (0..levels.len()).partition(|&i| bits.bit(i));
        let pick = |idx: &[usize]| idx.iter().map(|&i| levels[i].clone()).collect::<Vec<_>>();
        let t1 = gcd_all(&pick(&ones))?;
        let t2 = lcm_all(f.domain, &pick(&zeros))?;
        let g = gcd(&t1, &t2)?;
        t.push(t1.div_exact_raw(&g).expect("gcd divides").canonical());
    }
    while t.len() > 1 && t.last().is_some_and(RingElement::is_unit) {
        t.pop();
    }
    let target = f.product();
    Ok(settle_unit(Factorization::coprime(f.domain, t), &target))
}

/// (ii) → (i): `s_n^{2^n} ⋯ s_1² s_0 = (s_n^{2^{n-1}} ⋯ s_1)² · s_0`.
pub fn dyadic_to_square_part(f: &Factorization) -> Result<Factorization> {
    expect_well_formed(f, Form::II)?;
    let b = f.factors[1..]
        .iter()
        .fold(RingElement::one(f.domain), |acc, x| &acc * &x.base.pow(x.exponent / 2));
    let c = f.factors[0].base.clone();
    let out = Factorization::new(Form::I, f.unit.clone(), vec![Factor::new(b, 2), Factor::new(c, 1)]);
    Ok(normalize_bases(out))
}

/// Moves between a form and its reduced variant: II ↔ III, IV ↔ V,
/// VI ↔ VII. Reducing drops unit bases, makes bases canonical, collects
/// all units in the unit field and (IV → V) merges repeated chain links
/// into exponents; expanding reverses this.
pub fn strip_units(f: &Factorization, target: Form) -> Result<Factorization> {
    use Form::*;
    if !matches!(
        (f.form, target),
        (II, III) | (III, II) | (IV, V) | (V, IV) | (VI, VII) | (VII, VI)
    ) {
        return Err(Error::usage(format!("no unit-stripping step from form {} to form {target}", f.form)));
    }
    expect_well_formed(f, f.form)?;
    let one = RingElement::one(f.domain);
    let out = match target {
        III | V | VII => {
            let normal = normalize_bases(f.clone());
            let mut factors: Vec<Factor> = Vec::new();
            for (idx, x) in normal.factors.into_iter().enumerate() {
                if x.base.is_one() {
                    continue;
                }
                let exponent = if target == VII { idx as u64 + 1 } else { x.exponent };
                match factors.last_mut() {
                    Some(last) if target == V && last.base == x.base => last.exponent += exponent,
                    _ => factors.push(Factor::new(x.base, exponent)),
                }
            }
            Factorization::new(target, normal.unit, factors)
        }
        II => {
            let width = f.factors.last().map_or(1, |x| x.exponent.trailing_zeros() as usize + 1);
            let mut levels = vec![one; width];
            for x in &f.factors {
                levels[x.exponent.trailing_zeros() as usize] = x.base.clone();
            }
            let mut out = Factorization::dyadic(f.domain, levels);
            out.unit = f.unit.clone();
            fold_unit_into_first(out)
        }
        IV => {
            let links = f
                .factors
                .iter()
                .flat_map(|x| std::iter::repeat_n(x.base.clone(), x.exponent as usize))
                .collect();
            let mut out = Factorization::chain(f.domain, links);
            out.unit = f.unit.clone();
            out
        }
        VI => {
            let n = f.factors.last().map_or(1, |x| x.exponent as usize);
            let mut bases = vec![one; n];
            for x in &f.factors {
                bases[x.exponent as usize - 1] = x.base.clone();
            }
            let mut out = Factorization::coprime(f.domain, bases);
            out.unit = f.unit.clone();
            out
        }
        I => unreachable!("rejected above"),
    };
    Ok(out)
}

/// Converts `f` to `target`, routing through form VI where no direct step
/// exists. Form I is a dead end: it cannot be converted to anything else.
pub fn convert(f: &Factorization, target: Form) -> Result<Factorization> {
    use Form::*;
    if f.form == target {
        expect_well_formed(f, target)?;
        return Ok(f.clone());
    }
    if f.form == I {
        return Err(Error::usage(format!("form i cannot be converted to form {target}")));
    }
    if f.form.family() == target.family() {
        return strip_units(f, target);
    }
    match (f.form, target) {
        (II, I) => return dyadic_to_square_part(f),
        (III, I) => return dyadic_to_square_part(&strip_units(f, II)?),
        _ => {}
    }
    let vi = match f.form {
        II => dyadic_to_coprime(f)?,
        III => dyadic_to_coprime(&strip_units(f, II)?)?,
        IV => chain_to_coprime(f)?,
        V => chain_to_coprime(&strip_units(f, IV)?)?,
        VII => strip_units(f, VI)?,
        VI => f.clone(),
        I => unreachable!("handled above"),
    };
    match target {
        I => dyadic_to_square_part(&coprime_to_dyadic(&vi)?),
        II => coprime_to_dyadic(&vi),
        III => strip_units(&coprime_to_dyadic(&vi)?, III),
        IV => coprime_to_chain(&vi),
        V => strip_units(&coprime_to_chain(&vi)?, V),
        VI => Ok(vi),
        VII => strip_units(&vi, VII),
    }
}
