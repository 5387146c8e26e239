//! Uniqueness up to associates: decides whether two factorizations of the
//! same family are the same decomposition, following the alignment rule of
//! each family.

use crate::algebra::associate_witness;
use crate::domain::Capability;
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::factorization::{strip_units, Factorization, Family, Form};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `left base = unit · right base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub left: usize,
    pub right: usize,
    pub unit: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub pairing: Vec<Pairing>,
    /// Unmatched positions certified to hold unit bases.
    pub padding_units: Vec<(Side, usize)>,
    /// First reason the comparison failed.
    pub reason: Option<String>,
    /// Form both sides were compared in (the reduced form when the inputs
    /// had different tags).
    pub compared_as: Form,
}

struct Builder {
    report: EquivalenceReport,
}

impl Builder {
    fn new(form: Form) -> Self {
        Builder {
            report: EquivalenceReport {
                equivalent: true,
                pairing: Vec::new(),
                padding_units: Vec::new(),
                reason: None,
                compared_as: form,
            },
        }
    }

    fn fail(&mut self, reason: String) {
        if self.report.equivalent {
            self.report.equivalent = false;
            self.report.reason = Some(reason);
        }
    }

    fn pair(&mut self, f: &Factorization, g: &Factorization, i: usize, j: usize, check_exp: bool) {
        let (s, t) = (&f.factors[i], &g.factors[j]);
        match associate_witness(&s.base, &t.base) {
            Some(unit) => self.report.pairing.push(Pairing { left: i, right: j, unit }),
            None => self.fail(format!("left base {i} ({}) ≁ right base {j} ({})", s.base, t.base)),
        }
        if check_exp && s.exponent != t.exponent {
            self.fail(format!(
                "exponent {} of left base {i} differs from exponent {} of right base {j}",
                s.exponent, t.exponent
            ));
        }
    }

    fn pad(&mut self, side: Side, f: &Factorization, idx: usize) {
        if f.factors[idx].base.is_unit() {
            self.report.padding_units.push((side, idx));
        } else {
            self.fail(format!("unmatched {side:?} base {idx} ({}) is not a unit", f.factors[idx].base));
        }
    }
}

/// Compares two factorizations of one family. I–III need a GCD domain,
/// IV–VII a UFD.
pub fn equivalent(f: &Factorization, g: &Factorization) -> Result<EquivalenceReport> {
    if f.domain != g.domain {
        return Err(Error::DomainMismatch { left: f.domain, right: g.domain });
    }
    let family = f.form.family();
    if family != g.form.family() {
        return Err(Error::usage(format!(
            "forms {} and {} belong to different families",
            f.form, g.form
        )));
    }
    f.domain.require(match family {
        Family::SquarePart | Family::Dyadic => Capability::Gcd,
        Family::Chain | Family::Coprime => Capability::Ufd,
    })?;
    if f.form != g.form {
        let reduced = match family {
            Family::Dyadic => Form::III,
            Family::Chain => Form::V,
            Family::Coprime => Form::VII,
            Family::SquarePart => unreachable!("family has one form"),
        };
        let lift = |x: &Factorization| {
            if x.form == reduced {
                Ok(x.clone())
            } else {
                strip_units(x, reduced)
            }
        };
        return equivalent(&lift(f)?, &lift(g)?);
    }

    let mut b = Builder::new(f.form);
    let (n, m) = (f.factors.len(), g.factors.len());
    match f.form {
        Form::I => {
            if n != 2 || m != 2 {
                b.fail("form i needs exactly two entries on each side".into());
            } else {
                b.pair(f, g, 0, 0, true);
                b.pair(f, g, 1, 1, true);
            }
        }
        // positional, trailing units pad the longer side
        Form::II | Form::VI => {
            for i in 0..n.min(m) {
                b.pair(f, g, i, i, true);
            }
            let (side, longer) = if n > m { (Side::Left, f) } else { (Side::Right, g) };
            for i in n.min(m)..n.max(m) {
                b.pad(side, longer, i);
            }
        }
        // right-aligned, leading units pad the longer side
        Form::IV => {
            let k = n.min(m);
            for off in 0..k {
                b.pair(f, g, n - k + off, m - k + off, true);
            }
            let (side, longer) = if n > m { (Side::Left, f) } else { (Side::Right, g) };
            for i in 0..n.max(m) - k {
                b.pad(side, longer, i);
            }
        }
        Form::III | Form::V | Form::VII => {
            if n != m {
                b.fail(format!("{n} bases on the left, {m} on the right"));
            }
            for i in 0..n.min(m) {
                b.pair(f, g, i, i, true);
            }
        }
    }
    Ok(b.report)
}
