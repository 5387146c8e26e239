//! Element grammar shared by the library and the command line.
//!
//! * integers: `-?[0-9]+`
//! * Gaussian integers: `a`, `bi`, `a+bi`, `a-bi`
//! * the `s² = -5` order: `a`, `bs`, `a+bs`, `a-bs`
//! * polynomials: terms `c`, `c x`, `c x^k` joined by `+`/`-`, with `c` an
//!   integer or `p/q` (an omitted coefficient means 1)
//!
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianInt;
use super::poly::QPoly;
use super::quadratic::QuadInt;
use crate::domain::DomainId;
use crate::element::RingElement;
use crate::error::{Error, Result};

pub fn render(e: &RingElement) -> String {
    match e {
        RingElement::Integer(n) => n.to_string(),
        RingElement::Gaussian(GaussianInt { re, im }) => render_pair(re, im, "i"),
        RingElement::Quadratic(QuadInt { a, b }) => render_pair(a, b, "s"),
        RingElement::Polynomial(p) => render_poly(p),
    }
}

fn render_pair(a: &BigInt, b: &BigInt, sym: &str) -> String {
    let imag = |b: &BigInt| {
        if b.magnitude().is_one() {
            sym.to_string()
        } else {
            format!("{}{sym}", b.magnitude())
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (_, true) => a.to_string(),
        (true, false) => {
            let sign = if b.is_negative() { "-" } else { "" };
            format!("{sign}{}", imag(b))
        }
        (false, false) => {
            let sign = if b.is_negative() { '-' } else { '+' };
            format!("{a}{sign}{}", imag(b))
        }
    }
}

fn render_poly(p: &QPoly) -> String {
    if p.coeffs().is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let coef = if k > 0 && mag.is_one() { String::new() } else { mag.to_string() };
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let body = match (coef.is_empty(), var.is_empty()) {
            (true, _) => var,
            (false, true) => coef,
            (false, false) => format!("{coef} {var}"),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Parses `text` as an element of `domain`.
pub fn parse(domain: DomainId, text: &str) -> Result<RingElement> {
    let symbol = match domain {
        DomainId::Z => None,
        DomainId::Zi => Some('i'),
        DomainId::ZSqrtM5 => Some('s'),
        DomainId::Qx => Some('x'),
    };
    let terms = Terms::new(text, symbol).parse()?;
    match domain {
        DomainId::Qx => {
            let deg = terms.iter().map(|t| t.power).max().unwrap_or(0);
            let mut coeffs = vec![BigRational::zero(); deg + 1];
            for t in terms {
                coeffs[t.power] += t.coef;
            }
            Ok(RingElement::Polynomial(QPoly::new(coeffs)))
        }
        _ => {
            let mut parts = [BigInt::zero(), BigInt::zero()];
            for t in terms {
                if !t.coef.is_integer() {
                    return Err(Error::parse(t.column, "fractional coefficient outside Q[x]"));
                }
                if t.power > 1 {
                    return Err(Error::parse(t.column, "exponents are only allowed in Q[x]"));
                }
                parts[t.power] += t.coef.to_integer();
            }
            let [a, b] = parts;
            Ok(match domain {
                DomainId::Z => RingElement::Integer(a),
                DomainId::Zi => RingElement::Gaussian(GaussianInt { re: a, im: b }),
                _ => RingElement::Quadratic(QuadInt { a, b }),
            })
        }
    }
}

struct Term {
    coef: BigRational,
    power: usize,
    column: usize,
}

struct Terms {
    // (1-based column, char), whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
    symbol: Option<char>,
}

impl Terms {
    fn new(text: &str, symbol: Option<char>) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        Terms { chars, pos: 0, end_column: text.chars().count() + 1, symbol }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end_column, |&(col, _)| col)
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.column(), format!("unexpected character `{c}`")),
            None => Error::parse(self.column(), "unexpected end of input"),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Some(s.parse().expect("ascii digits"))
    }

    fn parse(mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        if self.chars.is_empty() {
            return Err(Error::parse(1, "empty element"));
        }
        loop {
            let column = self.column();
            let negative = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') => {
                    self.pos += 1;
                    false
                }
                _ if terms.is_empty() => false,
                _ => return Err(self.unexpected()),
            };
            let mut coef = match self.digits() {
                Some(n) => {
                    if self.symbol == Some('x') && self.peek() == Some('/') {
                        self.pos += 1;
                        let den_col = self.column();
                        let d = self.digits().ok_or_else(|| self.unexpected())?;
                        if d.is_zero() {
                            return Err(Error::parse(den_col, "zero denominator"));
                        }
                        Some(BigRational::new(n, d))
                    } else {
                        Some(BigRational::from_integer(n))
                    }
                }
                None => None,
            };
            let mut power = 0;
            if coef.is_some() && self.symbol == Some('x') && self.peek() == Some('*') {
                self.pos += 1;
                if self.peek() != Some('x') {
                    return Err(self.unexpected());
                }
            }
            if self.symbol.is_some() && self.peek() == self.symbol {
                self.pos += 1;
                power = 1;
                if self.peek() == Some('^') {
                    if self.symbol != Some('x') {
                        return Err(self.unexpected());
                    }
                    self.pos += 1;
                    let col = self.column();
                    let k = self.digits().ok_or_else(|| self.unexpected())?;
                    power = usize::try_from(k)
                        .ok()
                        .filter(|&k| k <= 1 << 16)
                        .ok_or_else(|| Error::parse(col, "exponent too large"))?;
                }
                coef.get_or_insert_with(BigRational::one);
            }
            let coef = coef.ok_or_else(|| self.unexpected())?;
            terms.push(Term { coef: if negative { -coef } else { coef }, power, column });
            if self.peek().is_none() {
                return Ok(terms);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse(DomainId::Z, "-360").unwrap(), RingElement::integer(-360));
        assert_eq!(parse(DomainId::Z, "\u{2212}360").unwrap(), RingElement::integer(-360));
        assert_eq!(parse(DomainId::Zi, "2+3i").unwrap(), RingElement::gaussian(2, 3));
        assert_eq!(parse(DomainId::Zi, "-i").unwrap(), RingElement::gaussian(0, -1));
        assert_eq!(parse(DomainId::Zi, "2 - i").unwrap(), RingElement::gaussian(2, -1));
        assert_eq!(parse(DomainId::ZSqrtM5, "2+s").unwrap(), RingElement::quadratic(2, 1));
        let half = BigRational::new(1.into(), 2.into());
        let expect = QPoly::new(vec![BigRational::zero(), half, BigRational::zero(), BigRational::one()]);
        assert_eq!(
            parse(DomainId::Qx, "x^3 + 1/2 x").unwrap(),
            RingElement::Polynomial(expect)
        );
        assert_eq!(parse(DomainId::Qx, "2*x - 3").unwrap(), RingElement::poly(&[-3, 2]));
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&RingElement::gaussian(2, -1)), "2-i");
        assert_eq!(render(&RingElement::gaussian(0, -3)), "-3i");
        assert_eq!(render(&RingElement::gaussian(0, 0)), "0");
        assert_eq!(render(&RingElement::quadratic(2, 1)), "2+s");
        assert_eq!(render(&RingElement::poly(&[1, 0, -2, -1])), "-x^3 - 2 x^2 + 1");
        assert_eq!(render(&RingElement::poly(&[])), "0");
        let p = parse(DomainId::Qx, "x^3 + 1/2 x").unwrap();
        assert_eq!(render(&p), "x^3 + 1/2 x");
    }

    #[test]
    fn errors_carry_columns() {
        match parse(DomainId::Z, "12a") {
            Err(Error::Parse { line: 1, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse(DomainId::Z, "3i") {
            Err(Error::Parse { column: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse(DomainId::Zi, "").is_err());
        assert!(parse(DomainId::Zi, "1/2").is_err());
        assert!(parse(DomainId::Qx, "1/0 x").is_err());
        assert!(parse(DomainId::Zi, "i^2").is_err());
    }
}
