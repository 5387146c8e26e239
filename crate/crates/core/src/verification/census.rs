//! Seeded property suites. Generators build inputs that satisfy each
//! lemma's hypotheses by construction in GCD domains; in `Z[s]` they draw
//! from divisor lists of small products, so hypotheses are checked rather
//! than guaranteed and vacuous draws are tallied separately.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lemmas::{lemma1_check, lemma2_check, PropertyCase, PropertyId};
use crate::algebra::gcd;
use crate::domain::DomainId;
use crate::element::RingElement;
use crate::error::Result;
use crate::factorization::is_square_free;
use crate::instances::quadratic::QuadInt;
use crate::instances::random;

pub const SHARDS: u64 = 4;
/// Failing cases kept per property.
pub const FAILURE_SAMPLE: usize = 5;
/// Draws allowed per requested non-vacuous case.
const ATTEMPTS_PER_CASE: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub vacuous: u64,
}

impl Tally {
    pub fn tested(&self) -> u64 {
        self.pass + self.fail
    }

    fn record(&mut self, case: &PropertyCase) {
        if case.vacuous {
            self.vacuous += 1;
        } else if case.holds {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
    }

    fn merge(&mut self, other: &Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.vacuous += other.vacuous;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub domain: DomainId,
    pub seed: u64,
    pub tallies: BTreeMap<PropertyId, Tally>,
    /// Up to [`FAILURE_SAMPLE`] failing cases per property, in shard order.
    pub failures: Vec<PropertyCase>,
}

impl Census {
    fn empty(domain: DomainId, seed: u64) -> Self {
        Census {
            domain,
            seed,
            tallies: PropertyId::ALL.into_iter().map(|p| (p, Tally::default())).collect(),
            failures: Vec::new(),
        }
    }

    pub fn tally(&self, p: PropertyId) -> Tally {
        self.tallies.get(&p).copied().unwrap_or_default()
    }

    pub fn total_failures(&self) -> u64 {
        self.tallies.values().map(|t| t.fail).sum()
    }

    /// Associative; shard reports are folded left to right.
    pub fn merge(mut self, other: Census) -> Census {
        for (p, t) in &other.tallies {
            self.tallies.entry(*p).or_default().merge(t);
        }
        for case in other.failures {
            let kept = self.failures.iter().filter(|c| c.property == case.property).count();
            if kept < FAILURE_SAMPLE {
                self.failures.push(case);
            }
        }
        self
    }
}

/// Runs every property `count` times (non-vacuous draws, with a draw cap)
/// on `domain`, split over [`SHARDS`] threads with derived streams.
pub fn run_census(domain: DomainId, seed: u64, count: u64) -> Result<Census> {
    let shards: Vec<Result<Census>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..SHARDS)
            .map(|shard| {
                let quota = count / SHARDS + u64::from(shard < count % SHARDS);
                scope.spawn(move || run_shard(domain, seed, shard, quota))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("census shard panicked")).collect()
    });
    let mut census = Census::empty(domain, seed);
    for shard in shards {
        census = census.merge(shard?);
    }
    Ok(census)
}

fn run_shard(domain: DomainId, seed: u64, shard: u64, quota: u64) -> Result<Census> {
    let mut census = Census::empty(domain, seed);
    for (k, property) in PropertyId::ALL.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(shard * 16 + k as u64);
        let mut tally = Tally::default();
        let cap = quota as usize * ATTEMPTS_PER_CASE;
        let mut draws = 0;
        while tally.tested() < quota && draws < cap {
            draws += 1;
            let case = draw(&mut rng, domain, property)?;
            tally.record(&case);
            if case.failed() && census.failures.iter().filter(|c| c.property == property).count() < FAILURE_SAMPLE {
                census.failures.push(case);
            }
        }
        census.tallies.insert(property, tally);
    }
    Ok(census)
}

fn draw(rng: &mut ChaCha8Rng, domain: DomainId, property: PropertyId) -> Result<PropertyCase> {
    if property == PropertyId::L1 {
        let (a, parts) = lemma1_case(rng, domain);
        return lemma1_check(&a, &parts);
    }
    let args = if domain.descriptor().is_gcd {
        gcd_case(rng, domain, property)?
    } else {
        search_case(rng, property)
    };
    lemma2_check(property, &args)
}

fn small(rng: &mut ChaCha8Rng, domain: DomainId) -> RingElement {
    match domain {
        DomainId::Z => random::nonzero(rng, domain, 200),
        DomainId::Zi => random::gaussian_by_norm(rng, 400),
        DomainId::Qx => random::poly_product(rng, 3),
        DomainId::ZSqrtM5 => random::quadratic_by_norm(rng, 44),
    }
}

fn unit(rng: &mut ChaCha8Rng, domain: DomainId) -> RingElement {
    match domain {
        DomainId::Z | DomainId::ZSqrtM5 => RingElement::from_int(domain, if rng.gen() { 1 } else { -1 }),
        DomainId::Zi => [(1, 0), (0, 1), (-1, 0), (0, -1)]
            .choose(rng)
            .map(|&(re, im)| RingElement::gaussian(re, im))
            .expect("non-empty"),
        DomainId::Qx => {
            let num = *[-3, -2, -1, 1, 2, 3].choose(rng).expect("non-empty");
            let den = rng.gen_range(1..=4);
            RingElement::Polynomial(crate::instances::poly::QPoly::constant(
                num_rational::BigRational::new(num.into(), den.into()),
            ))
        }
    }
}

/// Removes from `x` every common factor with `y`.
fn strip(mut x: RingElement, y: &RingElement) -> Result<RingElement> {
    loop {
        let g = gcd(&x, y)?;
        if g.is_unit() {
            return Ok(x);
        }
        x = x.div_exact_raw(&g).expect("gcd divides");
    }
}

fn gcd_case(rng: &mut ChaCha8Rng, domain: DomainId, property: PropertyId) -> Result<Vec<RingElement>> {
    Ok(match property {
        PropertyId::L2a => {
            let (b, c) = (small(rng, domain), small(rng, domain));
            let r = &small(rng, domain) * &small(rng, domain);
            let a = strip(gcd(&(&b * &c), &r)?, &b)?;
            vec![&unit(rng, domain) * &a, b, c]
        }
        PropertyId::L2b => {
            let a = small(rng, domain);
            let b = strip(small(rng, domain), &a)?;
            let u = unit(rng, domain);
            let u_inv = u.unit_inverse().expect("unit");
            let (c, d) = (&u * &b, &u_inv * &a);
            vec![a, b, c, d]
        }
        PropertyId::L2c => {
            let x = small(rng, domain);
            let y = strip(small(rng, domain), &x)?;
            let (u, v) = (unit(rng, domain), unit(rng, domain));
            let u_inv = u.unit_inverse().expect("unit");
            let a = &u * &(&x * &x);
            let b = &(&u_inv * &(&v * &v)) * &(&y * &y);
            vec![a, b, &v * &(&x * &y)]
        }
        PropertyId::L2d => {
            let b = small(rng, domain);
            let n = rng.gen_range(1..=3);
            let mut args = Vec::with_capacity(n + 1);
            for _ in 0..n {
                args.push(strip(small(rng, domain), &b)?);
            }
            args.push(b);
            args
        }
        PropertyId::L2e => {
            let n = rng.gen_range(1..=3);
            let mut args: Vec<RingElement> = Vec::with_capacity(n);
            while args.len() < n {
                let mut x = small(rng, domain);
                for y in &args {
                    x = strip(x, y)?;
                }
                if is_square_free(&x) {
                    args.push(x);
                }
            }
            args
        }
        PropertyId::L1 => unreachable!("handled separately"),
    })
}

/// Parts first, product second; redrawn until the product is square-free.
fn lemma1_case(rng: &mut ChaCha8Rng, domain: DomainId) -> (RingElement, Vec<RingElement>) {
    loop {
        let n = rng.gen_range(1..=3);
        let parts: Vec<RingElement> = (0..n).map(|_| small(rng, domain)).collect();
        let a = RingElement::product(domain, &parts);
        if is_square_free(&a) {
            return (a, parts);
        }
    }
}

fn quad(rng: &mut ChaCha8Rng) -> QuadInt {
    match small(rng, DomainId::ZSqrtM5) {
        RingElement::Quadratic(q) => q,
        _ => unreachable!(),
    }
}

/// A divisor of `x`, possibly a unit, with a random sign.
fn divisor_of(rng: &mut ChaCha8Rng, x: &QuadInt) -> RingElement {
    let mut ds = x.nonunit_divisors();
    ds.push(QuadInt::new(1, 0));
    let d = ds.choose(rng).expect("non-empty").clone();
    let sign = if rng.gen() { 1 } else { -1 };
    RingElement::Quadratic(QuadInt::new(sign * d.a, sign * d.b))
}

/// Non-GCD order: draws factor pairs of products of two small elements,
/// keeping every norm at most 44² ≤ 2000.
fn search_case(rng: &mut ChaCha8Rng, property: PropertyId) -> Vec<RingElement> {
    let domain = DomainId::ZSqrtM5;
    let elem = RingElement::Quadratic;
    let cofactor = |x: &QuadInt, d: &RingElement| elem(x.clone()).div_exact_raw(d).expect("divisor");
    match property {
        PropertyId::L2a => {
            let (b, c) = (quad(rng), quad(rng));
            let bc = crate::instances::Arith::mul(&b, &c);
            vec![divisor_of(rng, &bc), elem(b), elem(c)]
        }
        PropertyId::L2b => {
            let x = crate::instances::Arith::mul(&quad(rng), &quad(rng));
            let a = divisor_of(rng, &x);
            let c = divisor_of(rng, &x);
            let (b, d) = (cofactor(&x, &a), cofactor(&x, &c));
            vec![a, b, c, d]
        }
        PropertyId::L2c => {
            let c = quad(rng);
            let x = crate::instances::Arith::mul(&c, &c);
            let a = divisor_of(rng, &x);
            let b = cofactor(&x, &a);
            vec![a, b, elem(c)]
        }
        PropertyId::L2d => {
            let n = rng.gen_range(1..=3);
            let mut args: Vec<RingElement> = (0..n).map(|_| small(rng, domain)).collect();
            args.push(small(rng, domain));
            args
        }
        PropertyId::L2e => {
            let n = rng.gen_range(2..=3);
            (0..n).map(|_| small(rng, domain)).collect()
        }
        PropertyId::L1 => unreachable!("handled separately"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_domains_have_no_failures() {
        for domain in [DomainId::Z, DomainId::Zi, DomainId::Qx] {
            let census = run_census(domain, 7, 200).unwrap();
            for p in PropertyId::ALL {
                let t = census.tally(p);
                assert_eq!(t.fail, 0, "{domain} {p}");
                assert_eq!(t.tested(), 200, "{domain} {p}");
            }
        }
    }

    #[test]
    fn non_gcd_order_fails_where_expected() {
        let census = run_census(DomainId::ZSqrtM5, 7, 300).unwrap();
        for p in [PropertyId::L2b, PropertyId::L2c, PropertyId::L2e] {
            assert!(census.tally(p).fail > 0, "{p}: {:?}", census.tally(p));
        }
        assert_eq!(census.tally(PropertyId::L1).fail, 0);
    }

    #[test]
    fn deterministic_per_seed() {
        let a = run_census(DomainId::Z, 3, 100).unwrap();
        let b = run_census(DomainId::Z, 3, 100).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn merge_is_associative() {
        let parts: Vec<Census> = (0..3).map(|s| run_census(DomainId::ZSqrtM5, s, 40).unwrap()).collect();
        let left = parts[0].clone().merge(parts[1].clone()).merge(parts[2].clone());
        let right = parts[0].clone().merge(parts[1].clone().merge(parts[2].clone()));
        assert_eq!(left.tallies, right.tallies);
        assert_eq!(left.failures, right.failures);
    }
}
