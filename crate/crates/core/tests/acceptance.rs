//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sqfree::factorization::{convert, factorize, is_square_free};
use sqfree::instances::random;
use sqfree::verification::{
    check_factorization_of, equivalent, lemma2_check, oracle_factorization_forms, oracle_is_square_free,
    run_census,
};
use sqfree::{DomainId, Factorization, Form, PropertyId, RingElement};

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;

/// The shared test population: 2..=10000, 500 random polynomial products of
/// degree at most 8, 500 Gaussian integers of norm at most 10⁴.
fn population() -> Vec<RingElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Vec<RingElement> = (2..=10_000).map(RingElement::integer).collect();
    out.extend((0..500).map(|_| random::poly_product(&mut rng, 8)));
    out.extend((0..500).map(|_| random::gaussian_by_norm(&mut rng, 10_000)));
    out
}

fn existence(pop: &[RingElement]) -> Outcome {
    let mut checked = 0;
    for a in pop {
        for form in Form::ALL {
            let f = factorize(a, form).map_err(|e| format!("{a} form {form}: {e}"))?;
            let report = check_factorization_of(&f, a);
            if !report.well_formed {
                return Err(format!("{a} form {form}: {:?}", report.violations));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} factorizations well formed and reconstructing"))
}

fn uniqueness(pop: &[RingElement]) -> Outcome {
    let mut compared = 0;
    for a in pop {
        let oracle = oracle_factorization_forms(a).map_err(|e| format!("{a}: {e}"))?;
        for form in Form::ALL {
            let f = factorize(a, form).map_err(|e| format!("{a} form {form}: {e}"))?;
            let report = equivalent(&f, oracle.get(form)).map_err(|e| format!("{a} form {form}: {e}"))?;
            if !report.equivalent {
                return Err(format!("{a} form {form}: {}", report.reason.unwrap_or_default()));
            }
            compared += 1;
        }
        let via_dyadic = convert(&factorize(a, Form::II).unwrap(), Form::VII).map_err(|e| e.to_string())?;
        if !equivalent(&via_dyadic, oracle.get(Form::VII)).unwrap().equivalent {
            return Err(format!("{a}: dyadic route to form vii disagrees"));
        }
        compared += 1;
    }
    Ok(format!("{compared} comparisons, 0 disagreements"))
}

fn z(n: i64) -> RingElement {
    RingElement::integer(n)
}

fn bases(f: &Factorization) -> Vec<RingElement> {
    f.factors.iter().map(|x| x.base.clone()).collect()
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut trips = 0;
    for domain in [DomainId::Z, DomainId::Zi, DomainId::Qx] {
        for _ in 0..1000 {
            let a = match domain {
                DomainId::Z => z(rng.gen_range(2..=1_000_000)),
                DomainId::Zi => random::gaussian_by_norm(&mut rng, 10_000),
                _ => random::poly_product(&mut rng, 8),
            };
            let vi = factorize(&a, Form::VI).map_err(|e| e.to_string())?;
            for via in [Form::II, Form::IV] {
                let there = convert(&vi, via).map_err(|e| format!("{a}: {e}"))?;
                let back = convert(&there, Form::VI).map_err(|e| format!("{a}: {e}"))?;
                let report = equivalent(&vi, &back).map_err(|e| e.to_string())?;
                if !report.equivalent || back.product() != a {
                    return Err(format!("{a}: vi -> {via} -> vi changed the factorization"));
                }
                trips += 1;
            }
        }
    }
    let vi = factorize(&z(360), Form::VI).unwrap();
    let ii = convert(&vi, Form::II).unwrap();
    let iv = convert(&vi, Form::IV).unwrap();
    let back = convert(&ii, Form::VI).unwrap();
    let pinned = bases(&ii) == [z(10), z(6)]
        && bases(&vi) == [z(5), z(3), z(2)]
        && bases(&iv) == [z(2), z(6), z(30)]
        && bases(&back) == [z(5), z(3), z(2)];
    if !pinned {
        return Err(format!("360 worked case: {ii} / {vi} / {iv}"));
    }
    Ok(format!("{trips} round trips equivalent; 360 reproduces s = (10, 6), t = (5, 3, 2), chain (2, 6, 30)"))
}

fn lemma_suite() -> Outcome {
    let mut summary = Vec::new();
    let mut l1_total = 0;
    for domain in [DomainId::Z, DomainId::Zi, DomainId::Qx] {
        let census = run_census(domain, SEED, 10_000).map_err(|e| e.to_string())?;
        for p in PropertyId::ALL {
            let t = census.tally(p);
            if t.fail > 0 || t.tested() < 10_000 {
                return Err(format!("{domain} {p}: {t:?}"));
            }
        }
        l1_total += census.tally(PropertyId::L1).tested();
        summary.push(format!("{domain} 6x10000"));
    }
    let census = run_census(DomainId::ZSqrtM5, SEED, 1_250).map_err(|e| e.to_string())?;
    let l1 = census.tally(PropertyId::L1);
    if l1.fail > 0 || l1.tested() < 1_250 {
        return Err(format!("zsqrtm5 L1: {l1:?}"));
    }
    l1_total += l1.tested();
    Ok(format!("{}; L1 {l1_total} cases over four domains; 0 failures", summary.join(", ")))
}

fn negative_control() -> Outcome {
    let (a1, a2) = (RingElement::quadratic(2, 1), RingElement::quadratic(2, -1));
    let product = &a1 * &a2;
    let pinned = is_square_free(&a1)
        && is_square_free(&a2)
        && sqfree::algebra::is_coprime(&a1, &a2)
        && product == RingElement::quadratic(9, 0)
        && !is_square_free(&product);
    let case = lemma2_check(PropertyId::L2e, &[a1, a2]).map_err(|e| e.to_string())?;
    if !pinned || case.vacuous || case.holds {
        return Err("pinned case (2+s)(2-s) = 9 not reproduced".into());
    }
    let census = run_census(DomainId::ZSqrtM5, SEED, 2_000).map_err(|e| e.to_string())?;
    for p in [PropertyId::L2b, PropertyId::L2c, PropertyId::L2e] {
        if census.tally(p).fail == 0 {
            return Err(format!("census found no {p} failure"));
        }
    }
    let mut elements = 0;
    for b in -20i64..=20 {
        for a in -45i64..=45 {
            let x = RingElement::quadratic(a, b);
            if a * a + 5 * b * b > 2_000 || x.is_zero() || x.is_unit() {
                continue;
            }
            for form in [Form::I, Form::II, Form::III] {
                let f = factorize(&x, form).map_err(|e| format!("{x} form {form}: {e}"))?;
                if !check_factorization_of(&f, &x).well_formed {
                    return Err(format!("{x} form {form} not well formed"));
                }
            }
            elements += 1;
        }
    }
    let fails = |p| census.tally(p).fail;
    Ok(format!(
        "L2e pinned at 9; census failures L2b {} L2c {} L2e {}; forms i-iii exist for all {elements} elements of norm <= 2000",
        fails(PropertyId::L2b),
        fails(PropertyId::L2c),
        fails(PropertyId::L2e)
    ))
}

fn oracle_agreement() -> Outcome {
    let mut checked = 0;
    let mut agree = |x: &RingElement| -> Result<(), String> {
        let oracle = oracle_is_square_free(x).map_err(|e| format!("{x}: {e}"))?;
        if oracle != is_square_free(x) {
            return Err(format!("{x}: oracle says {oracle}"));
        }
        checked += 1;
        Ok(())
    };
    for n in (2..=10_000).chain((10_001..=1_000_000).step_by(97)) {
        agree(&z(n))?;
    }
    for b in -100i64..=100 {
        for a in -100i64..=100 {
            let n = a * a + b * b;
            if n > 0 && n <= 10_000 {
                agree(&RingElement::gaussian(a, b))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for k in 0..1000 {
        let p = if k % 2 == 0 { random::poly_product(&mut rng, 8) } else { random::nonzero(&mut rng, DomainId::Qx, 9) };
        agree(&p)?;
    }
    Ok(format!("{checked} elements, 0 mismatches"))
}

fn cli_golden() -> Outcome {
    let cases = common::cases();
    if cases.len() != 20 {
        return Err(format!("expected 20 golden cases, found {}", cases.len()));
    }
    let failures: Vec<String> = cases.iter().filter_map(|c| common::check(c).err()).collect();
    if !failures.is_empty() {
        return Err(failures.join("\n"));
    }
    Ok("20 transcripts byte-identical across two runs and to the pinned files".into())
}

fn main() {
    let pop = population();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + Sync + '_>)> = vec![
        ("existence", Box::new(|| existence(&pop))),
        ("uniqueness", Box::new(|| uniqueness(&pop))),
        ("conversion fidelity", Box::new(round_trips)),
        ("lemma suite", Box::new(lemma_suite)),
        ("negative control", Box::new(negative_control)),
        ("oracle agreement", Box::new(oracle_agreement)),
        ("cli golden", Box::new(cli_golden)),
    ];
    let results: Vec<(Outcome, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, run)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let out = run();
                    (out, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = 0;
    for (k, ((name, _), (out, secs))) in criteria.iter().zip(&results).enumerate() {
        match out {
            Ok(detail) => println!("criterion {} {name}: PASS ({secs:.1}s) {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
