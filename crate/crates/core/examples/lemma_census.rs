//! Seeded lemma suites on every domain.
//!
//! cargo run --release --example lemma_census -- [count] [seed]

use sqfree::verification::run_census;
use sqfree::{DomainId, PropertyId};

fn main() -> sqfree::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    println!("{:<8} {:>5} {:>7} {:>7} {:>8}", "domain", "prop", "pass", "fail", "vacuous");
    for domain in DomainId::ALL {
        let census = run_census(domain, seed, count)?;
        for p in PropertyId::ALL {
            let t = census.tally(p);
            println!("{:<8} {:>5} {:>7} {:>7} {:>8}", domain, p, t.pass, t.fail, t.vacuous);
        }
        for case in census.failures.iter().take(3) {
            let inputs: Vec<String> = case.inputs.iter().map(|x| x.to_string()).collect();
            println!("         {} fails on [{}]", case.property, inputs.join(", "));
        }
    }
    Ok(())
}
