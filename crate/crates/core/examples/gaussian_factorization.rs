//! Gaussian integers: irreducible factors, units, and the coprime form.

use sqfree::factorization::factorize;
use sqfree::instances::{factor_irreducible, norm};
use sqfree::{Form, RingElement};

fn main() -> sqfree::Result<()> {
    for (re, im) in [(2, 0), (5, 0), (-8, 6), (12, 16), (3, 4)] {
        let a = RingElement::gaussian(re, im);
        let irr = factor_irreducible(&a)?;
        let primes: Vec<String> = irr.primes.iter().map(|(p, e)| format!("({p})^{e}")).collect();
        println!("{a}  N = {}  = {} · {}", norm(&a).unwrap().0, irr.unit, primes.join(" "));
        println!("    vi: {}", factorize(&a, Form::VI)?);
        println!("    ii: {}", factorize(&a, Form::II)?);
    }
    Ok(())
}
