//! Square-free forms of rational polynomials, including ones with
//! irreducible factors of higher degree.

use sqfree::factorization::factorize;
use sqfree::instances::{factor_irreducible, parse};
use sqfree::{DomainId, Form};

fn main() -> sqfree::Result<()> {
    let inputs = ["x^3 + x^2", "x^5 - x^4 - x + 1", "2x^6 - 4x^4 + 2x^2", "x^4 + 1", "x^8 + 2x^4 + 1"];
    for text in inputs {
        let a = parse(DomainId::Qx, text)?;
        let irr = factor_irreducible(&a)?;
        println!("{a}");
        println!("    irreducible: {}", irr.primes.iter().map(|(p, e)| format!("({p})^{e}")).collect::<Vec<_>>().join(" "));
        for form in [Form::I, Form::III, Form::V, Form::VII] {
            println!("    {:>3}: {}", form.as_str(), factorize(&a, form)?);
        }
    }
    Ok(())
}
