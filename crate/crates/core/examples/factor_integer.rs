//! All seven forms of one integer.
//!
//! cargo run --example factor_integer -- 360

use sqfree::factorization::factorize;
use sqfree::instances::parse;
use sqfree::verification::check_factorization_of;
use sqfree::{DomainId, Form};

fn main() -> sqfree::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "360".into());
    let a = parse(DomainId::Z, &text)?;
    println!("a = {a}");
    for form in Form::ALL {
        let f = factorize(&a, form)?;
        let ok = check_factorization_of(&f, &a).well_formed;
        println!("{:>4}  {f}  {}", form.as_str(), if ok { "ok" } else { "MALFORMED" });
    }
    Ok(())
}
