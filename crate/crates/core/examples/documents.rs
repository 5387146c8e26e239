//! Serialized factorizations and the command-line entry point, in process.

use sqfree::cli;
use sqfree::document;
use sqfree::factorization::factorize;
use sqfree::{Form, RingElement};

fn main() -> sqfree::Result<()> {
    let f = factorize(&RingElement::poly(&[1, 0, -2, 0, 1]), Form::VI)?;
    let json = document::to_json(&f);
    print!("{json}");
    assert_eq!(document::to_json(&document::from_json(&json)?), json);

    for args in [
        &["sqfree", "factor", "--domain", "zi", "--form", "iii", "--input", "-8+6i"][..],
        &["sqfree", "factor", "--domain", "z", "--form", "vi", "--input", "-1"],
        &["sqfree", "factor", "--domain", "zsqrtm5", "--form", "vi", "--input", "9"],
    ] {
        let out = cli::run(args.iter().copied());
        println!("$ {}\nexit {}", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
    Ok(())
}
