//! Z[s], s² = -5: square-part extraction still terminates, but products of
//! coprime square-free elements need not be square-free.

use sqfree::algebra::{gcd, is_coprime};
use sqfree::factorization::{factorize, is_square_free};
use sqfree::verification::{lemma2_check, PropertyCase};
use sqfree::{Form, PropertyId, RingElement};

fn report(case: &PropertyCase) {
    let inputs: Vec<String> = case.inputs.iter().map(|x| x.to_string()).collect();
    println!("{} [{}]: vacuous = {}, holds = {}", case.property, inputs.join(", "), case.vacuous, case.holds);
}

fn main() -> sqfree::Result<()> {
    let q = RingElement::quadratic;
    let (a, b) = (q(2, 1), q(2, -1));
    println!("{a} square-free: {}", is_square_free(&a));
    println!("{b} square-free: {}", is_square_free(&b));
    println!("coprime: {}", is_coprime(&a, &b));
    println!("product {} square-free: {}", &a * &b, is_square_free(&(&a * &b)));
    report(&lemma2_check(PropertyId::L2e, &[a, b])?);
    report(&lemma2_check(PropertyId::L2b, &[q(2, 0), q(3, 0), q(1, 1), q(1, -1)])?);
    report(&lemma2_check(PropertyId::L2c, &[q(2, 1), q(2, -1), q(3, 0)])?);

    for x in [q(9, 0), q(18, 0), q(-4, 2), q(6, 12)] {
        println!("{x}");
        for form in [Form::I, Form::II, Form::III] {
            println!("    {:>3}: {}", form.as_str(), factorize(&x, form)?);
        }
    }
    match gcd(&q(6, 0), &q(2, 2)) {
        Ok(g) => println!("gcd = {g}"),
        Err(e) => println!("gcd: {e}"),
    }
    match factorize(&q(9, 0), Form::VI) {
        Ok(f) => println!("vi = {f}"),
        Err(e) => println!("form vi: {e}"),
    }
    Ok(())
}
