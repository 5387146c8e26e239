//! Uniqueness up to associates: two routes to the same form agree, and
//! padding units are reported where the alignment rule allows them.

use sqfree::factorization::{convert, factorize};
use sqfree::verification::{equivalent, oracle_factorization_forms};
use sqfree::{DomainId, Factorization, Form, RingElement};

fn show(label: &str, f: &Factorization, g: &Factorization) -> sqfree::Result<()> {
    let r = equivalent(f, g)?;
    println!("{label}: equivalent = {}", r.equivalent);
    println!("    {f}\n    {g}");
    for p in &r.pairing {
        println!("    left {} = ({}) · right {}", p.left, p.unit, p.right);
    }
    for (side, i) in &r.padding_units {
        println!("    padding unit: {side:?} {i}");
    }
    if let Some(reason) = r.reason {
        println!("    {reason}");
    }
    Ok(())
}

fn main() -> sqfree::Result<()> {
    let z = RingElement::integer;
    let a = RingElement::gaussian(-24, 70);
    let ufd = factorize(&a, Form::VII)?;
    let dyadic = convert(&factorize(&a, Form::II)?, Form::VII)?;
    show("vii via irreducibles vs via dyadic", &ufd, &dyadic)?;

    let oracle = oracle_factorization_forms(&z(-720))?;
    show("iv pipeline vs oracle", &factorize(&z(-720), Form::IV)?, oracle.get(Form::IV))?;

    let short = Factorization::chain(DomainId::Z, vec![z(2), z(6), z(30)]);
    let padded = Factorization::chain(DomainId::Z, vec![z(1), z(2), z(6), z(30)]);
    show("chain with a leading unit", &short, &padded)?;

    let i1 = Factorization::from_pairs(Form::I, DomainId::Z, vec![(z(6), 2), (z(10), 1)]);
    let i2 = Factorization::from_pairs(Form::I, DomainId::Z, vec![(z(-6), 2), (z(10), 1)]);
    show("form i up to sign", &i1, &i2)?;

    let wrong = Factorization::coprime(DomainId::Z, vec![z(3), z(5), z(2)]);
    show("different element", &factorize(&z(360), Form::VI)?, &wrong)?;
    Ok(())
}
