//! The conversions between the coprime, chain and dyadic families,
//! traced on 360 = 2³·3²·5.

use sqfree::factorization::{
    chain_to_coprime, coprime_to_chain, coprime_to_dyadic, dyadic_to_coprime, dyadic_to_square_part, factorize,
    strip_units,
};
use sqfree::{BinaryExpansion, Form, RingElement};

fn main() -> sqfree::Result<()> {
    let a = RingElement::integer(360);
    let vi = factorize(&a, Form::VI)?;
    println!("vi   {vi}");
    let iv = coprime_to_chain(&vi)?;
    println!("iv   {iv}");
    println!("vi   {}  (telescoping quotients)", chain_to_coprime(&iv)?);
    let ii = coprime_to_dyadic(&vi)?;
    println!("ii   {ii}");
    for f in &vi.factors {
        let bits = BinaryExpansion::new(f.exponent);
        println!("       exponent {} -> levels {:?}", f.exponent, bits.ones().collect::<Vec<_>>());
    }
    println!("vi   {}  (gcd/lcm over bit patterns)", dyadic_to_coprime(&ii)?);
    println!("i    {}", dyadic_to_square_part(&ii)?);
    println!("v    {}", strip_units(&iv, Form::V)?);

    let b = RingElement::integer(2 * 2 * 2 * 2 * 3 * 7 * 7 * 7);
    let vii = factorize(&b, Form::VII)?;
    println!("\n{b}: vii {vii}");
    println!("        iii {}", factorize(&b, Form::III)?);
    Ok(())
}
