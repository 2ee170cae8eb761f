//! Exact arithmetic in F[[pi]]: valuations, units and exact division.

use weighted_homology::ring::{Field, LocalElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    let a = LocalElement::parse("pi^3 + 2*pi^4", q)?;
    let u = LocalElement::parse("(1 + pi)/(1 - pi)", q)?;
    println!("a = {a}, valuation {:?}", a.valuation());
    println!("u = {u}, unit: {}", u.is_unit());
    let prod = &a * &u;
    println!("a*u = {prod}, valuation {:?}", prod.valuation());
    println!("(a*u)/a = {}", prod.divide_exact(&a)?);
    match LocalElement::pi(q).divide_exact(&a) {
        Ok(x) => println!("pi/a = {x}"),
        Err(e) => println!("pi/a: {e}"),
    }

    let f5 = Field::Prime(5);
    let b = LocalElement::parse("7*pi + 3*pi^2", f5)?;
    println!("over {f5}: {b}, residue {}", b.residue());
    Ok(())
}
