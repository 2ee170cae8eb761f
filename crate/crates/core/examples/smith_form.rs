//! Valuation-pivoted column reduction, Smith form and membership over R.

use weighted_homology::chain::boundary_matrix;
use weighted_homology::fixtures;
use weighted_homology::linalg::{reduce_columns, smith_normal_form, solve_membership};
use weighted_homology::ring::LocalElement;

fn main() {
    let x = fixtures::kite();
    let d2 = boundary_matrix(&x, 2);
    let red = reduce_columns(&d2);
    for p in &red.pivots {
        println!("pivot row {} col {} valuation {}", p.row, p.col, p.valuation);
    }
    println!("Smith exponents of d2: {:?}", smith_normal_form(&d2).exponents);

    // pi times the weighted boundary of ABC
    let label = |s: &str| x.index_of(&x.find_label(s).unwrap()).unwrap();
    let field = x.field();
    let mut target = vec![LocalElement::zero(field); x.count(1)];
    target[label("AB")] = LocalElement::parse("pi^2", field).unwrap();
    target[label("BC")] = LocalElement::parse("pi^3", field).unwrap();
    target[label("AC")] = LocalElement::parse("-pi^4", field).unwrap();
    match solve_membership(&d2, &target) {
        Ok(sol) => {
            for (s, c) in x.simplices(2).iter().zip(&sol) {
                println!("preimage coefficient on {}: {c}", x.label(s));
            }
        }
        Err(e) => println!("not a boundary: {e}"),
    }
}
