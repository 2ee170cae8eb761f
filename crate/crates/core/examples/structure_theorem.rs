//! Kappa/mu split, distinguished cycles, torsion pairing and quotients on
//! the four-vertex example.

use weighted_homology::complex::Weighting;
use weighted_homology::fixtures;
use weighted_homology::homology::{
    homology_direct, homology_structure, k_basis, kappa_mu_split, quotient_homology, render_invariants,
    render_pairing, weight_filtration_report,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = fixtures::kite();
    for n in 0..=2 {
        println!("{}", render_invariants(n, &homology_direct(&x, n)?));
    }

    let split = kappa_mu_split(&x, 1, None)?;
    for b in k_basis(&x, &split) {
        let terms: Vec<String> = b
            .coefficients
            .iter()
            .map(|(j, c)| format!("({c})*{}", x.label(&x.simplices(1)[*j])))
            .collect();
        println!("beta({}) = {} + {}", x.label(&x.simplices(1)[b.kappa]), x.label(&x.simplices(1)[b.kappa]), terms.join(" + "));
    }

    let (_, pairing) = homology_structure(&x, 1)?;
    print!("{}", render_pairing(&x, &pairing));

    let sk = x.skeleton(1);
    let q = quotient_homology(&sk, &Weighting::constant(&sk, 0), 1)?;
    println!("1-skeleton quotient: {q}");

    for step in weight_filtration_report(&x)?.steps {
        println!("filtration r = {}: {:?}", step.r, step.invariants.iter().map(|i| i.to_string()).collect::<Vec<_>>());
    }
    Ok(())
}
