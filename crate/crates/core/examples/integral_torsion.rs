//! Whether integral homology injects into weighted homology, with a witness
//! when it does not.

use weighted_homology::fixtures;
use weighted_homology::homology::{theta_injectivity, ThetaVerdict};
use weighted_homology::oracle::integer_homology;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, x) in [("projective plane", fixtures::rp2()), ("torus", fixtures::torus()), ("sphere", fixtures::sphere())] {
        for n in 0..=x.dim().unwrap() {
            let z = integer_homology(&x, n);
            let verdict = match theta_injectivity(&x, n)? {
                ThetaVerdict::Injective => "injective".to_string(),
                ThetaVerdict::NotInjective { order, cycle, .. } => {
                    let support = cycle.iter().filter(|c| c.sign() != num_bigint::Sign::NoSign).count();
                    format!("not injective: class of order {order} on {support} simplices dies")
                }
            };
            println!("{name:<17} H_{n}(Z) rank {} torsion {:?}: {verdict}", z.rank, z.torsion);
        }
    }
    Ok(())
}
