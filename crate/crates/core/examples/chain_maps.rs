//! Weighted boundaries and the theta maps between weightings.

use weighted_homology::chain::{check_chain_complex, check_naturality, dump_boundary, ChainMapPair};
use weighted_homology::complex::Weighting;
use weighted_homology::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = fixtures::kite();
    print!("{}", dump_boundary(&x, 2));
    println!("d o d = 0: {}", check_chain_complex(&x));

    let zero = Weighting::constant(&x, 0);
    println!("theta natural from zero weights: {}", check_naturality(&x, &zero, &x.weighting())?);
    let pair = ChainMapPair::new(&x, &zero, &x.weighting())?;
    for (n, m) in pair.maps.iter().enumerate() {
        let diag: Vec<String> = (0..m.nrows()).map(|i| m.entry(i, i).to_string()).collect();
        println!("theta_{n} = diag({})", diag.join(", "));
    }
    Ok(())
}
