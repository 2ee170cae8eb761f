//! Seeded engine-versus-oracle run over random complexes.

use weighted_homology::oracle::{differential_run_with, RunOptions};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let (reports, summary) = differential_run_with(seed, 50, &RunOptions::default());
    for r in reports.iter().take(5) {
        print!("{}", r.to_text());
    }
    println!("{}", serde_json::to_string_pretty(&summary).unwrap());

    let faulty = RunOptions { fault: Some(0), ..RunOptions::default() };
    let (reports, _) = differential_run_with(seed, 1, &faulty);
    print!("with a perturbed weight: {}", reports[0].to_text());
}
