//! Loading, validating and closing a weighted complex document.

use weighted_homology::complex::{load_complex, WeightedComplex};
use weighted_homology::ring::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // only the top triangle is listed; faces inherit the largest coface weight
    let doc = r#"{"field": "Q", "auto_close": true, "names": ["A", "B", "C"],
                  "simplices": [{"v": [0, 1, 2], "w": 2}, {"v": [0], "w": 5}]}"#;
    let x = load_complex(doc)?;
    for (s, w) in x.iter() {
        println!("{:<4} w = {w}", x.label(s));
    }
    println!("{}", x.to_json());

    // a face lighter than its coface is rejected with the offending pair
    let bad = WeightedComplex::new(Field::Rational, [(vec![0], 1), (vec![1], 1), (vec![0, 1], 3)], false);
    if let Err(e) = bad {
        println!("rejected: {e}");
    }
    Ok(())
}
