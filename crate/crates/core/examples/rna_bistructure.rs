//! Loop complex of two RNA secondary structures and its homology.

use weighted_homology::bistructure::{crossing_components, loop_complex, verify_lean_homology, BiStructure};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = BiStructure::parse("((.)......).......", ".....(..........).")?;
    let nerve = loop_complex(&b);
    for l in &nerve.loops {
        println!("{:<8} {:?}", l.name(), l.vertices);
    }
    let x = &nerve.complex;
    for (s, w) in x.iter().filter(|(s, _)| s.dim() > 0) {
        println!("{} w = {w}", x.label(s));
    }
    println!("crossing components: {}", crossing_components(&b).count);

    let lean = BiStructure::parse("(..).", ".(..)")?;
    let report = verify_lean_homology(&lean)?;
    for d in &report.degrees {
        println!("H_{} = {} predicted {:?}", d.n, d.computed, d.predicted.as_ref().map(|p| p.to_string()));
    }
    Ok(())
}
