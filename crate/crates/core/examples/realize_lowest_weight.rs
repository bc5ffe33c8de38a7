// Realize unitary lowest weight modules as cohomological inductions and
// read their invariants.

use upq_packets::cohind::{
    holomorphic_lowest_ktype, lowest_weight_invariants, realization_kind, realize_lowest_weight,
};
use upq_packets::weights::KWeight;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q, lam) in [(1, 1, vec![0, 0]), (1, 2, vec![1, 0, -1]), (2, 2, vec![0, 0, -2, -3])] {
        let w = KWeight::new(p, q, lam)?;
        let desc = realize_lowest_weight(&w)?;
        println!("λ = {w} ({:?})", realization_kind(&w));
        println!("  d = {:?}, values = {:?}", desc.d().blocks(), desc.values());
        println!("  lowest K-type of the induction: {}", holomorphic_lowest_ktype(&desc)?);
        let (ann, as_tab) = lowest_weight_invariants(&w)?;
        println!("  Ann:\n{ann}\n  AS:\n{as_tab}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("realize_lowest_weight example failed");
}
