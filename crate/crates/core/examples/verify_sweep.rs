// Check the closed forms against the tableau oracle over a small window,
// and the two-block nonvanishing criterion.

use upq_packets::halfint::HalfInt;
use upq_packets::oracle::{sweep_verify, two_block_sweep, SweepConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SweepConfig::new(3, 2, HalfInt::from_int(2))?;
    let report = sweep_verify(&cfg);
    println!(
        "N <= {}: {} instances, {} mismatches, {} property failures",
        cfg.max_n,
        report.instances_checked,
        report.mismatches.len(),
        report.property_failures.len()
    );

    let two = two_block_sweep(4, 2)?;
    println!("two-block: {} cases, {} failures", two.cases, two.failures.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify_sweep example failed");
}
