// Build the initial tableau of a cohomological induction and normalize it.

use upq_packets::cohind::{range_class, InductionDescriptor, ThetaData};
use upq_packets::tableaux::{build_initial, overlap_and_sing, trapa_normalize, NormalizeOutcome};

fn show(blocks: Vec<(usize, usize)>, values: Vec<i64>) -> Result<(), Box<dyn std::error::Error>> {
    let desc = InductionDescriptor::new(ThetaData::new(blocks)?, values)?;
    let stack = build_initial(desc.d(), desc.segments())?;
    println!("d = {:?}, values = {:?}, {:?}", desc.d().blocks(), desc.values(), range_class(&desc));
    println!("initial:\n{}", stack.render_ascii());
    for i in 0..stack.num_blocks().saturating_sub(1) {
        println!("  pair {}: {:?}", i + 1, overlap_and_sing(&stack, i)?);
    }
    match trapa_normalize(&stack)? {
        NormalizeOutcome::Zero => println!("normalizes to zero\n"),
        NormalizeOutcome::NonZero { stack, ann, as_tab } => {
            println!("normalized:\n{}\nAnn:\n{ann}\nAS:\n{as_tab}\n", stack.render_ascii());
        }
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    show(vec![(1, 1), (0, 1)], vec![0, 0])?;
    show(vec![(1, 0), (1, 0)], vec![1, 2])?;
    show(vec![(2, 0), (1, 2), (0, 1)], vec![-1, 1, 3])?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("trapa_tableaux example failed");
}
