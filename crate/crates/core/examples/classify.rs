// Both directions of the classification: the lowest K-type a packet can
// contain, and the packets containing a given lowest weight module.

use upq_packets::packets::{
    contains_lowest_weight, lowest_weight_of_packet, packet_case, packets_containing, AParameter,
    Summand,
};
use upq_packets::weights::{GroupSignature, KWeight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let u11 = GroupSignature::new(1, 1)?;
    let params = [
        vec![Summand { t: 0, a: 2 }],
        vec![Summand { t: 1, a: 1 }, Summand { t: -1, a: 1 }],
        vec![Summand { t: 3, a: 1 }, Summand { t: 1, a: 1 }],
    ];
    for summands in params {
        let psi = AParameter::new(u11, summands)?;
        match lowest_weight_of_packet(&psi)? {
            Some(w) => println!("{psi}: lowest K-type {w} ({:?})", packet_case(&psi)),
            None => println!("{psi}: no unitary lowest weight module"),
        }
    }

    for lam in [vec![1, -1], vec![0, 0], vec![1, 0]] {
        let w = KWeight::new(1, 1, lam)?;
        let found: Vec<String> = packets_containing(&w)?.iter().map(|p| p.to_string()).collect();
        println!("π_λ, λ = {w}, lies in: {}", found.join("; "));
    }

    let w = KWeight::new(1, 2, vec![1, 0, -1])?;
    let psi = AParameter::new(
        GroupSignature::new(1, 2)?,
        vec![Summand { t: 1, a: 2 }, Summand { t: -2, a: 1 }],
    )?;
    println!("{psi} contains π_λ for λ = {w}: {}", contains_lowest_weight(&psi, &w)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classify example failed");
}
