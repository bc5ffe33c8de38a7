// Enumerate a packet: every θ-stable datum, its sign character, and the
// invariants of the induced module.

use upq_packets::packets::{d_zero, inf_char, packet, AParameter, Summand};
use upq_packets::weights::GroupSignature;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let psi = AParameter::new(
        GroupSignature::new(1, 2)?,
        vec![Summand { t: 1, a: 2 }, Summand { t: -2, a: 1 }],
    )?;
    println!("ψ = {psi}, χ_ψ = {}", inf_char(&psi));
    println!("d_0 = {:?}", d_zero(&psi).d0.blocks());
    for m in packet(&psi)? {
        println!("d = {:?}, values = {:?}, ε = {:?}", m.d.blocks(), m.descriptor.values(), m.epsilon);
        match &m.invariants {
            Some(inv) => println!("Ann:\n{}\nAS:\n{}\n", inv.ann, inv.as_tab),
            None => println!("zero\n"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("packet_members example failed");
}
