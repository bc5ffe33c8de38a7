// Statistics of lowest K-types and the unitarity classification.

use upq_packets::weights::{
    dominant_weights, inf_char_of_lowest_weight, unitarity_class, weight_stats, GroupSignature,
    KWeight,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = KWeight::new(1, 2, vec![1, 0, -1])?;
    let s = weight_stats(&w);
    println!("λ = {w}: p' = {}, q' = {}", s.p_prime, s.q_prime);
    println!("  P = {}, Q = {}, I = {}", s.p_set, s.q_set, s.i_seg);
    println!("  infinitesimal character {}", inf_char_of_lowest_weight(&w));
    println!("  {:?}", unitarity_class(&w));

    let sig = GroupSignature::new(2, 1)?;
    let all = dominant_weights(sig, 1);
    let unitary = all.iter().filter(|w| unitarity_class(w).is_unitarizable()).count();
    println!("U(2,1): {unitary} of {} dominant weights in [-1,1] are unitarizable", all.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lowest_weights example failed");
}
