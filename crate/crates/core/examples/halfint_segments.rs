// Half-integers, segments, and the ways of cutting a multiset into segments.

use upq_packets::halfint::{mset_algebra, partition_into_segments, HalfInt, HalfIntMultiset, Segment};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let half = HalfInt::from_twice;
    let a = Segment::from_bounds(half(-1), half(3));
    let b = Segment::from_bounds(half(1), half(5));
    println!("a = {a}, b = {b}, a ∩ b = {}", a.intersect(&b));
    println!("a has endpoint sum {} and {} members", a.endpoint_sum(), a.len());

    let x = a.to_multiset();
    let y = b.to_multiset();
    let alg = mset_algebra(&x, &y);
    println!("union {}, intersection {}", alg.union, alg.intersection);

    // {3/2, 1/2, 1/2, -1/2} has two segment partitions.
    let m = HalfIntMultiset::from_values([3, 1, 1, -1].map(half));
    for parts in partition_into_segments(&m) {
        let shown: Vec<String> = parts.iter().map(|s| s.to_string()).collect();
        println!("{m} = {}", shown.join(" ⊔ "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("halfint_segments example failed");
}
