//! Evolving the generating function H = sum_profile h * beta^profile * p
//! by the cut-and-join flows, then reading individual Hurwitz numbers off
//! its slices.

use wreath_hurwitz::cutjoin::GenFunction;
use wreath_hurwitz::enumeration::Profile;

fn main() {
    let gf = GenFunction::evolve(2, 3, &[3, 2]);

    println!("slices of H for m=2, degree <= 3, up to 3 swaps and 2 twists:");
    for (beta, slice) in gf.slices() {
        println!("  beta {beta:?}: {slice}");
    }

    // the seed slice: only the identity profile, h = 1/(m^n n!)
    let zero = Profile(vec![0, 0]);
    for n in 0..=3u32 {
        let ones: wreath_hurwitz::partitions::ColoredPartition =
            wreath_hurwitz::partitions::ColoredPartition::ones(2, n);
        println!("  h({zero}; {ones}) = {}", gf.hurwitz(&zero, &ones).unwrap());
    }

    // each slice satisfies n_k * slice = CJ_k(previous slice) along every axis
    assert!(gf.pde_check());
    println!("all differential recurrences hold");
}
