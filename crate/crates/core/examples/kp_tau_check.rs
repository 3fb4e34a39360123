//! Each family restriction of log H solves the first two KP equations
//!
//!   F_22 = -1/2 F_11^2 + F_31 - 1/12 F_1111
//!   F_32 = -F_11 F_21 + F_41 - 1/6 F_2111
//!
//! in the restricted variables themselves.  A deliberately bumped
//! coefficient breaks them, so the residuals are a real signal.

use wreath_hurwitz::cutjoin::GenFunction;
use wreath_hurwitz::cyclo::CycloNumber;
use wreath_hurwitz::kp::{kp_residuals, restrict_to_family, TimeConvention, TsKey};
use wreath_hurwitz::partitions::Partition;

fn main() {
    let gf = GenFunction::evolve(1, 8, &[6]);
    let f = restrict_to_family(&gf, 0, TimeConvention::Identity);
    let (r1, r2) = kp_residuals(&f);
    println!(
        "m=1: residual1 vanishes to weight {} ({}), residual2 to weight {} ({})",
        r1.weight_cap(),
        if r1.is_zero() { "zero" } else { "NONZERO" },
        r2.weight_cap(),
        if r2.is_zero() { "zero" } else { "NONZERO" },
    );
    assert!(r1.is_zero() && r2.is_zero());

    let gf = GenFunction::evolve(2, 6, &[6, 2]);
    for family in 0..2 {
        let f = restrict_to_family(&gf, family, TimeConvention::Identity);
        let (r1, r2) = kp_residuals(&f);
        assert!(r1.is_zero() && r2.is_zero());
        println!("m=2 family {family}: both residuals vanish");
    }

    // negative control: not every series is a solution
    let mut f = restrict_to_family(&gf, 0, TimeConvention::Identity);
    f.add_term(
        TsKey { beta: vec![0, 0], times: Partition::new(vec![1, 1, 1, 1]) },
        CycloNumber::from_int(1),
    );
    let (r1, _) = kp_residuals(&f);
    println!("perturbed: residual1 has {} nonzero terms", r1.terms().count());
    assert!(!r1.is_zero());
}
