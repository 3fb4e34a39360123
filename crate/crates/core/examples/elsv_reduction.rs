//! From wreath products back to the symmetric group: the coefficients of
//! each family restriction of log H factor through connected transposition
//! Hurwitz numbers, an Euler weight |mu|^(shift count), and a root of
//! unity.  Nothing about the colors survives except those two factors.

use wreath_hurwitz::cutjoin::GenFunction;
use wreath_hurwitz::elsv::{
    connected_hurwitz_table, family_decoupling_check, reduction_rows, transposition_census,
};

fn main() {
    // raw census in S_4: products of 4 transpositions by cycle type
    let tally = transposition_census(4, 4, 1_000_000).unwrap();
    println!("products of 4 transpositions in S_4:");
    for (lambda, count) in &tally {
        println!("  type {lambda:<8} {count}");
    }

    let connected = connected_hurwitz_table(4, 4, 1_000_000).unwrap();
    println!("connected counts (exponential formula):");
    println!("  h(4, (2,2)) = {}", connected[&(4, "2,2".parse().unwrap())]);
    println!("  h(4, (3,1)) = {}", connected[&(4, "3,1".parse().unwrap())]);

    let gf = GenFunction::evolve(2, 3, &[3, 1]);
    let rows = reduction_rows(&gf, 1_000_000).unwrap();
    let failures = rows.iter().filter(|r| !r.pass()).count();
    println!(
        "m=2: {} coefficients of the restricted logarithms checked, {failures} failures",
        rows.len()
    );
    assert_eq!(failures, 0);
    assert!(family_decoupling_check(&gf));
    println!("log H never mixes families");
}
