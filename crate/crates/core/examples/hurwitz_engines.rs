//! One Hurwitz table computed four ways: brute-force enumeration over
//! reflection sequences, the class-algebra dynamic program, cut-and-join
//! evolution, and the Schur closed form.  The numbers must match exactly.

use wreath_hurwitz::cutjoin::GenFunction;
use wreath_hurwitz::enumeration::{
    hurwitz_bruteforce_table, hurwitz_classdp_table, Profile,
};
use wreath_hurwitz::partitions::ColoredBasis;
use wreath_hurwitz::schur::closed_form;

fn main() {
    let (m, n) = (2u32, 3u32);
    // two swap factors and one diagonal factor of twist 1
    let profile = Profile(vec![2, 1]);

    let brute = hurwitz_bruteforce_table(m, n as usize, &profile, 10_000_000).unwrap();
    let classdp = hurwitz_classdp_table(m, n as usize, &profile);
    let mut evolved = GenFunction::evolve(m, n, &profile.0).table(n);
    let mut closed = closed_form(m, n, &profile.0).unwrap().table(n);
    evolved.rows.retain(|r| r.profile == profile);
    closed.rows.retain(|r| r.profile == profile);

    println!("h(profile {profile}) for G({m},1,{n}):");
    for cp in ColoredBasis::new(m, n).iter() {
        let v = brute.get(&profile, cp).unwrap();
        println!("  monodromy {cp:<8} {v}");
    }

    for other in [&classdp, &evolved, &closed] {
        let diff = brute.diff(other);
        assert!(diff.is_empty(), "{:?} disagrees: {diff:?}", other.engine);
    }
    println!("enumeration, classdp, cutjoin, schur all agree");
}
