//! Products of Schur polynomials in Fourier-transformed power sums are
//! joint eigenvectors of all cut-and-join operators.  The eigenvalue under
//! CJ_0 is m times the total box content; under CJ_k it is the xi^(k a)
//! weighted sum of the component sizes.

use wreath_hurwitz::cutjoin::cj_rule;
use wreath_hurwitz::cyclo::CycloNumber;
use wreath_hurwitz::partitions::{ColoredBasis, ColoredPartition};
use wreath_hurwitz::schur::{colored_schur, eigenvalues, verify_eigenvector};

fn main() {
    let m = 3u32;
    let cp: ColoredPartition = "2|1|-".parse().unwrap();

    let s = colored_schur(m, &cp).unwrap();
    println!("s({cp}) = {s}");

    let ev = eigenvalues(m, &cp);
    println!("CJ_0 eigenvalue: {}", ev.c0);
    for (k, shift) in ev.shifts.iter().enumerate() {
        println!("CJ_{} eigenvalue: {}", k + 1, shift);
    }

    // check one of them directly
    let image = cj_rule::<CycloNumber>(m, 1).apply(&s);
    assert_eq!(image, s.scale(&ev.shifts[0]));

    for n in 0..=3u32 {
        for cp in ColoredBasis::new(m, n).iter() {
            assert!(verify_eigenvector(m, cp).unwrap());
        }
        println!("all degree-{n} colored Schur vectors verified");
    }
}
