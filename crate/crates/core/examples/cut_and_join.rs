//! The cut-and-join operators in action.  CJ_0 cuts one part into two and
//! joins two parts into one; CJ_k shifts a part's color by k.  On the class
//! basis of degree n these rules reproduce, entry for entry, the matrices
//! of multiplication by the reflection-class sums in the centre of the
//! group algebra.

use wreath_hurwitz::cutjoin::{cj_rule, verify_diagram};
use wreath_hurwitz::cyclo::Rational;
use wreath_hurwitz::polyring::{BasisTag, GradedPoly};

fn main() {
    let m = 2u32;
    let cj0 = cj_rule::<Rational>(m, 0);
    let cj1 = cj_rule::<Rational>(m, 1);

    let p = GradedPoly::<Rational>::var(m, BasisTag::P, 3, 0);
    println!("CJ_0 p0_3 = {}", cj0.apply(&p));
    println!("CJ_1 p0_3 = {}", cj1.apply(&p));

    let sq = p.mul(&GradedPoly::var(m, BasisTag::P, 2, 1));
    println!("CJ_0 (p0_3 p1_2) = {}", cj0.apply(&sq));

    for n in 1..=4usize {
        let report = verify_diagram(m, n);
        assert!(report.pass());
        println!(
            "degree {n}: operator matrices equal the class-multiplication matrices \
             (fitted constants {:?})",
            report
                .constants
                .iter()
                .map(|c| c.clone().unwrap().to_string())
                .collect::<Vec<_>>()
        );
    }
}
