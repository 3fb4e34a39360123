//! End-to-end acceptance gate: ten independent checks, each printing one
//! PASS/FAIL line.  Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; any FAIL also fails the test.

use num_traits::Zero;

use wreath_hurwitz::cutjoin::{cj_rule, dft_identities, verify_diagram, GenFunction};
use wreath_hurwitz::cyclo::{factorial, rat_int, CycloNumber, Rational};
use wreath_hurwitz::elsv::{reduction_check, transposition_census};
use wreath_hurwitz::enumeration::{
    hurwitz_classdp_table, multiplicity, multiplicity_left, Profile,
};
use wreath_hurwitz::kp::{kp_residuals, restrict_to_family, TimeConvention, TsKey};
use wreath_hurwitz::partitions::{ColoredBasis, ColoredPartition, Partition};
use wreath_hurwitz::polyring::{BasisTag, GradedPoly, LinearOperator};
use wreath_hurwitz::schur::{closed_form, verify_eigenvector};
use wreath_hurwitz::wreath::{
    beta_type, centralizer_check, class_size, embedding_check, enumerate_group,
};

const BUDGET: u64 = 100_000_000;

fn report(idx: u32, name: &str, pass: bool) {
    println!("ACCEPTANCE {idx} {name}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance check {idx} ({name}) failed");
}

/// Grid of profiles with each count at most `cap` and total at most `total`.
fn profiles(m: u32, cap: u32, total: u32) -> Vec<Profile> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=cap).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter()
        .filter(|p| p.iter().sum::<u32>() <= total)
        .map(Profile)
        .collect()
}

#[test]
fn initial_condition() {
    let mut pass = true;
    for m in 1..=3u32 {
        for n in 1..=4u32 {
            let table = hurwitz_classdp_table(m, n as usize, &Profile(vec![0; m as usize]));
            let seed = ColoredPartition::ones(m, n);
            let mut m_pow = rat_int(1);
            for _ in 0..n {
                m_pow = m_pow * rat_int(i64::from(m));
            }
            for cp in ColoredBasis::new(m, n).iter() {
                let expected = if *cp == seed {
                    (m_pow.clone() * factorial(n)).recip()
                } else {
                    Rational::zero()
                };
                pass &= table.get(&Profile(vec![0; m as usize]), cp) == Some(&expected);
            }
        }
    }
    report(1, "zero-profile values are 1/(m^n n!) on the identity class", pass);
}

#[test]
fn three_engines_agree() {
    let mut pass = true;
    for m in 1..=3u32 {
        let orders = vec![3u32; m as usize];
        let evolved = GenFunction::evolve(m, 3, &orders);
        let closed = closed_form(m, 3, &orders).unwrap();
        for n in 1..=3u32 {
            for profile in profiles(m, 3, 3) {
                let dp = hurwitz_classdp_table(m, n as usize, &profile);
                for cp in ColoredBasis::new(m, n).iter() {
                    let a = dp.get(&profile, cp).cloned().unwrap();
                    let b = evolved.hurwitz(&profile, cp).unwrap();
                    let c = closed.hurwitz(&profile, cp).unwrap();
                    pass &= a == b && b == c;
                }
            }
        }
    }
    report(2, "class DP, evolution, and closed form give identical rationals", pass);
}

#[test]
fn classical_anchor() {
    let mut pass = true;
    let gf = GenFunction::evolve(1, 5, &[4]);
    for n in 1..=5u32 {
        let n_fact = factorial(n);
        for reflections in 0..=4u32 {
            let census = transposition_census(n as usize, reflections, BUDGET).unwrap();
            let profile = Profile(vec![reflections]);
            let dp = hurwitz_classdp_table(1, n as usize, &profile);
            for cp in ColoredBasis::new(1, n).iter() {
                let count = census.get(cp.component(0)).copied().unwrap_or(0);
                let oracle = rat_int(count as i64) / n_fact.clone();
                pass &= dp.get(&profile, cp) == Some(&oracle);
                pass &= gf.hurwitz(&profile, cp) == Some(oracle.clone());
            }
        }
    }
    report(3, "m=1 reproduces the S_n transposition oracle", pass);
}

#[test]
fn embedding_and_centralizer() {
    let mut pass = true;
    for m in 1..=8u32 {
        for n in 1..=8usize {
            if m as usize * n > 8 {
                continue;
            }
            pass &= centralizer_check(m, n, BUDGET).unwrap();
        }
    }
    for m in 1..=3u32 {
        for n in 1..=3usize {
            pass &= embedding_check(m, n, BUDGET).unwrap();
        }
    }
    report(4, "embedded image equals the centralizer of tau, order m^n n!", pass);
}

#[test]
fn conjugacy_classification() {
    let mut pass = true;
    for m in 1..=3u32 {
        for n in 1..=3usize {
            let group = enumerate_group(m, n, BUDGET).unwrap();
            let mut counts = std::collections::BTreeMap::new();
            for x in &group {
                // colored type is computable through the embedding alone
                pass &= beta_type(&x.embed(), m, n).unwrap() == x.colored_type();
                *counts.entry(x.colored_type()).or_insert(0u128) += 1;
                // and is invariant under conjugation
                for g in &group {
                    let conj = g.mul(x).mul(&g.inverse());
                    pass &= conj.colored_type() == x.colored_type();
                }
            }
            for cp in ColoredBasis::new(m, n as u32).iter() {
                pass &= counts.get(cp).copied().unwrap_or(0) == class_size(m, n, cp);
            }
        }
    }
    report(5, "colored types classify conjugacy, sizes match the formula", pass);
}

#[test]
fn multiplicity_formulas() {
    let mut pass = true;
    for m in 1..=3u32 {
        for n in 1..=3usize {
            let basis = ColoredBasis::new(m, n as u32);
            let group = enumerate_group(m, n, BUDGET).unwrap();
            for class in 0..m {
                let rules = cj_rule::<Rational>(m, class).matrix_on(&basis);
                for (j, lambda) in basis.iter().enumerate() {
                    for (i, mu) in basis.iter().enumerate() {
                        let stated = rules.get(i, j).clone();
                        for sigma in group.iter().filter(|x| &x.colored_type() == lambda) {
                            let scan = multiplicity(sigma, mu, class);
                            pass &= rat_int(scan as i64) == stated;
                            pass &= multiplicity_left(sigma, mu, class) == scan;
                        }
                    }
                }
            }
        }
    }
    report(6, "reflection scans match the cut, join, and shift multiplicities", pass);
}

#[test]
fn operator_identities_under_dft() {
    let mut pass = true;
    for m in 1..=4u32 {
        for n in 1..=5u32 {
            pass &= dft_identities(m, n).pass();
        }
    }
    // the matrices the identities are stated for are themselves certified
    for m in 1..=3u32 {
        for n in 1..=3usize {
            pass &= verify_diagram(m, n).pass();
        }
    }
    report(7, "fourier change splits CJ_0 and CJ_k into classical blocks", pass);
}

#[test]
fn eigenvector_theorem() {
    let mut pass = true;
    for m in 1..=3u32 {
        for size in 0..=4u32 {
            for cp in ColoredBasis::new(m, size).iter() {
                pass &= verify_eigenvector(m, cp).unwrap();
            }
        }
    }
    // m = 2: CJ_1 equals sum_i i p_i d/dq_i + i q_i d/dp_i
    let displayed = LinearOperator::<Rational>::from_rule(2, BasisTag::P, |mono| {
        let poly = GradedPoly::monomial(2, BasisTag::P, mono.cp.clone(), rat_int(1));
        let mut out = GradedPoly::zero(2, BasisTag::P);
        for (k, alpha, _) in mono.cp.part_counts() {
            let swapped = poly.partial(k, alpha).mul_var(k, 1 - alpha);
            out = out.add(&swapped.scale(&rat_int(i64::from(k))));
        }
        out
    });
    for n in 1..=4u32 {
        let basis = ColoredBasis::new(2, n);
        pass &= displayed.matrix_on(&basis) == cj_rule::<Rational>(2, 1).matrix_on(&basis);
    }
    report(8, "colored Schur functions are joint eigenvectors with stated eigenvalues", pass);
}

#[test]
fn kp_equations() {
    let mut pass = true;
    for m in 1..=2u32 {
        let gf = GenFunction::evolve(m, 8, &vec![3; m as usize]);
        for family in 0..m {
            let f = restrict_to_family(&gf, family, TimeConvention::Identity);
            let (r1, r2) = kp_residuals(&f);
            pass &= r1.is_zero() && r2.is_zero();
        }
        // negative control: a bumped coefficient must leave a residual
        let mut f = restrict_to_family(&gf, 0, TimeConvention::Identity);
        f.add_term(
            TsKey { beta: vec![0; m as usize], times: Partition::new(vec![1, 1, 1, 1]) },
            CycloNumber::from_int(1),
        );
        let (r1, _) = kp_residuals(&f);
        pass &= !r1.is_zero();
    }
    report(9, "family restrictions satisfy the first two KP equations", pass);
}

#[test]
fn classical_reduction() {
    let mut pass = true;
    pass &= reduction_check(&GenFunction::evolve(1, 4, &[3]), BUDGET).unwrap();
    pass &= reduction_check(&GenFunction::evolve(2, 3, &[3, 2]), BUDGET).unwrap();
    report(10, "restricted logarithms reassemble from classical Hurwitz numbers", pass);
}
