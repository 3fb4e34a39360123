//! Schur polynomials and the joint eigenbasis of the cut-and-join family.
//!
//! For an m-tuple of partitions, the product of Schur polynomials evaluated
//! in the Fourier-transformed power sums
//!
//! ```text
//! s_(lambda_0,...,lambda_{m-1}) = prod_a s_{lambda_a}( P{a} ),
//! P{a}_k = 1/m sum_b xi^(-a b) p{b}_k
//! ```
//!
//! is a joint eigenvector of CJ_0, ..., CJ_{m-1}.  The eigenvalues come in
//! closed form, so summing the eigenbasis expansion of exp(p{0}_1) against
//! exponentiated eigenvalues gives every Hurwitz number without applying a
//! single operator; that route is [`closed_form`], the third engine.
//!
//! Single-partition Schur polynomials are computed once by Jacobi-Trudi,
//! with the complete homogeneous basis unrolled through Newton's identity.

use std::collections::BTreeMap;

use crate::cutjoin::{cj_rule, GenFunction};
use crate::cyclo::{factorial, rat, rat_int, CycloNumber, Rational, Scalar};
use crate::enumeration::Engine;
use crate::error::{Error, Result};
use crate::partitions::{gen_colored_partitions, ColoredPartition, Partition};
use crate::polyring::{BasisTag, GradedPoly, LinearOperator};

/// Largest partition size the Schur expansion will attempt; the Jacobi-Trudi
/// determinant is exact but its power-sum expansion grows like p(n)^2.
pub const SCHUR_SIZE_CAP: u32 = 10;

/// h_0, ..., h_max as power-sum polynomials (one variable family), via
/// k h_k = sum_{i<=k} p_i h_{k-i}.
fn complete_homogeneous(max: u32) -> Vec<GradedPoly<Rational>> {
    let mut h = vec![GradedPoly::constant(1, BasisTag::P, rat_int(1))];
    for k in 1..=max {
        let mut acc = GradedPoly::zero(1, BasisTag::P);
        for i in 1..=k {
            acc = acc.add(&h[(k - i) as usize].mul_var(i, 0));
        }
        h.push(acc.scale(&rat(1, i64::from(k))));
    }
    h
}

/// The Schur polynomial s_lambda written in power sums p_1, p_2, ...
pub fn schur_in_powersums(lambda: &Partition) -> Result<GradedPoly<Rational>> {
    let n = lambda.size();
    if n > SCHUR_SIZE_CAP {
        return Err(Error::BudgetExceeded {
            task: "schur power-sum expansion",
            needed: u128::from(n),
            cap: u128::from(SCHUR_SIZE_CAP),
        });
    }
    let ell = lambda.len();
    if ell == 0 {
        return Ok(GradedPoly::constant(1, BasisTag::P, rat_int(1)));
    }
    let h = complete_homogeneous(lambda.parts()[0] + ell as u32);
    let entry = |i: usize, j: usize| -> Option<&GradedPoly<Rational>> {
        let idx = i64::from(lambda.parts()[i]) - i as i64 + j as i64;
        if idx < 0 {
            None
        } else {
            Some(&h[idx as usize])
        }
    };

    // det(h_{lambda_i - i + j}) by subset dynamic programming: minors[S] is
    // the determinant on row set S and the first |S| columns.
    let mut minors: Vec<Option<GradedPoly<Rational>>> = vec![None; 1 << ell];
    minors[0] = Some(GradedPoly::constant(1, BasisTag::P, rat_int(1)));
    for mask in 1usize..(1 << ell) {
        let col = mask.count_ones() as usize - 1;
        let mut acc = GradedPoly::zero(1, BasisTag::P);
        let mut pos = 0;
        for row in 0..ell {
            if mask & (1 << row) == 0 {
                continue;
            }
            if let Some(e) = entry(row, col) {
                let minor = minors[mask ^ (1 << row)].as_ref().unwrap();
                let term = e.mul(minor);
                acc = if (pos + col) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            pos += 1;
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[(1 << ell) - 1].take().unwrap())
}

/// Coefficient of p_1^n in s_lambda, the dimension of the S_n irreducible
/// divided by n!.
pub fn dimension_coeff(lambda: &Partition) -> Result<Rational> {
    let s = schur_in_powersums(lambda)?;
    Ok(s.coeff(&ColoredPartition::ones(1, lambda.size())))
}

fn colored_schur_with_sign(
    m: u32,
    cp: &ColoredPartition,
    sign: i64,
) -> Result<GradedPoly<CycloNumber>> {
    assert_eq!(cp.m(), m);
    let inv_m = rat(1, i64::from(m));
    let mut out = GradedPoly::constant(m, BasisTag::P, CycloNumber::from_int(1));
    for family in 0..m {
        let lambda = cp.component(family);
        if lambda.is_empty() {
            continue;
        }
        let single = schur_in_powersums(lambda)?;
        let mut substituted = GradedPoly::zero(m, BasisTag::P);
        for (mu, c) in single.terms() {
            let mut acc =
                GradedPoly::constant(m, BasisTag::P, CycloNumber::from_rational(c.clone()));
            for &k in mu.component(0).parts() {
                let mut linear = GradedPoly::zero(m, BasisTag::P);
                for b in 0..m {
                    let w = CycloNumber::xi_pow(m, sign * i64::from(family) * i64::from(b))
                        .scaled(&inv_m);
                    linear = linear.add(&GradedPoly::var(m, BasisTag::P, k, b).scale(&w));
                }
                acc = acc.mul(&linear);
            }
            substituted = substituted.add(&acc);
        }
        out = out.mul(&substituted);
    }
    Ok(out)
}

/// The joint eigenvector s_lambda-bar in the class power sums.
pub fn colored_schur(m: u32, cp: &ColoredPartition) -> Result<GradedPoly<CycloNumber>> {
    colored_schur_with_sign(m, cp, -1)
}

/// The product of principal specializations, one classical factor per
/// component; this is the coefficient of s_lambda-bar in the eigenbasis
/// expansion of exp(p{0}_1), because sum_a P{a}_1 telescopes to p{0}_1.
pub fn principal_value(cp: &ColoredPartition) -> Result<Rational> {
    let mut out = rat_int(1);
    for family in 0..cp.m() {
        out = out * dimension_coeff(cp.component(family))?;
    }
    Ok(out)
}

/// Eigenvalues of the cut-and-join family on s_lambda-bar.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenData {
    /// CJ_0 eigenvalue: m times the total box content over all components.
    pub c0: Rational,
    /// CJ_k eigenvalue for k = 1..m-1: sum_a xi^(k a) |lambda_a|.
    pub shifts: Vec<CycloNumber>,
}

impl EigenData {
    /// All m eigenvalues as one list, CJ_0 first.
    pub fn as_cyclo(&self) -> Vec<CycloNumber> {
        let mut out = vec![CycloNumber::from_rational(self.c0.clone())];
        out.extend(self.shifts.iter().cloned());
        out
    }
}

pub fn eigenvalues(m: u32, cp: &ColoredPartition) -> EigenData {
    assert_eq!(cp.m(), m);
    let mut content = rat_int(0);
    for family in 0..m {
        for (i, &part) in cp.component(family).parts().iter().enumerate() {
            let row = i as i64;
            content = content + rat(i64::from(part) * (i64::from(part) - 2 * row - 1), 2);
        }
    }
    let c0 = content * rat_int(i64::from(m));
    let shifts = (1..m)
        .map(|k| {
            let terms: Vec<(i64, Rational)> = (0..m)
                .map(|a| {
                    (
                        i64::from(k) * i64::from(a),
                        rat_int(i64::from(cp.component(a).size())),
                    )
                })
                .collect();
            CycloNumber::root_sum(m, &terms)
        })
        .collect();
    EigenData { c0, shifts }
}

/// Applies every operator in the family to s_lambda-bar and compares with
/// the predicted eigenvalue multiple.
pub fn verify_eigenvector(m: u32, cp: &ColoredPartition) -> Result<bool> {
    let s = colored_schur(m, cp)?;
    let eig = eigenvalues(m, cp);
    for (k, value) in eig.as_cyclo().into_iter().enumerate() {
        let op: LinearOperator<CycloNumber> = cj_rule(m, k as u32);
        if op.apply(&s) != s.scale(&value) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generating function assembled from the eigenbasis: each slice is
///
/// ```text
/// sum over lambda-bar of  prod_k (c_k^{n_k} / n_k!) *
///     s_lambda-bar(1,0,...) * s_lambda-bar(p)
/// ```
///
/// with every cyclotomic coefficient collapsing back to a rational.
pub fn closed_form(m: u32, max_degree: u32, orders: &[u32]) -> Result<GenFunction> {
    assert_eq!(orders.len(), m as usize, "one order bound per reflection class");
    struct Summand {
        vector: GradedPoly<CycloNumber>,
        scale: Rational,
        eigen: Vec<CycloNumber>,
    }
    let mut summands = Vec::new();
    for n in 0..=max_degree {
        for cp in gen_colored_partitions(m, n) {
            let vector = colored_schur(m, &cp)?;
            let scale = principal_value(&cp)?;
            let eigen = eigenvalues(m, &cp).as_cyclo();
            summands.push(Summand { vector, scale, eigen });
        }
    }

    let mut keys: Vec<Vec<u32>> = vec![vec![]];
    for &cap in orders {
        keys = keys
            .into_iter()
            .flat_map(|k| {
                (0..=cap).map(move |v| {
                    let mut k2 = k.clone();
                    k2.push(v);
                    k2
                })
            })
            .collect();
    }

    let mut slices = BTreeMap::new();
    for key in keys {
        let mut slice = GradedPoly::zero(m, BasisTag::P);
        for s in &summands {
            let mut weight = CycloNumber::from_rational(s.scale.clone());
            for (k, &count) in key.iter().enumerate() {
                weight = weight * s.eigen[k].pow(count).scaled(&(rat_int(1) / factorial(count)));
            }
            if weight.is_zero_value() {
                continue;
            }
            slice = slice.add(&s.vector.scale(&weight));
        }
        let demoted = slice.map_coeffs(BasisTag::P, |c| {
            c.try_rational().expect("eigenbasis sums have rational coefficients")
        });
        slices.insert(key, demoted);
    }
    Ok(GenFunction::assemble(m, max_degree, orders, Engine::Schur, slices))
}
