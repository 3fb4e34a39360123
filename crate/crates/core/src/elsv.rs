//! Reduction of the colored theory to classical Hurwitz numbers.
//!
//! The diagonal part of the story lives in the symmetric group: this module
//! counts transposition factorizations in S_d directly, converts the
//! disconnected counts to connected ones through the exponential formula,
//! and then checks that the logarithm of the colored generating function,
//! restricted to one Fourier family, is assembled from exactly those
//! classical numbers:
//!
//! ```text
//! F_a[beta^(n_0,...,n_{m-1})  u_mu] =
//!     m^{n_0}/n_0! * h(n_0, mu) * |mu|^{n_1+...+n_{m-1}}
//!     * xi^(a sum_k k n_k) / prod_{k>=1} n_k!
//! ```
//!
//! where h(n_0, mu) is the connected count of n_0-transposition
//! factorizations of type mu, weighted by 1/|mu|!.  The color-shift classes
//! only contribute the scalar weight |mu|^... and a root of unity, so every
//! new Hurwitz number of diagonal profile is classical data in disguise.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cutjoin::{DFTChange, GenFunction};
use crate::cyclo::{factorial, rat, rat_int, CycloNumber, Rational, Scalar};
use crate::error::{Error, Result};
use crate::kp::{restrict_to_family, TimeConvention, TsKey, TimesSeries};
use crate::partitions::{ColoredPartition, Partition};
use crate::perm::Perm;
use crate::polyring::{promote, BasisTag, GradedPoly};

fn tuple_budget(d: usize, r: u32, budget: u64) -> Result<()> {
    let pairs = (d * d.saturating_sub(1) / 2) as u128;
    let mut total: u128 = 1;
    for _ in 0..r {
        total = total.saturating_mul(pairs);
        if total > u128::from(budget) {
            return Err(Error::BudgetExceeded {
                task: "transposition factorization scan",
                needed: total,
                cap: u128::from(budget),
            });
        }
    }
    Ok(())
}

/// Cycle types of products over all r-tuples of transpositions in S_d.
pub fn transposition_census(d: usize, r: u32, budget: u64) -> Result<BTreeMap<Partition, u64>> {
    tuple_budget(d, r, budget)?;
    let transpositions: Vec<Perm> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| Perm::transposition(d, i, j)))
        .collect();
    let mut tally = BTreeMap::new();
    fn walk(
        slots: u32,
        prefix: &Perm,
        transpositions: &[Perm],
        tally: &mut BTreeMap<Partition, u64>,
    ) {
        if slots == 0 {
            *tally.entry(prefix.cycle_type()).or_insert(0) += 1;
            return;
        }
        for t in transpositions {
            walk(slots - 1, &prefix.compose(t), transpositions, tally);
        }
    }
    walk(r, &Perm::identity(d), &transpositions, &mut tally);
    Ok(tally)
}

/// Same census restricted to transitive tuples: the union of the
/// transposition supports must connect all d sheets.
pub fn transitive_census(d: usize, r: u32, budget: u64) -> Result<BTreeMap<Partition, u64>> {
    tuple_budget(d, r, budget)?;
    let pairs: Vec<(usize, usize)> =
        (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let transpositions: Vec<Perm> =
        pairs.iter().map(|&(i, j)| Perm::transposition(d, i, j)).collect();
    let mut tally = BTreeMap::new();

    fn connected(d: usize, edges: &[(usize, usize)]) -> bool {
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &(i, j) in edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..d).all(|x| find(&mut parent, x) == root)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        slots: u32,
        prefix: &Perm,
        edges: &mut Vec<(usize, usize)>,
        d: usize,
        pairs: &[(usize, usize)],
        transpositions: &[Perm],
        tally: &mut BTreeMap<Partition, u64>,
    ) {
        if slots == 0 {
            if connected(d, edges) {
                *tally.entry(prefix.cycle_type()).or_insert(0) += 1;
            }
            return;
        }
        for (t, &pair) in transpositions.iter().zip(pairs) {
            edges.push(pair);
            walk(slots - 1, &prefix.compose(t), edges, d, pairs, transpositions, tally);
            edges.pop();
        }
    }
    walk(r, &Perm::identity(d), &mut Vec::new(), d, &pairs, &transpositions, &mut tally);
    Ok(tally)
}

/// Connected transposition Hurwitz numbers h(r, mu) = (transitive count)/d!
/// for all d <= max_d, r <= max_r, obtained from the plain census through
/// the exponential formula rather than a connectivity filter.
pub fn connected_hurwitz_table(
    max_d: u32,
    max_r: u32,
    budget: u64,
) -> Result<BTreeMap<(u32, Partition), Rational>> {
    let mut z = TimesSeries::zero(max_d, vec![max_r]);
    for d in 0..=max_d {
        let d_fact = factorial(d);
        for r in 0..=max_r {
            for (lambda, count) in transposition_census(d as usize, r, budget)? {
                let coeff = rat_int(count as i64) / (d_fact.clone() * factorial(r));
                z.add_term(
                    TsKey { beta: vec![r], times: lambda },
                    CycloNumber::from_rational(coeff),
                );
            }
        }
    }
    let f = z.log();
    let mut out = BTreeMap::new();
    for (key, c) in f.terms() {
        let value = c.try_rational().expect("classical series is rational") * factorial(key.beta[0]);
        out.insert((key.beta[0], key.times.clone()), value);
    }
    Ok(out)
}

/// The n_0 = 0 sector in Fourier coordinates: color-shift flows only
/// rescale the exponential seed by Euler weights,
///
/// ```text
/// H_(0,n_1,...) = sum_j prod_a (u{a}_1)^(j_a)/j_a! *
///                 prod_k (sum_a j_a xi^(k a))^(n_k) / n_k!
/// ```
pub fn euler_weight_check(gf: &GenFunction) -> bool {
    let m = gf.m();
    let dft = DFTChange::new(m);
    let max_degree = gf.max_degree();

    let mut loads: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..m {
        loads = loads
            .into_iter()
            .flat_map(|j| {
                (0..=max_degree).map(move |v| {
                    let mut j2 = j.clone();
                    j2.push(v);
                    j2
                })
            })
            .collect();
    }
    loads.retain(|j| j.iter().sum::<u32>() <= max_degree);

    for (key, slice) in gf.slices() {
        if key[0] != 0 {
            continue;
        }
        let lhs = dft.to_u(&promote::<CycloNumber>(slice));
        let mut rhs = GradedPoly::zero(m, BasisTag::U);
        for j in &loads {
            let mut cp = ColoredPartition::empty(m);
            let mut coeff = CycloNumber::from_int(1);
            for (a, &count) in j.iter().enumerate() {
                for _ in 0..count {
                    cp = cp.with_part_added(1, a as u32);
                }
                coeff = coeff.scaled(&(rat_int(1) / factorial(count)));
            }
            for (k, &n_k) in key.iter().enumerate().skip(1) {
                let euler: Vec<(i64, Rational)> = j
                    .iter()
                    .enumerate()
                    .map(|(a, &j_a)| (k as i64 * a as i64, rat_int(i64::from(j_a))))
                    .collect();
                let weight = CycloNumber::root_sum(m, &euler).pow(n_k);
                coeff = coeff * weight.scaled(&(rat_int(1) / factorial(n_k)));
            }
            rhs.add_term(cp, coeff);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// One coefficient comparison: the restricted logarithm against the
/// classical reassembly formula.
#[derive(Clone, PartialEq, Debug)]
pub struct ReductionRow {
    pub family: u32,
    pub beta: Vec<u32>,
    pub times: Partition,
    pub from_log: CycloNumber,
    pub from_classical: CycloNumber,
}

impl ReductionRow {
    pub fn pass(&self) -> bool {
        self.from_log == self.from_classical
    }
}

/// Compares every coefficient of every family restriction of log H with
/// the classical reassembly formula in the module header, including the
/// keys where both sides must vanish.
pub fn reduction_rows(gf: &GenFunction, budget: u64) -> Result<Vec<ReductionRow>> {
    let m = gf.m();
    let orders = gf.orders();
    let classical = connected_hurwitz_table(gf.max_degree(), orders[0], budget)?;

    let mut rows = Vec::new();
    for family in 0..m {
        let f = restrict_to_family(gf, family, TimeConvention::Identity);
        let mut keys: Vec<TsKey> = f.terms().map(|(k, _)| k.clone()).collect();
        for key in all_keys(gf) {
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
        keys.sort();
        for key in keys {
            let rhs = if key.times.is_empty() {
                CycloNumber::from_int(0)
            } else {
                let n0 = key.beta[0];
                let shifts_total: u32 = key.beta.iter().skip(1).sum();
                let twist: i64 = key
                    .beta
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, &n_k)| k as i64 * i64::from(n_k))
                    .sum();
                let h = classical
                    .get(&(n0, key.times.clone()))
                    .cloned()
                    .unwrap_or_else(Rational::zero);

                let mut scalar = h * factorial(n0).recip();
                for _ in 0..n0 {
                    scalar = scalar * rat_int(i64::from(m));
                }
                for _ in 0..shifts_total {
                    scalar = scalar * rat_int(i64::from(key.times.size()));
                }
                for &n_k in key.beta.iter().skip(1) {
                    scalar = scalar / factorial(n_k);
                }
                CycloNumber::xi_pow(m, i64::from(family) * twist).scaled(&scalar)
            };
            rows.push(ReductionRow {
                family,
                beta: key.beta.clone(),
                times: key.times.clone(),
                from_log: f.coeff(&key),
                from_classical: rhs,
            });
        }
    }
    Ok(rows)
}

/// True when all comparison rows agree.
pub fn reduction_check(gf: &GenFunction, budget: u64) -> Result<bool> {
    Ok(reduction_rows(gf, budget)?.iter().all(ReductionRow::pass))
}

fn all_keys(gf: &GenFunction) -> Vec<TsKey> {
    let mut out = Vec::new();
    for beta in gf.slices().keys() {
        for n in 0..=gf.max_degree() {
            for times in crate::partitions::gen_partitions(n) {
                out.push(TsKey { beta: beta.clone(), times });
            }
        }
    }
    out
}

/// log H in Fourier coordinates splits into one summand per family: no
/// monomial of the logarithm mixes u variables of different colors.
pub fn family_decoupling_check(gf: &GenFunction) -> bool {
    let m = gf.m();
    let max_degree = gf.max_degree();
    let dft = DFTChange::new(m);
    let zero_key = vec![0u32; m as usize];

    let truncate = |p: &GradedPoly<CycloNumber>| {
        let mut out = GradedPoly::zero(m, BasisTag::U);
        for (cp, c) in p.terms() {
            if cp.total() <= max_degree {
                out.add_term(cp.clone(), c.clone());
            }
        }
        out
    };
    let mul_maps = |a: &BTreeMap<Vec<u32>, GradedPoly<CycloNumber>>,
                    b: &BTreeMap<Vec<u32>, GradedPoly<CycloNumber>>| {
        let mut out: BTreeMap<Vec<u32>, GradedPoly<CycloNumber>> = BTreeMap::new();
        for (ka, pa) in a {
            for (kb, pb) in b {
                let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                if key.iter().zip(gf.orders()).any(|(v, cap)| v > cap) {
                    continue;
                }
                let product = truncate(&pa.mul(pb));
                out.entry(key)
                    .and_modify(|q| *q = q.add(&product))
                    .or_insert(product);
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    };

    // A = H - 1 in the u variables
    let mut a: BTreeMap<Vec<u32>, GradedPoly<CycloNumber>> = BTreeMap::new();
    for (key, slice) in gf.slices() {
        let mut u = dft.to_u(&promote::<CycloNumber>(slice));
        if *key == zero_key {
            u.add_term(ColoredPartition::empty(m), -CycloNumber::from_int(1));
        }
        if !u.is_zero() {
            a.insert(key.clone(), u);
        }
    }

    let mut log: BTreeMap<Vec<u32>, GradedPoly<CycloNumber>> = BTreeMap::new();
    let mut power = a.clone();
    let bound = max_degree + gf.orders().iter().sum::<u32>() + 1;
    for j in 1..=i64::from(bound) {
        if power.is_empty() {
            break;
        }
        let factor = CycloNumber::from_rational(rat(if j % 2 == 1 { 1 } else { -1 }, j));
        for (key, p) in &power {
            let scaled = p.scale(&factor);
            log.entry(key.clone())
                .and_modify(|q| *q = q.add(&scaled))
                .or_insert(scaled);
        }
        power = mul_maps(&power, &a);
    }

    for poly in log.values() {
        for (cp, c) in poly.terms() {
            if c.is_zero_value() {
                continue;
            }
            let families: std::collections::BTreeSet<u32> =
                cp.part_counts().into_iter().map(|(_, a, _)| a).collect();
            if families.len() > 1 {
                return false;
            }
        }
    }
    true
}
