//! Hurwitz numbers by direct enumeration and by class-coordinate dynamics.
//!
//! For a profile (n_0, ..., n_(m-1)) and a colored partition lambda of n,
//! the disconnected Hurwitz number of G = G(m,1,n) is
//!
//! ```text
//! h = #{ (s_1, ..., s_M) : s_i runs over the prescribed reflection
//!        classes and s_1 s_2 ... s_M lies in C_lambda } / |G|,
//! ```
//!
//! where n_0 of the factors come from the swap class and n_k from the k-th
//! diagonal class.  Three independent routes compute it:
//!
//! * [`hurwitz_bruteforce`] walks every reflection sequence;
//! * [`hurwitz_classdp`] pushes a class-coordinate vector through the class
//!   multiplication tables of [`t_matrix`] (one group product per class and
//!   reflection, instead of per sequence);
//! * [`count_covers`] groups the same sequences into conjugation orbits and
//!   adds 1/|stabilizer| per orbit, the automorphism-weighted count of
//!   covers with the product itself as the monodromy over infinity.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclo::{rat_int, Rational};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::partitions::{ColoredBasis, ColoredPartition};
use crate::wreath::{
    class_representative, group_order, reflection_class, WreathElement,
};

/// How many factors to draw from each reflection class: counts[0] swaps,
/// counts[k] diagonals of twist k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Profile(pub Vec<u32>);

impl Profile {
    pub fn m(&self) -> u32 {
        self.0.len() as u32
    }

    /// Total number of factors M.
    pub fn factors(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The multiset of class indices, swaps first.
    pub fn slot_classes(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat(i as u32).take(c as usize));
        }
        out
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", body.join(","))
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad profile entry {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if counts.is_empty() {
            return Err(Error::Parse("empty profile".into()));
        }
        Ok(Profile(counts))
    }
}

/// Which computational route produced a table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Engine {
    Enumeration,
    ClassDp,
    CutJoin,
    Schur,
}

impl Engine {
    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Enumeration => "enumeration",
            Engine::ClassDp => "classdp",
            Engine::CutJoin => "cutjoin",
            Engine::Schur => "schur",
        }
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumeration" => Ok(Engine::Enumeration),
            "classdp" => Ok(Engine::ClassDp),
            "cutjoin" => Ok(Engine::CutJoin),
            "schur" => Ok(Engine::Schur),
            _ => Err(Error::Parse(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct HurwitzRow {
    pub profile: Profile,
    pub cp: ColoredPartition,
    pub value: Rational,
}

/// Hurwitz numbers for one (m, n), tagged with the engine that made them.
#[derive(Clone, PartialEq, Debug)]
pub struct HurwitzTable {
    pub m: u32,
    pub n: u32,
    pub engine: Engine,
    pub rows: Vec<HurwitzRow>,
}

impl HurwitzTable {
    pub fn get(&self, profile: &Profile, cp: &ColoredPartition) -> Option<&Rational> {
        self.rows
            .iter()
            .find(|r| &r.profile == profile && &r.cp == cp)
            .map(|r| &r.value)
    }

    /// Keys where the two tables disagree (missing keys count as zero).
    pub fn diff(&self, other: &HurwitzTable) -> Vec<(Profile, ColoredPartition, Rational, Rational)> {
        let mut keys: Vec<(Profile, ColoredPartition)> = Vec::new();
        for r in self.rows.iter().chain(&other.rows) {
            let key = (r.profile.clone(), r.cp.clone());
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
        let zero = Rational::zero();
        let mut out = Vec::new();
        for (p, cp) in keys {
            let a = self.get(&p, &cp).unwrap_or(&zero).clone();
            let b = other.get(&p, &cp).unwrap_or(&zero).clone();
            if a != b {
                out.push((p, cp, a, b));
            }
        }
        out
    }
}

/// Coordinates over the degree-n colored-partition basis.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassVector {
    pub m: u32,
    pub n: u32,
    pub coords: Vec<Rational>,
}

impl ClassVector {
    pub fn unit(basis: &ColoredBasis, cp: &ColoredPartition) -> Self {
        let mut coords = vec![Rational::zero(); basis.dim()];
        coords[basis.index_of(cp).expect("class not in basis")] = rat_int(1);
        ClassVector {
            m: basis.m(),
            n: basis.n(),
            coords,
        }
    }
}

fn big_group_order(m: u32, n: usize) -> Rational {
    Rational::from_integer(BigInt::from(group_order(m, n)))
}

/// Walk every sequence drawn from the given classes (in the given slot
/// order) and tally the conjugacy class of the product.
pub fn sequence_census(
    m: u32,
    n: usize,
    slot_classes: &[u32],
    budget: u64,
) -> Result<BTreeMap<ColoredPartition, u64>> {
    let slots: Vec<Vec<WreathElement>> = slot_classes
        .iter()
        .map(|&c| reflection_class(m, n, c))
        .collect();
    let mut steps: u128 = 1;
    for s in &slots {
        steps = steps.saturating_mul(s.len() as u128);
    }
    if steps > budget as u128 {
        return Err(Error::BudgetExceeded {
            task: "sequence_census",
            needed: steps,
            cap: budget as u128,
        });
    }
    let mut tally = BTreeMap::new();
    fn walk(
        slots: &[Vec<WreathElement>],
        depth: usize,
        prefix: &WreathElement,
        tally: &mut BTreeMap<ColoredPartition, u64>,
    ) {
        if depth == slots.len() {
            *tally.entry(prefix.colored_type()).or_insert(0) += 1;
            return;
        }
        for s in &slots[depth] {
            walk(slots, depth + 1, &prefix.mul(s), tally);
        }
    }
    walk(&slots, 0, &WreathElement::identity(m, n), &mut tally);
    Ok(tally)
}

/// All Hurwitz numbers of one profile by brute force over sequences.
pub fn hurwitz_bruteforce_table(
    m: u32,
    n: usize,
    profile: &Profile,
    budget: u64,
) -> Result<HurwitzTable> {
    assert_eq!(profile.m(), m, "profile length must be m");
    let tally = sequence_census(m, n, &profile.slot_classes(), budget)?;
    let order = big_group_order(m, n);
    let rows = ColoredBasis::new(m, n as u32)
        .iter()
        .map(|cp| HurwitzRow {
            profile: profile.clone(),
            cp: cp.clone(),
            value: Rational::from_integer(BigInt::from(
                tally.get(cp).copied().unwrap_or(0),
            )) / &order,
        })
        .collect();
    Ok(HurwitzTable {
        m,
        n: n as u32,
        engine: Engine::Enumeration,
        rows,
    })
}

pub fn hurwitz_bruteforce(
    m: u32,
    n: usize,
    profile: &Profile,
    cp: &ColoredPartition,
    budget: u64,
) -> Result<Rational> {
    let table = hurwitz_bruteforce_table(m, n, profile, budget)?;
    Ok(table.get(profile, cp).cloned().unwrap_or_else(Rational::zero))
}

/// #{rho in reflection class `class` : sigma * rho in C_mu}.  Well defined
/// on the class of sigma, which is what makes the class DP close.
pub fn multiplicity(sigma: &WreathElement, mu: &ColoredPartition, class: u32) -> u64 {
    reflection_class(sigma.m(), sigma.n(), class)
        .iter()
        .filter(|rho| &sigma.mul(rho).colored_type() == mu)
        .count() as u64
}

/// Same count with the reflection on the left; equal to [`multiplicity`].
pub fn multiplicity_left(sigma: &WreathElement, mu: &ColoredPartition, class: u32) -> u64 {
    reflection_class(sigma.m(), sigma.n(), class)
        .iter()
        .filter(|rho| &rho.mul(sigma).colored_type() == mu)
        .count() as u64
}

/// The class multiplication table of reflection class `class`: column
/// lambda holds the counts <lambda|mu> = #{rho : sigma_lambda rho in C_mu}.
pub fn t_matrix(m: u32, n: usize, class: u32) -> Mat<Rational> {
    let basis = ColoredBasis::new(m, n as u32);
    let refl = reflection_class(m, n, class);
    let mut mat = Mat::zero(basis.dim(), basis.dim());
    for (j, cp) in basis.iter().enumerate() {
        let rep = class_representative(m, n, cp);
        for rho in &refl {
            let i = basis
                .index_of(&rep.mul(rho).colored_type())
                .expect("product type in basis");
            mat.add_to(i, j, rat_int(1));
        }
    }
    mat
}

/// Hurwitz numbers of one profile via the class-coordinate dynamic program.
pub fn hurwitz_classdp_table(m: u32, n: usize, profile: &Profile) -> HurwitzTable {
    assert_eq!(profile.m(), m, "profile length must be m");
    let basis = ColoredBasis::new(m, n as u32);
    let mut v = ClassVector::unit(&basis, &ColoredPartition::ones(m, n as u32)).coords;
    for (class, &count) in profile.0.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let t = t_matrix(m, n, class as u32);
        for _ in 0..count {
            v = t.mul_vec(&v);
        }
    }
    let order = big_group_order(m, n);
    let rows = basis
        .iter()
        .zip(&v)
        .map(|(cp, c)| HurwitzRow {
            profile: profile.clone(),
            cp: cp.clone(),
            value: c / &order,
        })
        .collect();
    HurwitzTable {
        m,
        n: n as u32,
        engine: Engine::ClassDp,
        rows,
    }
}

pub fn hurwitz_classdp(m: u32, n: usize, profile: &Profile, cp: &ColoredPartition) -> Rational {
    hurwitz_classdp_table(m, n, profile)
        .get(profile, cp)
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// The automorphism-weighted cover count: conjugation orbits of reflection
/// sequences whose product lies in C_lambda, each weighted by 1/|stabilizer|.
/// Equals the Hurwitz number; the orbit-stabilizer bookkeeping is asserted
/// internally.
pub fn count_covers(
    m: u32,
    n: usize,
    profile: &Profile,
    cp: &ColoredPartition,
    budget: u64,
) -> Result<Rational> {
    let slots: Vec<Vec<WreathElement>> = profile
        .slot_classes()
        .iter()
        .map(|&c| reflection_class(m, n, c))
        .collect();
    let mut steps: u128 = group_order(m, n);
    for s in &slots {
        steps = steps.saturating_mul(s.len().max(1) as u128);
    }
    if steps > budget as u128 {
        return Err(Error::BudgetExceeded {
            task: "count_covers",
            needed: steps,
            cap: budget as u128,
        });
    }

    // collect the matching tuples
    let mut tuples: Vec<Vec<WreathElement>> = Vec::new();
    fn walk(
        slots: &[Vec<WreathElement>],
        depth: usize,
        prefix: &WreathElement,
        seq: &mut Vec<WreathElement>,
        target: &ColoredPartition,
        out: &mut Vec<Vec<WreathElement>>,
    ) {
        if depth == slots.len() {
            if &prefix.colored_type() == target {
                out.push(seq.clone());
            }
            return;
        }
        for s in &slots[depth] {
            seq.push(s.clone());
            walk(slots, depth + 1, &prefix.mul(s), seq, target, out);
            seq.pop();
        }
    }
    walk(
        &slots,
        0,
        &WreathElement::identity(m, n),
        &mut Vec::new(),
        cp,
        &mut tuples,
    );

    let group = crate::wreath::enumerate_group(m, n, budget)?;
    let order = group.len() as u64;
    let mut remaining: std::collections::BTreeSet<Vec<WreathElement>> =
        tuples.iter().cloned().collect();
    let mut total = Rational::zero();
    let mut orbit_check: u64 = 0;
    while let Some(tuple) = remaining.iter().next().cloned() {
        let mut orbit: std::collections::BTreeSet<Vec<WreathElement>> =
            std::collections::BTreeSet::new();
        for g in &group {
            let img: Vec<WreathElement> =
                tuple.iter().map(|s| s.conjugate_by(g)).collect();
            orbit.insert(img);
        }
        let stab = order / orbit.len() as u64;
        assert_eq!(
            stab as u128 * orbit.len() as u128,
            order as u128,
            "orbit size must divide the group order"
        );
        total += Rational::new(BigInt::from(1), BigInt::from(stab));
        orbit_check += orbit.len() as u64;
        for t in orbit {
            remaining.remove(&t);
        }
    }
    assert_eq!(orbit_check as usize, tuples.len(), "orbits must partition the tuples");
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::partitions::gen_colored_partitions;
    use crate::perm::Perm;
    use crate::wreath::enumerate_group;

    const BUDGET: u64 = 50_000_000;

    fn profiles_upto(m: u32, max_each: u32, max_total: u32) -> Vec<Profile> {
        fn rec(m: usize, max_each: u32, acc: &mut Vec<u32>, out: &mut Vec<Profile>) {
            if acc.len() == m {
                out.push(Profile(acc.clone()));
                return;
            }
            for c in 0..=max_each {
                acc.push(c);
                rec(m, max_each, acc, out);
                acc.pop();
            }
        }
        let mut all = Vec::new();
        rec(m as usize, max_each, &mut Vec::new(), &mut all);
        all.retain(|p| p.factors() <= max_total);
        all
    }

    #[test]
    fn zero_profile_is_the_identity_distribution() {
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let table =
                hurwitz_bruteforce_table(m, n, &Profile(vec![0; m as usize]), BUDGET).unwrap();
            for row in &table.rows {
                let expect = if row.cp == ColoredPartition::ones(m, n as u32) {
                    Rational::new(BigInt::from(1), BigInt::from(group_order(m, n)))
                } else {
                    Rational::zero()
                };
                assert_eq!(row.value, expect, "m={m} n={n} cp={}", row.cp);
            }
        }
    }

    #[test]
    fn frozen_small_values() {
        // one swap factor in G(2,1,2): lands in C_(2|-) half the time per pair
        let h = hurwitz_bruteforce(2, 2, &Profile(vec![1, 0]), &"2|-".parse().unwrap(), BUDGET)
            .unwrap();
        assert_eq!(h, rat(1, 4));
        // one diagonal factor: C_(1|1)
        let h = hurwitz_bruteforce(2, 2, &Profile(vec![0, 1]), &"1|1".parse().unwrap(), BUDGET)
            .unwrap();
        assert_eq!(h, rat(1, 4));
        // m=3, one first-power diagonal on one strand
        let h = hurwitz_bruteforce(3, 1, &Profile(vec![0, 1, 0]), &"-|1|-".parse().unwrap(), BUDGET)
            .unwrap();
        assert_eq!(h, rat(1, 3));
    }

    #[test]
    fn census_does_not_depend_on_slot_order() {
        let (m, n) = (2, 2);
        let a = sequence_census(m, n, &[0, 0, 1], BUDGET).unwrap();
        let b = sequence_census(m, n, &[1, 0, 0], BUDGET).unwrap();
        let c = sequence_census(m, n, &[0, 1, 0], BUDGET).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        let (m, n) = (3, 2);
        let a = sequence_census(m, n, &[0, 1, 2], BUDGET).unwrap();
        let b = sequence_census(m, n, &[2, 1, 0], BUDGET).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn classdp_matches_bruteforce() {
        for (m, n) in [(1u32, 3usize), (2, 2), (2, 3), (3, 2)] {
            for profile in profiles_upto(m, 2, 3) {
                let bf = hurwitz_bruteforce_table(m, n, &profile, BUDGET).unwrap();
                let dp = hurwitz_classdp_table(m, n, &profile);
                assert!(
                    bf.diff(&dp).is_empty(),
                    "m={m} n={n} profile={profile}: {:?}",
                    bf.diff(&dp)
                );
            }
        }
    }

    #[test]
    fn multiplicity_is_class_well_defined_and_side_independent() {
        for (m, n) in [(2u32, 2usize), (3, 2)] {
            for x in enumerate_group(m, n, 10_000).unwrap() {
                let cp = x.colored_type();
                let rep = class_representative(m, n, &cp);
                for mu in gen_colored_partitions(m, n as u32) {
                    for class in 0..m {
                        let a = multiplicity(&x, &mu, class);
                        assert_eq!(a, multiplicity(&rep, &mu, class));
                        assert_eq!(a, multiplicity_left(&x, &mu, class));
                    }
                }
            }
        }
    }

    #[test]
    fn t_matrix_column_sums_count_the_class() {
        for (m, n) in [(2u32, 3usize), (3, 3)] {
            let swaps = rat_int((m as i64) * (n as i64) * (n as i64 - 1) / 2);
            let t0 = t_matrix(m, n, 0);
            for j in 0..t0.cols() {
                assert_eq!(t0.column_sum(j), swaps);
            }
            for k in 1..m {
                let tk = t_matrix(m, n, k);
                for j in 0..tk.cols() {
                    assert_eq!(tk.column_sum(j), rat_int(n as i64));
                }
            }
        }
    }

    #[test]
    fn t_matrix_at_m1_matches_plain_symmetric_group_products() {
        // classical oracle: multiply a representative by every transposition
        for n in 2..=4usize {
            let basis = ColoredBasis::new(1, n as u32);
            let t = t_matrix(1, n, 0);
            for (j, cp) in basis.iter().enumerate() {
                // plain S_n representative of the cycle type, no wreath layer
                let lam = cp.component(0);
                let mut img: Vec<usize> = (0..n).collect();
                let mut pos = 0;
                for &k in lam.parts() {
                    let k = k as usize;
                    for q in pos..pos + k - 1 {
                        img[q] = q + 1;
                    }
                    img[pos + k - 1] = pos;
                    pos += k;
                }
                let rep = Perm::from_images(img);
                let mut counts = vec![0u64; basis.dim()];
                for a in 0..n {
                    for b in a + 1..n {
                        let prod = rep.compose(&Perm::transposition(n, a, b));
                        let mu = ColoredPartition::new(vec![prod.cycle_type()]);
                        counts[basis.index_of(&mu).unwrap()] += 1;
                    }
                }
                for i in 0..basis.dim() {
                    assert_eq!(t.get(i, j), &rat_int(counts[i] as i64), "n={n} col {cp}");
                }
            }
        }
    }

    #[test]
    fn cover_counts_agree_with_sequence_counts() {
        for (m, n) in [(1u32, 3usize), (2, 2), (3, 1), (3, 2)] {
            for profile in profiles_upto(m, 2, 2) {
                let bf = hurwitz_bruteforce_table(m, n, &profile, BUDGET).unwrap();
                for cp in gen_colored_partitions(m, n as u32) {
                    let cc = count_covers(m, n, &profile, &cp, BUDGET).unwrap();
                    assert_eq!(
                        &cc,
                        bf.get(&profile, &cp).unwrap(),
                        "m={m} n={n} profile={profile} cp={cp}"
                    );
                }
            }
        }
    }

    #[test]
    fn orientation_of_the_infinity_class() {
        // the product itself (not its inverse) is classified: with one
        // diagonal factor of twist 1 in G(3,1,1) the mass sits at -|1|-
        let h = count_covers(3, 1, &Profile(vec![0, 1, 0]), &"-|1|-".parse().unwrap(), BUDGET)
            .unwrap();
        assert_eq!(h, rat(1, 3));
        let h_star = count_covers(3, 1, &Profile(vec![0, 1, 0]), &"-|-|1".parse().unwrap(), BUDGET)
            .unwrap();
        assert_eq!(h_star, Rational::zero());
    }

    #[test]
    fn budget_guard_trips() {
        assert!(matches!(
            sequence_census(2, 4, &[0; 10], 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
