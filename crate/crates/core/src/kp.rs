//! KP hierarchy checks for the one-family restrictions of the generating
//! function.
//!
//! Substituting p{b}_k -> xi^(b a) u_k collapses the colored series onto a
//! single classical variable family; the claim under test is that the
//! logarithm of each restriction solves the first two KP equations
//!
//! ```text
//! F_22 = F_31 - 1/2 F_11^2 - 1/12 F_1111
//! F_32 = F_41 - F_11 F_21 - 1/6 F_2111
//! ```
//!
//! with the restricted variables themselves as times, t_k = u_k.  (Under
//! the rescaling u_k = k t_k the same solutions satisfy the equations with
//! coefficients 4/3, 2, 1/3 instead; the displayed form picks the identity
//! convention, and the tests pin that down.)  Everything is truncated:
//! weights above the
//! degree cap of the source and branch-point exponents above the order caps
//! are dropped on contact, which is exact for the coefficients that remain
//! because both gradings are additive.  Differentiating costs weight, so a
//! residual computed from a cap-D series is meaningful only up to weight
//! D - 4 (first equation) or D - 5 (second); the residuals are truncated to
//! exactly the trustworthy window.

use std::collections::BTreeMap;

use crate::cutjoin::GenFunction;
use crate::cyclo::{rat, rat_int, CycloNumber, Rational, Scalar};
use crate::partitions::Partition;

/// Exponent record for one term: branch-point counters and a monomial in
/// the times, stored as the partition of its indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TsKey {
    pub beta: Vec<u32>,
    pub times: Partition,
}

impl TsKey {
    pub fn weight(&self) -> u32 {
        self.times.size()
    }
}

/// How the times relate to the restricted power sums.  Identity is the
/// convention the KP equations hold in; Scaled is kept as the documented
/// alternative that fails them, which the tests use as a control.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TimeConvention {
    /// t_k = u_k.
    Identity,
    /// u_k = k t_k.
    Scaled,
}

/// A truncated power series in times t_1, t_2, ... and branch-point
/// counters, with cyclotomic coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct TimesSeries {
    weight_cap: u32,
    beta_caps: Vec<u32>,
    terms: BTreeMap<TsKey, CycloNumber>,
}

impl TimesSeries {
    pub fn zero(weight_cap: u32, beta_caps: Vec<u32>) -> Self {
        TimesSeries { weight_cap, beta_caps, terms: BTreeMap::new() }
    }

    pub fn constant(weight_cap: u32, beta_caps: Vec<u32>, c: CycloNumber) -> Self {
        let mut s = Self::zero(weight_cap, beta_caps);
        let key = TsKey { beta: vec![0; s.beta_caps.len()], times: Partition::empty() };
        s.add_term(key, c);
        s
    }

    pub fn weight_cap(&self) -> u32 {
        self.weight_cap
    }

    pub fn beta_caps(&self) -> &[u32] {
        &self.beta_caps
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TsKey, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TsKey) -> CycloNumber {
        self.terms.get(key).cloned().unwrap_or_else(|| CycloNumber::from_int(0))
    }

    fn within_caps(&self, key: &TsKey) -> bool {
        key.weight() <= self.weight_cap
            && key.beta.len() == self.beta_caps.len()
            && key.beta.iter().zip(&self.beta_caps).all(|(b, cap)| b <= cap)
    }

    /// Adds a term, silently dropping anything beyond the truncation caps.
    pub fn add_term(&mut self, key: TsKey, c: CycloNumber) {
        if c.is_zero_value() || !self.within_caps(&key) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero_value() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.beta_caps, other.beta_caps);
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycloNumber::from_int(-1)))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let mut out = Self::zero(self.weight_cap, self.beta_caps.clone());
        for (key, v) in &self.terms {
            out.add_term(key.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.beta_caps, other.beta_caps);
        let cap = self.weight_cap.min(other.weight_cap);
        let mut out = Self::zero(cap, self.beta_caps.clone());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if ka.weight() + kb.weight() > cap {
                    continue;
                }
                let beta: Vec<u32> = ka.beta.iter().zip(&kb.beta).map(|(x, y)| x + y).collect();
                let mut parts = ka.times.parts().to_vec();
                parts.extend_from_slice(kb.times.parts());
                let key = TsKey { beta, times: Partition::new(parts) };
                out.add_term(key, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// d/dt_k.
    pub fn partial(&self, k: u32) -> Self {
        let mut out = Self::zero(self.weight_cap, self.beta_caps.clone());
        for (key, c) in &self.terms {
            let mult = key.times.mult(k);
            if mult == 0 {
                continue;
            }
            let reduced = TsKey {
                beta: key.beta.clone(),
                times: key.times.with_part_removed(k).unwrap(),
            };
            out.add_term(reduced, c.clone().scaled(&rat_int(i64::from(mult))));
        }
        out
    }

    /// Drops every term above the given weight and lowers the cap, marking
    /// how far the series is still meaningful.
    pub fn truncated(&self, weight_cap: u32) -> Self {
        let mut out = Self::zero(weight_cap, self.beta_caps.clone());
        for (key, c) in &self.terms {
            out.add_term(key.clone(), c.clone());
        }
        out
    }

    /// log of a series with constant term 1, by the alternating power sum of
    /// (self - 1); terminates because that difference has no constant term.
    pub fn log(&self) -> Self {
        let one = CycloNumber::from_int(1);
        let const_key = TsKey { beta: vec![0; self.beta_caps.len()], times: Partition::empty() };
        assert!(self.coeff(&const_key) == one, "log needs constant term 1");
        let a = {
            let mut a = self.clone();
            a.terms.remove(&const_key);
            a
        };
        let mut out = Self::zero(self.weight_cap, self.beta_caps.clone());
        let mut power = a.clone();
        let bound = self.weight_cap + self.beta_caps.iter().sum::<u32>() + 1;
        for j in 1..=i64::from(bound) {
            if power.is_zero() {
                return out;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&CycloNumber::from_rational(rat(sign, j))));
            power = power.mul(&a);
        }
        assert!(power.is_zero(), "series with nonzero constant slipped through");
        out
    }
}

/// Collapses the generating function onto one variable family, takes the
/// logarithm, and returns the result in the chosen times.
pub fn restrict_to_family(
    gf: &GenFunction,
    family: u32,
    conv: TimeConvention,
) -> TimesSeries {
    let m = gf.m();
    assert!(family < m);
    let mut h = TimesSeries::zero(gf.max_degree(), gf.orders().to_vec());
    for (key, slice) in gf.slices() {
        for (cp, coeff) in slice.terms() {
            let mut parts = Vec::new();
            let mut phase = 0i64;
            let mut scale = Rational::from_integer(1.into());
            for (k, color, count) in cp.part_counts() {
                for _ in 0..count {
                    parts.push(k);
                }
                phase += i64::from(color) * i64::from(count);
                if conv == TimeConvention::Scaled {
                    for _ in 0..count {
                        scale = scale * rat_int(i64::from(k));
                    }
                }
            }
            let weight = CycloNumber::xi_pow(m, i64::from(family) * phase)
                .scaled(&(coeff.clone() * scale));
            h.add_term(TsKey { beta: key.clone(), times: Partition::new(parts) }, weight);
        }
    }
    h.log()
}

/// Left-hand sides of the first two KP equations, truncated to the weights
/// the input can vouch for (cap - 4 and cap - 5).
pub fn kp_residuals(f: &TimesSeries) -> (TimesSeries, TimesSeries) {
    let half = CycloNumber::from_rational(rat(1, 2));
    let twelfth = CycloNumber::from_rational(rat(1, 12));
    let sixth = CycloNumber::from_rational(rat(1, 6));

    let f1 = f.partial(1);
    let f11 = f1.partial(1);
    let f21 = f.partial(2).partial(1);
    let f22 = f.partial(2).partial(2);
    let f31 = f.partial(3).partial(1);
    let f1111 = f11.partial(1).partial(1);
    let r1 = f22
        .add(&f11.mul(&f11).scale(&half))
        .sub(&f31)
        .add(&f1111.scale(&twelfth))
        .truncated(f.weight_cap().saturating_sub(4));

    let f32_ = f.partial(3).partial(2);
    let f41 = f.partial(4).partial(1);
    let f2111 = f21.partial(1).partial(1);
    let r2 = f32_
        .add(&f11.mul(&f21))
        .sub(&f41)
        .add(&f2111.scale(&sixth))
        .truncated(f.weight_cap().saturating_sub(5));

    (r1, r2)
}

/// Outcome of testing one family restriction against the two equations.
#[derive(Clone, Debug)]
pub struct KpReport {
    pub family: u32,
    pub convention: TimeConvention,
    pub residual1_zero: bool,
    pub residual2_zero: bool,
    pub trusted_weight1: u32,
    pub trusted_weight2: u32,
}

pub fn kp_check(gf: &GenFunction, family: u32, conv: TimeConvention) -> KpReport {
    let f = restrict_to_family(gf, family, conv);
    let (r1, r2) = kp_residuals(&f);
    KpReport {
        family,
        convention: conv,
        residual1_zero: r1.is_zero(),
        residual2_zero: r2.is_zero(),
        trusted_weight1: r1.weight_cap(),
        trusted_weight2: r2.weight_cap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutjoin::GenFunction;

    fn key(beta: &[u32], parts: &[u32]) -> TsKey {
        TsKey { beta: beta.to_vec(), times: Partition::new(parts.to_vec()) }
    }

    #[test]
    fn log_of_one_plus_t1() {
        let mut h = TimesSeries::constant(4, vec![], CycloNumber::from_int(1));
        h.add_term(key(&[], &[1]), CycloNumber::from_int(1));
        let f = h.log();
        assert_eq!(f.coeff(&key(&[], &[1])), CycloNumber::from_int(1));
        assert_eq!(f.coeff(&key(&[], &[1, 1])), CycloNumber::from_rational(rat(-1, 2)));
        assert_eq!(f.coeff(&key(&[], &[1, 1, 1])), CycloNumber::from_rational(rat(1, 3)));
        assert_eq!(f.coeff(&key(&[], &[1, 1, 1, 1])), CycloNumber::from_rational(rat(-1, 4)));
    }

    #[test]
    fn multiplication_respects_caps() {
        let mut a = TimesSeries::zero(3, vec![1]);
        a.add_term(key(&[1], &[2]), CycloNumber::from_int(1));
        let sq = a.mul(&a);
        // weight 4 > 3 and beta 2 > 1: everything truncates away
        assert!(sq.is_zero());
    }

    #[test]
    fn quadratic_time_is_not_a_solution() {
        // F = t_2^2 leaves residual 2 in the first equation.
        let mut f = TimesSeries::zero(8, vec![]);
        f.add_term(key(&[], &[2, 2]), CycloNumber::from_int(1));
        let (r1, r2) = kp_residuals(&f);
        assert_eq!(r1.coeff(&key(&[], &[])), CycloNumber::from_int(2));
        assert!(!r1.is_zero());
        assert!(r2.is_zero());
    }

    #[test]
    fn classical_restriction_solves_kp() {
        // beta order 6 reaches the 1/12 F_1111 term (mu = 1^4 takes six
        // transpositions when connected), so the whole first equation is
        // exercised, and the second through its 1/6 term at order 5.
        let gf = GenFunction::evolve(1, 8, &[6]);
        let report = kp_check(&gf, 0, TimeConvention::Identity);
        assert!(report.residual1_zero, "first KP equation failed");
        assert!(report.residual2_zero, "second KP equation failed");
        assert_eq!(report.trusted_weight1, 4);
        assert_eq!(report.trusted_weight2, 3);
    }

    #[test]
    fn rescaled_times_fail_the_displayed_equations() {
        // Under u_k = k t_k the first equation picks up coefficients
        // (4/3, 2, 1/3); in the displayed form the residual is nonzero.
        let gf = GenFunction::evolve(1, 8, &[6]);
        let report = kp_check(&gf, 0, TimeConvention::Scaled);
        assert!(!report.residual1_zero, "rescaled times should not satisfy KP");
    }

    #[test]
    fn shallow_branch_windows_are_structurally_silent() {
        // Connectivity forces at least |mu| + len(mu) - 2 transpositions, so
        // below beta order 4 every residual term vanishes for any time
        // convention; a discriminating check needs the deeper window above.
        let gf = GenFunction::evolve(1, 8, &[3]);
        for conv in [TimeConvention::Identity, TimeConvention::Scaled] {
            let report = kp_check(&gf, 0, conv);
            assert!(report.residual1_zero && report.residual2_zero);
        }
    }

    #[test]
    fn perturbed_solution_fails() {
        let gf = GenFunction::evolve(1, 8, &[3]);
        let mut f = restrict_to_family(&gf, 0, TimeConvention::Identity);
        f.add_term(key(&[0], &[1, 1, 1, 1]), CycloNumber::from_int(1));
        let (r1, _) = kp_residuals(&f);
        // the bump feeds the F_1111 term: 24/12 = 2 at the constant key
        assert_eq!(r1.coeff(&key(&[0], &[])), CycloNumber::from_int(2));
    }

    #[test]
    fn two_color_restrictions_solve_kp() {
        let gf = GenFunction::evolve(2, 6, &[6, 2]);
        for family in 0..2 {
            let report = kp_check(&gf, family, TimeConvention::Identity);
            assert!(
                report.residual1_zero && report.residual2_zero,
                "KP failed for family {family}"
            );
        }
    }
}
