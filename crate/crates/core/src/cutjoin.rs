//! The cut-and-join operators and the generating function they evolve.
//!
//! In the colored power sums the degree-preserving operators are
//!
//! ```text
//! CJ_0 = 1/2 sum_{i,j>=1} sum_{a,g} [ (i+j) p{a}_i p{g}_j d/dp{a+g}_{i+j}
//!                                   + m i j p{a+g}_{i+j} d^2/(dp{a}_i dp{g}_j) ]
//! CJ_k = sum_{i>=1} sum_{a} i p{a+k}_i d/dp{a}_i          (k = 1..m-1)
//! ```
//!
//! with all colors mod m.  On the degree-n piece the matrix of CJ_k in the
//! monomial basis equals the multiplication table of the k-th reflection
//! class acting on class coordinates; [`verify_diagram`] checks that square
//! entry by entry.  After the Fourier change of variables the family splits
//! into m commuting copies of the classical cut-and-join plus Euler fields,
//! which is what [`dft_identities`] confirms.
//!
//! [`GenFunction`] integrates the flows: starting from the exponential of
//! the degree-one variable of color zero, each application of CJ_k appends
//! one branch point of the k-th type, and coefficients recover Hurwitz
//! numbers after the bookkeeping factor `prod n_k! / m^n`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cyclo::{rat, rat_int, CycloNumber, Rational, Scalar};
use crate::enumeration::{t_matrix, Engine, HurwitzRow, HurwitzTable, Profile};
use crate::matrix::Mat;
use crate::partitions::{ColoredBasis, ColoredPartition};
use crate::polyring::{BasisTag, GradedPoly, LinearOperator, Monomial};

/// The k-th cut-and-join operator on the p variables.
pub fn cj_rule<C: Scalar>(m: u32, k: u32) -> LinearOperator<C> {
    assert!(k < m);
    if k == 0 {
        LinearOperator::from_rule(m, BasisTag::P, move |mono| cut_join_image(m, mono))
    } else {
        LinearOperator::from_rule(m, BasisTag::P, move |mono| shift_image(m, k, mono))
    }
}

fn cut_join_image<C: Scalar>(m: u32, mono: &Monomial) -> GradedPoly<C> {
    let mut out = GradedPoly::zero(m, mono.tag);
    let slots = mono.cp.part_counts();
    // Cut: replace one part L of color s by (i, a) and (L-i, s-a).
    for &(big, s, count) in &slots {
        if big < 2 {
            continue;
        }
        let base = mono.cp.with_part_removed(big, s).unwrap();
        let coeff = C::from_rational(rat(i64::from(big) * i64::from(count), 2));
        for i in 1..big {
            for a in 0..m {
                let g = (s + m - a % m) % m;
                let cp = base.with_part_added(i, a).with_part_added(big - i, g);
                out.add_term(cp, coeff.clone());
            }
        }
    }
    // Join: merge an ordered pair of parts (i, a), (j, g) into (i+j, a+g).
    for (si, &(i, a, ci)) in slots.iter().enumerate() {
        for (sj, &(j, g, cj)) in slots.iter().enumerate() {
            let pairs = if si == sj { u64::from(ci) * u64::from(ci - 1) } else { u64::from(ci) * u64::from(cj) };
            if pairs == 0 {
                continue;
            }
            let cp = mono
                .cp
                .with_part_removed(i, a)
                .unwrap()
                .with_part_removed(j, g)
                .unwrap()
                .with_part_added(i + j, (a + g) % m);
            let coeff = rat(
                i64::from(m) * i64::from(i) * i64::from(j) * pairs as i64,
                2,
            );
            out.add_term(cp, C::from_rational(coeff));
        }
    }
    out
}

fn shift_image<C: Scalar>(m: u32, k: u32, mono: &Monomial) -> GradedPoly<C> {
    let mut out = GradedPoly::zero(m, mono.tag);
    for (q, a, count) in mono.cp.part_counts() {
        let cp = mono
            .cp
            .with_part_removed(q, a)
            .unwrap()
            .with_part_added(q, (a + k) % m);
        out.add_term(cp, C::from_rational(rat_int(i64::from(q) * i64::from(count))));
    }
    out
}

/// The classical cut-and-join acting on a single color family, with no m
/// weight; after the Fourier change each family carries one copy.
pub fn classical_cut_join<C: Scalar>(m: u32, tag: BasisTag, family: u32) -> LinearOperator<C> {
    LinearOperator::from_rule(m, tag, move |mono| {
        let mut out = GradedPoly::zero(m, mono.tag);
        let slots: Vec<(u32, u32)> = mono
            .cp
            .part_counts()
            .into_iter()
            .filter(|&(_, a, _)| a == family)
            .map(|(k, _, c)| (k, c))
            .collect();
        for &(big, count) in &slots {
            if big < 2 {
                continue;
            }
            let base = mono.cp.with_part_removed(big, family).unwrap();
            let coeff = C::from_rational(rat(i64::from(big) * i64::from(count), 2));
            for i in 1..big {
                let cp = base.with_part_added(i, family).with_part_added(big - i, family);
                out.add_term(cp, coeff.clone());
            }
        }
        for (si, &(i, ci)) in slots.iter().enumerate() {
            for (sj, &(j, cj)) in slots.iter().enumerate() {
                let pairs =
                    if si == sj { u64::from(ci) * u64::from(ci - 1) } else { u64::from(ci) * u64::from(cj) };
                if pairs == 0 {
                    continue;
                }
                let cp = mono
                    .cp
                    .with_part_removed(i, family)
                    .unwrap()
                    .with_part_removed(j, family)
                    .unwrap()
                    .with_part_added(i + j, family);
                out.add_term(
                    cp,
                    C::from_rational(rat(i64::from(i) * i64::from(j) * pairs as i64, 2)),
                );
            }
        }
        out
    })
}

/// The Euler field of one color family: scales a monomial by the total size
/// of its parts in that family.
pub fn euler_field<C: Scalar>(m: u32, tag: BasisTag, family: u32) -> LinearOperator<C> {
    LinearOperator::from_rule(m, tag, move |mono| {
        let weight: i64 = mono
            .cp
            .part_counts()
            .into_iter()
            .filter(|&(_, a, _)| a == family)
            .map(|(k, _, c)| i64::from(k) * i64::from(c))
            .sum();
        GradedPoly::monomial(m, mono.tag, mono.cp.clone(), C::from_rational(rat_int(weight)))
    })
}

/// Entrywise fit of `lhs = c * rhs`; `Some(1)` when both vanish, `None` when
/// no single constant works.
fn fit_constant(lhs: &Mat<Rational>, rhs: &Mat<Rational>) -> Option<Rational> {
    assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()));
    let mut c: Option<Rational> = None;
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let (a, b) = (lhs.get(i, j), rhs.get(i, j));
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let ratio = a / b;
                    match &c {
                        None => c = Some(ratio),
                        Some(prev) if *prev == ratio => {}
                        Some(_) => return None,
                    }
                }
            }
        }
    }
    c.or_else(|| Some(Rational::one()))
}

/// Comparison of each reflection-class multiplication table against the
/// matrix of the matching cut-and-join operator on the same degree.
#[derive(Clone, Debug)]
pub struct DiagramReport {
    pub m: u32,
    pub n: u32,
    /// Per class k, the fitted constant in T_k = c * CJ_k; the theorem says 1.
    pub constants: Vec<Option<Rational>>,
}

impl DiagramReport {
    pub fn pass(&self) -> bool {
        self.constants.iter().all(|c| c.as_ref() == Some(&Rational::one()))
    }
}

pub fn verify_diagram(m: u32, n: usize) -> DiagramReport {
    let basis = ColoredBasis::new(m, n as u32);
    let constants = (0..m)
        .map(|k| {
            let t = t_matrix(m, n, k);
            let cj = cj_rule::<Rational>(m, k).matrix_on(&basis);
            fit_constant(&t, &cj)
        })
        .collect();
    DiagramReport { m, n: n as u32, constants }
}

/// The discrete Fourier transform between the class power sums p and the
/// family variables u:
///
/// ```text
/// p{a}_i = sum_v  xi^(a v) u{v}_i,        u{v}_i = 1/m sum_a xi^(-v a) p{a}_i .
/// ```
pub struct DFTChange {
    m: u32,
}

impl DFTChange {
    pub fn new(m: u32) -> Self {
        DFTChange { m }
    }

    fn substitute(
        &self,
        poly: &GradedPoly<CycloNumber>,
        to_tag: BasisTag,
        weight: impl Fn(u32, u32) -> CycloNumber,
    ) -> GradedPoly<CycloNumber> {
        let m = self.m;
        let mut out = GradedPoly::zero(m, to_tag);
        for (cp, c) in poly.terms() {
            let mut acc = GradedPoly::constant(m, to_tag, c.clone());
            for (k, old, count) in cp.part_counts() {
                let mut linear = GradedPoly::zero(m, to_tag);
                for new in 0..m {
                    linear = linear.add(&GradedPoly::var(m, to_tag, k, new).scale(&weight(old, new)));
                }
                for _ in 0..count {
                    acc = acc.mul(&linear);
                }
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn to_u(&self, poly: &GradedPoly<CycloNumber>) -> GradedPoly<CycloNumber> {
        assert_eq!(poly.tag(), BasisTag::P);
        let m = self.m;
        self.substitute(poly, BasisTag::U, |a, v| {
            CycloNumber::xi_pow(m, i64::from(a) * i64::from(v))
        })
    }

    pub fn to_p(&self, poly: &GradedPoly<CycloNumber>) -> GradedPoly<CycloNumber> {
        assert_eq!(poly.tag(), BasisTag::U);
        let m = self.m;
        self.substitute(poly, BasisTag::P, |v, a| {
            CycloNumber::xi_pow(m, -i64::from(v) * i64::from(a)).scaled(&rat(1, i64::from(m)))
        })
    }

    /// Matrix of a p-variable operator in the u monomial basis.
    pub fn conjugate(
        &self,
        op: &LinearOperator<CycloNumber>,
        basis: &ColoredBasis,
    ) -> Mat<CycloNumber> {
        assert_eq!(op.tag(), BasisTag::P);
        let dim = basis.dim();
        let mut mat = Mat::zero(dim, dim);
        for j in 0..dim {
            let u_mono = GradedPoly::monomial(
                self.m,
                BasisTag::U,
                basis.at_index(j).clone(),
                CycloNumber::from_int(1),
            );
            let back = self.to_u(&op.apply(&self.to_p(&u_mono)));
            for (cp, c) in back.terms() {
                mat.set(basis.index_of(cp).expect("degree preserved"), j, c.clone());
            }
        }
        mat
    }
}

/// Block-diagonalization of the cut-and-join family after the Fourier
/// change: CJ_0 becomes m times the sum of the per-family classical
/// operators, and CJ_k becomes the xi^(k a)-weighted sum of Euler fields.
#[derive(Clone, Debug)]
pub struct DftReport {
    pub m: u32,
    pub n: u32,
    pub cut_join_ok: bool,
    pub shifts_ok: Vec<bool>,
}

impl DftReport {
    pub fn pass(&self) -> bool {
        self.cut_join_ok && self.shifts_ok.iter().all(|&b| b)
    }
}

pub fn dft_identities(m: u32, n: u32) -> DftReport {
    let basis = ColoredBasis::new(m, n);
    let dft = DFTChange::new(m);

    let lhs = dft.conjugate(&cj_rule::<CycloNumber>(m, 0), &basis);
    let mut rhs = Mat::zero(basis.dim(), basis.dim());
    for family in 0..m {
        rhs = rhs.add(
            &classical_cut_join::<CycloNumber>(m, BasisTag::U, family).matrix_on(&basis),
        );
    }
    let cut_join_ok = lhs == rhs.scaled(&CycloNumber::from_int(i64::from(m)));

    let eulers: Vec<Mat<CycloNumber>> = (0..m)
        .map(|family| euler_field::<CycloNumber>(m, BasisTag::U, family).matrix_on(&basis))
        .collect();
    let shifts_ok = (1..m)
        .map(|k| {
            let lhs = dft.conjugate(&cj_rule::<CycloNumber>(m, k), &basis);
            let mut rhs = Mat::zero(basis.dim(), basis.dim());
            for (family, euler) in eulers.iter().enumerate() {
                rhs = rhs.add(&euler.scaled(&CycloNumber::xi_pow(
                    m,
                    i64::from(k) * family as i64,
                )));
            }
            lhs == rhs
        })
        .collect();

    DftReport { m, n, cut_join_ok, shifts_ok }
}

/// The Hurwitz generating function, stored slice by slice: the slice at
/// multi-index (n_0, ..., n_{m-1}) is CJ_0^{n_0} ... CJ_{m-1}^{n_{m-1}} / prod n_k!
/// applied to exp(p{0}_1), truncated beyond `max_degree`.  The coefficient
/// of p_lambda in that slice is m^n h / prod n_k! for the Hurwitz number h
/// with n_k branch points of class k over lambda of size n.
pub struct GenFunction {
    m: u32,
    max_degree: u32,
    orders: Vec<u32>,
    engine: Engine,
    slices: BTreeMap<Vec<u32>, GradedPoly<Rational>>,
}

impl GenFunction {
    /// Wraps slices computed elsewhere, checking the key grid is complete.
    pub fn assemble(
        m: u32,
        max_degree: u32,
        orders: &[u32],
        engine: Engine,
        slices: BTreeMap<Vec<u32>, GradedPoly<Rational>>,
    ) -> GenFunction {
        let expected: usize = orders.iter().map(|&c| c as usize + 1).product();
        assert_eq!(slices.len(), expected, "slice grid incomplete");
        for key in slices.keys() {
            assert_eq!(key.len(), orders.len());
            assert!(key.iter().zip(orders).all(|(v, cap)| v <= cap));
        }
        GenFunction { m, max_degree, orders: orders.to_vec(), engine, slices }
    }

    /// Integrates the flows up to `orders[k]` applications of CJ_k.
    pub fn evolve(m: u32, max_degree: u32, orders: &[u32]) -> GenFunction {
        assert_eq!(orders.len(), m as usize, "one order bound per reflection class");
        let ops: Vec<LinearOperator<Rational>> = (0..m).map(|k| cj_rule(m, k)).collect();

        let mut seed = GradedPoly::zero(m, BasisTag::P);
        let mut n_fact = rat_int(1);
        for n in 0..=max_degree {
            if n > 0 {
                n_fact = n_fact * rat_int(i64::from(n));
            }
            seed.add_term(ColoredPartition::ones(m, n), rat_int(1) / n_fact.clone());
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
        keys.sort_by_key(|k| (k.iter().sum::<u32>(), k.clone()));

        let mut slices = BTreeMap::new();
        for key in keys {
            let slice = match key.iter().position(|&v| v > 0) {
                None => seed.clone(),
                Some(axis) => {
                    let mut prev_key = key.clone();
                    prev_key[axis] -= 1;
                    let prev: &GradedPoly<Rational> = &slices[&prev_key];
                    ops[axis].apply(prev).scale(&rat(1, i64::from(key[axis])))
                }
            };
            slices.insert(key, slice);
        }
        GenFunction { m, max_degree, orders: orders.to_vec(), engine: Engine::CutJoin, slices }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn slice(&self, counts: &[u32]) -> Option<&GradedPoly<Rational>> {
        self.slices.get(counts)
    }

    pub fn slices(&self) -> &BTreeMap<Vec<u32>, GradedPoly<Rational>> {
        &self.slices
    }

    /// The Hurwitz number for the given branch-point profile and boundary
    /// class, unwinding the slice normalization.
    pub fn hurwitz(&self, profile: &Profile, cp: &ColoredPartition) -> Option<Rational> {
        let slice = self.slices.get(&profile.0)?;
        if cp.total() > self.max_degree {
            return None;
        }
        let mut scale = rat_int(1);
        for &c in &profile.0 {
            for v in 1..=i64::from(c) {
                scale = scale * rat_int(v);
            }
        }
        let mut m_pow = rat_int(1);
        for _ in 0..cp.total() {
            m_pow = m_pow * rat_int(i64::from(self.m));
        }
        Some(slice.coeff(cp) * scale / m_pow)
    }

    /// All degree-n Hurwitz numbers this evolution holds.
    pub fn table(&self, n: u32) -> HurwitzTable {
        assert!(n <= self.max_degree);
        let basis = ColoredBasis::new(self.m, n);
        let mut rows = Vec::new();
        for key in self.slices.keys() {
            let profile = Profile(key.clone());
            for cp in basis.iter() {
                rows.push(HurwitzRow {
                    profile: profile.clone(),
                    cp: cp.clone(),
                    value: self.hurwitz(&profile, cp).unwrap(),
                });
            }
        }
        HurwitzTable { m: self.m, n, engine: self.engine, rows }
    }

    /// Rechecks every stored slice against the defining differential
    /// recurrences along all axes, not just the ones used to build it.
    pub fn pde_check(&self) -> bool {
        let ops: Vec<LinearOperator<Rational>> = (0..self.m).map(|k| cj_rule(self.m, k)).collect();
        for (key, slice) in &self.slices {
            for axis in 0..self.m as usize {
                if key[axis] == 0 {
                    continue;
                }
                let mut prev_key = key.clone();
                prev_key[axis] -= 1;
                let lhs = ops[axis].apply(&self.slices[&prev_key]);
                if lhs != slice.scale(&rat_int(i64::from(key[axis]))) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{hurwitz_bruteforce_table, hurwitz_classdp_table};
    use crate::partitions::gen_colored_partitions;

    fn cp(text: &str) -> ColoredPartition {
        text.parse().unwrap()
    }

    #[test]
    fn cut_join_on_single_part() {
        // CJ_0 p0_2: color-sum 0 splits as (0,0) or (1,1), one way each.
        let op = cj_rule::<Rational>(2, 0);
        let image = op.apply(&GradedPoly::var(2, BasisTag::P, 2, 0));
        assert_eq!(image.coeff(&cp("1,1|-")), rat_int(1));
        assert_eq!(image.coeff(&cp("-|1,1")), rat_int(1));
        assert_eq!(image.num_terms(), 2);

        // CJ_0 p1_2: the splits (0,1) and (1,0) land on the same monomial.
        let image = op.apply(&GradedPoly::var(2, BasisTag::P, 2, 1));
        assert_eq!(image.coeff(&cp("1|1")), rat_int(2));
        assert_eq!(image.num_terms(), 1);
    }

    #[test]
    fn join_counts_ordered_pairs() {
        // CJ_0 p0_1^2 = (join) m * p0_2; the cut part needs a part >= 2.
        let op = cj_rule::<Rational>(3, 0);
        let image = op.apply(&GradedPoly::monomial(
            3,
            BasisTag::P,
            cp("1,1|-|-"),
            rat_int(1),
        ));
        assert_eq!(image.coeff(&cp("2|-|-")), rat_int(3));
        assert_eq!(image.num_terms(), 1);
    }

    #[test]
    fn shift_moves_colors() {
        let op = cj_rule::<Rational>(3, 1);
        let image = op.apply(&GradedPoly::monomial(
            3,
            BasisTag::P,
            cp("2|1|-"),
            rat_int(1),
        ));
        // the 2 of color 0 moves to color 1, the 1 of color 1 moves to color 2
        assert_eq!(image.coeff(&cp("-|2,1|-")), rat_int(2));
        assert_eq!(image.coeff(&cp("2|-|1")), rat_int(1));
    }

    #[test]
    fn operators_preserve_degree() {
        for m in 1..=3u32 {
            for k in 0..m {
                let op = cj_rule::<Rational>(m, k);
                for n in 0..=4u32 {
                    for part in gen_colored_partitions(m, n) {
                        let image =
                            op.apply(&GradedPoly::monomial(m, BasisTag::P, part, rat_int(1)));
                        if !image.is_zero() {
                            assert_eq!(image.homogeneous_degree(), Some(n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn operators_commute_pairwise() {
        for (m, n) in [(2u32, 3u32), (3, 2), (3, 3)] {
            let basis = ColoredBasis::new(m, n);
            let mats: Vec<Mat<Rational>> =
                (0..m).map(|k| cj_rule::<Rational>(m, k).matrix_on(&basis)).collect();
            for a in &mats {
                for b in &mats {
                    assert_eq!(a.matmul(b), b.matmul(a));
                }
            }
        }
    }

    #[test]
    fn diagram_constants_are_one() {
        for (m, n) in [(1u32, 4usize), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let report = verify_diagram(m, n);
            assert!(report.pass(), "diagram failed at m={m} n={n}: {:?}", report.constants);
        }
    }

    #[test]
    fn dft_round_trip() {
        let dft = DFTChange::new(3);
        for n in 0..=3u32 {
            for part in gen_colored_partitions(3, n) {
                let p = GradedPoly::monomial(3, BasisTag::P, part, CycloNumber::from_int(1));
                assert_eq!(dft.to_p(&dft.to_u(&p)), p);
            }
        }
    }

    #[test]
    fn dft_block_diagonalizes() {
        for (m, n) in [(1u32, 3u32), (2, 2), (2, 3), (3, 2), (4, 2)] {
            let report = dft_identities(m, n);
            assert!(report.pass(), "dft identities failed at m={m} n={n}");
        }
    }

    #[test]
    fn evolution_matches_enumeration() {
        let gf = GenFunction::evolve(2, 2, &[2, 2]);
        for key in [[0u32, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]] {
            let profile = Profile(key.to_vec());
            let brute = hurwitz_bruteforce_table(2, 2, &profile, 1 << 20).unwrap();
            for cp in ColoredBasis::new(2, 2).iter() {
                assert_eq!(
                    gf.hurwitz(&profile, cp).unwrap(),
                    brute.get(&profile, cp).cloned().unwrap_or_else(Rational::zero),
                    "mismatch at {profile} {cp}"
                );
            }
        }
    }

    #[test]
    fn evolution_matches_class_dp() {
        let gf = GenFunction::evolve(3, 3, &[2, 1, 1]);
        for (key, _) in gf.slices() {
            let profile = Profile(key.clone());
            for n in 1..=3u32 {
                let dp = hurwitz_classdp_table(3, n as usize, &profile);
                for cp in ColoredBasis::new(3, n).iter() {
                    assert_eq!(
                        gf.hurwitz(&profile, cp).unwrap(),
                        dp.get(&profile, cp).cloned().unwrap(),
                        "mismatch at {profile} {cp}"
                    );
                }
            }
        }
    }

    #[test]
    fn frozen_small_values() {
        let gf = GenFunction::evolve(2, 2, &[1, 1]);
        assert_eq!(gf.hurwitz(&Profile(vec![1, 0]), &cp("2|-")).unwrap(), rat(1, 4));
        assert_eq!(gf.hurwitz(&Profile(vec![0, 1]), &cp("1|1")).unwrap(), rat(1, 4));
        assert_eq!(gf.hurwitz(&Profile(vec![1, 0]), &cp("1,1|-")).unwrap(), rat_int(0));

        let gf3 = GenFunction::evolve(3, 1, &[0, 1, 0]);
        assert_eq!(gf3.hurwitz(&Profile(vec![0, 1, 0]), &cp("-|1|-")).unwrap(), rat(1, 3));
        assert_eq!(gf3.hurwitz(&Profile(vec![0, 1, 0]), &cp("-|-|1")).unwrap(), rat_int(0));
    }

    #[test]
    fn pde_holds_on_all_axes() {
        assert!(GenFunction::evolve(2, 3, &[2, 2]).pde_check());
        assert!(GenFunction::evolve(3, 2, &[1, 1, 1]).pde_check());
    }

    #[test]
    fn zero_profile_slice_is_exponential_seed() {
        let gf = GenFunction::evolve(2, 3, &[1, 1]);
        let seed = gf.slice(&[0, 0]).unwrap();
        assert_eq!(seed.coeff(&cp("-|-")), rat_int(1));
        assert_eq!(seed.coeff(&cp("1|-")), rat_int(1));
        assert_eq!(seed.coeff(&cp("1,1|-")), rat(1, 2));
        assert_eq!(seed.coeff(&cp("1,1,1|-")), rat(1, 6));
        assert_eq!(seed.num_terms(), 4);
    }
}
