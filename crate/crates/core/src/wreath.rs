//! The wreath product G(m,1,n) = (Z/m) wr S_n.
//!
//! Elements are pairs [u; g] with u in S_n and g in (Z/m)^n, multiplying by
//!
//! ```text
//! [u; g] * [v; h] = [u v; v(g) + h],      v(g)_k = g_(v(k)),
//! ```
//!
//! so the right factor permutes the colors of the left one before adding.
//! G(m,1,n) sits inside S_(mn) as the centralizer of tau, the product of n
//! disjoint m-cycles that shifts every point by n.  Conjugacy classes are
//! indexed by m-colored partitions of n: each cycle of u contributes its
//! length as a part whose color is the sum of the colors along the cycle.
//! On the S_(mn) side the same part of length k and color alpha shows up as
//! a family of gcd(m, alpha) cycles of length k*m/gcd(m, alpha) permuted by
//! tau; [`beta_type`] reads the colored partition off that picture directly.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partitions::{ColoredPartition, Partition};
use crate::perm::Perm;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WreathElement {
    m: u32,
    perm: Perm,
    colors: Vec<u32>,
}

impl WreathElement {
    pub fn new(m: u32, perm: Perm, colors: Vec<u32>) -> Self {
        assert!(m >= 1);
        assert_eq!(perm.degree(), colors.len());
        assert!(colors.iter().all(|&c| c < m), "colors must lie in 0..m");
        WreathElement { m, perm, colors }
    }

    pub fn identity(m: u32, n: usize) -> Self {
        WreathElement::new(m, Perm::identity(n), vec![0; n])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.perm.degree()
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// The group law [u; g][v; h] = [uv; v(g) + h].
    pub fn mul(&self, other: &WreathElement) -> WreathElement {
        assert_eq!(self.m, other.m);
        assert_eq!(self.n(), other.n());
        let perm = self.perm.compose(&other.perm);
        let colors = (0..self.n())
            .map(|k| (self.colors[other.perm.apply(k)] + other.colors[k]) % self.m)
            .collect();
        WreathElement {
            m: self.m,
            perm,
            colors,
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let pinv = self.perm.inverse();
        let colors = (0..self.n())
            .map(|k| (self.m - self.colors[pinv.apply(k)]) % self.m)
            .collect();
        WreathElement {
            m: self.m,
            perm: pinv,
            colors,
        }
    }

    pub fn conjugate_by(&self, g: &WreathElement) -> WreathElement {
        g.mul(self).mul(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.colors.iter().all(|&c| c == 0)
    }

    /// The class invariant: each cycle of u of length k whose colors sum to
    /// alpha mod m contributes a part k in color alpha.
    pub fn colored_type(&self) -> ColoredPartition {
        let mut comps = vec![Vec::new(); self.m as usize];
        for cyc in self.perm.cycles() {
            let total: u32 = cyc.iter().map(|&x| self.colors[x]).sum();
            comps[(total % self.m) as usize].push(cyc.len() as u32);
        }
        ColoredPartition::new(comps.into_iter().map(Partition::new).collect())
    }

    /// Image in S_(mn): point i + k*n goes to u(i) + (k + g_i)*n mod mn.
    pub fn embed(&self) -> Perm {
        let n = self.n();
        let m = self.m as usize;
        let mut img = vec![0; m * n];
        for i in 0..n {
            for k in 0..m {
                img[i + k * n] =
                    self.perm.apply(i) + ((k + self.colors[i] as usize) % m) * n;
            }
        }
        Perm::from_images(img)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: Vec<String> = self.colors.iter().map(u32::to_string).collect();
        write!(f, "[{}; {}]", self.perm, colors.join(" "))
    }
}

/// The long shift on {0..mn}: x -> x + n mod mn, a product of n m-cycles.
pub fn tau(m: u32, n: usize) -> Perm {
    let mn = m as usize * n;
    Perm::from_images((0..mn).map(|x| (x + n) % mn).collect())
}

/// Colored partition of a permutation of {0..mn} that centralizes tau; the
/// cycles through each base point are grouped into tau-orbit families.
pub fn beta_type(p: &Perm, m: u32, n: usize) -> Result<ColoredPartition> {
    let mn = m as usize * n;
    assert_eq!(p.degree(), mn, "degree must be m*n");
    let t = tau(m, n);
    if p.compose(&t) != t.compose(p) {
        return Err(Error::NotInCentralizer);
    }
    let mut comps = vec![Vec::new(); m as usize];
    let mut seen = vec![false; mn];
    for x in 0..mn {
        if seen[x] {
            continue;
        }
        // follow p until the base point returns; the level offset is the color
        let base = x % n;
        let mut segment = vec![x];
        let mut y = p.apply(x);
        while y % n != base {
            segment.push(y);
            y = p.apply(y);
        }
        let k = segment.len();
        let alpha = ((y as i64 - x as i64) / n as i64).rem_euclid(m as i64) as u32;
        comps[alpha as usize].push(k as u32);
        for s in segment {
            for lvl in 0..m as usize {
                seen[(s + lvl * n) % mn] = true;
            }
        }
    }
    Ok(ColoredPartition::new(
        comps.into_iter().map(Partition::new).collect(),
    ))
}

/// The reflections of G(m,1,n), split into their m conjugacy classes.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub kind: ReflectionKind,
    pub element: WreathElement,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReflectionKind {
    /// Swaps coordinates i < j, twisting their colors by +alpha and -alpha.
    Swap { i: usize, j: usize, alpha: u32 },
    /// Multiplies coordinate i by the k-th power of the primitive root.
    Diag { i: usize, k: u32 },
}

impl ReflectionKind {
    /// 0 for the swap class, k for the k-th diagonal class.
    pub fn class_index(&self) -> u32 {
        match self {
            ReflectionKind::Swap { .. } => 0,
            ReflectionKind::Diag { k, .. } => *k,
        }
    }
}

/// All m*n(n-1)/2 swap reflections and n*(m-1) diagonal ones.
pub fn all_reflections(m: u32, n: usize) -> Vec<Reflection> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for alpha in 0..m {
                let mut colors = vec![0; n];
                colors[i] = alpha;
                colors[j] = (m - alpha) % m;
                out.push(Reflection {
                    kind: ReflectionKind::Swap { i, j, alpha },
                    element: WreathElement::new(m, Perm::transposition(n, i, j), colors),
                });
            }
        }
    }
    for k in 1..m {
        for i in 0..n {
            let mut colors = vec![0; n];
            colors[i] = k;
            out.push(Reflection {
                kind: ReflectionKind::Diag { i, k },
                element: WreathElement::new(m, Perm::identity(n), colors),
            });
        }
    }
    out
}

/// The reflections in class `class` (0 = swaps, k >= 1 = k-th diagonals).
pub fn reflection_class(m: u32, n: usize, class: u32) -> Vec<WreathElement> {
    assert!(class < m, "reflection class out of range");
    all_reflections(m, n)
        .into_iter()
        .filter(|r| r.kind.class_index() == class)
        .map(|r| r.element)
        .collect()
}

pub fn group_order(m: u32, n: usize) -> u128 {
    (1..=n as u128).product::<u128>() * (m as u128).pow(n as u32)
}

/// |C_cp| = n! m^n / prod_alpha (z_(lambda_alpha) m^(len lambda_alpha)).
pub fn class_size(m: u32, n: usize, cp: &ColoredPartition) -> u128 {
    assert_eq!(cp.m(), m);
    assert_eq!(cp.total() as usize, n);
    let mut num = group_order(m, n);
    for comp in cp.components() {
        let den = comp.zee() * (m as u128).pow(comp.len() as u32);
        assert_eq!(num % den, 0, "class size formula must divide the order");
        num /= den;
    }
    num
}

/// A canonical element of the class: consecutive cycles, the color of each
/// cycle carried by its last point.
pub fn class_representative(m: u32, n: usize, cp: &ColoredPartition) -> WreathElement {
    assert_eq!(cp.total() as usize, n);
    let mut img: Vec<usize> = (0..n).collect();
    let mut colors = vec![0; n];
    let mut pos = 0;
    for (alpha, comp) in cp.components().iter().enumerate() {
        for &k in comp.parts() {
            let k = k as usize;
            for q in pos..pos + k - 1 {
                img[q] = q + 1;
            }
            img[pos + k - 1] = pos;
            colors[pos + k - 1] = alpha as u32;
            pos += k;
        }
    }
    WreathElement::new(m, Perm::from_images(img), colors)
}

/// Every element of G(m,1,n); errors out when m^n n! exceeds the budget.
pub fn enumerate_group(m: u32, n: usize, budget: u64) -> Result<Vec<WreathElement>> {
    let order = group_order(m, n);
    if order > budget as u128 {
        return Err(Error::BudgetExceeded {
            task: "enumerate_group",
            needed: order,
            cap: budget as u128,
        });
    }
    if n == 0 {
        return Ok(vec![WreathElement::identity(m, 0)]);
    }
    let mut out = Vec::with_capacity(order as usize);
    for perm in Perm::all(n) {
        for colors in (0..n).map(|_| 0..m).multi_cartesian_product() {
            out.push(WreathElement::new(m, perm.clone(), colors));
        }
    }
    Ok(out)
}

/// Scans all of S_(mn) and confirms that the permutations commuting with
/// tau are exactly the embedded copies of G(m,1,n), in particular that the
/// centralizer has order m^n n!.  Costs (mn)! permutation products.
pub fn centralizer_check(m: u32, n: usize, budget: u64) -> Result<bool> {
    let deg = m as usize * n;
    let size: u128 = (1..=deg as u128).product();
    if size > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            task: "centralizer scan of S_(mn)",
            needed: size,
            cap: u128::from(budget),
        });
    }
    let t = tau(m, n);
    let centralizer: HashSet<Perm> = Perm::all(deg)
        .into_iter()
        .filter(|p| p.compose(&t) == t.compose(p))
        .collect();
    let image: HashSet<Perm> =
        enumerate_group(m, n, budget)?.iter().map(WreathElement::embed).collect();
    Ok(centralizer.len() as u128 == group_order(m, n) && centralizer == image)
}

/// Confirms on all pairs that the embedding into S_(mn) is an injective
/// homomorphism landing in the centralizer of tau.
pub fn embedding_check(m: u32, n: usize, budget: u64) -> Result<bool> {
    let g = enumerate_group(m, n, budget)?;
    let order = group_order(m, n);
    if order.saturating_mul(order) > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            task: "pairwise homomorphism scan",
            needed: order.saturating_mul(order),
            cap: u128::from(budget),
        });
    }
    let t = tau(m, n);
    let images: HashSet<Perm> = g.iter().map(WreathElement::embed).collect();
    if images.len() as u128 != order || images.iter().any(|p| p.compose(&t) != t.compose(p)) {
        return Ok(false);
    }
    Ok(g.iter().all(|a| {
        g.iter().all(|b| a.mul(b).embed() == a.embed().compose(&b.embed()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{HashMap, HashSet};

    fn w(m: u32, img: Vec<usize>, colors: Vec<u32>) -> WreathElement {
        WreathElement::new(m, Perm::from_images(img), colors)
    }

    #[test]
    fn product_permutes_colors_by_the_right_factor() {
        let a = w(2, vec![0, 1], vec![1, 0]);
        let b = w(2, vec![1, 0], vec![0, 0]);
        // [id;(1,0)]*[(1 2);0] = [(1 2); (0,1)], colors pulled through (1 2)
        assert_eq!(a.mul(&b), w(2, vec![1, 0], vec![0, 1]));
        assert_eq!(b.mul(&a), w(2, vec![1, 0], vec![1, 0]));
    }

    #[test]
    fn colored_type_reads_cycle_color_sums() {
        let x = w(2, vec![1, 0], vec![1, 0]);
        assert_eq!(x.colored_type().to_string(), "-|2");
        let y = w(3, vec![0, 1], vec![2, 0]);
        assert_eq!(y.colored_type().to_string(), "1|-|1");
    }

    #[test]
    fn tau_is_the_long_shift() {
        assert_eq!(tau(2, 2).images(), &[2, 3, 0, 1]);
        assert_eq!(tau(2, 2).to_string(), "(1 3)(2 4)");
        assert_eq!(tau(3, 2).cycle_type(), Partition::new(vec![3, 3]));
        assert_eq!(tau(1, 4), Perm::identity(4));
    }

    #[test]
    fn embedding_of_worked_examples() {
        // [(1 2); 0] doubles the transposition across levels
        let x = w(2, vec![1, 0], vec![0, 0]);
        assert_eq!(x.embed().images(), &[1, 0, 3, 2]);
        // [id; (1,0)] swaps point 1 across levels only
        let y = w(2, vec![0, 1], vec![1, 0]);
        assert_eq!(y.embed().images(), &[2, 1, 0, 3]);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for (m, n) in [(2, 2), (3, 2), (2, 3)] {
            let g = enumerate_group(m, n, 10_000).unwrap();
            for a in &g {
                for b in &g {
                    assert_eq!(
                        a.mul(b).embed(),
                        a.embed().compose(&b.embed()),
                        "m={m} n={n} a={a} b={b}"
                    );
                }
            }
            // injective, and every image centralizes tau
            let images: HashSet<Perm> = g.iter().map(WreathElement::embed).collect();
            assert_eq!(images.len() as u128, group_order(m, n));
            let t = tau(m, n);
            for p in &images {
                assert_eq!(p.compose(&t), t.compose(p));
            }
        }
    }

    #[test]
    fn image_exhausts_the_centralizer_of_tau() {
        let (m, n) = (2, 2);
        let t = tau(m, n);
        let centralizer: HashSet<Perm> = Perm::all(m as usize * n)
            .into_iter()
            .filter(|p| p.compose(&t) == t.compose(p))
            .collect();
        let image: HashSet<Perm> = enumerate_group(m, n, 1000)
            .unwrap()
            .iter()
            .map(WreathElement::embed)
            .collect();
        assert_eq!(centralizer, image);
    }

    #[test]
    fn inverses_cancel() {
        for x in enumerate_group(3, 2, 1000).unwrap() {
            assert!(x.mul(&x.inverse()).is_identity());
            assert!(x.inverse().mul(&x).is_identity());
        }
    }

    #[test]
    fn beta_type_matches_colored_type_through_the_embedding() {
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (4, 1), (3, 3)] {
            for x in enumerate_group(m, n, 2_000_000).unwrap() {
                assert_eq!(
                    beta_type(&x.embed(), m, n).unwrap(),
                    x.colored_type(),
                    "m={m} n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn beta_type_rejects_outsiders() {
        // (1 2) in S_4 does not commute with tau(2,2)
        let p = Perm::transposition(4, 0, 1);
        assert!(matches!(
            beta_type(&p, 2, 2),
            Err(Error::NotInCentralizer)
        ));
    }

    #[test]
    fn class_sizes_match_exhaustive_counts() {
        for (m, n) in [(1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
            let mut counts: HashMap<ColoredPartition, u128> = HashMap::new();
            for x in enumerate_group(m, n, 2_000_000).unwrap() {
                *counts.entry(x.colored_type()).or_insert(0) += 1;
            }
            let mut total = 0u128;
            for (cp, c) in &counts {
                assert_eq!(class_size(m, n, cp), *c, "m={m} n={n} cp={cp}");
                total += c;
            }
            assert_eq!(total, group_order(m, n));
        }
    }

    #[test]
    fn colored_type_is_exactly_conjugacy() {
        // same type <=> conjugate, checked by orbit expansion
        for (m, n) in [(2, 2), (2, 3), (3, 2)] {
            let g = enumerate_group(m, n, 10_000).unwrap();
            let mut by_type: HashMap<ColoredPartition, HashSet<WreathElement>> = HashMap::new();
            for x in &g {
                by_type
                    .entry(x.colored_type())
                    .or_default()
                    .insert(x.clone());
            }
            for (cp, class) in by_type {
                let rep = class.iter().next().unwrap();
                let orbit: HashSet<WreathElement> =
                    g.iter().map(|h| rep.conjugate_by(h)).collect();
                assert_eq!(orbit, class, "m={m} n={n} cp={cp}");
            }
        }
    }

    #[test]
    fn reflection_census() {
        for (m, n) in [(1, 3), (2, 3), (3, 2), (4, 2)] {
            let refl = all_reflections(m, n);
            let swaps = m as usize * n * (n - 1) / 2;
            let diags = n * (m as usize - 1);
            assert_eq!(refl.len(), swaps + diags);
            for r in &refl {
                let cp = r.element.colored_type();
                match r.kind {
                    ReflectionKind::Swap { .. } => {
                        assert_eq!(cp.mult(2, 0), 1);
                        assert_eq!(cp.mult(1, 0), n as u32 - 2);
                        // swaps really are involutions
                        assert!(r.element.mul(&r.element).is_identity());
                    }
                    ReflectionKind::Diag { k, .. } => {
                        assert_eq!(cp.mult(1, k), 1);
                        assert_eq!(cp.mult(1, 0), n as u32 - 1);
                    }
                }
            }
            for class in 0..m {
                let expect = if class == 0 { swaps } else { n };
                assert_eq!(reflection_class(m, n, class).len(), expect);
            }
        }
    }

    #[test]
    fn representative_has_the_right_type() {
        for (m, n) in [(2, 3), (3, 3), (4, 2)] {
            for cp in crate::partitions::gen_colored_partitions(m, n as u32) {
                let rep = class_representative(m, n, &cp);
                assert_eq!(rep.colored_type(), cp);
            }
        }
    }

    #[test]
    fn budget_guard_trips() {
        assert!(matches!(
            enumerate_group(4, 8, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    proptest! {
        #[test]
        fn conjugation_preserves_colored_type(seed in 0usize..100_000) {
            let (m, n) = (3, 3);
            let g = enumerate_group(m, n, 1_000_000).unwrap();
            let x = &g[seed % g.len()];
            let h = &g[(seed * 7 + 13) % g.len()];
            prop_assert_eq!(x.conjugate_by(h).colored_type(), x.colored_type());
        }
    }
}
