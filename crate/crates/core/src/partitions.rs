//! Integer partitions, m-colored partitions, and the bases they index.
//!
//! * [`Partition`]: weakly decreasing positive parts.  [`gen_partitions`]
//!   lists the partitions of n in reverse-lexicographic order, largest
//!   first: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
//! * [`ColoredPartition`]: an m-tuple of partitions written
//!   `lambda_0 | lambda_1 | ... | lambda_{m-1}`; when the sizes add up to n
//!   these index the conjugacy classes of G(m,1,n) and the degree-n
//!   monomials in m families of power-sum variables.  Textual form
//!   `"2,1|-|1"` with `-` for an empty component.
//! * [`ColoredBasis`]: the colored partitions of fixed total size in the
//!   canonical listing order of [`gen_colored_partitions`], with index
//!   lookups both ways.  Every matrix in this crate is written over it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&k| k > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |lambda|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of k as a part.
    pub fn mult(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn with_part_added(&self, k: u32) -> Self {
        let mut parts = self.parts.clone();
        parts.push(k);
        Partition::new(parts)
    }

    /// Remove one copy of k; `None` if k is not a part.
    pub fn with_part_removed(&self, k: u32) -> Option<Self> {
        let i = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(i);
        Some(Partition { parts })
    }

    /// The centralizer order z_lambda = prod_k k^(m_k) m_k! in S_|lambda|.
    pub fn zee(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(k, c)| {
                (1..=c as u128).product::<u128>() * (k as u128).pow(c)
            })
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
                    .and_then(|k| {
                        if k == 0 {
                            Err(Error::Parse("partition parts must be positive".into()))
                        } else {
                            Ok(k)
                        }
                    })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Partition::new(parts))
    }
}

/// Partitions of n, reverse-lexicographically, largest first.
pub fn gen_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_rec(n, n, &mut prefix, &mut out);
    out
}

fn gen_rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for k in (1..=remaining.min(max)).rev() {
        prefix.push(k);
        gen_rec(remaining - k, k, prefix, out);
        prefix.pop();
    }
}

/// An m-tuple of partitions; the degree is the sum of the component sizes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColoredPartition {
    components: Vec<Partition>,
}

impl ColoredPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "need at least one color");
        ColoredPartition { components }
    }

    pub fn empty(m: u32) -> Self {
        ColoredPartition {
            components: vec![Partition::empty(); m as usize],
        }
    }

    /// Total size n concentrated as 1^n in color 0; the identity class.
    pub fn ones(m: u32, n: u32) -> Self {
        let mut cp = Self::empty(m);
        cp.components[0] = Partition::new(vec![1; n as usize]);
        cp
    }

    pub fn m(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn total(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn component(&self, alpha: u32) -> &Partition {
        &self.components[alpha as usize]
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Multiplicity of part k in color alpha.
    pub fn mult(&self, k: u32, alpha: u32) -> u32 {
        self.components[alpha as usize].mult(k)
    }

    /// All (part, color, multiplicity) triples present.
    pub fn part_counts(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for (alpha, comp) in self.components.iter().enumerate() {
            for (k, c) in comp.multiplicities() {
                out.push((k, alpha as u32, c));
            }
        }
        out
    }

    pub fn with_part_added(&self, k: u32, alpha: u32) -> Self {
        let mut components = self.components.clone();
        components[alpha as usize] = components[alpha as usize].with_part_added(k);
        ColoredPartition { components }
    }

    pub fn with_part_removed(&self, k: u32, alpha: u32) -> Option<Self> {
        let mut components = self.components.clone();
        components[alpha as usize] = components[alpha as usize].with_part_removed(k)?;
        Some(ColoredPartition { components })
    }

    /// Componentwise multiset union; the monomial product.
    pub fn merged(&self, other: &ColoredPartition) -> ColoredPartition {
        assert_eq!(self.m(), other.m());
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                Partition::new(parts)
            })
            .collect();
        ColoredPartition { components }
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "{}", body.join("|"))
    }
}

impl FromStr for ColoredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split('|')
            .map(Partition::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(ColoredPartition::new(components))
    }
}

/// Colored partitions of total size n with m colors.
///
/// Listing order: lexicographic in the component tuple, where each slot
/// ranges over component sizes in decreasing order and, within a size, over
/// partitions in the [`gen_partitions`] order.  So for m = 2, n = 2:
/// `2|-`, `1,1|-`, `1|1`, `-|2`, `-|1,1`.
pub fn gen_colored_partitions(m: u32, n: u32) -> Vec<ColoredPartition> {
    assert!(m >= 1);
    let per_size: Vec<Vec<Partition>> = (0..=n).map(gen_partitions).collect();
    let mut out = Vec::new();
    let mut prefix: Vec<Partition> = Vec::new();
    fn rec(
        alpha: u32,
        m: u32,
        rem: u32,
        per_size: &[Vec<Partition>],
        prefix: &mut Vec<Partition>,
        out: &mut Vec<ColoredPartition>,
    ) {
        if alpha == m - 1 {
            for p in &per_size[rem as usize] {
                prefix.push(p.clone());
                out.push(ColoredPartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for s in (0..=rem).rev() {
            for p in &per_size[s as usize] {
                prefix.push(p.clone());
                rec(alpha + 1, m, rem - s, per_size, prefix, out);
                prefix.pop();
            }
        }
    }
    rec(0, m, n, &per_size, &mut prefix, &mut out);
    out
}

/// The colored partitions of total size n, indexed both ways.
#[derive(Clone, Debug)]
pub struct ColoredBasis {
    m: u32,
    n: u32,
    items: Vec<ColoredPartition>,
    index: HashMap<ColoredPartition, usize>,
}

impl ColoredBasis {
    pub fn new(m: u32, n: u32) -> Self {
        let items = gen_colored_partitions(m, n);
        let index = items
            .iter()
            .enumerate()
            .map(|(i, cp)| (cp.clone(), i))
            .collect();
        ColoredBasis { m, n, items, index }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.items.len()
    }

    pub fn at_index(&self, i: usize) -> &ColoredPartition {
        &self.items[i]
    }

    pub fn index_of(&self, cp: &ColoredPartition) -> Option<usize> {
        self.index.get(cp).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ColoredPartition> {
        self.items.iter()
    }
}
