//! Permutations of {0, ..., n-1} in image-table form.  Display is one-based
//! cycle notation, matching the usual convention for worked examples.

use std::fmt;

use itertools::Itertools;

use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n).collect(),
        }
    }

    pub fn from_images(img: Vec<usize>) -> Self {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            assert!(x < n && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm { img }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n && i != j);
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(i, j);
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// (self.compose(other))(x) = self(other(x)); other acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            img: other.img.iter().map(|&x| self.img[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            img[y] = x;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Cycles (fixed points included), each starting at its minimum,
    /// ordered by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.img[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// All n! permutations of degree n; keep n small.
    pub fn all(n: usize) -> Vec<Perm> {
        assert!(n <= 10, "refusing to list more than 10! permutations");
        if n == 0 {
            return vec![Perm::identity(0)];
        }
        (0..n)
            .permutations(n)
            .map(Perm::from_images)
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cyc in self.cycles() {
            if cyc.len() < 2 {
                continue;
            }
            let body: Vec<String> = cyc.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        // a = (0 1), b = (1 2); a.compose(b) sends 1 -> b -> 2 -> a -> 2
        let a = Perm::transposition(3, 0, 1);
        let b = Perm::transposition(3, 1, 2);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.cycle_type(), Partition::new(vec![3]));
    }

    #[test]
    fn inverse_and_identity() {
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
    }

    #[test]
    fn cycle_types_partition_the_degree() {
        for p in Perm::all(5) {
            assert_eq!(p.cycle_type().size(), 5);
        }
    }

    #[test]
    fn display_is_one_based() {
        let p = Perm::from_images(vec![2, 3, 0, 1]);
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(Perm::identity(3).to_string(), "()");
    }
}
