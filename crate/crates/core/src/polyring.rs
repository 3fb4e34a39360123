//! Sparse polynomials in the colored power-sum variables.
//!
//! A monomial in m families of variables is recorded as a colored partition:
//! a part k in component alpha stands for one factor of the variable
//! `p{alpha}_k`.  The same container serves two coordinate systems, told
//! apart by [`BasisTag`]: the power sums `p` attached to conjugacy classes,
//! and their discrete Fourier transforms `u` in which the cut-and-join
//! family becomes block diagonal.
//!
//! [`LinearOperator`] is either a substitution rule applied monomial by
//! monomial or an explicit matrix over the degree-n monomial basis.  Rules
//! are the natural form for differential operators; matrices are what the
//! class-algebra side of the theory produces, and `matrix_on` converts one
//! to the other so the two can be compared entry by entry.

use std::fmt;
use std::rc::Rc;

use crate::cyclo::{Rational, Scalar};
use crate::enumeration::ClassVector;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::partitions::{ColoredBasis, ColoredPartition};

/// Which family of variables a polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisTag {
    /// Power sums indexed by conjugacy classes.
    P,
    /// Fourier-transformed power sums.
    U,
}

impl BasisTag {
    fn letter(self) -> char {
        match self {
            BasisTag::P => 'p',
            BasisTag::U => 'u',
        }
    }
}

/// A single monomial: a colored partition read multiplicatively.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub tag: BasisTag,
    pub cp: ColoredPartition,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.cp.total()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cp.total() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, alpha, count) in self.cp.part_counts() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}{}_{}", self.tag.letter(), alpha, k)?;
            if count > 1 {
                write!(f, "^{}", count)?;
            }
        }
        Ok(())
    }
}

/// A polynomial with coefficients in a [`Scalar`] ring, graded by total
/// degree.  Terms are kept in a sorted map and zero coefficients are never
/// stored, so equality, printing, and iteration order are all canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedPoly<C: Scalar> {
    m: u32,
    tag: BasisTag,
    terms: std::collections::BTreeMap<ColoredPartition, C>,
}

impl<C: Scalar> GradedPoly<C> {
    pub fn zero(m: u32, tag: BasisTag) -> Self {
        GradedPoly { m, tag, terms: std::collections::BTreeMap::new() }
    }

    pub fn constant(m: u32, tag: BasisTag, c: C) -> Self {
        let mut p = Self::zero(m, tag);
        p.add_term(ColoredPartition::empty(m), c);
        p
    }

    pub fn monomial(m: u32, tag: BasisTag, cp: ColoredPartition, c: C) -> Self {
        assert_eq!(cp.m(), m);
        let mut p = Self::zero(m, tag);
        p.add_term(cp, c);
        p
    }

    /// The variable `p{alpha}_k` itself.
    pub fn var(m: u32, tag: BasisTag, k: u32, alpha: u32) -> Self {
        Self::monomial(m, tag, ColoredPartition::empty(m).with_part_added(k, alpha), C::one())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ColoredPartition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, cp: &ColoredPartition) -> C {
        self.terms.get(cp).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c` to the coefficient of `cp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, cp: ColoredPartition, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(cp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        assert_eq!(self.tag, other.tag);
        let mut out = self.clone();
        for (cp, c) in &other.terms {
            out.add_term(cp.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(self.tag, |c| -c.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.tag);
        }
        self.map_coeffs(self.tag, |x| x.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        assert_eq!(self.tag, other.tag);
        let mut out = Self::zero(self.m, self.tag);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.merged(b), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Partial derivative in the variable `p{alpha}_k`.
    pub fn partial(&self, k: u32, alpha: u32) -> Self {
        let mut out = Self::zero(self.m, self.tag);
        for (cp, c) in &self.terms {
            let mult = cp.mult(k, alpha);
            if mult == 0 {
                continue;
            }
            let reduced = cp.with_part_removed(k, alpha).unwrap();
            out.add_term(reduced, c.clone() * C::from_rational(Rational::from_integer(mult.into())));
        }
        out
    }

    /// Multiplication by the single variable `p{alpha}_k`.
    pub fn mul_var(&self, k: u32, alpha: u32) -> Self {
        let mut out = Self::zero(self.m, self.tag);
        for (cp, c) in &self.terms {
            out.add_term(cp.with_part_added(k, alpha), c.clone());
        }
        out
    }

    pub fn homogeneous_component(&self, n: u32) -> Self {
        let mut out = Self::zero(self.m, self.tag);
        for (cp, c) in &self.terms {
            if cp.total() == n {
                out.add_term(cp.clone(), c.clone());
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|cp| cp.total()).max().unwrap_or(0)
    }

    /// `Some(n)` when every term has degree n (the zero polynomial is not
    /// homogeneous of any degree here).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|cp| cp.total());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Rebuilds the polynomial with new coefficients, possibly in another
    /// scalar ring and another variable family.
    pub fn map_coeffs<D: Scalar>(&self, tag: BasisTag, f: impl Fn(&C) -> D) -> GradedPoly<D> {
        let mut out = GradedPoly::zero(self.m, tag);
        for (cp, c) in &self.terms {
            out.add_term(cp.clone(), f(c));
        }
        out
    }
}

/// Widens rational coefficients into any scalar ring.
pub fn promote<C: Scalar>(p: &GradedPoly<Rational>) -> GradedPoly<C> {
    p.map_coeffs(p.tag(), |c| C::from_rational(c.clone()))
}

impl<C: Scalar> fmt::Display for GradedPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (cp, c) in &self.terms {
            let mut cs = c.to_string();
            if !first {
                if let Some(stripped) = cs.strip_prefix('-').filter(|_| !cs.contains(' ')) {
                    write!(f, " - ")?;
                    cs = stripped.to_string();
                } else {
                    write!(f, " + ")?;
                }
            }
            first = false;
            let mono = Monomial { tag: self.tag, cp: cp.clone() };
            if cp.total() == 0 {
                write!(f, "{}", cs)?;
            } else if cs == "1" {
                write!(f, "{}", mono)?;
            } else if cs.contains(' ') {
                write!(f, "({})*{}", cs, mono)?;
            } else {
                write!(f, "{}*{}", cs, mono)?;
            }
        }
        Ok(())
    }
}

/// Sends a class-algebra vector to the corresponding power-sum polynomial:
/// the class of colored type lambda goes to the monomial p_lambda.
pub fn theta(v: &ClassVector, basis: &ColoredBasis) -> GradedPoly<Rational> {
    assert_eq!((v.m, v.n), (basis.m(), basis.n()));
    let mut out = GradedPoly::zero(basis.m(), BasisTag::P);
    for (i, c) in v.coords.iter().enumerate() {
        out.add_term(basis.at_index(i).clone(), c.clone());
    }
    out
}

/// Inverse of [`theta`] on its image: requires a homogeneous polynomial of
/// the basis degree in the p variables.
pub fn theta_inv(p: &GradedPoly<Rational>, basis: &ColoredBasis) -> Result<ClassVector> {
    if p.tag() != BasisTag::P {
        return Err(Error::Usage("theta_inv expects a polynomial in the p variables".into()));
    }
    let mut coords = vec![Rational::from_integer(0.into()); basis.dim()];
    for (cp, c) in p.terms() {
        if cp.total() != basis.n() {
            return Err(Error::DegreeMismatch { expected: basis.n(), found: cp.total() });
        }
        coords[basis.index_of(cp).expect("degree matches the basis")] = c.clone();
    }
    Ok(ClassVector { m: basis.m(), n: basis.n(), coords })
}

enum Imp<C: Scalar> {
    Rule(Rc<dyn Fn(&Monomial) -> GradedPoly<C>>),
    Matrix { basis: Rc<ColoredBasis>, mat: Mat<C> },
}

impl<C: Scalar> Clone for Imp<C> {
    fn clone(&self) -> Self {
        match self {
            Imp::Rule(f) => Imp::Rule(Rc::clone(f)),
            Imp::Matrix { basis, mat } => Imp::Matrix { basis: Rc::clone(basis), mat: mat.clone() },
        }
    }
}

/// A degree-preserving linear operator on [`GradedPoly`].
#[derive(Clone)]
pub struct LinearOperator<C: Scalar> {
    m: u32,
    tag: BasisTag,
    imp: Imp<C>,
}

impl<C: Scalar> LinearOperator<C> {
    pub fn from_rule(
        m: u32,
        tag: BasisTag,
        f: impl Fn(&Monomial) -> GradedPoly<C> + 'static,
    ) -> Self {
        LinearOperator { m, tag, imp: Imp::Rule(Rc::new(f)) }
    }

    pub fn from_matrix(tag: BasisTag, basis: Rc<ColoredBasis>, mat: Mat<C>) -> Self {
        assert_eq!(mat.rows(), basis.dim());
        assert_eq!(mat.cols(), basis.dim());
        LinearOperator { m: basis.m(), tag, imp: Imp::Matrix { basis, mat } }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn apply(&self, p: &GradedPoly<C>) -> GradedPoly<C> {
        assert_eq!(p.m(), self.m);
        assert_eq!(p.tag(), self.tag);
        let mut out = GradedPoly::zero(self.m, self.tag);
        match &self.imp {
            Imp::Rule(f) => {
                for (cp, c) in p.terms() {
                    let image = f(&Monomial { tag: self.tag, cp: cp.clone() });
                    out = out.add(&image.scale(c));
                }
            }
            Imp::Matrix { basis, mat } => {
                for (cp, c) in p.terms() {
                    assert_eq!(cp.total(), basis.n(), "matrix operator applied off its degree");
                    let j = basis.index_of(cp).expect("degree matches the basis");
                    for i in 0..mat.rows() {
                        let e = mat.get(i, j);
                        if !e.is_zero() {
                            out.add_term(basis.at_index(i).clone(), e.clone() * c.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// The matrix of the operator on the degree-n monomial basis.  Panics if
    /// a rule image leaves that degree; the operators here preserve it.
    pub fn matrix_on(&self, basis: &ColoredBasis) -> Mat<C> {
        assert_eq!(basis.m(), self.m);
        let dim = basis.dim();
        let mut mat = Mat::zero(dim, dim);
        for j in 0..dim {
            let image = self.apply(&GradedPoly::monomial(
                self.m,
                self.tag,
                basis.at_index(j).clone(),
                C::one(),
            ));
            for (cp, c) in image.terms() {
                assert_eq!(cp.total(), basis.n(), "operator image left the graded piece");
                mat.set(basis.index_of(cp).expect("degree matches the basis"), j, c.clone());
            }
        }
        mat
    }
}

/// The truncated exponential series of an operator applied to a seed:
/// returns `[q, A q, A^2 q / 2!, ..., A^order q / order!]`.
pub fn truncated_exp_apply<C: Scalar>(
    op: &LinearOperator<C>,
    seed: &GradedPoly<C>,
    order: u32,
) -> Vec<GradedPoly<C>> {
    let mut out = vec![seed.clone()];
    for k in 1..=order {
        let prev = out.last().unwrap();
        let next = op.apply(prev).scale(&C::from_rational(Rational::new(1.into(), k.into())));
        out.push(next);
    }
    out
}
