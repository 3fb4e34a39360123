//! Small dense matrices over the crate's exact scalars.  Dimensions here are
//! counts of colored partitions, a few hundred at most, so nothing clever.

use crate::cyclo::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<C: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Scalar> Mat<C> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: C) {
        let idx = i * self.cols + j;
        self.data[idx] = self.data[idx].clone() + v;
    }

    pub fn matmul(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = C::zero();
            for k in 0..self.cols {
                if self.get(i, k).is_zero() || other.get(k, j).is_zero() {
                    continue;
                }
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = C::zero();
                for (k, x) in v.iter().enumerate() {
                    if x.is_zero() || self.get(i, k).is_zero() {
                        continue;
                    }
                    acc = acc + self.get(i, k).clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat<C>) -> Mat<C> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + other.get(i, j).clone()
        })
    }

    pub fn scaled(&self, c: &C) -> Mat<C> {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() * c.clone()
        })
    }

    pub fn column_sum(&self, j: usize) -> C {
        let mut acc = C::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, j).clone();
        }
        acc
    }

    pub fn map<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> Mat<D> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{rat_int, Rational};

    #[test]
    fn basic_algebra() {
        let a = Mat::<Rational>::from_fn(2, 2, |i, j| rat_int((i * 2 + j) as i64));
        let id = Mat::<Rational>::identity(2);
        assert_eq!(a.matmul(&id), a);
        assert_eq!(id.matmul(&a), a);
        let v = vec![rat_int(1), rat_int(-1)];
        assert_eq!(a.mul_vec(&v), vec![rat_int(-1), rat_int(-1)]);
        assert_eq!(a.column_sum(1), rat_int(4));
        assert_eq!(a.add(&a), a.scaled(&rat_int(2)));
    }
}
