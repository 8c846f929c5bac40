//! Integer matrices, normal forms, kernels and the structural predicates on
//! the GKZ matrix `A`.

mod gkz;
mod normal_form;
mod semigroup;

pub use gkz::{
    default_saturation_bound, is_saturated, lattice_index, validate, GkzMatrix, LatticeIndex,
    Saturation,
};
pub use normal_form::{hnf_rows, in_lattice, kernel_basis, smith_normal_form, Snf};
pub use semigroup::Semigroup;

use crate::error::{Error, Result};
use crate::num::{to_rat, Int, Rat};
use num_traits::{One, Zero};
use std::fmt;

/// Dense `d x n` matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Int>>,
}

impl IntMatrix {
    pub fn new(data: Vec<Vec<Int>>) -> Result<Self> {
        let rows = data.len();
        if rows == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let cols = data[0].len();
        if cols == 0 {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        if let Some(bad) = data.iter().position(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                data[bad].len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Convenience constructor for literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        IntMatrix::new(data).expect("well-formed literal matrix")
    }

    /// Like `new` but allows an empty shape, used for intermediate results.
    pub(crate) fn raw(rows: usize, cols: usize, data: Vec<Vec<Int>>) -> Self {
        IntMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
        IntMatrix::raw(n, n, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::raw(rows, cols, vec![vec![Int::zero(); cols]; rows])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i]
    }

    pub fn data(&self) -> &[Vec<Int>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn column_rat(&self, j: usize) -> Vec<Rat> {
        self.data.iter().map(|r| to_rat(&r[j])).collect()
    }

    pub fn columns_rat(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|j| self.column_rat(j)).collect()
    }

    pub fn to_rat_rows(&self) -> Vec<Vec<Rat>> {
        self.data.iter().map(|r| r.iter().map(to_rat).collect()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::raw(self.cols, self.rows, self.columns())
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let data = self.data.iter().map(|r| idx.iter().map(|&j| r[j].clone()).collect()).collect();
        IntMatrix::raw(self.rows, idx.len(), data)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let data = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| (0..self.cols).map(|k| &self.data[i][k] * &other.data[k][j]).sum())
                    .collect()
            })
            .collect();
        IntMatrix::raw(self.rows, other.cols, data)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        self.data.iter().map(|r| crate::num::dot_int(r, v)).collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        self.data.iter().map(|r| r.iter().zip(v).map(|(a, b)| to_rat(a) * b).sum()).collect()
    }

    pub fn max_abs_entry(&self) -> Int {
        self.data.iter().flat_map(|r| r.iter()).map(num_traits::Signed::abs).max().unwrap_or_default()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        crate::linalg::det(&self.to_rat_rows()).to_integer()
    }

    pub fn rank(&self) -> usize {
        crate::linalg::rank(&self.to_rat_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .data
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}
