//! Dense matrices over the integers and the symplectic wrapper.
//!
//! Entries are `BigInt`, so products of long twist words cannot overflow.
//! The standard alternating form is the block-diagonal `J` with 2x2 blocks
//! `[[0, 1], [-1, 0]]`, one per handle, in the basis a1, b1, ..., ag, bg.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{HomologyError, MAX_GENUS};

/// A dense square integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct IntMatrix {
    pub(crate) dim: usize,
    pub(crate) data: Vec<BigInt>,
}

impl IntMatrix {
    pub(crate) fn zero(dim: usize) -> IntMatrix {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub(crate) fn identity(dim: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub(crate) fn at(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.dim + col]
    }

    pub(crate) fn at_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.data[row * self.dim + col]
    }

    pub(crate) fn from_rows(rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub(crate) fn from_columns(cols: &[Vec<BigInt>]) -> IntMatrix {
        let dim = cols.len();
        let mut m = IntMatrix::zero(dim);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim, "matrix must be square");
            for (i, entry) in col.iter().enumerate() {
                *m.at_mut(i, j) = entry.clone();
            }
        }
        m
    }

    pub(crate) fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub(crate) fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * x`.
    pub(crate) fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j) * &x[j]).sum())
            .collect()
    }

    pub(crate) fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.at(i, i).clone()).sum()
    }

    pub(crate) fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The standard alternating form on `Z^{2g}`.
pub(crate) fn standard_j(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zero(2 * genus);
    for handle in 0..genus {
        *j.at_mut(2 * handle, 2 * handle + 1) = BigInt::one();
        *j.at_mut(2 * handle + 1, 2 * handle) = -BigInt::one();
    }
    j
}

/// An integer matrix `M` with `M^T J M = J`, the homological action of a
/// boundary-fixing diffeomorphism.
///
/// The symplectic identity is checked on every public construction path, so
/// a value of this type always satisfies it. Inverses are exact:
/// `M^{-1} = J^{-1} M^T J`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    genus: usize,
    mat: IntMatrix,
}

impl SymplecticMatrix {
    pub fn identity(genus: usize) -> SymplecticMatrix {
        SymplecticMatrix {
            genus,
            mat: IntMatrix::identity(2 * genus),
        }
    }

    /// Builds a matrix from rows, verifying `M^T J M = J`.
    pub fn from_rows(genus: usize, rows: Vec<Vec<BigInt>>) -> Result<SymplecticMatrix, HomologyError> {
        if genus == 0 || genus > MAX_GENUS {
            return Err(HomologyError::GenusOutOfRange(genus));
        }
        if rows.len() != 2 * genus || rows.iter().any(|r| r.len() != 2 * genus) {
            return Err(HomologyError::WrongDimension {
                expected: 2 * genus,
                got: rows.len(),
            });
        }
        let mat = IntMatrix::from_rows(rows);
        let m = SymplecticMatrix { genus, mat };
        if !m.is_symplectic() {
            return Err(HomologyError::NotSymplectic);
        }
        Ok(m)
    }

    /// Internal constructor for matrices that are symplectic by construction;
    /// the identity is still verified in debug builds.
    pub(crate) fn from_parts_unchecked(genus: usize, mat: IntMatrix) -> SymplecticMatrix {
        let m = SymplecticMatrix { genus, mat };
        debug_assert!(m.is_symplectic());
        m
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Matrix dimension, `2 * genus`.
    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        self.mat.at(row, col)
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.mat.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.mat == IntMatrix::identity(self.dim())
    }

    pub(crate) fn is_symplectic(&self) -> bool {
        let j = standard_j(self.genus);
        self.mat.transpose().mul(&j).mul(&self.mat) == j
    }

    pub(crate) fn raw(&self) -> &IntMatrix {
        &self.mat
    }

    /// Exact inverse `J^{-1} M^T J`; no elimination, no fractions.
    pub fn inverse(&self) -> SymplecticMatrix {
        let j = standard_j(self.genus);
        // J^{-1} = -J
        let mut jinv = j.clone();
        for v in &mut jinv.data {
            *v = -std::mem::take(v);
        }
        let inv = jinv.mul(&self.mat.transpose()).mul(&j);
        SymplecticMatrix::from_parts_unchecked(self.genus, inv)
    }

    /// Integer power, with negative exponents via the exact inverse.
    pub fn pow(&self, exponent: i64) -> SymplecticMatrix {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = SymplecticMatrix::identity(self.genus);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Applies the matrix to a coordinate vector.
    pub fn apply_vector(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.mat.apply(x)
    }
}

impl Mul for &SymplecticMatrix {
    type Output = SymplecticMatrix;

    fn mul(self, rhs: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.genus, rhs.genus, "genus mismatch");
        SymplecticMatrix {
            genus: self.genus,
            mat: self.mat.mul(&rhs.mat),
        }
    }
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.mat)
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.mat)
    }
}
