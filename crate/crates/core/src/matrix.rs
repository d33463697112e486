//! Lower-triangular and square matrices over `Z[w]`.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::OmegaPoly;
use crate::error::{Error, Result};

/// Square lower-triangular matrix; row `i` stores columns `0..=i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct TriMatrix {
    rows: Vec<Vec<OmegaPoly>>,
}

impl TriMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> OmegaPoly) -> Self {
        Self {
            rows: (0..n).map(|i| (0..=i).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<OmegaPoly>) -> Result<Self> {
        let rows = (0..n)
            .map(|i| (0..=i).map(|j| f(i, j)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { OmegaPoly::one() } else { OmegaPoly::zero() })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<OmegaPoly>] {
        &self.rows
    }

    /// Entry `(i, j)`; zero above the diagonal.
    pub fn get(&self, i: usize, j: usize) -> OmegaPoly {
        if j > i {
            OmegaPoly::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn column(&self, j: usize) -> Vec<OmegaPoly> {
        (j..self.dim()).map(|i| self.rows[i][j].clone()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Self::from_fn(self.dim(), |i, j| {
            (j..=i).map(|k| &self.rows[i][k] * &rhs.rows[k][j]).sum()
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    pub fn specialize(&self, x: &BigInt) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.specialize(x)).collect())
                .collect(),
        }
    }

    /// Inverse by forward substitution. The diagonal must consist of `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim();
        let mut diag_inv = Vec::with_capacity(n);
        for i in 0..n {
            let d = &self.rows[i][i];
            match d.as_constant() {
                Some(c) if c == BigInt::from(1) || c == BigInt::from(-1) => diag_inv.push(d.clone()),
                _ => return Err(Error::NonUnitConstant(format!("diagonal entry {i}: {d}"))),
            }
        }
        let mut inv: Vec<Vec<OmegaPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![OmegaPoly::zero(); i + 1];
            row[i] = diag_inv[i].clone();
            for j in (0..i).rev() {
                let acc: OmegaPoly = (j..i).map(|k| &self.rows[i][k] * &inv[k][j]).sum();
                row[j] = -(&diag_inv[i] * &acc);
            }
            inv.push(row);
        }
        Ok(Self { rows: inv })
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join("; "))?;
        }
        Ok(())
    }
}

/// Dense `n x n` matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<OmegaPoly>,
}

impl SquareMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> OmegaPoly) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, entries }
    }

    /// Integer rows; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| OmegaPoly::constant(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &OmegaPoly {
        &self.entries[i * self.n + j]
    }

    pub fn specialize(&self, x: &BigInt) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|c| c.specialize(x)).collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<OmegaPoly>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_substitution_inverts() {
        let m = TriMatrix::from_fn(4, |i, j| OmegaPoly::constant((i + 2 * j + 1) as i64 % 5));
        let m = TriMatrix::from_fn(4, |i, j| if i == j { OmegaPoly::one() } else { m.get(i, j) });
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn non_unit_diagonal_rejected() {
        let m = TriMatrix::from_fn(2, |i, j| OmegaPoly::constant(if i == j { 2 } else { 1 }));
        assert!(m.inverse().is_err());
    }
}
