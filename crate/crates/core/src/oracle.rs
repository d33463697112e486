//! Brute-force path counting.
//!
//! Paths start at the origin and use the steps `(1, 1)`, `(1, -1)` and a
//! horizontal step `(w, 0)` that carries the weight `w` symbol. Counts are
//! built row by row from the step recursion
//! `W(n, j) = W(n-1, j+1) + W(n-1, j-1) + w W(n-step, j)`, so nothing here
//! depends on a generating function or closed form.

use crate::algebra::{OmegaPoly, TSeries};
use crate::error::{Error, Result};

/// Height constraint on the paths being counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// No restriction.
    Grand,
    /// `y >= 0`.
    Quadrant,
    /// `0 <= y < k`.
    Banded(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathSpec {
    /// Length of the horizontal step.
    pub step: usize,
    pub mode: Mode,
}

impl PathSpec {
    pub fn new(step: usize, mode: Mode) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidParameter("horizontal step length must be positive".into()));
        }
        if mode == Mode::Banded(0) {
            return Err(Error::InvalidParameter("band height must be positive".into()));
        }
        Ok(Self { step, mode })
    }

    pub fn motzkin() -> Self {
        Self { step: 1, mode: Mode::Quadrant }
    }

    pub fn grand_motzkin() -> Self {
        Self { step: 1, mode: Mode::Grand }
    }

    pub fn schroder() -> Self {
        Self { step: 2, mode: Mode::Quadrant }
    }

    fn check_height(&self, j: i64) -> Result<()> {
        match self.mode {
            Mode::Banded(k) if j < 0 || j >= k as i64 => Err(Error::BandViolation { j, k }),
            _ => Ok(()),
        }
    }
}

/// Weighted counts `W(n, j)` for `0 <= n <= max_len` over every admissible height.
#[derive(Clone, Debug)]
pub struct CountTable {
    spec: PathSpec,
    max_len: usize,
    lowest: i64,
    rows: Vec<Vec<OmegaPoly>>,
}

impl CountTable {
    pub fn build(spec: PathSpec, max_len: usize) -> Self {
        let (lowest, highest) = match spec.mode {
            Mode::Grand => (-(max_len as i64), max_len as i64),
            Mode::Quadrant => (0, max_len as i64),
            Mode::Banded(k) => (0, k as i64 - 1),
        };
        let width = (highest - lowest + 1) as usize;
        let origin = (-lowest) as usize;
        let omega = OmegaPoly::omega();
        let mut rows: Vec<Vec<OmegaPoly>> = Vec::with_capacity(max_len + 1);
        let mut first = vec![OmegaPoly::zero(); width];
        first[origin] = OmegaPoly::one();
        rows.push(first);
        for n in 1..=max_len {
            let prev = &rows[n - 1];
            let mut row = vec![OmegaPoly::zero(); width];
            for (h, cell) in row.iter_mut().enumerate() {
                if h > 0 {
                    *cell += &prev[h - 1];
                }
                if h + 1 < width {
                    *cell += &prev[h + 1];
                }
                if n >= spec.step && !rows[n - spec.step][h].is_zero() {
                    *cell += &(&omega * &rows[n - spec.step][h]);
                }
            }
            rows.push(row);
        }
        Self { spec, max_len, lowest, rows }
    }

    pub fn spec(&self) -> PathSpec {
        self.spec
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// `W(n, j)`; zero for heights the mode excludes, except that a banded table
    /// rejects heights outside its band.
    pub fn get(&self, n: usize, j: i64) -> Result<OmegaPoly> {
        assert!(n <= self.max_len, "length {n} beyond table size {}", self.max_len);
        self.spec.check_height(j)?;
        let h = j - self.lowest;
        Ok(usize::try_from(h)
            .ok()
            .and_then(|h| self.rows[n].get(h))
            .cloned()
            .unwrap_or_default())
    }

    /// Compressed entry for step 2: the count at `(2n - j, j)`.
    pub fn compressed(&self, n: usize, j: usize) -> Result<OmegaPoly> {
        if j > n {
            return Err(Error::IndexOutOfTriangle { row: n, col: j });
        }
        self.get(2 * n - j, j as i64)
    }

    /// `sum_n W(n, j) t^n` through `t^max_len`.
    pub fn series(&self, j: i64) -> Result<TSeries> {
        let coeffs = (0..=self.max_len).map(|n| self.get(n, j)).collect::<Result<Vec<_>>>()?;
        Ok(TSeries::new(coeffs, self.max_len))
    }
}

/// Weighted number of paths from the origin to `(n, j)`.
pub fn count_paths(spec: PathSpec, n: usize, j: i64) -> Result<OmegaPoly> {
    spec.check_height(j)?;
    CountTable::build(spec, n).get(n, j)
}

/// `sum_{n <= order} count_paths(spec, n, j) t^n`.
pub fn oracle_series(spec: PathSpec, j: i64, order: usize) -> Result<TSeries> {
    spec.check_height(j)?;
    CountTable::build(spec, order).series(j)
}

/// Entry `(n, j)` of the compressed Schröder triangle: quadrant step-2 paths to `(2n - j, j)`.
pub fn compress_schroder(n: usize, j: usize) -> Result<OmegaPoly> {
    if j > n {
        return Err(Error::IndexOutOfTriangle { row: n, col: j });
    }
    count_paths(PathSpec::schroder(), 2 * n - j, j as i64)
}
