use std::fmt;

use num_traits::{One, Zero};

use super::{format_scalar, RingTag, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact ring.
///
/// A matrix with `rows x cols` shape is read as a linear map from a
/// rank-`cols` free module to a rank-`rows` one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    ring: RingTag,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    /// Build a matrix, coercing every entry into `ring`.
    pub fn new(ring: RingTag, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let entries = entries
            .into_iter()
            .map(|x| ring.coerce(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(ring: RingTag, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| ring.from_i64(x)))
            .collect();
        Ok(ExactMatrix {
            ring,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn zeros(ring: RingTag, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ring,
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(ring: RingTag, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// Build from a closure over `(row, col)`; values are coerced into the ring.
    pub fn from_fn(
        ring: RingTag,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(ring.coerce(f(i, j))?);
            }
        }
        Ok(ExactMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// Matrix of a function `[cols] -> [rows]`: a 1 at `(f(j), j)`.
    pub fn of_function(ring: RingTag, rows: usize, images: &[usize]) -> Self {
        let cols = images.len();
        let mut m = Self::zeros(ring, rows, cols);
        for (j, &i) in images.iter().enumerate() {
            m.entries[i * cols + j] = ring.one();
        }
        m
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    /// Overwrite an entry; the value is reduced into the ring.
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<()> {
        let value = self.ring.coerce(value)?;
        self.entries[i * self.cols + j] = value;
        Ok(())
    }

    pub(crate) fn set_reduced(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = self.ring.reduce(value);
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        let idx = i * self.cols + j;
        self.entries[idx] = self.ring.add(&self.entries[idx], value);
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `self · other`. Zero entries of `self` are skipped, which keeps the
    /// permutation and coevaluation matrices of the monoidal instances cheap.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.ring.check_same(&other.ring)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let target = &mut out[i * other.cols..(i + 1) * other.cols];
                for (t, b) in target.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        *t += a * b;
                    }
                }
            }
        }
        let ring = self.ring;
        Ok(ExactMatrix {
            ring,
            rows: self.rows,
            cols: other.cols,
            entries: out.into_iter().map(|x| ring.reduce(x)).collect(),
        })
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i][j] · other`.
    pub fn kronecker(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.ring.check_same(&other.ring)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ExactMatrix::zeros(self.ring, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set_reduced(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(self.ring.reduce(acc))
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.ring.check_same(&other.ring)?;
        self.check_same_shape(other)?;
        Ok(ExactMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.ring.check_same(&other.ring)?;
        self.check_same_shape(other)?;
        Ok(ExactMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| self.ring.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| self.ring.mul(x, c)).collect(),
        }
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                self.ring.reduce(acc)
            })
            .collect())
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(ring: RingTag, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = ExactMatrix::zeros(ring, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch("column of wrong length".into()));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone())?;
            }
        }
        Ok(m)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.ring.check_same(&other.ring)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        ExactMatrix::from_fn(self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Reinterpret the entries in another ring, e.g. `Z -> Q` or `Z -> Z/m`.
    ///
    /// Fails when an entry has no image (a non-integral rational into `Z`).
    pub fn change_ring(&self, ring: RingTag) -> Result<ExactMatrix> {
        ExactMatrix::new(ring, self.rows, self.cols, self.entries.clone())
    }

    /// Copy of the submatrix `rows x cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.entries[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        out
    }

    pub(crate) fn check_same_shape(&self, other: &ExactMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += c · row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.entries[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = self.ring.mul(s, c);
            let idx = target * self.cols + j;
            self.entries[idx] = self.ring.add(&self.entries[idx], &v);
        }
    }

    /// `col[target] += c · col[source]`
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.entries[i * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = self.ring.mul(s, c);
            let idx = i * self.cols + target;
            self.entries[idx] = self.ring.add(&self.entries[idx], &v);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.entries[idx] = self.ring.mul(&self.entries[idx], c);
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExactMatrix({}x{} over {}: [",
            self.rows, self.cols, self.ring
        )?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "])")
    }
}
