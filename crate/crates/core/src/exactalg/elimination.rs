//! Gaussian elimination over `Q` and `Z/p`.

use num_traits::Zero;

use super::{ExactMatrix, RingTag, Scalar};
use crate::error::{Error, Result};

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub reduced: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    /// Reduced row echelon form; the ring must be a field.
    pub fn row_echelon(&self) -> Result<RowEchelon> {
        self.ring().require_field()?;
        let ring = self.ring();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols() {
            if row == m.rows() {
                break;
            }
            let Some(p) = (row..m.rows()).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = ring.inverse(m.get(row, col)).expect("nonzero in a field");
            m.scale_row(row, &inv);
            for i in 0..m.rows() {
                if i != row && !m.get(i, col).is_zero() {
                    let c = ring.neg(m.get(i, col));
                    m.add_row_multiple(i, row, &c);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(RowEchelon { reduced: m, pivots })
    }

    /// Rank over a field.
    pub fn rank_over_field(&self) -> Result<usize> {
        Ok(self.row_echelon()?.pivots.len())
    }

    /// Columns form a basis of the null space, one per free column of the
    /// echelon form (in increasing order of the free column).
    pub fn kernel_basis(&self) -> Result<ExactMatrix> {
        let ring = self.ring();
        let RowEchelon { reduced, pivots } = self.row_echelon()?;
        let free: Vec<usize> = (0..self.cols()).filter(|c| !pivots.contains(c)).collect();
        let mut basis = ExactMatrix::zeros(ring, self.cols(), free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set_reduced(f, k, ring.one());
            for (r, &p) in pivots.iter().enumerate() {
                let x = reduced.get(r, f);
                if !x.is_zero() {
                    basis.set_reduced(p, k, ring.neg(x));
                }
            }
        }
        Ok(basis)
    }

    /// Some `x` with `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let ring = self.ring();
        if b.len() != self.rows() {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let rhs = ExactMatrix::from_columns(ring, self.rows(), &[b.to_vec()])?;
        let aug = self.hstack(&rhs)?;
        let RowEchelon { reduced, pivots } = aug.row_echelon()?;
        if pivots.last() == Some(&self.cols()) {
            return Ok(None);
        }
        let mut x = vec![ring.zero(); self.cols()];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(r, self.cols()).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix.
    ///
    /// Over `Z` the inverse is computed over `Q` and must be integral.
    pub fn inverse(&self) -> Result<Option<ExactMatrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let n = self.rows();
        let work_ring = match self.ring() {
            RingTag::Integers => RingTag::Rationals,
            r => r,
        };
        let a = self.change_ring(work_ring)?;
        let aug = a.hstack(&ExactMatrix::identity(work_ring, n))?;
        let RowEchelon { reduced, pivots } = aug.row_echelon()?;
        if (0..n).any(|i| pivots.get(i) != Some(&i)) {
            return Ok(None);
        }
        let inv = reduced.block(0, n, n, n);
        match inv.change_ring(self.ring()) {
            Ok(m) => Ok(Some(m)),
            Err(_) => Ok(None),
        }
    }

    /// Determinant, computed over `Q` for integer matrices.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let ring = match self.ring() {
            RingTag::Integers => RingTag::Rationals,
            r => r,
        };
        ring.require_field()?;
        let mut m = self.change_ring(ring)?;
        let n = m.rows();
        let mut det = ring.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return Ok(ring.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = ring.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = ring.mul(&det, &pivot);
            let inv = ring.inverse(&pivot).expect("nonzero in a field");
            for i in col + 1..n {
                if !m.get(i, col).is_zero() {
                    let c = ring.neg(&ring.mul(m.get(i, col), &inv));
                    m.add_row_multiple(i, col, &c);
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(RingTag::Rationals, rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            ExactMatrix::zeros(RingTag::Rationals, 3, 2)
                .rank_over_field()
                .unwrap(),
            0
        );
        assert_eq!(
            ExactMatrix::identity(RingTag::Rationals, 4)
                .rank_over_field()
                .unwrap(),
            4
        );
        assert_eq!(q(&[&[1, 2], &[2, 4]]).rank_over_field().unwrap(), 1);
        // over Z/2 the rows [1 1] and [1 -1] coincide
        let z2 = ExactMatrix::from_i64_rows(RingTag::IntegersMod(2), &[&[1, 1], &[1, -1]]).unwrap();
        assert_eq!(z2.rank_over_field().unwrap(), 1);
    }

    #[test]
    fn rank_requires_a_field() {
        let z = ExactMatrix::identity(RingTag::Integers, 2);
        assert!(matches!(z.rank_over_field(), Err(Error::NotAField(_))));
        let z6 = ExactMatrix::identity(RingTag::IntegersMod(6), 2);
        assert!(matches!(z6.kernel_basis(), Err(Error::NotAField(_))));
    }

    #[test]
    fn kernel_examples() {
        let k = ExactMatrix::identity(RingTag::Rationals, 3)
            .kernel_basis()
            .unwrap();
        assert_eq!(k.cols(), 0);
        assert_eq!(k.rows(), 3);
        let k = ExactMatrix::zeros(RingTag::Rationals, 2, 2)
            .kernel_basis()
            .unwrap();
        assert_eq!(k, ExactMatrix::identity(RingTag::Rationals, 2));
        let a = q(&[&[1, 1]]);
        let k = a.kernel_basis().unwrap();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).unwrap().is_zero());
        assert_eq!(k, q(&[&[-1], &[1]]));
    }

    #[test]
    fn solve_and_inverse() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let x = a
            .solve(&[
                Scalar::from_integer(3.into()),
                Scalar::from_integer(2.into()),
            ])
            .unwrap();
        assert_eq!(x, Some(vec![Scalar::one(), Scalar::one()]));
        let inv = a.inverse().unwrap().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let singular = q(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().unwrap().is_none());
        assert!(singular
            .solve(&[Scalar::one(), Scalar::zero()])
            .unwrap()
            .is_none());
        let z = ExactMatrix::from_i64_rows(RingTag::Integers, &[&[2, 0], &[0, 1]]).unwrap();
        assert!(z.inverse().unwrap().is_none());
        let u = ExactMatrix::from_i64_rows(RingTag::Integers, &[&[2, 1], &[1, 1]]).unwrap();
        assert_eq!(
            u.inverse().unwrap().unwrap(),
            ExactMatrix::from_i64_rows(RingTag::Integers, &[&[1, -1], &[-1, 2]]).unwrap()
        );
        assert_eq!(
            ExactMatrix::identity(RingTag::Rationals, 0)
                .inverse()
                .unwrap()
                .unwrap()
                .rows(),
            0
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(
            q(&[&[1, 2], &[3, 4]]).determinant().unwrap(),
            Scalar::from_integer((-2).into())
        );
        let z = ExactMatrix::from_i64_rows(RingTag::Integers, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(z.determinant().unwrap(), Scalar::from_integer((-1).into()));
    }
}
