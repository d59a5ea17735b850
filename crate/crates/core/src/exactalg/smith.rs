//! Smith normal form over the integers by elementary row and column
//! operations, pivoting on the entry of least absolute value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactMatrix, RingTag, Scalar};
use crate::error::Result;

/// `left · a · right = diagonal`, with `left` and `right` unimodular and the
/// diagonal entries nonnegative, each dividing the next.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub left: ExactMatrix,
    pub diagonal: ExactMatrix,
    pub right: ExactMatrix,
}

impl SmithNormalForm {
    /// The nonzero invariant factors `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.diagonal.rows().min(self.diagonal.cols());
        (0..n)
            .map(|i| self.diagonal.get(i, i).to_integer())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn int(x: &Scalar) -> BigInt {
    x.to_integer()
}

impl ExactMatrix {
    /// Smith normal form; the ring must be `Z`.
    pub fn smith_normal_form(&self) -> Result<SmithNormalForm> {
        self.ring().require_integers()?;
        let ring = RingTag::Integers;
        let (rows, cols) = (self.rows(), self.cols());
        let mut d = self.clone();
        let mut left = ExactMatrix::identity(ring, rows);
        let mut right = ExactMatrix::identity(ring, cols);

        let mut t = 0;
        while t < rows.min(cols) {
            // least nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize, BigInt)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = int(d.get(i, j)).abs();
                    if !v.is_zero() && best.as_ref().map_or(true, |(_, _, b)| v < *b) {
                        best = Some((i, j, v));
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = int(d.get(t, t));
            let mut dirty = false;
            for i in t + 1..rows {
                let q = int(d.get(i, t)).div_floor(&pivot);
                if !q.is_zero() {
                    let c = Scalar::from_integer(-q);
                    d.add_row_multiple(i, t, &c);
                    left.add_row_multiple(i, t, &c);
                }
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = int(d.get(t, j)).div_floor(&pivot);
                if !q.is_zero() {
                    let c = Scalar::from_integer(-q);
                    d.add_col_multiple(j, t, &c);
                    right.add_col_multiple(j, t, &c);
                }
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                // a smaller remainder now exists; pick it as the next pivot
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !int(d.get(i, j)).is_multiple_of(&pivot));
            if let Some((i, _)) = offender {
                let one = Scalar::from_integer(1.into());
                d.add_row_multiple(t, i, &one);
                left.add_row_multiple(t, i, &one);
                continue;
            }
            if pivot.is_negative() {
                let m1 = Scalar::from_integer((-1).into());
                d.scale_row(t, &m1);
                left.scale_row(t, &m1);
            }
            t += 1;
        }
        Ok(SmithNormalForm {
            left,
            diagonal: d,
            right,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn z(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(RingTag::Integers, rows).unwrap()
    }

    fn check(a: &ExactMatrix) -> SmithNormalForm {
        let snf = a.smith_normal_form().unwrap();
        let prod = snf.left.mul(a).unwrap().mul(&snf.right).unwrap();
        assert_eq!(prod, snf.diagonal);
        assert!(snf.left.determinant().unwrap().abs().is_one());
        assert!(snf.right.determinant().unwrap().abs().is_one());
        let d = &snf.diagonal;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    assert!(d.get(i, j).is_zero());
                }
            }
        }
        let f = snf.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        snf
    }

    #[test]
    fn identity_is_fixed() {
        let snf = check(&ExactMatrix::identity(RingTag::Integers, 3));
        assert!(snf.left.is_identity() && snf.right.is_identity() && snf.diagonal.is_identity());
    }

    #[test]
    fn invariant_factors_of_2468() {
        // gcd of entries = 2, |det| = 8, so d = (2, 4)
        let snf = check(&z(&[&[2, 4], &[6, 8]]));
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn zero_matrix() {
        let snf = check(&ExactMatrix::zeros(RingTag::Integers, 2, 3));
        assert!(snf.diagonal.is_zero());
        assert_eq!(snf.rank(), 0);
    }

    #[test]
    fn coprime_entries_need_the_divisibility_fixup() {
        // diag(2, 3) ~ diag(1, 6)
        let snf = check(&z(&[&[2, 0], &[0, 3]]));
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn rejects_other_rings() {
        assert!(ExactMatrix::identity(RingTag::Rationals, 2)
            .smith_normal_form()
            .is_err());
    }
}
