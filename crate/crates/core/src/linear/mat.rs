//! The category of finite-rank free modules over a ring: objects are ranks,
//! a morphism `n -> m` is an `m x n` matrix, and `⊗` is the Kronecker product.

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag, Scalar};
use crate::smc::{DualPair, SymmetricMonoidalCategory};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatCategory {
    pub ring: RingTag,
}

impl MatCategory {
    pub fn new(ring: RingTag) -> Self {
        MatCategory { ring }
    }

    /// An endomorphism of the unit as a ring element.
    pub fn scalar(&self, f: &ExactMatrix) -> Result<Scalar> {
        if f.rows() != 1 || f.cols() != 1 {
            return Err(Error::type_mismatch(format!(
                "expected a 1x1 matrix, found {}x{}",
                f.rows(),
                f.cols()
            )));
        }
        Ok(f.get(0, 0).clone())
    }
}

/// Permutation of basis indices `i·b + j -> j·a + i` realizing `a ⊗ b -> b ⊗ a`.
pub fn swap_permutation(a: usize, b: usize) -> Vec<usize> {
    (0..a * b).map(|k| (k % b) * a + k / b).collect()
}

impl SymmetricMonoidalCategory for MatCategory {
    type Object = usize;
    type Morphism = ExactMatrix;

    fn domain(&self, f: &ExactMatrix) -> usize {
        f.cols()
    }

    fn codomain(&self, f: &ExactMatrix) -> usize {
        f.rows()
    }

    fn identity(&self, a: &usize) -> ExactMatrix {
        ExactMatrix::identity(self.ring, *a)
    }

    fn compose(&self, g: &ExactMatrix, f: &ExactMatrix) -> Result<ExactMatrix> {
        g.mul(f)
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn tensor_mor(&self, f: &ExactMatrix, g: &ExactMatrix) -> Result<ExactMatrix> {
        f.kronecker(g)
    }

    fn unit(&self) -> usize {
        1
    }

    fn symmetry(&self, a: &usize, b: &usize) -> ExactMatrix {
        ExactMatrix::of_function(self.ring, a * b, &swap_permutation(*a, *b))
    }

    fn mor_eq(&self, f: &ExactMatrix, g: &ExactMatrix) -> bool {
        f == g
    }

    fn render(&self, f: &ExactMatrix) -> String {
        f.to_text()
    }
}

/// The standard pair on rank `n`: `η` is the vectorized identity, `ε` its transpose.
pub fn mat_dual_pair(ring: RingTag, n: usize) -> DualPair<usize, ExactMatrix> {
    let mut eta = ExactMatrix::zeros(ring, n * n, 1);
    for i in 0..n {
        eta.set_reduced(i * n + i, 0, ring.one());
    }
    let eps = eta.transpose();
    DualPair::new(n, n, eta, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smc::{self, verify_dual_pair};

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(RingTag::Rationals, rows).unwrap()
    }

    #[test]
    fn symmetry_is_an_involution() {
        let c = MatCategory::new(RingTag::Rationals);
        for (a, b) in [(2, 2), (2, 3), (1, 4), (0, 3)] {
            let s = c.compose(&c.symmetry(&b, &a), &c.symmetry(&a, &b)).unwrap();
            assert!(s.is_identity());
        }
    }

    #[test]
    fn symmetry_swaps_kronecker_factors() {
        let c = MatCategory::new(RingTag::Rationals);
        let f = q(&[&[1, 2], &[3, 4]]);
        let g = q(&[&[0, 1, 5], &[7, 1, 1], &[2, 2, 3]]);
        let lhs = c
            .compose(&c.symmetry(&2, &3), &f.kronecker(&g).unwrap())
            .unwrap();
        let rhs = c
            .compose(&g.kronecker(&f).unwrap(), &c.symmetry(&2, &3))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn standard_pairs_verify() {
        for ring in [
            RingTag::Rationals,
            RingTag::Integers,
            RingTag::IntegersMod(4),
        ] {
            let c = MatCategory::new(ring);
            for n in 0..=4 {
                assert!(verify_dual_pair(&c, &mat_dual_pair(ring, n)).unwrap());
            }
        }
        let one = mat_dual_pair(RingTag::Rationals, 1);
        assert!(one.coevaluation.is_identity() && one.evaluation.is_identity());
    }

    #[test]
    fn zeroed_evaluation_fails() {
        let c = MatCategory::new(RingTag::Rationals);
        let mut dp = mat_dual_pair(RingTag::Rationals, 2);
        dp.evaluation = ExactMatrix::zeros(RingTag::Rationals, 1, 4);
        assert!(!verify_dual_pair(&c, &dp).unwrap());
    }

    #[test]
    fn trace_is_the_diagonal_sum() {
        let c = MatCategory::new(RingTag::Rationals);
        let dp = mat_dual_pair(RingTag::Rationals, 2);
        let t = smc::trace(&c, &dp, &q(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(c.scalar(&t).unwrap(), RingTag::Rationals.from_i64(5));
        assert!(smc::trace(&c, &dp, &q(&[&[1, 2]])).is_err());
    }

    #[test]
    fn euler_characteristic_of_rank_p_vanishes_mod_p() {
        for p in [2u64, 3, 5] {
            let ring = RingTag::IntegersMod(p);
            let c = MatCategory::new(ring);
            let chi = smc::euler_characteristic(&c, &mat_dual_pair(ring, p as usize)).unwrap();
            assert!(chi.is_zero());
        }
        let c = MatCategory::new(RingTag::Rationals);
        let chi = smc::euler_characteristic(&c, &mat_dual_pair(RingTag::Rationals, 0)).unwrap();
        assert!(chi.is_zero());
    }

    #[test]
    fn mate_of_an_endomorphism_is_its_transpose() {
        let c = MatCategory::new(RingTag::Rationals);
        let dp = mat_dual_pair(RingTag::Rationals, 3);
        let f = q(&[&[1, 2, 0], &[-1, 3, 4], &[2, 2, 5]]);
        let m = smc::mate(&c, &dp, &dp, &1, &1, &f).unwrap();
        assert_eq!(m, f.transpose());
        let mm = smc::mate(&c, &dp, &dp, &1, &1, &m).unwrap();
        assert_eq!(mm, f);
        let id = smc::mate(&c, &dp, &dp, &1, &1, &c.identity(&3)).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn twisted_trace_with_unit_factors_is_the_trace() {
        let c = MatCategory::new(RingTag::Integers);
        let dp = mat_dual_pair(RingTag::Integers, 2);
        let f = ExactMatrix::from_i64_rows(RingTag::Integers, &[&[3, 1], &[0, -7]]).unwrap();
        assert_eq!(
            smc::twisted_trace(&c, &dp, &1, &1, &f).unwrap(),
            smc::trace(&c, &dp, &f).unwrap()
        );
    }
}
