//! Homology with explicit bases: over a field, and over `Z` modulo torsion.
//!
//! For each degree a [`HomologyBasis`] stores representative cycles (as
//! columns) and a projector sending any cycle to the coordinates of its
//! class in those representatives.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag};

use super::chain::{ChainComplex, ChainMap};

/// Ranks of a graded free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedObject {
    pub ring: RingTag,
    pub ranks: BTreeMap<i32, usize>,
}

impl GradedObject {
    pub fn rank(&self, n: i32) -> usize {
        self.ranks.get(&n).copied().unwrap_or(0)
    }

    /// As a complex with zero differentials.
    pub fn to_complex(&self) -> ChainComplex {
        ChainComplex::graded(self.ring, &self.ranks).expect("graded ranks form a complex")
    }
}

#[derive(Debug, Clone)]
struct DegreeBasis {
    representatives: ExactMatrix,
    projector: ExactMatrix,
}

/// Chosen homology bases of one complex.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    ring: RingTag,
    degrees: BTreeMap<i32, DegreeBasis>,
}

impl HomologyBasis {
    /// Homology over a field.
    pub fn over_field(m: &ChainComplex) -> Result<Self> {
        let ring = m.ring();
        ring.require_field()?;
        let mut degrees = BTreeMap::new();
        for n in m.degrees() {
            let rank = m.rank(n);
            let cycles = m.differential(n).kernel_basis()?;
            let boundaries = m.differential(n + 1);
            let stacked = boundaries.hstack(&cycles)?;
            let ech = stacked.row_echelon()?;
            let b = boundaries.cols();
            let b_pivots: Vec<usize> = ech.pivots.iter().copied().filter(|&p| p < b).collect();
            let reps: Vec<Vec<_>> = ech
                .pivots
                .iter()
                .filter(|&&p| p >= b)
                .map(|&p| stacked.column(p))
                .collect();
            let representatives = ExactMatrix::from_columns(ring, rank, &reps)?;
            // left inverse of [B' | R], restricted to the R rows
            let mut cols: Vec<Vec<_>> = b_pivots.iter().map(|&p| stacked.column(p)).collect();
            cols.extend(reps.iter().cloned());
            let w = ExactMatrix::from_columns(ring, rank, &cols)?;
            let aug = w.hstack(&ExactMatrix::identity(ring, rank))?;
            let e = aug.row_echelon()?.reduced;
            let k = w.cols();
            let projector = e.block(b_pivots.len(), k, reps.len(), rank);
            degrees.insert(
                n,
                DegreeBasis {
                    representatives,
                    projector,
                },
            );
        }
        Ok(HomologyBasis { ring, degrees })
    }

    /// Free part of integral homology, via Smith normal forms.
    pub fn mod_torsion(m: &ChainComplex) -> Result<Self> {
        let ring = m.ring();
        ring.require_integers()?;
        let mut degrees = BTreeMap::new();
        for n in m.degrees() {
            let rank = m.rank(n);
            // integral cycle basis: trailing columns of V in U d V = D
            let snf = m.differential(n).smith_normal_form()?;
            let r = snf.rank();
            let v = &snf.right;
            let v_inv = v
                .inverse()?
                .ok_or_else(|| Error::InvalidEntry("V not unimodular".into()))?;
            let k = rank - r;
            let cycles = v.block(0, r, rank, k);
            let to_cycle_coords = v_inv.block(r, 0, k, rank);
            // boundaries in cycle coordinates
            let b = to_cycle_coords.mul(&m.differential(n + 1))?;
            let snf_b = b.smith_normal_form()?;
            let s = snf_b.rank();
            let u = &snf_b.left;
            let u_inv = u
                .inverse()?
                .ok_or_else(|| Error::InvalidEntry("U not unimodular".into()))?;
            let h = k - s;
            let representatives = cycles.mul(&u_inv.block(0, s, k, h))?;
            let projector = u.block(s, 0, h, k).mul(&to_cycle_coords)?;
            degrees.insert(
                n,
                DegreeBasis {
                    representatives,
                    projector,
                },
            );
        }
        Ok(HomologyBasis { ring, degrees })
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn rank(&self, n: i32) -> usize {
        self.degrees.get(&n).map_or(0, |d| d.representatives.cols())
    }

    pub fn graded(&self) -> GradedObject {
        GradedObject {
            ring: self.ring,
            ranks: self
                .degrees
                .keys()
                .map(|&n| (n, self.rank(n)))
                .filter(|&(_, r)| r > 0)
                .collect(),
        }
    }

    /// Representative cycles in degree `n`, one per column.
    pub fn representatives(&self, n: i32) -> ExactMatrix {
        self.degrees
            .get(&n)
            .map(|d| d.representatives.clone())
            .unwrap_or_else(|| ExactMatrix::zeros(self.ring, 0, 0))
    }

    /// Coordinates of the class of each cycle column of `z` (degree `n`).
    pub fn classes(&self, n: i32, z: &ExactMatrix) -> Result<ExactMatrix> {
        match self.degrees.get(&n) {
            Some(d) => d.projector.mul(z),
            None => Ok(ExactMatrix::zeros(self.ring, 0, z.cols())),
        }
    }
}

/// Betti numbers over a field.
pub fn homology(m: &ChainComplex) -> Result<GradedObject> {
    Ok(HomologyBasis::over_field(m)?.graded())
}

/// Matrices of the map induced by `f` between chosen bases.
pub fn induced_map(
    source: &HomologyBasis,
    target: &HomologyBasis,
    f: &ChainMap,
) -> Result<BTreeMap<i32, ExactMatrix>> {
    let mut out = BTreeMap::new();
    for (&n, d) in &source.degrees {
        let h_t = target.rank(n);
        let h_s = d.representatives.cols();
        if h_t == 0 || h_s == 0 {
            continue;
        }
        let image = f.component(n).mul(&d.representatives)?;
        out.insert(n, target.classes(n, &image)?);
    }
    Ok(out)
}

/// Map induced on homology over a field, on the bases of [`HomologyBasis::over_field`].
pub fn homology_map(f: &ChainMap) -> Result<BTreeMap<i32, ExactMatrix>> {
    let s = HomologyBasis::over_field(f.source().complex())?;
    let t = HomologyBasis::over_field(f.target().complex())?;
    induced_map(&s, &t, f)
}

/// Free ranks of integral homology and the map induced by `f` on them.
pub fn integral_homology_mod_torsion(
    m: &ChainComplex,
    f: &ChainMap,
) -> Result<(GradedObject, BTreeMap<i32, ExactMatrix>)> {
    if f.source().complex() != m || f.target().complex() != m {
        return Err(Error::type_mismatch(
            "map is not an endomorphism of the complex",
        ));
    }
    let basis = HomologyBasis::mod_torsion(m)?;
    let maps = induced_map(&basis, &basis, f)?;
    Ok((basis.graded(), maps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(RingTag::Integers, rows).unwrap()
    }

    fn circle(ring: RingTag) -> ChainComplex {
        // vertices a b c, edges ab ac bc
        let d1 =
            ExactMatrix::from_i64_rows(ring, &[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]).unwrap();
        ChainComplex::new(ring, 0, vec![3, 3], vec![d1]).unwrap()
    }

    fn rp2() -> ChainComplex {
        ChainComplex::new(
            RingTag::Integers,
            0,
            vec![1, 1, 1],
            vec![z(&[&[0]]), z(&[&[2]])],
        )
        .unwrap()
    }

    #[test]
    fn circle_betti_numbers() {
        let h = homology(&circle(RingTag::Rationals)).unwrap();
        assert_eq!((h.rank(0), h.rank(1)), (1, 1));
        let h = homology(&circle(RingTag::IntegersMod(2))).unwrap();
        assert_eq!((h.rank(0), h.rank(1)), (1, 1));
    }

    #[test]
    fn exact_complex_is_acyclic() {
        let q = RingTag::Rationals;
        let e = ChainComplex::new(q, 0, vec![1, 1], vec![ExactMatrix::identity(q, 1)]).unwrap();
        assert!(homology(&e).unwrap().ranks.is_empty());
    }

    #[test]
    fn identity_induces_identity() {
        let c = circle(RingTag::Rationals);
        let id = ChainMap::between(
            &c,
            &c,
            c.degrees()
                .map(|n| (n, ExactMatrix::identity(RingTag::Rationals, 3)))
                .collect(),
        )
        .unwrap();
        for m in homology_map(&id).unwrap().values() {
            assert!(m.is_identity());
        }
    }

    #[test]
    fn homology_requires_a_field() {
        assert!(homology(&rp2()).is_err());
        assert!(HomologyBasis::mod_torsion(&circle(RingTag::Rationals)).is_err());
    }

    #[test]
    fn rp2_mod_torsion() {
        let m = rp2();
        let id = ChainMap::between(
            &m,
            &m,
            m.degrees()
                .map(|n| (n, ExactMatrix::identity(RingTag::Integers, 1)))
                .collect(),
        )
        .unwrap();
        let (h, maps) = integral_homology_mod_torsion(&m, &id).unwrap();
        assert_eq!((h.rank(0), h.rank(1), h.rank(2)), (1, 0, 0));
        assert!(maps[&0].is_identity());
    }

    #[test]
    fn zero_complex() {
        let m = ChainComplex::zero(RingTag::Integers);
        assert!(HomologyBasis::mod_torsion(&m)
            .unwrap()
            .graded()
            .ranks
            .is_empty());
    }

    #[test]
    fn torsion_free_case_agrees_with_rational_ranks() {
        let c = circle(RingTag::Integers);
        let hz = HomologyBasis::mod_torsion(&c).unwrap().graded();
        let hq = homology(&c.change_ring(RingTag::Rationals).unwrap()).unwrap();
        assert_eq!(hz.ranks, hq.ranks);
    }
}
