//! Generators for matrices, chain complexes and chain maps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::choice::Chooser;
use crate::error::Result;
use crate::exactalg::{ExactMatrix, RingTag, Scalar};

use super::chain::{ChainComplex, ChainMap, ChainObject};

/// Entries drawn from `lo..=hi`.
pub fn random_matrix(
    ch: &mut dyn Chooser,
    ring: RingTag,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(ring, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set_reduced(i, j, ring.from_i64(ch.range(lo, hi)));
        }
    }
    m
}

/// A product `L·U` of unitriangular matrices and its inverse.
pub fn random_unimodular(
    ch: &mut dyn Chooser,
    ring: RingTag,
    n: usize,
) -> Result<(ExactMatrix, ExactMatrix)> {
    let mut l = ExactMatrix::identity(ring, n);
    let mut u = ExactMatrix::identity(ring, n);
    for i in 0..n {
        for j in 0..i {
            l.set_reduced(i, j, ring.from_i64(ch.range(-2, 2)));
            u.set_reduced(j, i, ring.from_i64(ch.range(-2, 2)));
        }
    }
    let g = l.mul(&u)?;
    let inv = g.inverse()?.expect("unitriangular products are invertible");
    Ok((g, inv))
}

/// Direct sum of elementary pieces (`R --k--> R` with `k` in `1..=3`, or a
/// single free summand) in degrees `-1..=2`, with total rank at most
/// `max_rank`, conjugated by random unimodular matrices.
pub fn random_complex(
    ch: &mut dyn Chooser,
    ring: RingTag,
    max_rank: usize,
) -> Result<ChainComplex> {
    let mut budget = ch.pick(max_rank + 1);
    let mut c = ChainComplex::zero(ring);
    while budget > 0 {
        let piece = if budget >= 2 && ch.flip() {
            budget -= 2;
            let n = ch.range(0, 2) as i32;
            let k = ring.from_i64(ch.range(1, 3));
            let d = ExactMatrix::new(ring, 1, 1, vec![k])?;
            ChainComplex::new(ring, n - 1, vec![1, 1], vec![d])?
        } else {
            budget -= 1;
            ChainComplex::concentrated(ring, ch.range(-1, 2) as i32, 1)?
        };
        c = c.direct_sum(&piece)?;
    }
    let mut autos = BTreeMap::new();
    for n in c.degrees() {
        autos.insert(n, random_unimodular(ch, ring, c.rank(n))?);
    }
    c.conjugate(&autos)
}

/// Scale a rational vector to a primitive integer vector.
fn primitive(v: &[Scalar]) -> Vec<Scalar> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Scalar::from_integer(x / &g))
        .collect()
}

/// A random element of the space of chain maps `source -> target`: a
/// combination of a kernel basis of the commutation equations with
/// coefficients in `-2..=2`.
pub fn random_chain_map(
    ch: &mut dyn Chooser,
    source: &ChainObject,
    target: &ChainObject,
) -> Result<ChainMap> {
    let ring = source.ring();
    let (s, t) = (source.complex(), target.complex());
    // unknowns: entries of f_n, row-major, degree by degree
    let mut offsets = BTreeMap::new();
    let mut unknowns = 0;
    for n in s.degrees() {
        let (r, c) = (t.rank(n), s.rank(n));
        if r > 0 && c > 0 {
            offsets.insert(n, unknowns);
            unknowns += r * c;
        }
    }
    let work = if ring.is_field() {
        ring
    } else {
        RingTag::Rationals
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let lo = s.low().min(t.low());
    let hi = s.high().max(t.high()) + 1;
    for n in lo..=hi {
        // d_t(n) f_n - f_{n-1} d_s(n) = 0, one equation per entry
        let dt = t.differential(n);
        let ds = s.differential(n);
        for i in 0..t.rank(n - 1) {
            for j in 0..s.rank(n) {
                let mut eq = vec![work.zero(); unknowns];
                if let Some(&off) = offsets.get(&n) {
                    let cols = s.rank(n);
                    for k in 0..t.rank(n) {
                        let a = dt.get(i, k);
                        if !a.is_zero() {
                            let idx = off + k * cols + j;
                            eq[idx] = work.add(&eq[idx], a);
                        }
                    }
                }
                if let Some(&off) = offsets.get(&(n - 1)) {
                    let cols = s.rank(n - 1);
                    for k in 0..s.rank(n - 1) {
                        let b = ds.get(k, j);
                        if !b.is_zero() {
                            let idx = off + i * cols + k;
                            eq[idx] = work.sub(&eq[idx], b);
                        }
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        ExactMatrix::identity(work, unknowns)
    } else {
        let entries = rows.into_iter().flatten().collect::<Vec<_>>();
        let n_rows = entries.len() / unknowns.max(1);
        ExactMatrix::new(work, n_rows, unknowns, entries)?.kernel_basis()?
    };
    let mut x = vec![ring.zero(); unknowns];
    for k in 0..basis.cols() {
        let c = ring.from_i64(ch.range(-2, 2));
        if c.is_zero() {
            continue;
        }
        let mut v = basis.column(k);
        if ring == RingTag::Integers {
            v = primitive(&v);
        }
        for (xi, vi) in x.iter_mut().zip(&v) {
            *xi = ring.add(xi, &ring.mul(&c, vi));
        }
    }
    let mut comps = BTreeMap::new();
    for (&n, &off) in &offsets {
        let (r, c) = (t.rank(n), s.rank(n));
        comps.insert(
            n,
            ExactMatrix::new(ring, r, c, x[off..off + r * c].to_vec())?,
        );
    }
    ChainMap::new(source.clone(), target.clone(), comps)
}
