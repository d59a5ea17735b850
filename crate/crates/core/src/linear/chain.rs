//! Bounded chain complexes of finite-rank free modules.
//!
//! An object of [`ChainCategory`] is a word of complexes, read as their
//! tensor product. Tensoring objects concatenates words, which keeps `⊗`
//! strictly associative. A word is realized as a single complex whose
//! degree-`n` basis consists of tuples of factor basis elements with total
//! degree `n`, in lexicographic order of the factors' global indices
//! (degree first, then position).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag, Scalar};
use crate::smc::{DualPair, SymmetricMonoidalCategory};

/// Largest supported `|degree|`.
pub const MAX_DEGREE: i32 = 16;
/// Largest supported rank in one degree.
pub const MAX_RANK: usize = 64;

/// A complex `... -> C_n -> C_{n-1} -> ...`, stored trimmed so that equal
/// complexes have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    ring: RingTag,
    low: i32,
    ranks: Vec<usize>,
    /// `differentials[k]` is `d` from degree `low + k + 1` to `low + k`.
    differentials: Vec<ExactMatrix>,
}

impl ChainComplex {
    /// `differentials[k]` maps degree `low + k + 1` to degree `low + k`.
    pub fn new(
        ring: RingTag,
        low: i32,
        ranks: Vec<usize>,
        differentials: Vec<ExactMatrix>,
    ) -> Result<Self> {
        let c = Self::new_unbounded(ring, low, ranks, differentials)?;
        if let Some(&r) = c.ranks.iter().max() {
            if r > MAX_RANK {
                return Err(Error::InvalidComplex(format!(
                    "rank {r} exceeds {MAX_RANK}"
                )));
            }
            if c.low < -MAX_DEGREE || c.high() > MAX_DEGREE {
                return Err(Error::InvalidComplex(format!(
                    "degrees {}..{} exceed the bound {MAX_DEGREE}",
                    c.low,
                    c.high()
                )));
            }
        }
        Ok(c)
    }

    /// As [`ChainComplex::new`] without the size bounds; tensor powers of
    /// admissible complexes may exceed them.
    fn new_unbounded(
        ring: RingTag,
        low: i32,
        ranks: Vec<usize>,
        differentials: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if differentials.len() != ranks.len().saturating_sub(1) {
            return Err(Error::InvalidComplex(format!(
                "{} ranks need {} differentials, found {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            ring.check_same(&d.ring())?;
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::InvalidComplex(format!(
                    "d_{} should be {}x{}, found {}x{}",
                    low + k as i32 + 1,
                    ranks[k],
                    ranks[k + 1],
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k - 1].mul(&differentials[k])?.is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d_{} d_{} is not zero",
                    low + k as i32,
                    low + k as i32 + 1
                )));
            }
        }
        Ok(Self::trimmed(ring, low, ranks, differentials))
    }

    /// Build from ranks and differentials keyed by degree; `d` at key `n`
    /// maps degree `n` to degree `n - 1`. Missing differentials are zero.
    pub fn from_degrees(
        ring: RingTag,
        ranks: &BTreeMap<i32, usize>,
        differentials: &BTreeMap<i32, ExactMatrix>,
    ) -> Result<Self> {
        let c = Self::from_degrees_unbounded(ring, ranks, differentials)?;
        Self::new(c.ring, c.low, c.ranks, c.differentials)
    }

    fn from_degrees_unbounded(
        ring: RingTag,
        ranks: &BTreeMap<i32, usize>,
        differentials: &BTreeMap<i32, ExactMatrix>,
    ) -> Result<Self> {
        let degrees: Vec<i32> = ranks
            .iter()
            .filter(|(_, &r)| r > 0)
            .map(|(&n, _)| n)
            .collect();
        let (Some(&low), Some(&high)) = (degrees.first(), degrees.last()) else {
            if differentials.values().any(|d| d.rows() * d.cols() > 0) {
                return Err(Error::InvalidComplex(
                    "differential on a zero complex".into(),
                ));
            }
            return Ok(Self::zero(ring));
        };
        for &n in differentials.keys() {
            if n <= low || n > high {
                let d = &differentials[&n];
                if d.rows() * d.cols() > 0 {
                    return Err(Error::InvalidComplex(format!("d_{n} outside the support")));
                }
            }
        }
        let rank = |n: i32| ranks.get(&n).copied().unwrap_or(0);
        let rs: Vec<usize> = (low..=high).map(rank).collect();
        let ds = (low + 1..=high)
            .map(|n| {
                differentials
                    .get(&n)
                    .cloned()
                    .unwrap_or_else(|| ExactMatrix::zeros(ring, rank(n - 1), rank(n)))
            })
            .collect();
        Self::new_unbounded(ring, low, rs, ds)
    }

    fn trimmed(
        ring: RingTag,
        mut low: i32,
        mut ranks: Vec<usize>,
        mut differentials: Vec<ExactMatrix>,
    ) -> Self {
        while ranks.last() == Some(&0) {
            ranks.pop();
            differentials.pop();
        }
        while ranks.first() == Some(&0) {
            ranks.remove(0);
            if !differentials.is_empty() {
                differentials.remove(0);
            }
            low += 1;
        }
        if ranks.is_empty() {
            low = 0;
        }
        ChainComplex {
            ring,
            low,
            ranks,
            differentials,
        }
    }

    pub fn zero(ring: RingTag) -> Self {
        ChainComplex {
            ring,
            low: 0,
            ranks: Vec::new(),
            differentials: Vec::new(),
        }
    }

    /// A free module of the given rank sitting in one degree.
    pub fn concentrated(ring: RingTag, degree: i32, rank: usize) -> Result<Self> {
        Self::new(ring, degree, vec![rank], Vec::new())
    }

    /// The ring in degree 0.
    pub fn unit(ring: RingTag) -> Self {
        Self::trimmed(ring, 0, vec![1], Vec::new())
    }

    /// Zero differentials with the given ranks.
    pub fn graded(ring: RingTag, ranks: &BTreeMap<i32, usize>) -> Result<Self> {
        Self::from_degrees(ring, ranks, &BTreeMap::new())
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Lowest degree with nonzero rank (0 for the zero complex).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest degree with nonzero rank (`low - 1` for the zero complex).
    pub fn high(&self) -> i32 {
        self.low + self.ranks.len() as i32 - 1
    }

    /// Degrees from the lowest to the highest nonzero rank.
    pub fn degrees(&self) -> impl Iterator<Item = i32> + Clone {
        self.low..=self.high()
    }

    pub fn rank(&self, n: i32) -> usize {
        if n < self.low || n > self.high() {
            0
        } else {
            self.ranks[(n - self.low) as usize]
        }
    }

    pub fn ranks(&self) -> BTreeMap<i32, usize> {
        self.degrees().map(|n| (n, self.rank(n))).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// `d_n: C_n -> C_{n-1}`.
    pub fn differential(&self, n: i32) -> ExactMatrix {
        if n > self.low && n <= self.high() {
            self.differentials[(n - self.low - 1) as usize].clone()
        } else {
            ExactMatrix::zeros(self.ring, self.rank(n - 1), self.rank(n))
        }
    }

    pub fn has_zero_differentials(&self) -> bool {
        self.differentials.iter().all(ExactMatrix::is_zero)
    }

    /// `Σ (-1)^n rank_n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|n| sign(n) * self.rank(n) as i64).sum()
    }

    /// `(M∨)_k = (M_{-k})*` with `d∨_k = (-1)^{k+1} (d_{1-k})ᵀ`.
    pub fn dual(&self) -> ChainComplex {
        if self.is_zero() {
            return self.clone();
        }
        let low = -self.high();
        let ranks: Vec<usize> = self.ranks.iter().rev().copied().collect();
        let differentials = (low + 1..=-self.low)
            .map(|k| {
                let t = self.differential(1 - k).transpose();
                if k % 2 == 0 {
                    t.scale(&self.ring.from_i64(-1))
                } else {
                    t
                }
            })
            .collect();
        ChainComplex {
            ring: self.ring,
            low,
            ranks,
            differentials,
        }
    }

    /// Same complex read in another ring (entries must have images there).
    pub fn change_ring(&self, ring: RingTag) -> Result<ChainComplex> {
        let ds = self
            .differentials
            .iter()
            .map(|d| d.change_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new_unbounded(ring, self.low, self.ranks.clone(), ds)
    }

    /// Direct sum, block diagonal in every degree.
    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        self.ring.check_same(&other.ring)?;
        let mut ranks = self.ranks();
        for (n, r) in other.ranks() {
            *ranks.entry(n).or_insert(0) += r;
        }
        let mut ds = BTreeMap::new();
        for (&n, _) in ranks.iter() {
            let (a, b) = (self.differential(n), other.differential(n));
            let mut d = ExactMatrix::zeros(self.ring, a.rows() + b.rows(), a.cols() + b.cols());
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    d.set_reduced(i, j, a.get(i, j).clone());
                }
            }
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    d.set_reduced(a.rows() + i, a.cols() + j, b.get(i, j).clone());
                }
            }
            ds.insert(n, d);
        }
        ChainComplex::from_degrees(self.ring, &ranks, &ds)
    }

    /// Conjugate the differentials by automorphisms `(g_n, g_n⁻¹)`:
    /// `d'_n = g_{n-1} d_n g_n⁻¹`. Degrees without an entry use the identity.
    pub fn conjugate(
        &self,
        autos: &BTreeMap<i32, (ExactMatrix, ExactMatrix)>,
    ) -> Result<ChainComplex> {
        let g = |n: i32| {
            autos
                .get(&n)
                .map(|(a, _)| a.clone())
                .unwrap_or_else(|| ExactMatrix::identity(self.ring, self.rank(n)))
        };
        let g_inv = |n: i32| {
            autos
                .get(&n)
                .map(|(_, b)| b.clone())
                .unwrap_or_else(|| ExactMatrix::identity(self.ring, self.rank(n)))
        };
        let mut ds = BTreeMap::new();
        for n in self.degrees() {
            ds.insert(n, g(n - 1).mul(&self.differential(n))?.mul(&g_inv(n))?);
        }
        ChainComplex::from_degrees(self.ring, &self.ranks(), &ds)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("complex {}\n", self.ring);
        for n in self.degrees() {
            out.push_str(&format!("rank {n} {}\n", self.rank(n)));
        }
        for n in self.degrees() {
            let d = self.differential(n);
            if d.rows() * d.cols() > 0 && !d.is_zero() {
                out.push_str(&format!("d {n}\n{}", d.to_text()));
            }
        }
        out
    }
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[{}](", self.ring)?;
        for (i, n) in self.degrees().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{}", self.rank(n))?;
        }
        write!(f, ")")
    }
}

/// `(-1)^n`
pub(crate) fn sign(n: i32) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One basis element of a factor: `(degree, index within degree)`.
type Cell = (i32, usize);
type Tuple = Vec<Cell>;

fn tuple_degree(t: &[Cell]) -> i32 {
    t.iter().map(|c| c.0).sum()
}

/// The single complex presented by a word, with its tuple basis.
#[derive(Debug)]
struct Realization {
    complex: ChainComplex,
    tuples: BTreeMap<i32, Vec<Tuple>>,
    index: HashMap<Tuple, usize>,
}

impl Realization {
    fn build(ring: RingTag, factors: &[Arc<ChainComplex>]) -> Result<Self> {
        let mut all: Vec<Tuple> = vec![Vec::new()];
        for factor in factors {
            let cells: Vec<Cell> = factor
                .degrees()
                .flat_map(|n| (0..factor.rank(n)).map(move |i| (n, i)))
                .collect();
            all = all
                .iter()
                .flat_map(|t| {
                    cells.iter().map(move |c| {
                        let mut u = t.clone();
                        u.push(*c);
                        u
                    })
                })
                .collect();
        }
        let mut tuples: BTreeMap<i32, Vec<Tuple>> = BTreeMap::new();
        for t in all {
            tuples.entry(tuple_degree(&t)).or_default().push(t);
        }
        let mut index = HashMap::new();
        for ts in tuples.values() {
            for (i, t) in ts.iter().enumerate() {
                index.insert(t.clone(), i);
            }
        }
        let ranks: BTreeMap<i32, usize> = tuples.iter().map(|(&n, ts)| (n, ts.len())).collect();
        let rank = |n: i32| ranks.get(&n).copied().unwrap_or(0);

        let mut diffs = BTreeMap::new();
        for (&n, ts) in tuples.iter() {
            let Some(targets) = tuples.get(&(n - 1)) else {
                continue;
            };
            let mut d = ExactMatrix::zeros(ring, targets.len(), ts.len());
            for (j, t) in ts.iter().enumerate() {
                let mut preceding = 0;
                for (pos, &(deg, idx)) in t.iter().enumerate() {
                    let col = factors[pos].differential(deg).column(idx);
                    for (r, x) in col.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let mut u = t.clone();
                        u[pos] = (deg - 1, r);
                        let row = index[&u];
                        let v = if sign(preceding) < 0 {
                            ring.neg(x)
                        } else {
                            x.clone()
                        };
                        d.add_to(row, j, &v);
                    }
                    preceding += deg;
                }
            }
            debug_assert_eq!(d.rows(), rank(n - 1));
            diffs.insert(n, d);
        }
        let complex = ChainComplex::from_degrees_unbounded(ring, &ranks, &diffs)?;
        Ok(Realization {
            complex,
            tuples,
            index,
        })
    }

    fn tuples_in(&self, n: i32) -> &[Tuple] {
        self.tuples.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// A word of complexes, standing for their tensor product.
#[derive(Clone)]
pub struct ChainObject {
    ring: RingTag,
    factors: Vec<Arc<ChainComplex>>,
    realized: Arc<Realization>,
}

impl ChainObject {
    pub fn new(ring: RingTag, factors: Vec<ChainComplex>) -> Result<Self> {
        for f in &factors {
            ring.check_same(&f.ring())?;
        }
        Self::from_arcs(ring, factors.into_iter().map(Arc::new).collect())
    }

    fn from_arcs(ring: RingTag, factors: Vec<Arc<ChainComplex>>) -> Result<Self> {
        let realized = Arc::new(Realization::build(ring, &factors)?);
        Ok(ChainObject {
            ring,
            factors,
            realized,
        })
    }

    /// The one-letter word.
    pub fn single(complex: ChainComplex) -> Self {
        let ring = complex.ring();
        Self::from_arcs(ring, vec![Arc::new(complex)]).expect("a single valid complex realizes")
    }

    pub fn empty(ring: RingTag) -> Self {
        Self::from_arcs(ring, Vec::new()).expect("the unit realizes")
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn factors(&self) -> impl Iterator<Item = &ChainComplex> {
        self.factors.iter().map(|f| f.as_ref())
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The tensor product as one complex.
    pub fn complex(&self) -> &ChainComplex {
        &self.realized.complex
    }

    pub fn rank(&self, n: i32) -> usize {
        self.realized.complex.rank(n)
    }

    pub fn concat(&self, other: &ChainObject) -> ChainObject {
        let factors = self.factors.iter().chain(&other.factors).cloned().collect();
        Self::from_arcs(self.ring, factors).expect("tensor of valid complexes realizes")
    }

    /// Apply a function to every factor.
    pub fn map_factors(
        &self,
        ring: RingTag,
        f: impl Fn(&ChainComplex) -> Result<ChainComplex>,
    ) -> Result<ChainObject> {
        let factors = self.factors().map(f).collect::<Result<Vec<_>>>()?;
        ChainObject::new(ring, factors)
    }

    /// Tensor of a degree-`p` vector of `self` with a degree-`q` vector of
    /// `other`, as a vector of `self ⊗ other` in degree `p + q`.
    pub fn tensor_vectors(
        &self,
        other: &ChainObject,
        p: i32,
        u: &[Scalar],
        q: i32,
        v: &[Scalar],
    ) -> Vec<Scalar> {
        let joined = self.concat(other);
        let mut out = vec![self.ring.zero(); joined.rank(p + q)];
        let (left, right) = (self.realized.tuples_in(p), other.realized.tuples_in(q));
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut t = left[i].clone();
                t.extend_from_slice(&right[j]);
                let k = joined.realized.index[&t];
                out[k] = self.ring.add(&out[k], &self.ring.mul(a, b));
            }
        }
        out
    }
}

impl PartialEq for ChainObject {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.factors == other.factors
    }
}

impl fmt::Debug for ChainObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.factors()).finish()
    }
}

/// Degree-preserving maps commuting with the differentials of the realized
/// complexes. Components are stored exactly for the degrees where source
/// and target are both nonzero.
#[derive(Clone)]
pub struct ChainMap {
    source: ChainObject,
    target: ChainObject,
    components: BTreeMap<i32, ExactMatrix>,
}

impl ChainMap {
    /// Validated constructor; missing components are zero.
    pub fn new(
        source: ChainObject,
        target: ChainObject,
        components: BTreeMap<i32, ExactMatrix>,
    ) -> Result<Self> {
        source.ring.check_same(&target.ring)?;
        for (n, m) in &components {
            source.ring.check_same(&m.ring())?;
            if m.rows() != target.rank(*n) || m.cols() != source.rank(*n) {
                return Err(Error::NotAChainMap(format!(
                    "component {n} should be {}x{}, found {}x{}",
                    target.rank(*n),
                    source.rank(*n),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let f = Self::normalized(source, target, components);
        f.check_commutes()?;
        Ok(f)
    }

    /// Map between one-letter words.
    pub fn between(
        source: &ChainComplex,
        target: &ChainComplex,
        components: BTreeMap<i32, ExactMatrix>,
    ) -> Result<Self> {
        Self::new(
            ChainObject::single(source.clone()),
            ChainObject::single(target.clone()),
            components,
        )
    }

    pub(crate) fn normalized(
        source: ChainObject,
        target: ChainObject,
        mut components: BTreeMap<i32, ExactMatrix>,
    ) -> Self {
        let ring = source.ring;
        let mut out = BTreeMap::new();
        for n in source.complex().degrees() {
            let (r, c) = (target.rank(n), source.rank(n));
            if r > 0 && c > 0 {
                let m = components
                    .remove(&n)
                    .unwrap_or_else(|| ExactMatrix::zeros(ring, r, c));
                out.insert(n, m);
            }
        }
        ChainMap {
            source,
            target,
            components: out,
        }
    }

    fn check_commutes(&self) -> Result<()> {
        let (s, t) = (self.source.complex(), self.target.complex());
        let lo = s.low().min(t.low());
        let hi = s.high().max(t.high()) + 1;
        for n in lo..=hi {
            let lhs = t.differential(n).mul(&self.component(n))?;
            let rhs = self.component(n - 1).mul(&s.differential(n))?;
            if lhs != rhs {
                return Err(Error::NotAChainMap(format!("does not commute with d_{n}")));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &ChainObject {
        &self.source
    }

    pub fn target(&self) -> &ChainObject {
        &self.target
    }

    pub fn ring(&self) -> RingTag {
        self.source.ring
    }

    /// `f_n`, zero where absent.
    pub fn component(&self, n: i32) -> ExactMatrix {
        self.components.get(&n).cloned().unwrap_or_else(|| {
            ExactMatrix::zeros(self.ring(), self.target.rank(n), self.source.rank(n))
        })
    }

    pub fn components(&self) -> &BTreeMap<i32, ExactMatrix> {
        &self.components
    }

    /// Degreewise inverse, if every component is invertible.
    pub fn inverse(&self) -> Result<Option<ChainMap>> {
        let mut comps = BTreeMap::new();
        let (s, t) = (self.source.complex(), self.target.complex());
        let lo = s.low().min(t.low());
        let hi = s.high().max(t.high());
        for n in lo..=hi {
            match self.component(n).inverse()? {
                Some(m) => {
                    comps.insert(n, m);
                }
                None => return Ok(None),
            }
        }
        Ok(Some(Self::normalized(
            self.target.clone(),
            self.source.clone(),
            comps,
        )))
    }

    /// Reinterpret over another ring, factorwise on the source and target words.
    pub fn change_ring(&self, ring: RingTag) -> Result<ChainMap> {
        let source = self.source.map_factors(ring, |c| c.change_ring(ring))?;
        let target = self.target.map_factors(ring, |c| c.change_ring(ring))?;
        let comps = self
            .components
            .iter()
            .map(|(&n, m)| Ok((n, m.change_ring(ring)?)))
            .collect::<Result<_>>()?;
        Ok(Self::normalized(source, target, comps))
    }

    /// `Σ (-1)^n tr f_n`, computed directly on the components.
    pub fn alternating_trace(&self) -> Result<Scalar> {
        if self.source != self.target {
            return Err(Error::type_mismatch(
                "alternating trace of a non-endomorphism",
            ));
        }
        let ring = self.ring();
        let mut total = ring.zero();
        for (&n, m) in &self.components {
            let t = m.trace()?;
            total = if sign(n) < 0 {
                ring.sub(&total, &t)
            } else {
                ring.add(&total, &t)
            };
        }
        Ok(total)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "chainmap {}\nsource\n{}target\n{}",
            self.ring(),
            self.source.complex().to_text(),
            self.target.complex().to_text()
        );
        for (n, m) in &self.components {
            out.push_str(&format!("f {n}\n{}", m.to_text()));
        }
        out
    }
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap({:?} -> {:?}", self.source, self.target)?;
        for (n, m) in &self.components {
            write!(f, ", {n}: {m:?}")?;
        }
        write!(f, ")")
    }
}

/// Chain complexes over a fixed ring with the Koszul-signed symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainCategory {
    pub ring: RingTag,
}

impl ChainCategory {
    pub fn new(ring: RingTag) -> Self {
        ChainCategory { ring }
    }

    pub fn object(&self, complex: ChainComplex) -> ChainObject {
        ChainObject::single(complex)
    }

    /// An endomorphism of the unit as a ring element.
    pub fn scalar(&self, f: &ChainMap) -> Result<Scalar> {
        if !f.source.complex().eq(&ChainComplex::unit(self.ring))
            || !f.target.complex().eq(&ChainComplex::unit(self.ring))
        {
            return Err(Error::type_mismatch("not an endomorphism of the unit"));
        }
        Ok(f.component(0).get(0, 0).clone())
    }
}

impl SymmetricMonoidalCategory for ChainCategory {
    type Object = ChainObject;
    type Morphism = ChainMap;

    fn domain(&self, f: &ChainMap) -> ChainObject {
        f.source.clone()
    }

    fn codomain(&self, f: &ChainMap) -> ChainObject {
        f.target.clone()
    }

    fn identity(&self, a: &ChainObject) -> ChainMap {
        let comps = a
            .complex()
            .degrees()
            .map(|n| (n, ExactMatrix::identity(self.ring, a.rank(n))))
            .collect();
        ChainMap::normalized(a.clone(), a.clone(), comps)
    }

    fn compose(&self, g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        if f.target != g.source {
            return Err(Error::type_mismatch(format!(
                "cannot compose {:?} after {:?}",
                g.source, f.target
            )));
        }
        let mut comps = BTreeMap::new();
        for (&n, fm) in &f.components {
            if let Some(gm) = g.components.get(&n) {
                comps.insert(n, gm.mul(fm)?);
            }
        }
        Ok(ChainMap::normalized(
            f.source.clone(),
            g.target.clone(),
            comps,
        ))
    }

    fn tensor_obj(&self, a: &ChainObject, b: &ChainObject) -> ChainObject {
        a.concat(b)
    }

    fn tensor_mor(&self, f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        let ring = self.ring;
        let source = f.source.concat(&g.source);
        let target = f.target.concat(&g.target);
        let split = f.source.len();
        let split_t = f.target.len();
        let mut comps = BTreeMap::new();
        for (&n, ts) in source.realized.tuples.iter() {
            let rows = target.rank(n);
            if rows == 0 {
                continue;
            }
            let mut m = ExactMatrix::zeros(ring, rows, ts.len());
            for (j, t) in ts.iter().enumerate() {
                let (s1, s2) = t.split_at(split);
                let p = tuple_degree(s1);
                let q = n - p;
                let (Some(fm), Some(gm)) = (f.components.get(&p), g.components.get(&q)) else {
                    continue;
                };
                let i1 = f.source.realized.index[s1];
                let i2 = g.source.realized.index[s2];
                let fcol = fm.column(i1);
                let gcol = gm.column(i2);
                for (r1, a) in fcol.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let t1 = &f.target.realized.tuples_in(p)[r1];
                    for (r2, b) in gcol.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let mut u = t1.clone();
                        u.extend_from_slice(&g.target.realized.tuples_in(q)[r2]);
                        debug_assert_eq!(u.len(), split_t + g.target.len());
                        let row = target.realized.index[&u];
                        m.add_to(row, j, &ring.mul(a, b));
                    }
                }
            }
            comps.insert(n, m);
        }
        Ok(ChainMap::normalized(source, target, comps))
    }

    fn unit(&self) -> ChainObject {
        ChainObject::empty(self.ring)
    }

    fn symmetry(&self, a: &ChainObject, b: &ChainObject) -> ChainMap {
        let ring = self.ring;
        let source = a.concat(b);
        let target = b.concat(a);
        let split = a.len();
        let mut comps = BTreeMap::new();
        for (&n, ts) in source.realized.tuples.iter() {
            let mut m = ExactMatrix::zeros(ring, ts.len(), ts.len());
            for (j, t) in ts.iter().enumerate() {
                let (x, y) = t.split_at(split);
                let mut u = y.to_vec();
                u.extend_from_slice(x);
                let row = target.realized.index[&u];
                let s = sign(tuple_degree(x) * tuple_degree(y));
                m.set_reduced(row, j, ring.from_i64(s));
            }
            comps.insert(n, m);
        }
        ChainMap::normalized(source, target, comps)
    }

    fn mor_eq(&self, f: &ChainMap, g: &ChainMap) -> bool {
        f.source == g.source && f.target == g.target && f.components == g.components
    }

    fn render(&self, f: &ChainMap) -> String {
        f.to_text()
    }
}

/// `M` with dual `M∨`, `η = Σ e_i ⊗ e_i*` and `ε(φ ⊗ x) = φ(x)`.
pub fn chain_dual_pair(m: &ChainComplex) -> Result<DualPair<ChainObject, ChainMap>> {
    let ring = m.ring();
    let dual = m.dual();
    let obj = ChainObject::single(m.clone());
    let dobj = ChainObject::single(dual.clone());
    let unit = ChainObject::empty(ring);
    let md = obj.concat(&dobj);
    let dm = dobj.concat(&obj);

    let mut eta = ExactMatrix::zeros(ring, md.rank(0), 1);
    let mut eps = ExactMatrix::zeros(ring, 1, dm.rank(0));
    for p in m.degrees() {
        for i in 0..m.rank(p) {
            eta.set_reduced(md.realized.index[&vec![(p, i), (-p, i)]], 0, ring.one());
            eps.set_reduced(0, dm.realized.index[&vec![(-p, i), (p, i)]], ring.one());
        }
    }
    let coevaluation = ChainMap::new(unit.clone(), md, BTreeMap::from([(0, eta)]))
        .map_err(|e| Error::DualPairInvalid(format!("coevaluation: {e}")))?;
    let evaluation = ChainMap::new(dm, unit, BTreeMap::from([(0, eps)]))
        .map_err(|e| Error::DualPairInvalid(format!("evaluation: {e}")))?;
    Ok(DualPair::new(obj, dobj, coevaluation, evaluation))
}

/// The Lefschetz number of a chain endomorphism, via the generic trace.
pub fn lefschetz_number(
    c: &ChainCategory,
    dp: &DualPair<ChainObject, ChainMap>,
    f: &ChainMap,
) -> Result<Scalar> {
    c.scalar(&crate::smc::trace(c, dp, f)?)
}
