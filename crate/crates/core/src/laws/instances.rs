//! Random and exhaustive generators for each category under test.

use std::collections::BTreeMap;

use crate::choice::Chooser;
use crate::combinat::{
    downset_dual_pair, graph, rel_dual_pair, CobCategory, Cobordism1, Function, PointSet, Preorder,
    RelCategory, Relation, SupCategory, SupMorphism,
};
use crate::error::Result;
use crate::exactalg::{ExactMatrix, RingTag};
use crate::linear::random::{random_chain_map, random_complex, random_matrix};
use crate::linear::{
    chain_dual_pair, mat_dual_pair, ChainCategory, ChainComplex, ChainMap, ChainObject, MatCategory,
};
use crate::smc::{Mor, Obj, PairOf, SymmetricMonoidalCategory};

/// Inputs for the fixed point property: `Δ: M -> M ⊗ P`, `f: M -> M`,
/// `h: P -> P` with `(f ⊗ h) Δ = Δ f`.
pub struct DiagonalCase<C: SymmetricMonoidalCategory> {
    pub pair: PairOf<C>,
    pub p: Obj<C>,
    pub delta: Mor<C>,
    pub f: Mor<C>,
    pub h: Mor<C>,
}

pub trait Instance {
    type C: SymmetricMonoidalCategory;

    fn category(&self) -> &Self::C;
    /// A dualizable object with a chosen pair.
    fn dualizable(&self, ch: &mut dyn Chooser) -> Result<PairOf<Self::C>>;
    /// A small parameter object.
    fn object(&self, ch: &mut dyn Chooser) -> Result<Obj<Self::C>>;
    fn morphism(
        &self,
        ch: &mut dyn Chooser,
        from: &Obj<Self::C>,
        to: &Obj<Self::C>,
    ) -> Result<Mor<Self::C>>;
    fn diagonal(&self, ch: &mut dyn Chooser) -> Result<DiagonalCase<Self::C>>;
    fn render_obj(&self, a: &Obj<Self::C>) -> String;
}

fn random_endofunction(ch: &mut dyn Chooser, n: usize) -> Vec<usize> {
    (0..n).map(|_| ch.pick(n)).collect()
}

/// Matrices with entries in `-2..=2`; ranks at most 3, parameters at most 2.
pub struct MatInstance {
    category: MatCategory,
}

impl MatInstance {
    pub fn new(ring: RingTag) -> Self {
        MatInstance {
            category: MatCategory::new(ring),
        }
    }
}

impl Instance for MatInstance {
    type C = MatCategory;

    fn category(&self) -> &MatCategory {
        &self.category
    }

    fn dualizable(&self, ch: &mut dyn Chooser) -> Result<PairOf<MatCategory>> {
        Ok(mat_dual_pair(self.category.ring, ch.pick(4)))
    }

    fn object(&self, ch: &mut dyn Chooser) -> Result<usize> {
        Ok(ch.pick(3))
    }

    fn morphism(&self, ch: &mut dyn Chooser, from: &usize, to: &usize) -> Result<ExactMatrix> {
        Ok(random_matrix(ch, self.category.ring, *to, *from, -2, 2))
    }

    fn diagonal(&self, ch: &mut dyn Chooser) -> Result<DiagonalCase<MatCategory>> {
        let ring = self.category.ring;
        let n = 1 + ch.pick(3);
        let diag: Vec<usize> = (0..n).map(|i| i * n + i).collect();
        let f = ExactMatrix::of_function(ring, n, &random_endofunction(ch, n));
        Ok(DiagonalCase {
            pair: mat_dual_pair(ring, n),
            p: n,
            delta: ExactMatrix::of_function(ring, n * n, &diag),
            h: f.clone(),
            f,
        })
    }

    fn render_obj(&self, a: &usize) -> String {
        format!("rank {a}\n")
    }
}

/// Chain complexes over a field, generic over the category so that a
/// corrupted structure can reuse the generators.
pub struct ChainInstance<C> {
    category: C,
    ring: RingTag,
    /// Total rank bound for dualizable complexes.
    pub max_rank: usize,
}

impl ChainInstance<ChainCategory> {
    pub fn new(ring: RingTag) -> Self {
        ChainInstance {
            category: ChainCategory::new(ring),
            ring,
            max_rank: 3,
        }
    }
}

impl ChainInstance<CorruptedChain> {
    pub fn corrupted(ring: RingTag) -> Self {
        ChainInstance {
            category: CorruptedChain(ChainCategory::new(ring)),
            ring,
            max_rank: 3,
        }
    }
}

impl<C> Instance for ChainInstance<C>
where
    C: SymmetricMonoidalCategory<Object = ChainObject, Morphism = ChainMap>,
{
    type C = C;

    fn category(&self) -> &C {
        &self.category
    }

    fn dualizable(&self, ch: &mut dyn Chooser) -> Result<PairOf<C>> {
        chain_dual_pair(&random_complex(ch, self.ring, self.max_rank)?)
    }

    fn object(&self, ch: &mut dyn Chooser) -> Result<ChainObject> {
        Ok(ChainObject::single(random_complex(ch, self.ring, 2)?))
    }

    fn morphism(
        &self,
        ch: &mut dyn Chooser,
        from: &ChainObject,
        to: &ChainObject,
    ) -> Result<ChainMap> {
        random_chain_map(ch, from, to)
    }

    fn diagonal(&self, ch: &mut dyn Chooser) -> Result<DiagonalCase<C>> {
        let ring = self.ring;
        let n = 1 + ch.pick(2);
        let m = ChainComplex::concentrated(ring, 0, n)?;
        let obj = ChainObject::single(m.clone());
        let diag: Vec<usize> = (0..n).map(|i| i * n + i).collect();
        let delta = ChainMap::new(
            obj.clone(),
            obj.concat(&obj),
            BTreeMap::from([(0, ExactMatrix::of_function(ring, n * n, &diag))]),
        )?;
        let g = ExactMatrix::of_function(ring, n, &random_endofunction(ch, n));
        let f = ChainMap::between(&m, &m, BTreeMap::from([(0, g)]))?;
        Ok(DiagonalCase {
            pair: chain_dual_pair(&m)?,
            p: obj,
            delta,
            h: f.clone(),
            f,
        })
    }

    fn render_obj(&self, a: &ChainObject) -> String {
        a.factors()
            .map(|m| m.to_text())
            .collect::<Vec<_>>()
            .join("--\n")
    }
}

/// The chain category with each symmetry replaced by the identity-shaped
/// map; a deliberately broken structure for exercising failure reports.
#[derive(Debug, Clone, Copy)]
pub struct CorruptedChain(pub ChainCategory);

impl SymmetricMonoidalCategory for CorruptedChain {
    type Object = ChainObject;
    type Morphism = ChainMap;

    fn domain(&self, f: &ChainMap) -> ChainObject {
        self.0.domain(f)
    }

    fn codomain(&self, f: &ChainMap) -> ChainObject {
        self.0.codomain(f)
    }

    fn identity(&self, a: &ChainObject) -> ChainMap {
        self.0.identity(a)
    }

    fn compose(&self, g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        self.0.compose(g, f)
    }

    fn tensor_obj(&self, a: &ChainObject, b: &ChainObject) -> ChainObject {
        self.0.tensor_obj(a, b)
    }

    fn tensor_mor(&self, f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        self.0.tensor_mor(f, g)
    }

    fn unit(&self) -> ChainObject {
        self.0.unit()
    }

    fn symmetry(&self, a: &ChainObject, b: &ChainObject) -> ChainMap {
        let (ab, ba) = (a.concat(b), b.concat(a));
        let ring = self.0.ring;
        let components = ab
            .complex()
            .degrees()
            .map(|n| (n, ExactMatrix::identity(ring, ab.rank(n))))
            .collect();
        ChainMap::normalized(ab, ba, components)
    }

    fn mor_eq(&self, f: &ChainMap, g: &ChainMap) -> bool {
        self.0.mor_eq(f, g)
    }

    fn render(&self, f: &ChainMap) -> String {
        self.0.render(f)
    }
}

/// Finite sets and relations; dualizable sets have at most `max_size` points.
pub struct RelInstance {
    pub max_size: usize,
}

fn random_relation(ch: &mut dyn Chooser, from: usize, to: usize) -> Result<Relation> {
    let bits = (0..from * to).map(|_| ch.flip()).collect();
    Relation::new(from, to, bits)
}

impl Instance for RelInstance {
    type C = RelCategory;

    fn category(&self) -> &RelCategory {
        &RelCategory
    }

    fn dualizable(&self, ch: &mut dyn Chooser) -> Result<PairOf<RelCategory>> {
        Ok(rel_dual_pair(ch.pick(self.max_size + 1)))
    }

    fn object(&self, ch: &mut dyn Chooser) -> Result<usize> {
        Ok(ch.pick(3))
    }

    fn morphism(&self, ch: &mut dyn Chooser, from: &usize, to: &usize) -> Result<Relation> {
        random_relation(ch, *from, *to)
    }

    fn diagonal(&self, ch: &mut dyn Chooser) -> Result<DiagonalCase<RelCategory>> {
        let n = 1 + ch.pick(3);
        let f = graph(&Function::endo(random_endofunction(ch, n))?);
        Ok(DiagonalCase {
            pair: rel_dual_pair(n),
            p: n,
            delta: graph(&Function::diagonal(n)),
            h: f.clone(),
            f,
        })
    }

    fn render_obj(&self, a: &usize) -> String {
        format!("set {a}\n")
    }
}

/// Down-set lattices of preorders on at most 3 points.
pub struct SupInstance {
    small: Vec<Vec<Preorder>>,
}

impl SupInstance {
    pub fn new() -> Self {
        SupInstance {
            small: (0..=3).map(Preorder::all_up_to_iso).collect(),
        }
    }

    fn preorder(&self, ch: &mut dyn Chooser, max: usize) -> Preorder {
        let n = ch.pick(max + 1);
        let options = &self.small[n];
        options[ch.pick(options.len())].clone()
    }
}

impl Default for SupInstance {
    fn default() -> Self {
        Self::new()
    }
}

impl Instance for SupInstance {
    type C = SupCategory;

    fn category(&self) -> &SupCategory {
        &SupCategory
    }

    fn dualizable(&self, ch: &mut dyn Chooser) -> Result<PairOf<SupCategory>> {
        Ok(downset_dual_pair(&self.preorder(ch, 3)))
    }

    fn object(&self, ch: &mut dyn Chooser) -> Result<Preorder> {
        Ok(self.preorder(ch, 2))
    }

    /// Point images are down-closures of random subsets, then made monotone
    /// by taking unions over the points below.
    fn morphism(
        &self,
        ch: &mut dyn Chooser,
        from: &Preorder,
        to: &Preorder,
    ) -> Result<SupMorphism> {
        let raw: Vec<PointSet> = (0..from.len())
            .map(|_| {
                let s: Vec<bool> = (0..to.len()).map(|_| ch.flip()).collect();
                to.down_closure(&s)
            })
            .collect();
        let images = (0..from.len())
            .map(|a| {
                (0..to.len())
                    .map(|y| (0..from.len()).any(|b| from.leq(b, a) && raw[b][y]))
                    .collect()
            })
            .collect();
        SupMorphism::new(from.clone(), to.clone(), images)
    }

    fn diagonal(&self, ch: &mut dyn Chooser) -> Result<DiagonalCase<SupCategory>> {
        let n = 1 + ch.pick(3);
        let options = &self.small[n];
        let p = options[ch.pick(options.len())].clone();
        let endos = p.monotone_endos();
        let g = &endos[ch.pick(endos.len())];
        let diag: Vec<usize> = (0..n).map(|i| i * n + i).collect();
        let delta = SupMorphism::direct_image(&p, &p.product(&p), &diag)?;
        let f = SupMorphism::direct_image(&p, &p, g)?;
        Ok(DiagonalCase {
            pair: downset_dual_pair(&p),
            p,
            delta,
            h: f.clone(),
            f,
        })
    }

    fn render_obj(&self, a: &Preorder) -> String {
        a.to_text()
    }
}

/// Unoriented 1-cobordisms. Dualizable objects have 1 or 3 points and
/// parameters 0 or 2, so every requested hom-set is nonempty.
pub struct CobInstance;

impl Instance for CobInstance {
    type C = CobCategory;

    fn category(&self) -> &CobCategory {
        &CobCategory
    }

    fn dualizable(&self, ch: &mut dyn Chooser) -> Result<PairOf<CobCategory>> {
        Ok(crate::combinat::cob1_dual_pair(1 + 2 * ch.pick(2)))
    }

    fn object(&self, ch: &mut dyn Chooser) -> Result<usize> {
        Ok(2 * ch.pick(2))
    }

    fn morphism(&self, ch: &mut dyn Chooser, from: &usize, to: &usize) -> Result<Cobordism1> {
        let n = from + to;
        let mut partner = vec![usize::MAX; n];
        let mut free: Vec<usize> = (0..n).collect();
        while let Some(x) = free.first().copied() {
            free.remove(0);
            if free.is_empty() {
                break;
            }
            let y = free.remove(ch.pick(free.len()));
            partner[x] = y;
            partner[y] = x;
        }
        Cobordism1::new(*from, *to, partner, ch.pick(3))
    }

    fn diagonal(&self, ch: &mut dyn Chooser) -> Result<DiagonalCase<CobCategory>> {
        let c = CobCategory;
        let n = 1 + 2 * ch.pick(2);
        let delta = c.tensor_mor(&c.identity(&n), &c.coevaluation(1))?;
        let f = self.morphism(ch, &n, &n)?;
        let h = if ch.flip() {
            c.symmetry(&1, &1)
        } else {
            c.identity(&2)
        };
        Ok(DiagonalCase {
            pair: crate::combinat::cob1_dual_pair(n),
            p: 2,
            delta,
            f,
            h,
        })
    }

    fn render_obj(&self, a: &usize) -> String {
        format!("points {a}\n")
    }
}
