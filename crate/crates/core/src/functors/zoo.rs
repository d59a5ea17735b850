//! Concrete monoidal functors.

use std::collections::BTreeMap;

use crate::combinat::{
    free_abelian, graph, CobCategory, Cobordism1, FinSetCategory, Function, Preorder, RelCategory,
    Relation, SupCategory, SupMorphism,
};
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag};
use crate::linear::homology::induced_map;
use crate::linear::{ChainCategory, ChainMap, ChainObject, HomologyBasis, MatCategory};
use crate::smc::{Mor, Obj, SymmetricMonoidalCategory};

use super::MonoidalFunctor;

/// Implements the constraint methods for functors that are strict on objects.
macro_rules! strict_constraints {
    () => {
        fn tensor_constraint(
            &self,
            a: &Obj<Self::Source>,
            b: &Obj<Self::Source>,
        ) -> Result<Mor<Self::Target>> {
            super::strict_tensor(self, a, b)
        }

        fn unit_constraint(&self) -> Result<Mor<Self::Target>> {
            super::strict_unit(self)
        }

        fn tensor_constraint_inverse(
            &self,
            a: &Obj<Self::Source>,
            b: &Obj<Self::Source>,
        ) -> Result<Option<Mor<Self::Target>>> {
            super::strict_tensor(self, a, b).map(Some)
        }

        fn unit_constraint_inverse(&self) -> Result<Option<Mor<Self::Target>>> {
            super::strict_unit(self).map(Some)
        }

        fn is_normal(&self) -> bool {
            true
        }

        fn is_strong(&self) -> bool {
            true
        }
    };
}

/// Ring maps we know how to apply entrywise: `Z -> R`, `Z/m -> Z/k` for
/// `k | m`, and identities.
fn check_ring_change(from: RingTag, to: RingTag) -> Result<()> {
    let ok = match (from, to) {
        _ if from == to => true,
        (RingTag::Integers, _) => true,
        (RingTag::IntegersMod(m), RingTag::IntegersMod(k)) => m % k == 0,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: from.to_string(),
            right: to.to_string(),
        })
    }
}

/// `- ⊗_R S` on matrices.
#[derive(Debug, Clone, Copy)]
pub struct ExtensionOfScalars {
    source: MatCategory,
    target: MatCategory,
}

pub fn extension_of_scalars(from: RingTag, to: RingTag) -> Result<ExtensionOfScalars> {
    check_ring_change(from, to)?;
    Ok(ExtensionOfScalars {
        source: MatCategory::new(from),
        target: MatCategory::new(to),
    })
}

impl MonoidalFunctor for ExtensionOfScalars {
    type Source = MatCategory;
    type Target = MatCategory;

    fn source(&self) -> &MatCategory {
        &self.source
    }

    fn target(&self) -> &MatCategory {
        &self.target
    }

    fn map_obj(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }

    fn map_mor(&self, f: &ExactMatrix) -> Result<ExactMatrix> {
        self.source.ring.check_same(&f.ring())?;
        f.change_ring(self.target.ring)
    }

    strict_constraints!();
}

/// `- ⊗_R S` on chain complexes, factor by factor.
#[derive(Debug, Clone, Copy)]
pub struct ChainExtension {
    source: ChainCategory,
    target: ChainCategory,
}

impl ChainExtension {
    pub fn new(from: RingTag, to: RingTag) -> Result<Self> {
        check_ring_change(from, to)?;
        Ok(ChainExtension {
            source: ChainCategory::new(from),
            target: ChainCategory::new(to),
        })
    }
}

impl MonoidalFunctor for ChainExtension {
    type Source = ChainCategory;
    type Target = ChainCategory;

    fn source(&self) -> &ChainCategory {
        &self.source
    }

    fn target(&self) -> &ChainCategory {
        &self.target
    }

    fn map_obj(&self, a: &ChainObject) -> Result<ChainObject> {
        self.source.ring.check_same(&a.ring())?;
        let to = self.target.ring;
        a.map_factors(to, |c| c.change_ring(to))
    }

    fn map_mor(&self, f: &ChainMap) -> Result<ChainMap> {
        self.source.ring.check_same(&f.ring())?;
        f.change_ring(self.target.ring)
    }

    strict_constraints!();
}

/// Homology with chosen bases, as complexes with zero differential: over a
/// field, or over `Z` modulo torsion.
///
/// The constraint `c` is the Künneth map `[z] ⊗ [w] -> [z ⊗ w]`.
#[derive(Debug, Clone, Copy)]
pub struct HomologyFunctor {
    category: ChainCategory,
    torsion_free: bool,
}

pub fn homology_functor(field: RingTag) -> Result<HomologyFunctor> {
    if !field.is_field() {
        return Err(Error::NotAField(field.to_string()));
    }
    Ok(HomologyFunctor {
        category: ChainCategory::new(field),
        torsion_free: false,
    })
}

pub fn torsion_free_homology_functor() -> HomologyFunctor {
    HomologyFunctor {
        category: ChainCategory::new(RingTag::Integers),
        torsion_free: true,
    }
}

impl HomologyFunctor {
    fn basis(&self, a: &ChainObject) -> Result<HomologyBasis> {
        self.category.ring.check_same(&a.ring())?;
        if self.torsion_free {
            HomologyBasis::mod_torsion(a.complex())
        } else {
            HomologyBasis::over_field(a.complex())
        }
    }

    fn image(basis: &HomologyBasis) -> ChainObject {
        ChainObject::single(basis.graded().to_complex())
    }

    fn column(ring: RingTag, v: Vec<crate::exactalg::Scalar>) -> Result<ExactMatrix> {
        ExactMatrix::from_columns(ring, v.len(), &[v])
    }
}

impl MonoidalFunctor for HomologyFunctor {
    type Source = ChainCategory;
    type Target = ChainCategory;

    fn source(&self) -> &ChainCategory {
        &self.category
    }

    fn target(&self) -> &ChainCategory {
        &self.category
    }

    fn map_obj(&self, a: &ChainObject) -> Result<ChainObject> {
        Ok(Self::image(&self.basis(a)?))
    }

    fn map_mor(&self, f: &ChainMap) -> Result<ChainMap> {
        let bs = self.basis(f.source())?;
        let bt = self.basis(f.target())?;
        ChainMap::new(
            Self::image(&bs),
            Self::image(&bt),
            induced_map(&bs, &bt, f)?,
        )
    }

    fn tensor_constraint(&self, a: &ChainObject, b: &ChainObject) -> Result<ChainMap> {
        let ring = self.category.ring;
        let (ba, bb) = (self.basis(a)?, self.basis(b)?);
        let ab = a.concat(b);
        let bab = self.basis(&ab)?;
        let (fa, fb) = (Self::image(&ba), Self::image(&bb));
        let source = fa.concat(&fb);
        let target = Self::image(&bab);
        let mut comps = BTreeMap::new();
        for n in source.complex().degrees() {
            let mut m = ExactMatrix::zeros(ring, target.rank(n), source.rank(n));
            for p in fa.complex().degrees() {
                let q = n - p;
                let (zs, ws) = (ba.representatives(p), bb.representatives(q));
                for i in 0..fa.rank(p) {
                    for j in 0..fb.rank(q) {
                        let mut e_i = vec![ring.zero(); fa.rank(p)];
                        let mut e_j = vec![ring.zero(); fb.rank(q)];
                        e_i[i] = ring.one();
                        e_j[j] = ring.one();
                        let slot = fa.tensor_vectors(&fb, p, &e_i, q, &e_j);
                        let col = slot.iter().position(|x| !num_traits::Zero::is_zero(x));
                        let col = col.expect("a basis tensor is a basis vector");
                        let zw = a.tensor_vectors(b, p, &zs.column(i), q, &ws.column(j));
                        let class = bab.classes(n, &Self::column(ring, zw)?)?;
                        for r in 0..class.rows() {
                            m.set(r, col, class.get(r, 0).clone())?;
                        }
                    }
                }
            }
            comps.insert(n, m);
        }
        ChainMap::new(source, target, comps)
    }

    fn unit_constraint(&self) -> Result<ChainMap> {
        let ring = self.category.ring;
        let unit = ChainObject::empty(ring);
        let basis = self.basis(&unit)?;
        let class = basis.classes(0, &ExactMatrix::identity(ring, 1))?;
        ChainMap::new(unit, Self::image(&basis), BTreeMap::from([(0, class)]))
    }

    fn tensor_constraint_inverse(
        &self,
        a: &ChainObject,
        b: &ChainObject,
    ) -> Result<Option<ChainMap>> {
        self.tensor_constraint(a, b)?.inverse()
    }

    fn unit_constraint_inverse(&self) -> Result<Option<ChainMap>> {
        self.unit_constraint()?.inverse()
    }

    fn is_normal(&self) -> bool {
        true
    }

    /// On bounded free complexes, which are all this crate builds.
    fn is_strong(&self) -> bool {
        true
    }
}

/// `Z[-]`: finite sets to free abelian groups.
#[derive(Debug, Clone, Copy)]
pub struct FreeAbelianFunctor {
    target: MatCategory,
}

pub fn free_abelian_functor() -> FreeAbelianFunctor {
    FreeAbelianFunctor {
        target: MatCategory::new(RingTag::Integers),
    }
}

impl MonoidalFunctor for FreeAbelianFunctor {
    type Source = FinSetCategory;
    type Target = MatCategory;

    fn source(&self) -> &FinSetCategory {
        &FinSetCategory
    }

    fn target(&self) -> &MatCategory {
        &self.target
    }

    fn map_obj(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }

    fn map_mor(&self, f: &Function) -> Result<ExactMatrix> {
        Ok(free_abelian(f))
    }

    strict_constraints!();
}

/// `Γ`: a function to its graph.
#[derive(Debug, Clone, Copy, Default)]
pub struct GraphEmbedding;

pub fn graph_embedding_functor() -> GraphEmbedding {
    GraphEmbedding
}

impl MonoidalFunctor for GraphEmbedding {
    type Source = FinSetCategory;
    type Target = RelCategory;

    fn source(&self) -> &FinSetCategory {
        &FinSetCategory
    }

    fn target(&self) -> &RelCategory {
        &RelCategory
    }

    fn map_obj(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }

    fn map_mor(&self, f: &Function) -> Result<Relation> {
        Ok(graph(f))
    }

    strict_constraints!();
}

/// `𝒫`: a set to its power set (the down-sets of the discrete preorder), a
/// relation to the induced union-preserving map.
#[derive(Debug, Clone, Copy, Default)]
pub struct PowersetFunctor;

pub fn powerset_functor() -> PowersetFunctor {
    PowersetFunctor
}

impl MonoidalFunctor for PowersetFunctor {
    type Source = RelCategory;
    type Target = SupCategory;

    fn source(&self) -> &RelCategory {
        &RelCategory
    }

    fn target(&self) -> &SupCategory {
        &SupCategory
    }

    fn map_obj(&self, a: &usize) -> Result<Preorder> {
        Ok(Preorder::discrete(*a))
    }

    fn map_mor(&self, r: &Relation) -> Result<SupMorphism> {
        let images = (0..r.source())
            .map(|x| (0..r.target()).map(|y| r.related(x, y)).collect())
            .collect();
        SupMorphism::new(
            Preorder::discrete(r.source()),
            Preorder::discrete(r.target()),
            images,
        )
    }

    strict_constraints!();
}

/// Largest matrix side a TFT value may have.
const MAX_TFT_RANK: usize = 1 << 12;

fn tft_rank(d: usize, n: usize) -> Result<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|n| d.checked_pow(n))
        .filter(|&r| r <= MAX_TFT_RANK)
        .ok_or_else(|| Error::DimensionMismatch(format!("{d}^{n} is too large")))
}

/// The value of a cobordism `a -> b` under the TFT with `Z(pt) = Z^d`: the
/// `d^b x d^a` matrix whose entry at (output labels, input labels) is
/// `d^circles` when every matched pair of endpoints carries equal labels.
/// Labels are the base-`d` digits of the index, most significant first.
pub fn tft_value(d: usize, f: &Cobordism1) -> Result<ExactMatrix> {
    let ring = RingTag::Integers;
    let (a, b) = (f.inputs(), f.outputs());
    let (cols, rows) = (tft_rank(d, a)?, tft_rank(d, b)?);
    let weight = ring.from_i64(
        i64::try_from(d)
            .ok()
            .and_then(|d| d.checked_pow(f.circles() as u32))
            .ok_or_else(|| Error::DimensionMismatch("circle weight overflows".into()))?,
    );
    let digits = |mut k: usize, len: usize| {
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = k % d;
            k /= d;
        }
        out
    };
    let pairs = f.pairs();
    let mut m = ExactMatrix::zeros(ring, rows, cols);
    for u in 0..cols {
        let mut labels = digits(u, a);
        let base = labels.len();
        for v in 0..rows {
            labels.truncate(base);
            labels.extend(digits(v, b));
            if pairs.iter().all(|&(x, y)| labels[x] == labels[y]) {
                m.set(v, u, weight.clone())?;
            }
        }
    }
    Ok(m)
}

/// The 1-dimensional TFT with `Z(pt) = Z^d`.
#[derive(Debug, Clone, Copy)]
pub struct TftFunctor {
    d: usize,
    target: MatCategory,
}

pub fn tft_functor(d: usize) -> Result<TftFunctor> {
    if d == 0 {
        return Err(Error::DimensionMismatch("a TFT needs d ≥ 1".into()));
    }
    Ok(TftFunctor {
        d,
        target: MatCategory::new(RingTag::Integers),
    })
}

impl TftFunctor {
    pub fn dimension(&self) -> usize {
        self.d
    }
}

impl MonoidalFunctor for TftFunctor {
    type Source = CobCategory;
    type Target = MatCategory;

    fn source(&self) -> &CobCategory {
        &CobCategory
    }

    fn target(&self) -> &MatCategory {
        &self.target
    }

    fn map_obj(&self, n: &usize) -> Result<usize> {
        tft_rank(self.d, *n)
    }

    fn map_mor(&self, f: &Cobordism1) -> Result<ExactMatrix> {
        tft_value(self.d, f)
    }

    strict_constraints!();
}

/// `second ∘ first`, with `c = second(c₁) ∘ c₂` and `i = second(i₁) ∘ i₂`.
#[derive(Debug, Clone, Copy)]
pub struct Composite<F, G> {
    first: F,
    second: G,
}

impl<F, G> Composite<F, G>
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Target>,
{
    pub fn new(first: F, second: G) -> Self {
        Composite { first, second }
    }
}

impl<F, G> MonoidalFunctor for Composite<F, G>
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Target>,
{
    type Source = F::Source;
    type Target = G::Target;

    fn source(&self) -> &F::Source {
        self.first.source()
    }

    fn target(&self) -> &G::Target {
        self.second.target()
    }

    fn map_obj(&self, a: &Obj<F::Source>) -> Result<Obj<G::Target>> {
        self.second.map_obj(&self.first.map_obj(a)?)
    }

    fn map_mor(&self, f: &Mor<F::Source>) -> Result<Mor<G::Target>> {
        self.second.map_mor(&self.first.map_mor(f)?)
    }

    fn tensor_constraint(&self, a: &Obj<F::Source>, b: &Obj<F::Source>) -> Result<Mor<G::Target>> {
        let outer = self
            .second
            .tensor_constraint(&self.first.map_obj(a)?, &self.first.map_obj(b)?)?;
        let inner = self.second.map_mor(&self.first.tensor_constraint(a, b)?)?;
        self.target().compose(&inner, &outer)
    }

    fn unit_constraint(&self) -> Result<Mor<G::Target>> {
        let outer = self.second.unit_constraint()?;
        let inner = self.second.map_mor(&self.first.unit_constraint()?)?;
        self.target().compose(&inner, &outer)
    }

    fn tensor_constraint_inverse(
        &self,
        a: &Obj<F::Source>,
        b: &Obj<F::Source>,
    ) -> Result<Option<Mor<G::Target>>> {
        let Some(inner) = self.first.tensor_constraint_inverse(a, b)? else {
            return Ok(None);
        };
        let (fa, fb) = (self.first.map_obj(a)?, self.first.map_obj(b)?);
        let Some(outer) = self.second.tensor_constraint_inverse(&fa, &fb)? else {
            return Ok(None);
        };
        Ok(Some(
            self.target()
                .compose(&outer, &self.second.map_mor(&inner)?)?,
        ))
    }

    fn unit_constraint_inverse(&self) -> Result<Option<Mor<G::Target>>> {
        let (Some(inner), Some(outer)) = (
            self.first.unit_constraint_inverse()?,
            self.second.unit_constraint_inverse()?,
        ) else {
            return Ok(None);
        };
        Ok(Some(
            self.target()
                .compose(&outer, &self.second.map_mor(&inner)?)?,
        ))
    }

    fn is_normal(&self) -> bool {
        self.first.is_normal() && self.second.is_normal()
    }

    fn is_strong(&self) -> bool {
        self.first.is_strong() && self.second.is_strong()
    }
}

/// `F = (H(-; Z)/torsion) ⊗ Q` and `G = H(- ⊗ Q; Q)`, as functors `Ch_Z -> Ch_Q`.
pub type RationalizedFreeHomology = Composite<HomologyFunctor, ChainExtension>;
pub type RationalHomology = Composite<ChainExtension, HomologyFunctor>;

pub fn rationalized_free_homology() -> RationalizedFreeHomology {
    let ext = ChainExtension::new(RingTag::Integers, RingTag::Rationals).expect("Z -> Q");
    Composite::new(torsion_free_homology_functor(), ext)
}

pub fn rational_homology() -> RationalHomology {
    let ext = ChainExtension::new(RingTag::Integers, RingTag::Rationals).expect("Z -> Q");
    Composite::new(
        ext,
        homology_functor(RingTag::Rationals).expect("Q is a field"),
    )
}

/// The comparison `α_M: F(M) -> G(M)` sending each integral representative
/// to its rational class.
pub fn rational_comparison(m: &ChainObject) -> Result<ChainMap> {
    let (f, g) = (rationalized_free_homology(), rational_homology());
    let q = RingTag::Rationals;
    let integral = HomologyBasis::mod_torsion(m.complex())?;
    let rational_source = ChainExtension::new(RingTag::Integers, q)?.map_obj(m)?;
    let rational = HomologyBasis::over_field(rational_source.complex())?;
    let mut comps = BTreeMap::new();
    for n in m.complex().degrees() {
        let reps = integral.representatives(n);
        if reps.cols() == 0 || rational.rank(n) == 0 {
            continue;
        }
        comps.insert(n, rational.classes(n, &reps.change_ring(q)?)?);
    }
    ChainMap::new(f.map_obj(m)?, g.map_obj(m)?, comps)
}
