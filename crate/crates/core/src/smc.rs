//! Symmetric monoidal categories, dual pairs and their traces.
//!
//! Instances are strict: tensor products of objects are computed on
//! canonical flattened representations, so associators and unitors never
//! appear. Factorizations such as `Q ⊗ M` are therefore not recoverable from
//! a morphism alone and every operation that needs one takes the factors
//! explicitly.

use std::fmt::Debug;

use crate::error::{Error, Result};

/// A strict symmetric monoidal category with decidable morphism equality.
pub trait SymmetricMonoidalCategory {
    type Object: Clone + PartialEq + Debug;
    type Morphism: Clone + Debug;

    fn domain(&self, f: &Self::Morphism) -> Self::Object;
    fn codomain(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn tensor_obj(&self, a: &Self::Object, b: &Self::Object) -> Self::Object;
    fn tensor_mor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn unit(&self) -> Self::Object;
    /// The symmetry `a ⊗ b -> b ⊗ a`.
    fn symmetry(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism;
    fn mor_eq(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;

    /// Text rendering of a morphism, used for failure witnesses.
    fn render(&self, f: &Self::Morphism) -> String {
        format!("{f:?}\n")
    }

    /// Left-to-right composite `fs[n-1] ∘ ... ∘ fs[0]`.
    fn compose_all(&self, fs: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| Error::type_mismatch("empty composite"))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, f| self.compose(f, &acc))
    }

    /// `fs[0] ⊗ fs[1] ⊗ ...`
    fn tensor_all(&self, fs: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| Error::type_mismatch("empty tensor"))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, f| self.tensor_mor(&acc, f))
    }

    fn tensor_objs(&self, objs: &[&Self::Object]) -> Self::Object {
        objs.iter()
            .fold(self.unit(), |acc, o| self.tensor_obj(&acc, o))
    }
}

/// Objects of a category.
pub type Obj<C> = <C as SymmetricMonoidalCategory>::Object;
/// Morphisms of a category.
pub type Mor<C> = <C as SymmetricMonoidalCategory>::Morphism;
/// Dual pairs of a category.
pub type PairOf<C> = DualPair<Obj<C>, Mor<C>>;

/// `(M, M∨, η: I -> M ⊗ M∨, ε: M∨ ⊗ M -> I)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualPair<O, M> {
    pub object: O,
    pub dual: O,
    pub coevaluation: M,
    pub evaluation: M,
}

impl<O, M> DualPair<O, M> {
    pub fn new(object: O, dual: O, coevaluation: M, evaluation: M) -> Self {
        DualPair {
            object,
            dual,
            coevaluation,
            evaluation,
        }
    }
}

fn expect_type<C: SymmetricMonoidalCategory>(
    c: &C,
    f: &Mor<C>,
    dom: &Obj<C>,
    cod: &Obj<C>,
    what: &str,
) -> Result<()> {
    let (d, k) = (c.domain(f), c.codomain(f));
    if &d != dom || &k != cod {
        return Err(Error::type_mismatch(format!(
            "{what}: expected {dom:?} -> {cod:?}, found {d:?} -> {k:?}"
        )));
    }
    Ok(())
}

/// Check that η and ε have the right types for the pair.
pub fn check_pair_types<C: SymmetricMonoidalCategory>(c: &C, dp: &PairOf<C>) -> Result<()> {
    let i = c.unit();
    expect_type(
        c,
        &dp.coevaluation,
        &i,
        &c.tensor_obj(&dp.object, &dp.dual),
        "coevaluation",
    )?;
    expect_type(
        c,
        &dp.evaluation,
        &c.tensor_obj(&dp.dual, &dp.object),
        &i,
        "evaluation",
    )
}

/// Both triangle identities under the instance's equality:
/// `(id ⊗ ε)(η ⊗ id) = id_M` and `(ε ⊗ id)(id ⊗ η) = id_M∨`.
pub fn verify_dual_pair<C: SymmetricMonoidalCategory>(c: &C, dp: &PairOf<C>) -> Result<bool> {
    check_pair_types(c, dp)?;
    let id_m = c.identity(&dp.object);
    let id_d = c.identity(&dp.dual);
    let left = c.compose(
        &c.tensor_mor(&id_m, &dp.evaluation)?,
        &c.tensor_mor(&dp.coevaluation, &id_m)?,
    )?;
    let right = c.compose(
        &c.tensor_mor(&dp.evaluation, &id_d)?,
        &c.tensor_mor(&id_d, &dp.coevaluation)?,
    )?;
    Ok(c.mor_eq(&left, &id_m) && c.mor_eq(&right, &id_d))
}

/// `tr(f) = ε ∘ 𝔰 ∘ (f ⊗ id) ∘ η`, an endomorphism of the unit.
pub fn trace<C: SymmetricMonoidalCategory>(c: &C, dp: &PairOf<C>, f: &Mor<C>) -> Result<Mor<C>> {
    expect_type(c, f, &dp.object, &dp.object, "trace argument")?;
    let fi = c.tensor_mor(f, &c.identity(&dp.dual))?;
    let s = c.symmetry(&dp.object, &dp.dual);
    c.compose_all(&[&dp.coevaluation, &fi, &s, &dp.evaluation])
}

/// Trace of the identity.
pub fn euler_characteristic<C: SymmetricMonoidalCategory>(c: &C, dp: &PairOf<C>) -> Result<Mor<C>> {
    trace(c, dp, &c.identity(&dp.object))
}

/// Twisted trace of `f: Q ⊗ M -> M ⊗ P`:
/// `(ε ⊗ id_P) ∘ 𝔰 ∘ (f ⊗ id_M∨) ∘ (id_Q ⊗ η)`, a morphism `Q -> P`.
pub fn twisted_trace<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    f: &Mor<C>,
) -> Result<Mor<C>> {
    let m = &dp.object;
    expect_type(
        c,
        f,
        &c.tensor_obj(q, m),
        &c.tensor_obj(m, p),
        "twisted trace argument",
    )?;
    let step1 = c.tensor_mor(&c.identity(q), &dp.coevaluation)?;
    let step2 = c.tensor_mor(f, &c.identity(&dp.dual))?;
    let step3 = c.symmetry(&c.tensor_obj(m, p), &dp.dual);
    let step4 = c.tensor_mor(&dp.evaluation, &c.identity(p))?;
    c.compose_all(&[&step1, &step2, &step3, &step4])
}

/// Mate of `f: Q ⊗ M -> N ⊗ P`, a morphism `N∨ ⊗ Q -> P ⊗ M∨`:
/// `(ε_N ⊗ id ⊗ id) ∘ (id ⊗ f ⊗ id) ∘ (id ⊗ id ⊗ η_M)`.
pub fn mate<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    f: &Mor<C>,
) -> Result<Mor<C>> {
    expect_type(
        c,
        f,
        &c.tensor_obj(q, &dp_m.object),
        &c.tensor_obj(&dp_n.object, p),
        "mate argument",
    )?;
    let id_nd = c.identity(&dp_n.dual);
    let id_q = c.identity(q);
    let id_p = c.identity(p);
    let id_md = c.identity(&dp_m.dual);
    let step1 = c.tensor_all(&[&id_nd, &id_q, &dp_m.coevaluation])?;
    let step2 = c.tensor_all(&[&id_nd, f, &id_md])?;
    let step3 = c.tensor_all(&[&dp_n.evaluation, &id_p, &id_md])?;
    c.compose_all(&[&step1, &step2, &step3])
}

/// Trace of `f` with respect to a diagonal `Δ: M -> M ⊗ P`: the twisted
/// trace of `Δ ∘ f` with `Q = I`.
pub fn trace_wrt_diagonal<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    p: &Obj<C>,
    diagonal: &Mor<C>,
    f: &Mor<C>,
) -> Result<Mor<C>> {
    expect_type(c, f, &dp.object, &dp.object, "endomorphism")?;
    let g = c.compose(diagonal, f)?;
    twisted_trace(c, dp, &c.unit(), p, &g)
}

/// The transfer: trace of the identity with respect to `Δ`.
pub fn transfer<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    p: &Obj<C>,
    diagonal: &Mor<C>,
) -> Result<Mor<C>> {
    trace_wrt_diagonal(c, dp, p, diagonal, &c.identity(&dp.object))
}

/// The unit is self-dual with identity structure maps.
pub fn unit_dual_pair<C: SymmetricMonoidalCategory>(c: &C) -> PairOf<C> {
    let i = c.unit();
    let id = c.identity(&i);
    DualPair::new(i.clone(), i, id.clone(), id)
}

/// `M∨` is dual to `M` via `𝔰 ∘ η` and `ε ∘ 𝔰`.
pub fn swapped_dual_pair<C: SymmetricMonoidalCategory>(c: &C, dp: &PairOf<C>) -> Result<PairOf<C>> {
    let eta = c.compose(&c.symmetry(&dp.object, &dp.dual), &dp.coevaluation)?;
    let eps = c.compose(&dp.evaluation, &c.symmetry(&dp.object, &dp.dual))?;
    Ok(DualPair::new(dp.dual.clone(), dp.object.clone(), eta, eps))
}

/// `M ⊗ N` with dual `M∨ ⊗ N∨`.
pub fn tensor_dual_pair<C: SymmetricMonoidalCategory>(
    c: &C,
    a: &PairOf<C>,
    b: &PairOf<C>,
) -> Result<PairOf<C>> {
    let (m, md, n, nd) = (&a.object, &a.dual, &b.object, &b.dual);
    // I -> M M∨ N N∨ -> M N M∨ N∨
    let eta = c.compose(
        &c.tensor_all(&[&c.identity(m), &c.symmetry(md, n), &c.identity(nd)])?,
        &c.tensor_mor(&a.coevaluation, &b.coevaluation)?,
    )?;
    // M∨ N∨ M N -> M∨ M N∨ N -> I
    let eps = c.compose(
        &c.tensor_mor(&a.evaluation, &b.evaluation)?,
        &c.tensor_all(&[&c.identity(md), &c.symmetry(nd, m), &c.identity(n)])?,
    )?;
    Ok(DualPair::new(
        c.tensor_obj(m, n),
        c.tensor_obj(md, nd),
        eta,
        eps,
    ))
}

/// Given an automorphism `phi` of `M` with inverse `phi_inv`, the pair
/// `((phi ⊗ id) η, ε (id ⊗ phi_inv))` is again a dual pair on `M`.
pub fn conjugate_dual_pair<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    phi: &Mor<C>,
    phi_inv: &Mor<C>,
) -> Result<PairOf<C>> {
    expect_type(c, phi, &dp.object, &dp.object, "conjugating automorphism")?;
    let id_d = c.identity(&dp.dual);
    let eta = c.compose(&c.tensor_mor(phi, &id_d)?, &dp.coevaluation)?;
    let eps = c.compose(&dp.evaluation, &c.tensor_mor(&id_d, phi_inv)?)?;
    Ok(DualPair::new(dp.object.clone(), dp.dual.clone(), eta, eps))
}
