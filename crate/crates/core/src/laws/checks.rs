//! The trace identities, each as an instance-generic decidable check.
//!
//! Twisted traces are taken of `f: Q ⊗ M -> M ⊗ P`; every check receives
//! the factor objects explicitly.

use crate::error::Result;
use crate::smc::{
    mate, swapped_dual_pair, tensor_dual_pair, trace, trace_wrt_diagonal, twisted_trace,
    unit_dual_pair, Mor, Obj, PairOf, SymmetricMonoidalCategory,
};

/// `tr(f ∘ g) = tr(g ∘ f)` for `f: M -> N`, `g: N -> M`.
pub fn check_cyclicity<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    f: &Mor<C>,
    g: &Mor<C>,
) -> Result<bool> {
    let lhs = trace(c, dp_n, &c.compose(f, g)?)?;
    let rhs = trace(c, dp_m, &c.compose(g, f)?)?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// For `f: Q ⊗ M -> N ⊗ P` and `g: K ⊗ N -> M ⊗ L`, the trace over `M` of
/// `(g ⊗ id_P)(id_K ⊗ f)` equals the trace over `N` of
/// `𝔰 (f ⊗ id_L)(id_Q ⊗ g) 𝔰`; both are maps `K ⊗ Q -> L ⊗ P`.
#[allow(clippy::too_many_arguments)]
pub fn check_twisted_cyclicity<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    k: &Obj<C>,
    l: &Obj<C>,
    f: &Mor<C>,
    g: &Mor<C>,
) -> Result<bool> {
    let n = &dp_n.object;
    let kq = c.tensor_obj(k, q);
    let lp = c.tensor_obj(l, p);
    let left = c.compose_all(&[
        &c.tensor_mor(&c.identity(k), f)?,
        &c.tensor_mor(g, &c.identity(p))?,
    ])?;
    let right = c.compose_all(&[
        &c.tensor_mor(&c.symmetry(k, q), &c.identity(n))?,
        &c.tensor_mor(&c.identity(q), g)?,
        &c.tensor_mor(f, &c.identity(l))?,
        &c.tensor_mor(&c.identity(n), &c.symmetry(p, l))?,
    ])?;
    let lhs = twisted_trace(c, dp_m, &kq, &lp, &left)?;
    let rhs = twisted_trace(c, dp_n, &kq, &lp, &right)?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr(f) = tr(𝔰 f∨ 𝔰)`, the right side traced over `M∨` with dual `M`.
pub fn check_dualization<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    f: &Mor<C>,
) -> Result<bool> {
    let lhs = twisted_trace(c, dp, q, p, f)?;
    let md = &dp.dual;
    let conjugated = c.compose_all(&[
        &c.symmetry(q, md),
        &mate(c, dp, dp, q, p, f)?,
        &c.symmetry(p, md),
    ])?;
    let rhs = twisted_trace(c, &swapped_dual_pair(c, dp)?, q, p, &conjugated)?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `h ∘ tr(f) ∘ g = tr((id_M ⊗ h) ∘ f ∘ (g ⊗ id_M))` for `g: Q′ -> Q`, `h: P -> P′`.
#[allow(clippy::too_many_arguments)]
pub fn check_tightening<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    q2: &Obj<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    p2: &Obj<C>,
    f: &Mor<C>,
    g: &Mor<C>,
    h: &Mor<C>,
) -> Result<bool> {
    let m = &dp.object;
    let lhs = c.compose_all(&[g, &twisted_trace(c, dp, q, p, f)?, h])?;
    let inner = c.compose_all(&[
        &c.tensor_mor(g, &c.identity(m))?,
        f,
        &c.tensor_mor(&c.identity(m), h)?,
    ])?;
    let rhs = twisted_trace(c, dp, q2, p2, &inner)?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr((h ⊗ id_P) f) = tr(f (id_Q ⊗ h))` for `f: Q ⊗ M -> N ⊗ P`, `h: N -> M`.
pub fn check_sliding<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    f: &Mor<C>,
    h: &Mor<C>,
) -> Result<bool> {
    let lhs = twisted_trace(
        c,
        dp_m,
        q,
        p,
        &c.compose(&c.tensor_mor(h, &c.identity(p))?, f)?,
    )?;
    let rhs = twisted_trace(
        c,
        dp_n,
        q,
        p,
        &c.compose(f, &c.tensor_mor(&c.identity(q), h)?)?,
    )?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr(f) = f` for `f: Q ⊗ I -> I ⊗ P`.
pub fn check_vanishing_unit<C: SymmetricMonoidalCategory>(
    c: &C,
    q: &Obj<C>,
    p: &Obj<C>,
    f: &Mor<C>,
) -> Result<bool> {
    let t = twisted_trace(c, &unit_dual_pair(c), q, p, f)?;
    Ok(c.mor_eq(&t, f))
}

/// For `f: Q ⊗ N ⊗ M -> M ⊗ N ⊗ P`, the trace over `M ⊗ N` of
/// `f (id_Q ⊗ 𝔰)` equals the trace over `N` of the trace over `M`.
pub fn check_vanishing_tensor<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    f: &Mor<C>,
) -> Result<bool> {
    let (m, n) = (&dp_m.object, &dp_n.object);
    let swapped = c.compose(f, &c.tensor_mor(&c.identity(q), &c.symmetry(m, n))?)?;
    let lhs = twisted_trace(c, &tensor_dual_pair(c, dp_m, dp_n)?, q, p, &swapped)?;
    let inner = twisted_trace(c, dp_m, &c.tensor_obj(q, n), &c.tensor_obj(n, p), f)?;
    let rhs = twisted_trace(c, dp_n, q, p, &inner)?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr(𝔰 (f ⊗ g)) = tr(f) ⊗ g` for `f: Q ⊗ M -> M ⊗ P` and `g: K -> L`.
#[allow(clippy::too_many_arguments)]
pub fn check_superposing<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    k: &Obj<C>,
    l: &Obj<C>,
    f: &Mor<C>,
    g: &Mor<C>,
) -> Result<bool> {
    let m = &dp.object;
    let arg = c.compose(
        &c.tensor_mor(f, g)?,
        &c.tensor_mor(&c.identity(q), &c.symmetry(k, m))?,
    )?;
    let lhs = twisted_trace(c, dp, &c.tensor_obj(q, k), &c.tensor_obj(p, l), &arg)?;
    let rhs = c.tensor_mor(&twisted_trace(c, dp, q, p, f)?, g)?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr(𝔰 (f ⊗ g) 𝔰) = tr(f) ⊗ tr(g)` for `f: Q ⊗ M -> M ⊗ P` and
/// `g: K ⊗ N -> N ⊗ L`, the left side traced over `M ⊗ N`.
#[allow(clippy::too_many_arguments)]
pub fn check_double_superposing<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    k: &Obj<C>,
    l: &Obj<C>,
    f: &Mor<C>,
    g: &Mor<C>,
) -> Result<bool> {
    let (m, n) = (&dp_m.object, &dp_n.object);
    let arg = c.compose_all(&[
        &c.tensor_all(&[&c.identity(q), &c.symmetry(k, m), &c.identity(n)])?,
        &c.tensor_mor(f, g)?,
        &c.tensor_all(&[&c.identity(m), &c.symmetry(p, n), &c.identity(l)])?,
    ])?;
    let pair = tensor_dual_pair(c, dp_m, dp_n)?;
    let lhs = twisted_trace(c, &pair, &c.tensor_obj(q, k), &c.tensor_obj(p, l), &arg)?;
    let rhs = c.tensor_mor(
        &twisted_trace(c, dp_m, q, p, f)?,
        &twisted_trace(c, dp_n, k, l, g)?,
    )?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr((id_M ⊗ g)(f ⊗ id_N)) = tr(g) ∘ tr(f)` for `f: Q ⊗ M -> M ⊗ P` and
/// `g: P ⊗ N -> N ⊗ K`.
#[allow(clippy::too_many_arguments)]
pub fn check_composition_rule<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    q: &Obj<C>,
    p: &Obj<C>,
    k: &Obj<C>,
    f: &Mor<C>,
    g: &Mor<C>,
) -> Result<bool> {
    let (m, n) = (&dp_m.object, &dp_n.object);
    let arg = c.compose(
        &c.tensor_mor(&c.identity(m), g)?,
        &c.tensor_mor(f, &c.identity(n))?,
    )?;
    let lhs = twisted_trace(c, &tensor_dual_pair(c, dp_m, dp_n)?, q, k, &arg)?;
    let rhs = c.compose(
        &twisted_trace(c, dp_n, p, k, g)?,
        &twisted_trace(c, dp_m, q, p, f)?,
    )?;
    Ok(c.mor_eq(&lhs, &rhs))
}

/// `tr(f ⊗ g) = tr(f) ⊗ tr(g) = tr(f) ∘ tr(g)` for endomorphisms.
pub fn check_endomorphism_product<C: SymmetricMonoidalCategory>(
    c: &C,
    dp_m: &PairOf<C>,
    dp_n: &PairOf<C>,
    f: &Mor<C>,
    g: &Mor<C>,
) -> Result<bool> {
    let (tf, tg) = (trace(c, dp_m, f)?, trace(c, dp_n, g)?);
    let joint = trace(c, &tensor_dual_pair(c, dp_m, dp_n)?, &c.tensor_mor(f, g)?)?;
    let tensored = c.tensor_mor(&tf, &tg)?;
    let composed = c.compose(&tf, &tg)?;
    Ok(c.mor_eq(&joint, &tensored) && c.mor_eq(&tensored, &composed))
}

/// The trace of `id_{M ⊗ M}` with `Q = P = M` is `id_M`.
pub fn check_yanking<C: SymmetricMonoidalCategory>(c: &C, dp: &PairOf<C>) -> Result<bool> {
    let m = &dp.object;
    let id2 = c.identity(&c.tensor_obj(m, m));
    let t = twisted_trace(c, dp, m, m, &id2)?;
    Ok(c.mor_eq(&t, &c.identity(m)))
}

/// `h ∘ tr(Δ f) = tr(Δ f)` whenever `(f ⊗ h) Δ = Δ f`; `None` when that
/// hypothesis fails.
pub fn check_fixed_point_property<C: SymmetricMonoidalCategory>(
    c: &C,
    dp: &PairOf<C>,
    p: &Obj<C>,
    delta: &Mor<C>,
    f: &Mor<C>,
    h: &Mor<C>,
) -> Result<Option<bool>> {
    let hypothesis = c.mor_eq(
        &c.compose(&c.tensor_mor(f, h)?, delta)?,
        &c.compose(delta, f)?,
    );
    if !hypothesis {
        return Ok(None);
    }
    let t = trace_wrt_diagonal(c, dp, p, delta, f)?;
    Ok(Some(c.mor_eq(&c.compose(h, &t)?, &t)))
}
