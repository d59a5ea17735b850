//! Lax symmetric monoidal functors, the dual pairs they carry along, and
//! checks that traces are preserved.

mod zoo;

pub use zoo::{
    extension_of_scalars, free_abelian_functor, graph_embedding_functor, homology_functor,
    powerset_functor, rational_comparison, tft_functor, tft_value, torsion_free_homology_functor,
    ChainExtension, Composite, ExtensionOfScalars, FreeAbelianFunctor, GraphEmbedding,
    HomologyFunctor, PowersetFunctor, TftFunctor,
};

use crate::error::{Error, Result};
use crate::smc::{self, DualPair, Mor, Obj, PairOf, SymmetricMonoidalCategory};

/// A lax symmetric monoidal functor with constraints
/// `c(A, B): F(A) ⊗ F(B) -> F(A ⊗ B)` and `i: I -> F(I)`.
pub trait MonoidalFunctor {
    type Source: SymmetricMonoidalCategory;
    type Target: SymmetricMonoidalCategory;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn map_obj(&self, a: &Obj<Self::Source>) -> Result<Obj<Self::Target>>;
    fn map_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>>;

    fn tensor_constraint(
        &self,
        a: &Obj<Self::Source>,
        b: &Obj<Self::Source>,
    ) -> Result<Mor<Self::Target>>;

    fn unit_constraint(&self) -> Result<Mor<Self::Target>>;

    /// `c(A, B)⁻¹` where available.
    fn tensor_constraint_inverse(
        &self,
        a: &Obj<Self::Source>,
        b: &Obj<Self::Source>,
    ) -> Result<Option<Mor<Self::Target>>>;

    /// `i⁻¹` where available.
    fn unit_constraint_inverse(&self) -> Result<Option<Mor<Self::Target>>>;

    /// `i` is invertible.
    fn is_normal(&self) -> bool;

    /// `i` and every `c` are invertible.
    fn is_strong(&self) -> bool;
}

type SourceObj<F> = Obj<<F as MonoidalFunctor>::Source>;
type SourceMor<F> = Mor<<F as MonoidalFunctor>::Source>;
type TargetMor<F> = Mor<<F as MonoidalFunctor>::Target>;
type TargetObj<F> = Obj<<F as MonoidalFunctor>::Target>;

fn require<T>(x: Option<T>, what: impl FnOnce() -> String) -> Result<T> {
    x.ok_or_else(|| Error::MissingInverse(what()))
}

fn unit_inverse<F: MonoidalFunctor>(f: &F) -> Result<TargetMor<F>> {
    require(f.unit_constraint_inverse()?, || {
        "the unit constraint".into()
    })
}

fn tensor_inverse<F: MonoidalFunctor>(
    f: &F,
    a: &SourceObj<F>,
    b: &SourceObj<F>,
) -> Result<TargetMor<F>> {
    require(f.tensor_constraint_inverse(a, b)?, || {
        format!("the tensor constraint at ({a:?}, {b:?})")
    })
}

/// `F(M)` with dual `F(M∨)`: `η' = c⁻¹ F(η) i` and `ε' = i⁻¹ F(ε) c`.
pub fn pushforward_dual<F: MonoidalFunctor>(
    f: &F,
    dp: &PairOf<F::Source>,
) -> Result<PairOf<F::Target>> {
    let t = f.target();
    let i = f.unit_constraint()?;
    let i_inv = unit_inverse(f)?;
    let c_inv = tensor_inverse(f, &dp.object, &dp.dual)?;
    let c = f.tensor_constraint(&dp.dual, &dp.object)?;
    let eta = t.compose_all(&[&i, &f.map_mor(&dp.coevaluation)?, &c_inv])?;
    let eps = t.compose_all(&[&c, &f.map_mor(&dp.evaluation)?, &i_inv])?;
    let pushed = DualPair::new(f.map_obj(&dp.object)?, f.map_obj(&dp.dual)?, eta, eps);
    if !smc::verify_dual_pair(t, &pushed)? {
        return Err(Error::DualPairInvalid(format!(
            "pushforward of the pair on {:?}",
            dp.object
        )));
    }
    Ok(pushed)
}

/// `F(tr g) = i ∘ tr(F g) ∘ i⁻¹` for an endomorphism `g`.
pub fn check_trace_preservation<F: MonoidalFunctor>(
    f: &F,
    dp: &PairOf<F::Source>,
    g: &SourceMor<F>,
) -> Result<bool> {
    let (s, t) = (f.source(), f.target());
    let pushed = pushforward_dual(f, dp)?;
    let lhs = f.map_mor(&smc::trace(s, dp, g)?)?;
    let inner = smc::trace(t, &pushed, &f.map_mor(g)?)?;
    let rhs = t.compose_all(&[&unit_inverse(f)?, &inner, &f.unit_constraint()?])?;
    Ok(t.mor_eq(&lhs, &rhs))
}

/// `F(tr g) = tr(c⁻¹ ∘ F(g) ∘ c)` for `g: Q ⊗ M -> M ⊗ P`.
pub fn check_twisted_trace_preservation<F: MonoidalFunctor>(
    f: &F,
    dp: &PairOf<F::Source>,
    q: &SourceObj<F>,
    p: &SourceObj<F>,
    g: &SourceMor<F>,
) -> Result<bool> {
    let (s, t) = (f.source(), f.target());
    let pushed = pushforward_dual(f, dp)?;
    let lhs = f.map_mor(&smc::twisted_trace(s, dp, q, p, g)?)?;
    let conjugated = t.compose_all(&[
        &f.tensor_constraint(q, &dp.object)?,
        &f.map_mor(g)?,
        &tensor_inverse(f, &dp.object, p)?,
    ])?;
    let rhs = smc::twisted_trace(t, &pushed, &f.map_obj(q)?, &f.map_obj(p)?, &conjugated)?;
    Ok(t.mor_eq(&lhs, &rhs))
}

/// `F(h ∘ g) = F(h) ∘ F(g)` and `F(id) = id`.
pub fn check_functoriality<F: MonoidalFunctor>(
    f: &F,
    g: &SourceMor<F>,
    h: &SourceMor<F>,
) -> Result<bool> {
    let (s, t) = (f.source(), f.target());
    let lhs = f.map_mor(&s.compose(h, g)?)?;
    let rhs = t.compose(&f.map_mor(h)?, &f.map_mor(g)?)?;
    let a = s.domain(g);
    let id = f.map_mor(&s.identity(&a))?;
    Ok(t.mor_eq(&lhs, &rhs) && t.mor_eq(&id, &t.identity(&f.map_obj(&a)?)))
}

/// Naturality of `c` in both variables, and compatibility with the symmetry.
pub fn check_constraints<F: MonoidalFunctor>(
    f: &F,
    g: &SourceMor<F>,
    h: &SourceMor<F>,
) -> Result<bool> {
    let (s, t) = (f.source(), f.target());
    let (a, b) = (s.domain(g), s.domain(h));
    let (a2, b2) = (s.codomain(g), s.codomain(h));
    let natural_lhs = t.compose(
        &f.tensor_constraint(&a2, &b2)?,
        &t.tensor_mor(&f.map_mor(g)?, &f.map_mor(h)?)?,
    )?;
    let natural_rhs = t.compose(
        &f.map_mor(&s.tensor_mor(g, h)?)?,
        &f.tensor_constraint(&a, &b)?,
    )?;
    let (fa, fb) = (f.map_obj(&a)?, f.map_obj(&b)?);
    let sym_lhs = t.compose(
        &f.map_mor(&s.symmetry(&a, &b))?,
        &f.tensor_constraint(&a, &b)?,
    )?;
    let sym_rhs = t.compose(&f.tensor_constraint(&b, &a)?, &t.symmetry(&fa, &fb))?;
    Ok(t.mor_eq(&natural_lhs, &natural_rhs) && t.mor_eq(&sym_lhs, &sym_rhs))
}

/// The inverses the functor claims to have really are inverses at `(a, b)`.
pub fn check_inverses<F: MonoidalFunctor>(
    f: &F,
    a: &SourceObj<F>,
    b: &SourceObj<F>,
) -> Result<bool> {
    let t = f.target();
    let two_sided = |m: &TargetMor<F>, inv: &TargetMor<F>| -> Result<bool> {
        let left = t.compose(inv, m)?;
        let right = t.compose(m, inv)?;
        Ok(t.mor_eq(&left, &t.identity(&t.domain(m)))
            && t.mor_eq(&right, &t.identity(&t.codomain(m))))
    };
    let mut ok = true;
    if let Some(inv) = f.unit_constraint_inverse()? {
        ok &= two_sided(&f.unit_constraint()?, &inv)?;
    } else if f.is_normal() {
        return Ok(false);
    }
    if let Some(inv) = f.tensor_constraint_inverse(a, b)? {
        ok &= two_sided(&f.tensor_constraint(a, b)?, &inv)?;
    } else if f.is_strong() {
        return Ok(false);
    }
    Ok(ok)
}

/// Check a monoidal transformation `α: F => G` at the pair `dp` and the
/// endomorphism `h`:
///
/// - `α_M` is invertible, with inverse the mate of `α_M∨`,
/// - the naturality square for `g` commutes,
/// - `α` is compatible with the constraints at `I` and `(M, M∨)`,
/// - `tr(F h) = tr(G h)`.
pub fn check_nat_transformation<F, G>(
    f: &F,
    g: &G,
    alpha: &dyn Fn(&SourceObj<F>) -> Result<TargetMor<F>>,
    dp: &PairOf<F::Source>,
    h: &SourceMor<F>,
) -> Result<bool>
where
    F: MonoidalFunctor,
    G: MonoidalFunctor<Source = F::Source, Target = F::Target>,
{
    let t = f.target();
    let (m, md) = (&dp.object, &dp.dual);
    let pf = pushforward_dual(f, dp)?;
    let pg = pushforward_dual(g, dp)?;
    let (fm, gm) = (&pf.object, &pg.object);
    let a_m = alpha(m)?;
    let a_md = alpha(md)?;

    // G(M) -> F(M) F(M∨) G(M) -> F(M) G(M∨) G(M) -> F(M)
    let inverse = t.compose_all(&[
        &t.tensor_mor(&pf.coevaluation, &t.identity(gm))?,
        &t.tensor_all(&[&t.identity(fm), &a_md, &t.identity(gm)])?,
        &t.tensor_mor(&t.identity(fm), &pg.evaluation)?,
    ])?;
    let invertible = t.mor_eq(&t.compose(&inverse, &a_m)?, &t.identity(fm))
        && t.mor_eq(&t.compose(&a_m, &inverse)?, &t.identity(gm));

    let square = t.mor_eq(
        &t.compose(&a_m, &f.map_mor(h)?)?,
        &t.compose(&g.map_mor(h)?, &a_m)?,
    );

    let s = f.source();
    let unit_ok = t.mor_eq(
        &t.compose(&alpha(&s.unit())?, &f.unit_constraint()?)?,
        &g.unit_constraint()?,
    );
    let tensor_ok = t.mor_eq(
        &t.compose(&alpha(&s.tensor_obj(m, md))?, &f.tensor_constraint(m, md)?)?,
        &t.compose(&g.tensor_constraint(m, md)?, &t.tensor_mor(&a_m, &a_md)?)?,
    );

    let traces = t.mor_eq(
        &smc::trace(t, &pf, &f.map_mor(h)?)?,
        &smc::trace(t, &pg, &g.map_mor(h)?)?,
    );
    Ok(invertible && square && unit_ok && tensor_ok && traces)
}

/// The identity morphism on `F(A ⊗ B)`, for functors with `F(A) ⊗ F(B) = F(A ⊗ B)`.
pub(crate) fn strict_tensor<F: MonoidalFunctor>(
    f: &F,
    a: &SourceObj<F>,
    b: &SourceObj<F>,
) -> Result<TargetMor<F>> {
    let (fa, fb): (TargetObj<F>, TargetObj<F>) = (f.map_obj(a)?, f.map_obj(b)?);
    let joined = f.target().tensor_obj(&fa, &fb);
    let image = f.map_obj(&f.source().tensor_obj(a, b))?;
    if joined != image {
        return Err(Error::type_mismatch(format!(
            "F(A) ⊗ F(B) = {joined:?} differs from F(A ⊗ B) = {image:?}"
        )));
    }
    Ok(f.target().identity(&joined))
}

pub(crate) fn strict_unit<F: MonoidalFunctor>(f: &F) -> Result<TargetMor<F>> {
    let image = f.map_obj(&f.source().unit())?;
    let unit = f.target().unit();
    if image != unit {
        return Err(Error::type_mismatch(format!(
            "F(I) = {image:?} is not the unit"
        )));
    }
    Ok(f.target().identity(&unit))
}
