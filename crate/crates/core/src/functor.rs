//! The category of fuzzy subgroups, the category of F-inverse covers, and
//! the functor Ω between them.
//!
//! Morphisms are explicit tables. Every constructor re-checks the defining
//! conditions, and the Ω operations re-run each step of the embedding
//! argument on the concrete instance instead of assuming it.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::budget::Budget;
use crate::cover::{build_cover, check_f_inverse_cover, CoverMonoid};
use crate::enumerate::{enumerate_fc_morphisms, enumerate_fg_morphisms};
use crate::error::{Result, Violation};
use crate::fuzzy::FuzzySubgroup;
use crate::group::{compose_maps, is_group_homomorphism};
use crate::monoid::{is_monoid_homomorphism, FiniteInverseMonoid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("{component} has {found} entries, expected {expected}")]
    LengthMismatch {
        component: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("f is not a group homomorphism")]
    NotGroupHom,
    #[error("λ is not order-preserving: {u} ≤ {v} but λ({u}) > λ({v})")]
    NotOrderPreserving { u: String, v: String },
    #[error("λ does not send the top of U to the top of V")]
    TopNotPreserved,
    #[error("commutation fails at {0}")]
    CommutationFailure(String),
    #[error("{0} is not a monoid homomorphism")]
    NotMonoidHom(&'static str),
    #[error("{component} sends the σ-class maximum {element} to a non-maximum")]
    MaximumNotPreserved {
        component: &'static str,
        element: String,
    },
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("morphism endpoints are not the given Ω-images")]
    NotOmegaImage,
    #[error("reconstruction mismatch: {0}")]
    ReconstructionMismatch(String),
}

fn check_len(
    component: &'static str,
    map: &[usize],
    expected: usize,
    bound: usize,
) -> Result<(), MorphismError> {
    if map.len() != expected {
        return Err(MorphismError::LengthMismatch {
            component,
            expected,
            found: map.len(),
        });
    }
    if map.iter().any(|&y| y >= bound) {
        return Err(MorphismError::LengthMismatch {
            component,
            expected: bound,
            found: map.iter().copied().max().unwrap_or(0) + 1,
        });
    }
    Ok(())
}

/// A morphism `(f, λ): (G, μ₁, U) -> (H, μ₂, V)`. `λ` maps chain indices
/// of `U` to chain indices of `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FGMorphism {
    source: Arc<FuzzySubgroup>,
    target: Arc<FuzzySubgroup>,
    f: Vec<usize>,
    lambda: Vec<usize>,
}

pub fn validate_fg_morphism(
    source: &Arc<FuzzySubgroup>,
    target: &Arc<FuzzySubgroup>,
    f: Vec<usize>,
    lambda: Vec<usize>,
) -> Result<FGMorphism, MorphismError> {
    let (g, h) = (source.group(), target.group());
    let (u_len, v_len) = (source.chain().len(), target.chain().len());
    check_len("f", &f, g.order(), h.order())?;
    check_len("λ", &lambda, u_len, v_len)?;
    if !is_group_homomorphism(&f, g, h) {
        return Err(MorphismError::NotGroupHom);
    }
    for u in 0..u_len {
        for v in u..u_len {
            if lambda[u] > lambda[v] {
                return Err(MorphismError::NotOrderPreserving {
                    u: source.chain()[u].to_string(),
                    v: source.chain()[v].to_string(),
                });
            }
        }
    }
    if lambda[u_len - 1] != v_len - 1 {
        return Err(MorphismError::TopNotPreserved);
    }
    if let Some(x) = g
        .elements()
        .find(|&x| target.level_of(f[x]) != lambda[source.level_of(x)])
    {
        return Err(MorphismError::CommutationFailure(g.name(x).to_string()));
    }
    Ok(FGMorphism {
        source: Arc::clone(source),
        target: Arc::clone(target),
        f,
        lambda,
    })
}

impl FGMorphism {
    pub fn identity(object: &Arc<FuzzySubgroup>) -> Self {
        let f = object.group().elements().collect();
        let lambda = (0..object.chain().len()).collect();
        validate_fg_morphism(object, object, f, lambda).expect("identity is a morphism")
    }

    pub fn source(&self) -> &Arc<FuzzySubgroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FuzzySubgroup> {
        &self.target
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn describe(&self) -> String {
        let g = self.source.group();
        let h = self.target.group();
        let f: Vec<String> = g
            .elements()
            .map(|x| format!("{}->{}", g.name(x), h.name(self.f[x])))
            .collect();
        let l: Vec<String> = self
            .lambda
            .iter()
            .enumerate()
            .map(|(u, &v)| format!("{}->{}", self.source.chain()[u], self.target.chain()[v]))
            .collect();
        format!("f[{}] λ[{}]", f.join(" "), l.join(" "))
    }
}

fn same_object<T: PartialEq>(a: &Arc<T>, b: &Arc<T>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `(g, λ') ∘ (f, λ) = (gf, λ'λ)`, re-validated.
pub fn compose_fg(second: &FGMorphism, first: &FGMorphism) -> Result<FGMorphism> {
    if !same_object(&first.target, &second.source) {
        return Err(MorphismError::NotComposable.into());
    }
    validate_fg_morphism(
        &first.source,
        &second.target,
        compose_maps(&second.f, &first.f),
        compose_maps(&second.lambda, &first.lambda),
    )
    .map_err(|e| {
        Violation::new("composites of FG morphisms are FG morphisms", e.to_string()).into()
    })
}

/// An object `(T, M, φ)`: `T` F-inverse and `φ: T -> M` a surjective
/// idempotent-separating homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FCObject {
    cover: FiniteInverseMonoid,
    base: FiniteInverseMonoid,
    projection: Vec<usize>,
}

impl FCObject {
    pub fn certify(
        cover: FiniteInverseMonoid,
        base: FiniteInverseMonoid,
        projection: Vec<usize>,
    ) -> Result<Self> {
        check_f_inverse_cover(&cover, &base, &projection)?;
        Ok(FCObject {
            cover,
            base,
            projection,
        })
    }

    /// `T`.
    pub fn cover(&self) -> &FiniteInverseMonoid {
        &self.cover
    }

    /// `M`.
    pub fn base(&self) -> &FiniteInverseMonoid {
        &self.base
    }

    /// `φ`.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }
}

/// A morphism `(f*, λ): (T, M, φ) -> (T', M', φ')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FCMorphism {
    source: Arc<FCObject>,
    target: Arc<FCObject>,
    fstar: Vec<usize>,
    lambda: Vec<usize>,
}

fn check_maxima(
    component: &'static str,
    map: &[usize],
    source: &FiniteInverseMonoid,
    target: &FiniteInverseMonoid,
) -> Result<(), MorphismError> {
    for &m in source.sigma_maxima().iter().flatten() {
        if !target.is_sigma_maximum(map[m]) {
            return Err(MorphismError::MaximumNotPreserved {
                component,
                element: source.name(m).to_string(),
            });
        }
    }
    Ok(())
}

pub fn validate_fc_morphism(
    source: &Arc<FCObject>,
    target: &Arc<FCObject>,
    fstar: Vec<usize>,
    lambda: Vec<usize>,
) -> Result<FCMorphism, MorphismError> {
    check_len("f*", &fstar, source.cover.order(), target.cover.order())?;
    check_len("λ", &lambda, source.base.order(), target.base.order())?;
    if !is_monoid_homomorphism(&fstar, &source.cover, &target.cover) {
        return Err(MorphismError::NotMonoidHom("f*"));
    }
    if !is_monoid_homomorphism(&lambda, &source.base, &target.base) {
        return Err(MorphismError::NotMonoidHom("λ"));
    }
    check_maxima("f*", &fstar, &source.cover, &target.cover)?;
    check_maxima("λ", &lambda, &source.base, &target.base)?;
    if let Some(t) = source
        .cover
        .elements()
        .find(|&t| target.projection[fstar[t]] != lambda[source.projection[t]])
    {
        return Err(MorphismError::CommutationFailure(
            source.cover.name(t).to_string(),
        ));
    }
    Ok(FCMorphism {
        source: Arc::clone(source),
        target: Arc::clone(target),
        fstar,
        lambda,
    })
}

impl FCMorphism {
    pub fn identity(object: &Arc<FCObject>) -> Self {
        let fstar = object.cover.elements().collect();
        let lambda = object.base.elements().collect();
        validate_fc_morphism(object, object, fstar, lambda).expect("identity is a morphism")
    }

    pub fn source(&self) -> &Arc<FCObject> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FCObject> {
        &self.target
    }

    pub fn fstar(&self) -> &[usize] {
        &self.fstar
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn describe(&self) -> String {
        let (t, t2) = (&self.source.cover, &self.target.cover);
        let (m, m2) = (&self.source.base, &self.target.base);
        let f: Vec<String> = t
            .elements()
            .map(|x| format!("{}->{}", t.name(x), t2.name(self.fstar[x])))
            .collect();
        let l: Vec<String> = m
            .elements()
            .map(|x| format!("{}->{}", m.name(x), m2.name(self.lambda[x])))
            .collect();
        format!("f*[{}] λ[{}]", f.join(" "), l.join(" "))
    }
}

/// `(f'*, λ') ∘ (f*, λ) = (f'* f*, λ'λ)`, re-validated.
pub fn compose_fc(second: &FCMorphism, first: &FCMorphism) -> Result<FCMorphism> {
    if !same_object(&first.target, &second.source) {
        return Err(MorphismError::NotComposable.into());
    }
    validate_fc_morphism(
        &first.source,
        &second.target,
        compose_maps(&second.fstar, &first.fstar),
        compose_maps(&second.lambda, &first.lambda),
    )
    .map_err(|e| {
        Violation::new("composites of FC morphisms are FC morphisms", e.to_string()).into()
    })
}

/// `Ω(G, μ, U) = (C(G, μ, U), U, φ)`, keeping the cover's pair indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaObject {
    source: Arc<FuzzySubgroup>,
    cover: CoverMonoid,
    object: Arc<FCObject>,
}

impl OmegaObject {
    pub fn source(&self) -> &Arc<FuzzySubgroup> {
        &self.source
    }

    pub fn cover(&self) -> &CoverMonoid {
        &self.cover
    }

    pub fn object(&self) -> &Arc<FCObject> {
        &self.object
    }
}

pub fn omega_object(source: &Arc<FuzzySubgroup>) -> Result<OmegaObject> {
    let cover = build_cover(source)?;
    let object = FCObject::certify(
        cover.monoid().clone(),
        cover.chain_monoid().clone(),
        cover.projection().to_vec(),
    )?;
    Ok(OmegaObject {
        source: Arc::clone(source),
        cover,
        object: Arc::new(object),
    })
}

fn omega_violation(claim: &str, witness: impl Into<String>) -> crate::Error {
    Violation::new(claim, witness).into()
}

/// `Ω(f, λ) = (f*, λ)` with `f*(u, x) = (λ(u), f(x))`.
///
/// Re-checks well-definedness, the homomorphism property, unit
/// preservation, σ-maxima preservation, and `φ₂ f* = λ φ₁`.
pub fn omega_morphism(
    m: &FGMorphism,
    source: &OmegaObject,
    target: &OmegaObject,
) -> Result<FCMorphism> {
    if !same_object(&m.source, &source.source) || !same_object(&m.target, &target.source) {
        return Err(MorphismError::NotOmegaImage.into());
    }
    let (c1, c2) = (&source.cover, &target.cover);
    let mut fstar = Vec::with_capacity(c1.order());
    for &(u, x) in c1.pairs() {
        let (lu, fx) = (m.lambda[u], m.f[x]);
        let image = c2.try_index(lu, fx).ok_or_else(|| {
            omega_violation(
                "f*(u,x) = (λ(u), f(x)) lies in the target cover",
                c1.monoid().name(c1.index(u, x)),
            )
        })?;
        fstar.push(image);
    }
    let (t1, t2) = (c1.monoid(), c2.monoid());
    if !is_monoid_homomorphism(&fstar, t1, t2) {
        return Err(omega_violation("f* is a monoid homomorphism", m.describe()));
    }
    if fstar[t1.unit()] != t2.unit() {
        return Err(omega_violation("f* preserves the unit", m.describe()));
    }
    for x in c1.group().elements() {
        let image = fstar[c1.sigma_maximum_over(x)];
        if image != c2.sigma_maximum_over(m.f[x]) || !t2.is_sigma_maximum(image) {
            return Err(omega_violation(
                "f*(μ(x),x) = (μ'(f(x)), f(x))",
                c1.group().name(x),
            ));
        }
    }
    if let Some(t) = t1
        .elements()
        .find(|&t| c2.projection()[fstar[t]] != m.lambda[c1.projection()[t]])
    {
        return Err(omega_violation("φ₂ f* = λ φ₁", t1.name(t)));
    }
    validate_fc_morphism(&source.object, &target.object, fstar, m.lambda.clone())
        .map_err(|e| omega_violation("Ω(f,λ) is an FC morphism", e.to_string()))
}

/// Recovers `(f, λ)` from an FC morphism between Ω-images with
/// `f(x) = second coordinate of g(μ₁(x), x)`, and checks `Ω(f, λ) = c`.
pub fn reconstruct_fullness(
    c: &FCMorphism,
    source: &OmegaObject,
    target: &OmegaObject,
) -> Result<FGMorphism> {
    if !same_object(&c.source, &source.object) || !same_object(&c.target, &target.object) {
        return Err(MorphismError::NotOmegaImage.into());
    }
    let (c1, c2) = (&source.cover, &target.cover);
    let g = c1.group();
    let mismatch = |w: String| -> crate::Error { MorphismError::ReconstructionMismatch(w).into() };
    let f: Vec<usize> = g
        .elements()
        .map(|x| c2.pair(c.fstar[c1.sigma_maximum_over(x)]).1)
        .collect();
    for x in g.elements() {
        // μ₂(x') = φ₂ g(μ₁(x), x) = λ φ₁(μ₁(x), x) = λ μ₁(x)
        let image = c.fstar[c1.sigma_maximum_over(x)];
        if !c2.monoid().is_sigma_maximum(image)
            || c2.pair(image).0 != c.lambda[source.source.level_of(x)]
        {
            return Err(mismatch(format!("μ₂(f({0})) != λ(μ₁({0}))", g.name(x))));
        }
    }
    let m = validate_fg_morphism(&source.source, &target.source, f, c.lambda.clone())
        .map_err(|e| mismatch(e.to_string()))?;
    let back = omega_morphism(&m, source, target)?;
    if back.fstar != c.fstar {
        let t = c1.monoid();
        let at = t.elements().find(|&i| back.fstar[i] != c.fstar[i]).unwrap();
        return Err(mismatch(format!("g and f* differ at {}", t.name(at))));
    }
    Ok(m)
}

/// Checks `Ω(second ∘ first) = Ω(second) ∘ Ω(first)`.
pub fn verify_functoriality(
    first: &FGMorphism,
    second: &FGMorphism,
    a: &OmegaObject,
    b: &OmegaObject,
    c: &OmegaObject,
) -> Result<()> {
    let composite = compose_fg(second, first)?;
    let lhs = omega_morphism(&composite, a, c)?;
    let rhs = compose_fc(
        &omega_morphism(second, b, c)?,
        &omega_morphism(first, a, b)?,
    )?;
    if lhs != rhs {
        return Err(omega_violation(
            "Ω(m₂ ∘ m₁) = Ω(m₂) ∘ Ω(m₁)",
            format!("m₁ = {}, m₂ = {}", first.describe(), second.describe()),
        ));
    }
    Ok(())
}

/// Outcome of checking that Ω is bijective on one hom-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub fg_morphisms: Vec<FGMorphism>,
    pub fc_morphisms: Vec<FCMorphism>,
    /// Ω(fg_morphisms[i]) = fc_morphisms[bijection[i]].
    pub bijection: Vec<usize>,
    pub faithful: bool,
    pub full: bool,
    pub identities_preserved: bool,
    pub functoriality_checks: usize,
    pub counterexample: Option<String>,
}

impl EmbeddingCertificate {
    pub fn fg_count(&self) -> usize {
        self.fg_morphisms.len()
    }

    pub fn fc_count(&self) -> usize {
        self.fc_morphisms.len()
    }

    pub fn holds(&self) -> bool {
        self.faithful && self.full && self.identities_preserved && self.counterexample.is_none()
    }
}

/// Enumerates both hom-sets between `a` and `b`, maps one onto the other
/// by Ω, and records injectivity, surjectivity, identity preservation and
/// compositions with identities (plus all endomorphism composites when
/// `a == b`). A failed check is recorded as a counterexample rather than
/// returned as an error.
pub fn verify_embedding(
    a: &OmegaObject,
    b: &OmegaObject,
    budget: Budget,
) -> Result<EmbeddingCertificate> {
    let fg = enumerate_fg_morphisms(&a.source, &b.source, budget)?;
    let fc = enumerate_fc_morphisms(&a.object, &b.object, budget)?;
    let mut counterexample = None;
    let mut note = |msg: String| {
        counterexample.get_or_insert(msg);
    };

    let identities_preserved = [a, b].iter().all(|o| {
        omega_morphism(&FGMorphism::identity(&o.source), o, o)
            .is_ok_and(|m| m == FCMorphism::identity(&o.object))
    });
    if !identities_preserved {
        note("Ω(id) != id".into());
    }

    let index: HashMap<(&[usize], &[usize]), usize> = fc
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.fstar(), c.lambda()), i))
        .collect();
    let mut bijection = Vec::with_capacity(fg.len());
    let mut hit = vec![false; fc.len()];
    let mut faithful = true;
    for m in &fg {
        let image = omega_morphism(m, a, b)?;
        if image.lambda != m.lambda {
            note(format!("Ω changed λ on {}", m.describe()));
        }
        match index.get(&(image.fstar(), image.lambda())) {
            Some(&i) => {
                if std::mem::replace(&mut hit[i], true) {
                    faithful = false;
                    note(format!("Ω not injective: {} collides", m.describe()));
                }
                bijection.push(i);
            }
            None => {
                note(format!("Ω({}) missing from the FC hom-set", m.describe()));
                bijection.push(usize::MAX);
            }
        }
    }
    let mut full = hit.iter().all(|&h| h);
    for (i, c) in fc.iter().enumerate() {
        match reconstruct_fullness(c, a, b) {
            Ok(m) => {
                let expected = bijection.iter().position(|&j| j == i).map(|k| &fg[k]);
                if expected != Some(&m) {
                    full = false;
                    note(format!(
                        "reconstruction of {} is not its Ω-preimage",
                        c.describe()
                    ));
                }
            }
            Err(e) => {
                full = false;
                note(format!("{}: {e}", c.describe()));
            }
        }
    }
    if !full {
        note("Ω not surjective on the hom-set".into());
    }

    let mut functoriality_checks = 0;
    let id_a = FGMorphism::identity(&a.source);
    let id_b = FGMorphism::identity(&b.source);
    for m in &fg {
        for (first, second, x, y, z) in [(&id_a, m, a, a, b), (m, &id_b, a, b, b)] {
            functoriality_checks += 1;
            if let Err(e) = verify_functoriality(first, second, x, y, z) {
                note(e.to_string());
            }
        }
    }
    if same_object(&a.source, &b.source) {
        for m1 in &fg {
            for m2 in &fg {
                functoriality_checks += 1;
                if let Err(e) = verify_functoriality(m1, m2, a, a, a) {
                    note(e.to_string());
                }
            }
        }
    }

    Ok(EmbeddingCertificate {
        fg_morphisms: fg,
        fc_morphisms: fc,
        bijection,
        faithful,
        full,
        identities_preserved,
        functoriality_checks,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{validate_fuzzy, MembershipValue};
    use crate::group::FiniteGroup;

    fn fuzzy(group: FiniteGroup, values: &[&str]) -> Arc<FuzzySubgroup> {
        Arc::new(
            validate_fuzzy(group, values.iter().map(|s| s.parse().unwrap()).collect()).unwrap(),
        )
    }

    fn z2_example() -> Arc<FuzzySubgroup> {
        fuzzy(FiniteGroup::cyclic(2), &["1", "1/2"])
    }

    fn z2_constant() -> Arc<FuzzySubgroup> {
        fuzzy(FiniteGroup::cyclic(2), &["1", "1"])
    }

    fn v4_example() -> Arc<FuzzySubgroup> {
        fuzzy(FiniteGroup::klein_four(), &["1", "1/2", "1/4", "1/4"])
    }

    #[test]
    fn fg_validation() {
        let f1 = z2_example();
        FGMorphism::identity(&f1);
        let to_const = validate_fg_morphism(&f1, &z2_constant(), vec![0, 0], vec![0, 0]).unwrap();
        assert_eq!(to_const.lambda(), &[0, 0]);
        let quarter = fuzzy(FiniteGroup::cyclic(2), &["1", "1/4"]);
        assert_eq!(
            validate_fg_morphism(&f1, &quarter, vec![0, 1], vec![1, 1]),
            Err(MorphismError::CommutationFailure("a".into()))
        );
        assert_eq!(
            validate_fg_morphism(&f1, &f1, vec![1, 0], vec![0, 1]),
            Err(MorphismError::NotGroupHom)
        );
        assert_eq!(
            validate_fg_morphism(&f1, &f1, vec![0, 0], vec![0, 1]),
            Err(MorphismError::CommutationFailure("a".into()))
        );
        let chain3 = fuzzy(FiniteGroup::klein_four(), &["1", "1/2", "1/4", "1/4"]);
        assert!(matches!(
            validate_fg_morphism(&chain3, &chain3, vec![0, 1, 2, 3], vec![1, 0, 2]),
            Err(MorphismError::NotOrderPreserving { .. })
        ));
        assert_eq!(
            validate_fg_morphism(&chain3, &chain3, vec![0, 0, 0, 0], vec![1, 1, 1]),
            Err(MorphismError::TopNotPreserved)
        );
        assert!(matches!(
            validate_fg_morphism(&f1, &f1, vec![0], vec![0, 1]),
            Err(MorphismError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn fg_composition() {
        let (f1, f2) = (z2_example(), z2_constant());
        let id = FGMorphism::identity(&f1);
        let m = validate_fg_morphism(&f1, &f2, vec![0, 0], vec![0, 0]).unwrap();
        assert_eq!(compose_fg(&m, &id).unwrap(), m);
        assert_eq!(compose_fg(&FGMorphism::identity(&f2), &m).unwrap(), m);
        assert_eq!(
            compose_fg(&id, &m),
            Err(MorphismError::NotComposable.into())
        );
    }

    #[test]
    fn omega_on_objects() {
        let o = omega_object(&z2_example()).unwrap();
        assert_eq!(o.object().cover().order(), 3);
        assert_eq!(o.object().base().order(), 2);
        let o = omega_object(&z2_constant()).unwrap();
        assert_eq!(o.object().cover().order(), 2);
        assert_eq!(o.object().base().order(), 1);
        let o = omega_object(&v4_example()).unwrap();
        assert_eq!(o.object().cover().order(), 7);
        assert_eq!(o.object().base().order(), 3);
    }

    #[test]
    fn omega_on_morphisms() {
        let (f1, f2) = (z2_example(), z2_constant());
        let (o1, o2) = (omega_object(&f1).unwrap(), omega_object(&f2).unwrap());
        let id = omega_morphism(&FGMorphism::identity(&f1), &o1, &o1).unwrap();
        assert_eq!(id, FCMorphism::identity(o1.object()));
        let m = validate_fg_morphism(&f1, &f2, vec![0, 0], vec![0, 0]).unwrap();
        let c = omega_morphism(&m, &o1, &o2).unwrap();
        // every pair collapses onto (1, e)
        assert!(c.fstar().iter().all(|&t| o2.cover().pair(t) == (0, 0)));
        assert_eq!(c.lambda(), m.lambda());
        assert_eq!(reconstruct_fullness(&c, &o1, &o2).unwrap(), m);
        assert_eq!(
            omega_morphism(&m, &o2, &o2),
            Err(MorphismError::NotOmegaImage.into())
        );
    }

    #[test]
    fn fc_validation_errors() {
        let o = omega_object(&z2_example()).unwrap();
        let obj = o.object();
        let id = FCMorphism::identity(obj);
        // λ constant at the top is a homomorphism of the 2-chain, but then
        // φ f* = λ φ fails at (1/2,e)
        let err = validate_fc_morphism(obj, obj, id.fstar().to_vec(), vec![1, 1]).unwrap_err();
        assert_eq!(err, MorphismError::CommutationFailure("(1/2,e)".into()));
        assert_eq!(
            validate_fc_morphism(obj, obj, id.fstar().to_vec(), vec![1, 0]),
            Err(MorphismError::NotMonoidHom("λ"))
        );
        assert_eq!(
            validate_fc_morphism(obj, obj, vec![1, 1, 2], vec![0, 1]),
            Err(MorphismError::NotMonoidHom("f*"))
        );
    }

    #[test]
    fn fc_maximum_condition() {
        // (1/2,a) ↦ (1/2,e) is a homomorphism fixing the unit, but sends the
        // maximum of its σ-class below (1,e)
        let o = omega_object(&z2_example()).unwrap();
        let obj = o.object();
        let err = validate_fc_morphism(obj, obj, vec![0, 1, 0], vec![0, 1]).unwrap_err();
        assert_eq!(
            err,
            MorphismError::MaximumNotPreserved {
                component: "f*",
                element: "(1/2,a)".into()
            }
        );
    }

    #[test]
    fn embedding_on_running_example() {
        let o = omega_object(&z2_example()).unwrap();
        let cert = verify_embedding(&o, &o, Budget::DEFAULT).unwrap();
        assert!(cert.holds(), "{:?}", cert.counterexample);
        assert_eq!(cert.fg_count(), cert.fc_count());
        assert!(cert.fg_count() >= 1);
    }

    #[test]
    fn embedding_into_the_constant_object() {
        let (o1, o2) = (
            omega_object(&z2_example()).unwrap(),
            omega_object(&z2_constant()).unwrap(),
        );
        let cert = verify_embedding(&o1, &o2, Budget::DEFAULT).unwrap();
        assert!(cert.holds());
        assert_eq!(cert.fg_count(), 2);
        assert_eq!(cert.fc_count(), 2);
    }

    #[test]
    fn embedding_into_trivial_object() {
        let trivial = Arc::new(FuzzySubgroup::constant(
            FiniteGroup::trivial(),
            MembershipValue::ONE,
        ));
        let ot = omega_object(&trivial).unwrap();
        for f in [z2_example(), v4_example(), trivial.clone()] {
            let o = omega_object(&f).unwrap();
            let cert = verify_embedding(&o, &ot, Budget::DEFAULT).unwrap();
            assert!(cert.holds());
            assert_eq!((cert.fg_count(), cert.fc_count()), (1, 1));
        }
    }

    #[test]
    fn embedding_z2_into_v4() {
        let (o1, o2) = (
            omega_object(&z2_example()).unwrap(),
            omega_object(&v4_example()).unwrap(),
        );
        let cert = verify_embedding(&o1, &o2, Budget::DEFAULT).unwrap();
        assert!(cert.holds(), "{:?}", cert.counterexample);
        assert_eq!(cert.fg_count(), cert.fc_count());
    }
}
