//! The F-inverse cover `C(G, μ, U) = {(u, x) : u ≤ μ(x)}` of a fuzzy
//! subgroup, the general construction `{(u, h) : u ≤ ψ(h)}` from a dual
//! premorphism, and its converse.
//!
//! Pairs are stored in lexicographic order of (group element, chain index),
//! so the pairs over `x` occupy a contiguous block and `(u, x)` sits at
//! `offset(x) + u`.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::budget::Budget;
use crate::error::{Result, Violation};
use crate::fuzzy::{FuzzySubgroup, MembershipValue};
use crate::group::{is_group_homomorphism, FiniteGroup};
use crate::monoid::{
    chain_monoid, is_idempotent_separating, is_monoid_homomorphism, is_surjective,
    validate_inverse_monoid, FiniteInverseMonoid,
};
use crate::premorphism::DualPremorphism;
use crate::search::TableSearch;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("projection has {found} entries for a monoid of order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cover monoid is not F-inverse")]
    NotFInverse,
    #[error("projection is not a monoid homomorphism")]
    NotHomomorphism,
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("projection is not idempotent-separating")]
    NotIdempotentSeparating,
}

fn violation(claim: &str, witness: impl Into<String>) -> crate::Error {
    Violation::new(claim, witness).into()
}

/// `C(G, μ, U)` with its projection `φ(u, x) = u` onto the chain monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMonoid {
    source: FuzzySubgroup,
    pairs: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    monoid: FiniteInverseMonoid,
    chain: FiniteInverseMonoid,
    projection: Vec<usize>,
}

fn pair_name(u: &str, x: &str) -> String {
    format!("({u},{x})")
}

/// Builds the cover and checks it: inverse monoid, F-inverse, Clifford,
/// unit `(μ(e), e)`, and `φ` a surjective idempotent-separating
/// homomorphism.
pub fn build_cover(source: &FuzzySubgroup) -> Result<CoverMonoid> {
    let g = source.group();
    let mut pairs = Vec::new();
    let mut offsets = Vec::with_capacity(g.order());
    for x in g.elements() {
        offsets.push(pairs.len());
        pairs.extend((0..=source.level_of(x)).map(|u| (u, x)));
    }
    let n = pairs.len();
    let mut rows = Vec::with_capacity(n);
    for &(u, x) in &pairs {
        let mut row = Vec::with_capacity(n);
        for &(v, y) in &pairs {
            let xy = g.mul(x, y);
            let uv = u.min(v);
            if uv > source.level_of(xy) {
                return Err(violation(
                    "C(G,μ,U) is closed under (u,x)(v,y) = (u∧v, xy)",
                    format!("x={}, y={}", g.name(x), g.name(y)),
                ));
            }
            row.push(offsets[xy] + uv);
        }
        rows.push(row);
    }
    let names = pairs
        .iter()
        .map(|&(u, x)| pair_name(&source.chain()[u].to_string(), g.name(x)))
        .collect();
    let unit = offsets[g.identity()] + source.level_of(g.identity());
    let monoid = validate_inverse_monoid(names, &rows, unit)
        .map_err(|e| violation("C(G,μ,U) is an inverse monoid", e.to_string()))?;
    let chain = chain_monoid(source.chain())?;
    let projection = pairs.iter().map(|&(u, _)| u).collect();
    let cover = CoverMonoid {
        source: source.clone(),
        pairs,
        offsets,
        monoid,
        chain,
        projection,
    };
    cover.check_structure()?;
    Ok(cover)
}

impl CoverMonoid {
    fn check_structure(&self) -> Result<()> {
        let m = &self.monoid;
        if !m.is_f_inverse().0 {
            return Err(violation(
                "C(G,μ,U) is F-inverse",
                "a σ-class without maximum",
            ));
        }
        if !m.is_clifford() {
            return Err(violation("C(G,μ,U) is Clifford", "non-central idempotent"));
        }
        let top = self.chain.order() - 1;
        if m.unit() != self.index(top, self.group().identity())
            || self.source.level_of(self.group().identity()) != top
        {
            return Err(violation("unit is (μ(e), e)", m.name(m.unit()).to_string()));
        }
        let phi = &self.projection;
        if !is_monoid_homomorphism(phi, m, &self.chain) {
            return Err(violation("φ is a monoid homomorphism", String::new()));
        }
        if !is_surjective(phi, m, &self.chain) {
            return Err(violation("φ is surjective", String::new()));
        }
        if !is_idempotent_separating(phi, m, &self.chain) {
            return Err(violation("φ is idempotent-separating", String::new()));
        }
        Ok(())
    }

    pub fn source(&self) -> &FuzzySubgroup {
        &self.source
    }

    pub fn group(&self) -> &FiniteGroup {
        self.source.group()
    }

    pub fn monoid(&self) -> &FiniteInverseMonoid {
        &self.monoid
    }

    /// The chain monoid `(U, ∧)`; element `i` is the `i`-th chain value.
    pub fn chain_monoid(&self) -> &FiniteInverseMonoid {
        &self.chain
    }

    /// `φ` as a table: cover element to chain index.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// `(chain index, group element)` for each cover element.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    /// Index of `(u, x)`; panics unless `u ≤ μ(x)`.
    pub fn index(&self, u: usize, x: usize) -> usize {
        assert!(u <= self.source.level_of(x), "pair outside the cover");
        self.offsets[x] + u
    }

    pub fn try_index(&self, u: usize, x: usize) -> Option<usize> {
        (u <= self.source.level_of(x)).then(|| self.offsets[x] + u)
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    /// `(μ(x), x)`.
    pub fn sigma_maximum_over(&self, x: usize) -> usize {
        self.index(self.source.level_of(x), x)
    }
}

/// One σ-class of the cover with its greatest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaClass {
    pub members: Vec<usize>,
    pub maximum: usize,
}

/// Idempotents, unit, natural order, σ-classes and H-classes of a cover,
/// each confirmed equal to both the closed-form description and the
/// generic inverse-monoid computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub idempotents: Vec<usize>,
    pub unit: usize,
    /// Strict order pairs `a < b`.
    pub order: Vec<(usize, usize)>,
    pub sigma_classes: Vec<SigmaClass>,
    pub h_classes: Vec<Vec<usize>>,
}

pub fn cover_report(c: &CoverMonoid) -> Result<CoverReport> {
    let m = c.monoid();
    let g = c.group();
    let f = c.source();

    let closed_idempotents: Vec<usize> = (0..f.chain().len())
        .map(|u| c.index(u, g.identity()))
        .collect();
    if m.idempotents() != closed_idempotents.as_slice() {
        return Err(violation(
            "idempotents are exactly the pairs (u,e)",
            m.format_subset(m.idempotents()),
        ));
    }

    let closed_unit = c.index(f.chain().len() - 1, g.identity());
    if m.unit() != closed_unit {
        return Err(violation("unit is (μ(e),e)", m.name(m.unit()).to_string()));
    }

    for a in m.elements() {
        for b in m.elements() {
            let (u, x) = c.pair(a);
            let (v, y) = c.pair(b);
            if m.leq(a, b) != (x == y && u <= v) {
                return Err(violation(
                    "(u,x) ≤ (v,y) iff x = y and u ≤ v",
                    format!("{} vs {}", m.name(a), m.name(b)),
                ));
            }
        }
    }

    let mut sigma_classes = Vec::new();
    for (id, class) in m.sigma().classes().iter().enumerate() {
        let x = c.pair(class[0]).1;
        let closed: Vec<usize> = (0..=f.level_of(x)).map(|v| c.index(v, x)).collect();
        if class != &closed {
            return Err(violation(
                "σ-class of (u,x) is {(v,x) : v ≤ μ(x)}",
                m.format_subset(class),
            ));
        }
        let maximum = c.sigma_maximum_over(x);
        if m.sigma_maxima()[id] != Some(maximum) {
            return Err(violation(
                "greatest element of a σ-class is (μ(x),x)",
                m.format_subset(class),
            ));
        }
        sigma_classes.push(SigmaClass {
            members: class.clone(),
            maximum,
        });
    }

    // γ: G -> C/σ, x ↦ [(μ(x), x)] is an isomorphism.
    let gamma: Vec<usize> = g
        .elements()
        .map(|x| m.sigma().class_of(c.sigma_maximum_over(x)))
        .collect();
    let quotient = m.sigma_quotient();
    let bijective = gamma.iter().copied().collect::<BTreeSet<_>>().len() == g.order()
        && quotient.order() == g.order();
    if !bijective || !is_group_homomorphism(&gamma, g, quotient) {
        return Err(violation(
            "G ≅ C/σ via x ↦ [(μ(x),x)]",
            format!("{gamma:?}"),
        ));
    }

    if m.green_h() != m.green_r() {
        return Err(violation("H = R in a Clifford monoid", String::new()));
    }

    let order = m.natural_order().pairs().filter(|&(a, b)| a != b).collect();
    Ok(CoverReport {
        idempotents: closed_idempotents,
        unit: closed_unit,
        order,
        sigma_classes,
        h_classes: m.green_h().classes().to_vec(),
    })
}

/// `H_(u,e)` together with the isomorphism `(u, h) ↦ h` onto `μ_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelIsomorphism {
    pub value: MembershipValue,
    pub idempotent: usize,
    pub h_class: Vec<usize>,
    pub level_subset: Vec<usize>,
    /// Group element for each member of `h_class`, in the same order.
    pub map: Vec<usize>,
}

pub fn hclass_level_isomorphism(c: &CoverMonoid, u: MembershipValue) -> Result<LevelIsomorphism> {
    let f = c.source();
    let g = c.group();
    let m = c.monoid();
    let ui = f.chain_index(u)?;
    let idempotent = c.index(ui, g.identity());
    let h_class = m.green_h().class(m.green_h().class_of(idempotent)).to_vec();
    let closed: Vec<usize> = g.elements().filter_map(|h| c.try_index(ui, h)).collect();
    let mut sorted = h_class.clone();
    sorted.sort_unstable();
    if sorted != closed {
        return Err(violation(
            "H_(u,e) = {(u,h) : u ≤ μ(h)}",
            m.format_subset(&h_class),
        ));
    }
    let level_subset = f.level_subset(u)?;
    let map: Vec<usize> = h_class.iter().map(|&p| c.pair(p).1).collect();
    let mut image = map.clone();
    image.sort_unstable();
    if image != level_subset || image.windows(2).any(|w| w[0] == w[1]) {
        return Err(violation(
            "(u,h) ↦ h is a bijection onto μ_u",
            g.format_subset(&map),
        ));
    }
    let position: HashMap<usize, usize> =
        h_class.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    for (i, &a) in h_class.iter().enumerate() {
        for (j, &b) in h_class.iter().enumerate() {
            let ab = m.mul(a, b);
            let hom = position
                .get(&ab)
                .is_some_and(|&k| map[k] == g.mul(map[i], map[j]));
            if !hom {
                return Err(violation(
                    "(u,h) ↦ h is a homomorphism",
                    format!("{} * {}", m.name(a), m.name(b)),
                ));
            }
        }
    }
    Ok(LevelIsomorphism {
        value: u,
        idempotent,
        h_class,
        level_subset,
        map,
    })
}

/// `{(u, h) : u ≤ ψ(h)}` built from a dual premorphism, with its first
/// projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremorphismCover {
    /// `(monoid element, group element)`, ordered by group element then
    /// monoid element.
    pub pairs: Vec<(usize, usize)>,
    pub monoid: FiniteInverseMonoid,
    pub projection: Vec<usize>,
}

/// Certifies `ψ` and builds `T = {(u, h) : u ≤ ψ(h)}` with product
/// `(u, h)(v, k) = (uv, hk)`; checks that `T` is F-inverse and that the
/// first projection is a surjective idempotent-separating homomorphism.
pub fn theorem_r1_construct(
    group: &FiniteGroup,
    monoid: &FiniteInverseMonoid,
    psi: &[usize],
) -> Result<PremorphismCover> {
    let certified = DualPremorphism::certify(group.clone(), monoid.clone(), psi.to_vec())?;
    premorphism_cover(&certified)
}

pub fn premorphism_cover(psi: &DualPremorphism) -> Result<PremorphismCover> {
    let (group, monoid, map) = (psi.group(), psi.target(), psi.map());
    let mut pairs = Vec::new();
    for h in group.elements() {
        pairs.extend(
            monoid
                .elements()
                .filter(|&u| monoid.leq(u, map[h]))
                .map(|u| (u, h)),
        );
    }
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut rows = Vec::with_capacity(pairs.len());
    for &(u, h) in &pairs {
        let mut row = Vec::with_capacity(pairs.len());
        for &(v, k) in &pairs {
            let product = (monoid.mul(u, v), group.mul(h, k));
            let &i = index.get(&product).ok_or_else(|| {
                violation(
                    "{(u,h) : u ≤ ψ(h)} is closed under products",
                    format!(
                        "{} * {}",
                        pair_name(monoid.name(u), group.name(h)),
                        pair_name(monoid.name(v), group.name(k))
                    ),
                )
            })?;
            row.push(i);
        }
        rows.push(row);
    }
    let names = pairs
        .iter()
        .map(|&(u, h)| pair_name(monoid.name(u), group.name(h)))
        .collect();
    let unit = index[&(monoid.unit(), group.identity())];
    let t = validate_inverse_monoid(names, &rows, unit)
        .map_err(|e| violation("{(u,h) : u ≤ ψ(h)} is an inverse monoid", e.to_string()))?;
    if !t.is_f_inverse().0 {
        return Err(violation("{(u,h) : u ≤ ψ(h)} is F-inverse", String::new()));
    }
    let projection: Vec<usize> = pairs.iter().map(|&(u, _)| u).collect();
    if !is_monoid_homomorphism(&projection, &t, monoid)
        || !is_surjective(&projection, &t, monoid)
        || !is_idempotent_separating(&projection, &t, monoid)
    {
        return Err(violation(
            "first projection is a surjective idempotent-separating homomorphism",
            String::new(),
        ));
    }
    if t.sigma_quotient().order() != group.order() {
        return Err(violation(
            "T/σ ≅ H",
            format!("|T/σ| = {}", t.sigma_quotient().order()),
        ));
    }
    Ok(PremorphismCover {
        pairs,
        monoid: t,
        projection,
    })
}

/// Checks that `(T, M, φ)` is an F-inverse cover: `T` F-inverse and `φ` a
/// surjective idempotent-separating homomorphism.
pub fn check_f_inverse_cover(
    t: &FiniteInverseMonoid,
    m: &FiniteInverseMonoid,
    phi: &[usize],
) -> Result<(), CoverError> {
    if phi.len() != t.order() {
        return Err(CoverError::LengthMismatch {
            expected: t.order(),
            found: phi.len(),
        });
    }
    if !t.is_f_inverse().0 {
        return Err(CoverError::NotFInverse);
    }
    if !is_monoid_homomorphism(phi, t, m) {
        return Err(CoverError::NotHomomorphism);
    }
    if !is_surjective(phi, t, m) {
        return Err(CoverError::NotSurjective);
    }
    if !is_idempotent_separating(phi, t, m) {
        return Err(CoverError::NotIdempotentSeparating);
    }
    Ok(())
}

/// The dual premorphism recovered from an F-inverse cover, and the
/// reconstruction that proves the cover is isomorphic to its construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredPremorphism {
    /// `H = T/σ`.
    pub quotient: FiniteGroup,
    /// `ψ(h) = φ(max of class h)`.
    pub premorphism: DualPremorphism,
    pub reconstruction: PremorphismCover,
    /// Isomorphism from the reconstruction onto `T`.
    pub isomorphism: Vec<usize>,
}

pub fn cover_to_dual_premorphism(
    t: &FiniteInverseMonoid,
    m: &FiniteInverseMonoid,
    phi: &[usize],
    budget: Budget,
) -> Result<RecoveredPremorphism> {
    check_f_inverse_cover(t, m, phi)?;
    let quotient = t.sigma_quotient().clone();
    let psi: Vec<usize> = t
        .sigma_maxima()
        .iter()
        .map(|max| phi[max.expect("F-inverse")])
        .collect();
    let premorphism = DualPremorphism::certify(quotient.clone(), m.clone(), psi).map_err(|e| {
        violation(
            "ψ(h) = φ(max h) is a dual premorphism with coverage",
            e.to_string(),
        )
    })?;
    let reconstruction = premorphism_cover(&premorphism)?;
    let isomorphism = monoid_isomorphic(&reconstruction.monoid, t, budget)?.ok_or_else(|| {
        violation(
            "an F-inverse cover is isomorphic to its reconstruction",
            String::new(),
        )
    })?;
    Ok(RecoveredPremorphism {
        quotient,
        premorphism,
        reconstruction,
        isomorphism,
    })
}

/// Per-element isomorphism invariant.
fn signature(m: &FiniteInverseMonoid, x: usize) -> (bool, usize, usize, usize, usize) {
    let class_len = |p: &crate::Partition| p.class(p.class_of(x)).len();
    (
        m.is_idempotent(x),
        class_len(m.sigma()),
        class_len(m.green_h()),
        class_len(m.green_r()),
        class_len(m.green_l()),
    )
}

/// A product- and unit-preserving bijection `a -> b`, or `None`.
///
/// Compares idempotent counts and σ-, H-class size profiles first, then
/// backtracks over signature-compatible images; the budget bounds the
/// number of search nodes.
pub fn monoid_isomorphic(
    a: &FiniteInverseMonoid,
    b: &FiniteInverseMonoid,
    budget: Budget,
) -> Result<Option<Vec<usize>>> {
    if a.order() != b.order()
        || a.idempotents().len() != b.idempotents().len()
        || a.sigma().size_profile() != b.sigma().size_profile()
        || a.green_h().size_profile() != b.green_h().size_profile()
    {
        return Ok(None);
    }
    let candidates: Vec<Vec<usize>> = a
        .elements()
        .map(|x| {
            b.elements()
                .filter(|&y| signature(a, x) == signature(b, y))
                .filter(|&y| (x == a.unit()) == (y == b.unit()))
                .collect()
        })
        .collect();
    let found = TableSearch {
        source: a.table(),
        source_order: a.order(),
        target: b.table(),
        target_order: b.order(),
        candidates,
        injective: true,
        first_only: true,
    }
    .run(Some(budget))?;
    Ok(found.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::validate_fuzzy;
    use crate::monoid::chain_monoid_from_fractions;

    fn v(s: &str) -> MembershipValue {
        s.parse().unwrap()
    }

    fn fuzzy(group: FiniteGroup, values: &[&str]) -> FuzzySubgroup {
        validate_fuzzy(group, values.iter().map(|s| v(s)).collect()).unwrap()
    }

    fn z2_example() -> FuzzySubgroup {
        fuzzy(FiniteGroup::cyclic(2), &["1", "1/2"])
    }

    fn v4_example() -> FuzzySubgroup {
        fuzzy(FiniteGroup::klein_four(), &["1", "1/2", "1/4", "1/4"])
    }

    #[test]
    fn running_example_cover() {
        let c = build_cover(&z2_example()).unwrap();
        let m = c.monoid();
        assert_eq!(m.names(), &["(1/2,e)", "(1,e)", "(1/2,a)"]);
        assert_eq!(m.name(m.unit()), "(1,e)");
        assert_eq!(c.projection(), &[0, 1, 0]);
        // (1/2,e) ≤ (1,e); (1/2,a) only below itself
        assert!(m.leq(0, 1));
        assert!(m.elements().all(|y| m.leq(2, y) == (y == 2)));
        assert_eq!(m.sigma().classes(), &[vec![0, 1], vec![2]]);
        assert_eq!(m.sigma_quotient().order(), 2);
        let mut h: Vec<Vec<usize>> = m.green_h().classes().to_vec();
        h.sort();
        assert_eq!(h, vec![vec![0, 2], vec![1]]);
        assert_eq!(m.is_f_inverse(), (true, &[Some(1), Some(2)][..]));

        let report = cover_report(&c).unwrap();
        assert_eq!(report.idempotents, vec![0, 1]);
        assert_eq!(report.unit, 1);
        assert_eq!(report.order, vec![(0, 1)]);
        assert_eq!(
            report
                .sigma_classes
                .iter()
                .map(|s| s.maximum)
                .collect::<Vec<_>>(),
            vec![1, 2]
        );
    }

    #[test]
    fn klein_four_cover_has_seven_elements() {
        let f = v4_example();
        let c = build_cover(&f).unwrap();
        assert_eq!(c.order(), 7);
        let over: Vec<usize> = f
            .group()
            .elements()
            .map(|x| c.pairs().iter().filter(|p| p.1 == x).count())
            .collect();
        assert_eq!(over, vec![3, 2, 1, 1]);
        cover_report(&c).unwrap();
    }

    #[test]
    fn constant_membership_cover_is_the_group() {
        let g = FiniteGroup::symmetric3();
        let c = build_cover(&FuzzySubgroup::constant(g.clone(), MembershipValue::ONE)).unwrap();
        assert_eq!(c.monoid().rows(), g.rows());
        let report = cover_report(&c).unwrap();
        assert_eq!(report.idempotents, vec![0]);
        assert_eq!(report.sigma_classes.len(), 6);
        assert!(report.order.is_empty());
    }

    #[test]
    fn trivial_cover() {
        let c = build_cover(&FuzzySubgroup::constant(
            FiniteGroup::trivial(),
            MembershipValue::ONE,
        ))
        .unwrap();
        assert_eq!(c.order(), 1);
        let report = cover_report(&c).unwrap();
        assert_eq!(report.h_classes, vec![vec![0]]);
    }

    #[test]
    fn level_isomorphisms_on_running_example() {
        let c = build_cover(&z2_example()).unwrap();
        let low = hclass_level_isomorphism(&c, v("1/2")).unwrap();
        assert_eq!(low.h_class, vec![0, 2]);
        assert_eq!(low.map, vec![0, 1]);
        assert_eq!(low.level_subset, vec![0, 1]);
        let high = hclass_level_isomorphism(&c, v("1")).unwrap();
        assert_eq!(high.h_class, vec![1]);
        assert_eq!(high.level_subset, vec![0]);
        assert!(hclass_level_isomorphism(&c, v("1/3")).is_err());
    }

    #[test]
    fn premorphism_construction_reproduces_the_cover() {
        let f = v4_example();
        let c = build_cover(&f).unwrap();
        let psi = f.as_dual_premorphism().unwrap();
        let t = theorem_r1_construct(f.group(), psi.target(), psi.map()).unwrap();
        assert_eq!(&t.monoid, c.monoid());
        assert_eq!(t.projection, c.projection());
    }

    #[test]
    fn premorphism_construction_errors() {
        let trivial = FiniteGroup::trivial();
        let z2 = FiniteInverseMonoid::from_group(&FiniteGroup::cyclic(2));
        let err = theorem_r1_construct(&trivial, &z2, &[0]).unwrap_err();
        assert_eq!(
            err,
            crate::Error::Premorphism(crate::PremorphismError::CoverageFailure("a".into()))
        );
        let err = theorem_r1_construct(&FiniteGroup::cyclic(2), &z2, &[1, 1]).unwrap_err();
        assert!(matches!(
            err,
            crate::Error::Premorphism(crate::PremorphismError::NotDualPremorphism(_))
        ));
        let one = FiniteInverseMonoid::from_group(&trivial);
        let t = theorem_r1_construct(&trivial, &one, &[0]).unwrap();
        assert_eq!(t.monoid.order(), 1);
    }

    #[test]
    fn constant_top_premorphism_covers_the_two_chain() {
        // 1/2 ≤ 1 in the natural order of (U, ∧), so ψ ≡ 1 satisfies coverage
        let chain = chain_monoid_from_fractions(&[(1, 2), (1, 1)]).unwrap();
        let t = theorem_r1_construct(&FiniteGroup::cyclic(2), &chain, &[1, 1]).unwrap();
        assert_eq!(t.monoid.names(), &["(1/2,e)", "(1,e)", "(1/2,a)", "(1,a)"]);
        assert_eq!(t.projection, vec![0, 1, 0, 1]);
    }

    #[test]
    fn premorphism_construction_over_a_non_chain_monoid() {
        // ψ: Z_4 -> Z_2 (a group homomorphism) gives a cover ≅ Z_4
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteInverseMonoid::from_group(&FiniteGroup::cyclic(2));
        let t = theorem_r1_construct(&z4, &z2, &[0, 1, 0, 1]).unwrap();
        assert_eq!(t.monoid.order(), 4);
        let iso = monoid_isomorphic(
            &t.monoid,
            &FiniteInverseMonoid::from_group(&z4),
            Budget::DEFAULT,
        )
        .unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn round_trip_recovers_mu_exactly() {
        for f in [z2_example(), v4_example()] {
            let c = build_cover(&f).unwrap();
            let r = cover_to_dual_premorphism(
                c.monoid(),
                c.chain_monoid(),
                c.projection(),
                Budget::DEFAULT,
            )
            .unwrap();
            assert_eq!(r.premorphism.map(), f.levels());
            assert_eq!(r.quotient.rows(), f.group().rows());
            assert_eq!(r.reconstruction.monoid.table(), c.monoid().table());
        }
    }

    #[test]
    fn group_over_trivial_monoid_round_trip() {
        let g = FiniteGroup::symmetric3();
        let t = FiniteInverseMonoid::from_group(&g);
        let one = FiniteInverseMonoid::from_group(&FiniteGroup::trivial());
        let r = cover_to_dual_premorphism(&t, &one, &[0; 6], Budget::DEFAULT).unwrap();
        assert_eq!(r.premorphism.map(), &[0; 6]);
        assert_eq!(r.reconstruction.monoid.order(), 6);
    }

    #[test]
    fn converse_rejects_non_covers() {
        let two = chain_monoid_from_fractions(&[(1, 2), (1, 1)]).unwrap();
        let b = Budget::DEFAULT;
        let three = chain_monoid_from_fractions(&[(1, 4), (1, 2), (1, 1)]).unwrap();
        let err = cover_to_dual_premorphism(&three, &two, &[0, 0, 1], b).unwrap_err();
        assert_eq!(
            err,
            crate::Error::Cover(CoverError::NotIdempotentSeparating)
        );
        let one = chain_monoid_from_fractions(&[(1, 1)]).unwrap();
        let err = cover_to_dual_premorphism(&one, &two, &[1], b).unwrap_err();
        assert_eq!(err, crate::Error::Cover(CoverError::NotSurjective));
        let sym = FiniteInverseMonoid::symmetric_inverse(2);
        let err =
            cover_to_dual_premorphism(&sym, &sym, &(0..7).collect::<Vec<_>>(), b).unwrap_err();
        assert_eq!(err, crate::Error::Cover(CoverError::NotFInverse));
        let err = cover_to_dual_premorphism(&two, &two, &[1, 0], b).unwrap_err();
        assert_eq!(err, crate::Error::Cover(CoverError::NotHomomorphism));
    }

    #[test]
    fn isomorphism_search() {
        let c = build_cover(&z2_example()).unwrap();
        let m = c.monoid();
        assert_eq!(
            monoid_isomorphic(m, m, Budget::DEFAULT).unwrap(),
            Some(vec![0, 1, 2])
        );

        // relabel by the permutation p: new element i is old element p[i]
        let p = [2, 0, 1];
        let q: Vec<usize> = (0..3)
            .map(|x| p.iter().position(|&y| y == x).unwrap())
            .collect();
        let rows: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| q[m.mul(p[i], p[j])]).collect())
            .collect();
        let names = p.iter().map(|&x| m.name(x).to_string()).collect();
        let copy = validate_inverse_monoid(names, &rows, q[m.unit()]).unwrap();
        let iso = monoid_isomorphic(m, &copy, Budget::DEFAULT)
            .unwrap()
            .unwrap();
        assert!(is_monoid_homomorphism(&iso, m, &copy));
        assert_eq!(iso, q);

        let two = chain_monoid_from_fractions(&[(1, 2), (1, 1)]).unwrap();
        let z2 = FiniteInverseMonoid::from_group(&FiniteGroup::cyclic(2));
        assert_eq!(monoid_isomorphic(&two, &z2, Budget::DEFAULT).unwrap(), None);
        // Z_4 and V_4 agree on every pruning invariant; only the search separates them
        let z4 = FiniteInverseMonoid::from_group(&FiniteGroup::cyclic(4));
        let v4 = FiniteInverseMonoid::from_group(&FiniteGroup::klein_four());
        assert_eq!(monoid_isomorphic(&z4, &v4, Budget::DEFAULT).unwrap(), None);
        assert!(matches!(
            monoid_isomorphic(&z4, &v4, Budget::new(2)),
            Err(crate::Error::Budget(_))
        ));
    }
}
