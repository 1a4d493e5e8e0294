//! Finite inverse monoids and the structure derived from them: idempotents,
//! the natural partial order, the minimum group congruence σ, Green's
//! relations, and homomorphism predicates.
//!
//! All derived structure is computed once, at validation time, by the
//! direct characterisations (witness search over idempotents, explicit
//! principal ideals) and checked for the properties it must have.

use thiserror::Error;

use crate::budget::{power, Budget, BudgetExceeded};
use crate::error::Violation;
use crate::fuzzy::MembershipValue;
use crate::group::{
    associativity_witness, check_names, flatten_table, validate_group, FiniteGroup, GroupError,
};
use crate::relation::{set_partitions, Partition, Relation};
use crate::search::TableSearch;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("a monoid needs at least one element")]
    Empty,
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("bad table: {0}")]
    BadTable(GroupError),
    #[error("associativity fails: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(String, String, String),
    #[error("{0} is not a two-sided unit")]
    NotUnital(String),
    #[error("element {0} has no inverse")]
    NoInverse(String),
    #[error("element {0} has two inverses, {1} and {2}")]
    NonUniqueInverse(String, String, String),
    #[error("σ-quotient is not a group: {0}")]
    QuotientNotGroup(GroupError),
    #[error("derived structure inconsistent: {0}")]
    Inconsistent(Violation),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("a chain needs at least one value")]
    EmptyChain,
    #[error("chain value {0} lies outside [0,1]")]
    OutOfRange(String),
    #[error("chain values must be strictly increasing, {0} follows {1}")]
    Unsorted(String, String),
}

/// Structure computed from the multiplication table at validation time.
#[derive(Debug, Clone)]
pub struct DerivedStructure {
    idempotents: Vec<usize>,
    is_idempotent: Vec<bool>,
    natural_order: Relation,
    sigma: Partition,
    sigma_quotient: FiniteGroup,
    sigma_maxima: Vec<Option<usize>>,
    green_r: Partition,
    green_l: Partition,
    green_h: Partition,
}

/// A finite monoid in which every element has exactly one generalised
/// inverse.
#[derive(Debug, Clone)]
pub struct FiniteInverseMonoid {
    names: Vec<String>,
    table: Vec<usize>,
    unit: usize,
    inv: Vec<usize>,
    derived: DerivedStructure,
}

impl PartialEq for FiniteInverseMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.table == other.table && self.unit == other.unit
    }
}

impl Eq for FiniteInverseMonoid {}

pub fn validate_inverse_monoid(
    names: Vec<String>,
    rows: &[Vec<usize>],
    unit: usize,
) -> Result<FiniteInverseMonoid, MonoidError> {
    let n = names.len();
    if n == 0 {
        return Err(MonoidError::Empty);
    }
    check_names(&names).map_err(MonoidError::DuplicateName)?;
    let table = flatten_table(&names, rows).map_err(MonoidError::BadTable)?;
    if unit >= n {
        return Err(MonoidError::NotUnital(format!("#{unit}")));
    }
    if let Some((x, y, z)) = associativity_witness(n, &table) {
        return Err(MonoidError::NotAssociative(
            names[x].clone(),
            names[y].clone(),
            names[z].clone(),
        ));
    }
    if !(0..n).all(|x| table[unit * n + x] == x && table[x * n + unit] == x) {
        return Err(MonoidError::NotUnital(names[unit].clone()));
    }
    let mul = |x: usize, y: usize| table[x * n + y];
    let mut inv = Vec::with_capacity(n);
    for x in 0..n {
        let mut found = (0..n).filter(|&y| mul(mul(x, y), x) == x && mul(mul(y, x), y) == y);
        let first = found
            .next()
            .ok_or_else(|| MonoidError::NoInverse(names[x].clone()))?;
        if let Some(second) = found.next() {
            return Err(MonoidError::NonUniqueInverse(
                names[x].clone(),
                names[first].clone(),
                names[second].clone(),
            ));
        }
        inv.push(first);
    }
    let derived = derive(&names, &table, &inv)?;
    Ok(FiniteInverseMonoid {
        names,
        table,
        unit,
        inv,
        derived,
    })
}

fn inconsistent(claim: &str, witness: String) -> MonoidError {
    MonoidError::Inconsistent(Violation::new(claim, witness))
}

fn derive(
    names: &[String],
    table: &[usize],
    inv: &[usize],
) -> Result<DerivedStructure, MonoidError> {
    let n = names.len();
    let mul = |x: usize, y: usize| table[x * n + y];

    for x in 0..n {
        if inv[inv[x]] != x {
            return Err(inconsistent("(x⁻¹)⁻¹ = x", names[x].clone()));
        }
        for y in 0..n {
            if inv[mul(x, y)] != mul(inv[y], inv[x]) {
                return Err(inconsistent(
                    "(xy)⁻¹ = y⁻¹x⁻¹",
                    format!("x={}, y={}", names[x], names[y]),
                ));
            }
        }
    }

    let is_idempotent: Vec<bool> = (0..n).map(|x| mul(x, x) == x).collect();
    let idempotents: Vec<usize> = (0..n).filter(|&x| is_idempotent[x]).collect();

    let natural_order = Relation::from_fn(n, |x, y| idempotents.iter().any(|&e| mul(y, e) == x));
    if !natural_order.is_partial_order() {
        return Err(inconsistent(
            "natural order is a partial order",
            String::new(),
        ));
    }

    let sigma_rel = Relation::from_fn(n, |x, y| {
        idempotents.iter().any(|&e| mul(x, e) == mul(y, e))
    });
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if labels[x] == usize::MAX {
            for (y, label) in labels.iter_mut().enumerate().skip(x) {
                if sigma_rel.holds(x, y) {
                    *label = next;
                }
            }
            next += 1;
        }
    }
    let sigma = Partition::from_labels(&labels);
    if let Some((x, y)) = sigma_rel.pairs().find(|&(x, y)| !sigma.same_class(x, y)) {
        return Err(inconsistent(
            "σ is an equivalence",
            format!("{} σ {}", names[x], names[y]),
        ));
    }
    if (0..n).any(|x| (0..n).any(|y| sigma.same_class(x, y) && !sigma_rel.holds(x, y))) {
        return Err(inconsistent("σ is an equivalence", "transitivity".into()));
    }
    if let Some(w) = congruence_witness(n, table, &sigma) {
        return Err(inconsistent("σ is a congruence", w.describe(names)));
    }
    let sigma_quotient =
        quotient_group(names, table, &sigma).map_err(MonoidError::QuotientNotGroup)?;

    let sigma_maxima = sigma
        .classes()
        .iter()
        .map(|class| {
            class
                .iter()
                .copied()
                .find(|&m| class.iter().all(|&c| natural_order.holds(c, m)))
        })
        .collect();

    let right_ideal = |a: usize| -> Vec<bool> {
        let mut set = vec![false; n];
        (0..n).for_each(|m| set[mul(a, m)] = true);
        set
    };
    let left_ideal = |a: usize| -> Vec<bool> {
        let mut set = vec![false; n];
        (0..n).for_each(|m| set[mul(m, a)] = true);
        set
    };
    let green_r = Partition::from_keys((0..n).map(right_ideal));
    let green_l = Partition::from_keys((0..n).map(left_ideal));
    let green_h = Partition::from_keys((0..n).map(|a| (green_r.class_of(a), green_l.class_of(a))));
    if !green_h.refines(&green_r) || !green_h.refines(&green_l) {
        return Err(inconsistent("H refines R and L", String::new()));
    }

    Ok(DerivedStructure {
        idempotents,
        is_idempotent,
        natural_order,
        sigma,
        sigma_quotient,
        sigma_maxima,
        green_r,
        green_l,
        green_h,
    })
}

struct CongruenceWitness {
    x: usize,
    y: usize,
    z: usize,
}

impl CongruenceWitness {
    fn describe(&self, names: &[String]) -> String {
        format!(
            "{} ~ {} but not compatible with {}",
            names[self.x], names[self.y], names[self.z]
        )
    }
}

fn congruence_witness(n: usize, table: &[usize], p: &Partition) -> Option<CongruenceWitness> {
    for class in p.classes() {
        for &x in class {
            for &y in class {
                for z in 0..n {
                    if !p.same_class(table[x * n + z], table[y * n + z])
                        || !p.same_class(table[z * n + x], table[z * n + y])
                    {
                        return Some(CongruenceWitness { x, y, z });
                    }
                }
            }
        }
    }
    None
}

fn quotient_group(
    names: &[String],
    table: &[usize],
    p: &Partition,
) -> Result<FiniteGroup, GroupError> {
    let n = names.len();
    let class_names = p
        .classes()
        .iter()
        .map(|c| format!("[{}]", names[c[0]]))
        .collect();
    let rows: Vec<Vec<usize>> = p
        .classes()
        .iter()
        .map(|a| {
            p.classes()
                .iter()
                .map(|b| p.class_of(table[a[0] * n + b[0]]))
                .collect()
        })
        .collect();
    validate_group(class_names, &rows)
}

impl FiniteInverseMonoid {
    /// A group viewed as an inverse monoid.
    pub fn from_group(group: &FiniteGroup) -> Self {
        validate_inverse_monoid(group.names().to_vec(), &group.rows(), group.identity())
            .expect("groups are inverse monoids")
    }

    /// The symmetric inverse monoid of partial injections on `{1..points}`.
    ///
    /// An element is named by its image string, `-` for undefined points:
    /// on two points `12` is the identity and `2-` sends 1 to 2 and leaves 2
    /// undefined. Products compose left to right (apply `x`, then `y`).
    pub fn symmetric_inverse(points: usize) -> Self {
        assert!(points <= 4, "symmetric inverse monoid limited to 4 points");
        let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
        let total = (points + 1).pow(points as u32);
        for code in 0..total {
            let map: Vec<Option<usize>> = (0..points)
                .map(|i| {
                    let d = (code / (points + 1).pow(i as u32)) % (points + 1);
                    (d > 0).then(|| d - 1)
                })
                .collect();
            let mut images: Vec<usize> = map.iter().flatten().copied().collect();
            images.sort_unstable();
            images.dedup();
            if images.len() == map.iter().flatten().count() {
                maps.push(map);
            }
        }
        maps.sort();
        let names = maps
            .iter()
            .map(|m| {
                m.iter()
                    .map(|p| p.map_or('-', |i| char::from_digit(i as u32 + 1, 10).unwrap()))
                    .collect()
            })
            .collect();
        let rows: Vec<Vec<usize>> = maps
            .iter()
            .map(|x| {
                maps.iter()
                    .map(|y| {
                        let composed: Vec<Option<usize>> =
                            x.iter().map(|p| p.and_then(|i| y[i])).collect();
                        maps.iter().position(|m| *m == composed).unwrap()
                    })
                    .collect()
            })
            .collect();
        let unit = maps
            .iter()
            .position(|m| m.iter().enumerate().all(|(i, p)| *p == Some(i)))
            .unwrap();
        validate_inverse_monoid(names, &rows, unit)
            .expect("partial injections form an inverse monoid")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.derived.idempotents
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.derived.is_idempotent[x]
    }

    /// `x ≤ y` iff `x = ye` for some idempotent `e`.
    pub fn natural_order(&self) -> &Relation {
        &self.derived.natural_order
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.derived.natural_order.holds(x, y)
    }

    /// σ-classes: `x σ y` iff `xe = ye` for some idempotent `e`.
    pub fn sigma(&self) -> &Partition {
        &self.derived.sigma
    }

    /// `M/σ`, class `i` named after the first member of class `i`.
    pub fn sigma_quotient(&self) -> &FiniteGroup {
        &self.derived.sigma_quotient
    }

    /// Canonical projection `M -> M/σ`.
    pub fn sigma_projection(&self) -> Vec<usize> {
        self.elements()
            .map(|x| self.derived.sigma.class_of(x))
            .collect()
    }

    /// Greatest element of each σ-class, where one exists.
    pub fn sigma_maxima(&self) -> &[Option<usize>] {
        &self.derived.sigma_maxima
    }

    /// True when `x` is the greatest element of its own σ-class.
    pub fn is_sigma_maximum(&self, x: usize) -> bool {
        self.derived.sigma_maxima[self.derived.sigma.class_of(x)] == Some(x)
    }

    pub fn green_r(&self) -> &Partition {
        &self.derived.green_r
    }

    pub fn green_l(&self) -> &Partition {
        &self.derived.green_l
    }

    pub fn green_h(&self) -> &Partition {
        &self.derived.green_h
    }

    /// Every σ-class has a greatest element; returns the per-class maxima.
    pub fn is_f_inverse(&self) -> (bool, &[Option<usize>]) {
        let maxima = self.sigma_maxima();
        (maxima.iter().all(Option::is_some), maxima)
    }

    /// Idempotents are central.
    pub fn is_clifford(&self) -> bool {
        self.idempotents()
            .iter()
            .all(|&e| self.elements().all(|x| self.mul(e, x) == self.mul(x, e)))
    }

    /// Congruences with group quotient, by brute force over all set
    /// partitions. `None` above six elements.
    pub fn group_congruences(&self) -> Option<Vec<Partition>> {
        const CAP: usize = 6;
        if self.order() > CAP {
            return None;
        }
        let n = self.order();
        Some(
            set_partitions(n)
                .into_iter()
                .filter(|p| congruence_witness(n, &self.table, p).is_none())
                .filter(|p| quotient_group(&self.names, &self.table, p).is_ok())
                .collect(),
        )
    }

    pub fn format_subset(&self, subset: &[usize]) -> String {
        let parts: Vec<&str> = subset.iter().map(|&x| self.name(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `(U, ∧)` for a strictly increasing chain of values in `[0, 1]`: product
/// is the minimum and the unit is the largest value. Element `i` is
/// `values[i]`.
pub fn chain_monoid(values: &[MembershipValue]) -> Result<FiniteInverseMonoid, ChainError> {
    if values.is_empty() {
        return Err(ChainError::EmptyChain);
    }
    for w in values.windows(2) {
        if w[1] <= w[0] {
            return Err(ChainError::Unsorted(w[1].to_string(), w[0].to_string()));
        }
    }
    let n = values.len();
    let names = values.iter().map(ToString::to_string).collect();
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
    Ok(validate_inverse_monoid(names, &rows, n - 1)
        .expect("finite chains under min are inverse monoids"))
}

/// Builds a chain monoid from raw fractions, rejecting values outside `[0, 1]`.
pub fn chain_monoid_from_fractions(
    values: &[(u64, u64)],
) -> Result<FiniteInverseMonoid, ChainError> {
    let parsed = values
        .iter()
        .map(|&(p, q)| {
            MembershipValue::new(p, q).map_err(|_| ChainError::OutOfRange(format!("{p}/{q}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    chain_monoid(&parsed)
}

fn total_into(f: &[usize], source: &FiniteInverseMonoid, target: &FiniteInverseMonoid) -> bool {
    f.len() == source.order() && f.iter().all(|&y| y < target.order())
}

/// `f(xy) = f(x)f(y)` for all `x, y`, and `f` sends unit to unit.
pub fn is_monoid_homomorphism(
    f: &[usize],
    source: &FiniteInverseMonoid,
    target: &FiniteInverseMonoid,
) -> bool {
    total_into(f, source, target)
        && f[source.unit()] == target.unit()
        && source.elements().all(|x| {
            source
                .elements()
                .all(|y| f[source.mul(x, y)] == target.mul(f[x], f[y]))
        })
}

/// `f` is injective on idempotents.
pub fn is_idempotent_separating(
    f: &[usize],
    source: &FiniteInverseMonoid,
    target: &FiniteInverseMonoid,
) -> bool {
    if !total_into(f, source, target) {
        return false;
    }
    let mut hit = vec![false; target.order()];
    source
        .idempotents()
        .iter()
        .all(|&e| !std::mem::replace(&mut hit[f[e]], true))
}

pub fn is_surjective(
    f: &[usize],
    source: &FiniteInverseMonoid,
    target: &FiniteInverseMonoid,
) -> bool {
    if !total_into(f, source, target) {
        return false;
    }
    let mut hit = vec![false; target.order()];
    f.iter().for_each(|&y| hit[y] = true);
    hit.into_iter().all(|h| h)
}

/// `f` sends the greatest element of every σ-class of `source` to the
/// greatest element of the σ-class containing its image.
pub fn preserves_sigma_maxima(
    f: &[usize],
    source: &FiniteInverseMonoid,
    target: &FiniteInverseMonoid,
) -> bool {
    total_into(f, source, target)
        && source
            .sigma_maxima()
            .iter()
            .flatten()
            .all(|&m| target.is_sigma_maximum(f[m]))
}

/// Commutation requirement `φ' ∘ f = λ ∘ φ` for homomorphism enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Commuting<'a> {
    pub source_projection: &'a [usize],
    pub target_projection: &'a [usize],
    pub lambda: &'a [usize],
}

/// Extra predicates applied while enumerating monoid homomorphisms.
#[derive(Debug, Clone, Copy, Default)]
pub struct HomFilter<'a> {
    pub preserve_sigma_maxima: bool,
    pub commuting: Option<Commuting<'a>>,
}

/// All monoid homomorphisms `source -> target` passing `filter`, in
/// lexicographic order of their image tables.
///
/// The budget bounds the candidate space left after the filter's pointwise
/// restrictions (unit forced, σ-maxima to σ-maxima, projection fibres).
pub fn enumerate_monoid_homomorphisms(
    source: &FiniteInverseMonoid,
    target: &FiniteInverseMonoid,
    filter: &HomFilter<'_>,
    budget: Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    let candidates: Vec<Vec<usize>> = source
        .elements()
        .map(|x| {
            target
                .elements()
                .filter(|&y| x != source.unit() || y == target.unit())
                .filter(|&y| {
                    !filter.preserve_sigma_maxima
                        || !source.is_sigma_maximum(x)
                        || target.is_sigma_maximum(y)
                })
                .filter(|&y| {
                    filter
                        .commuting
                        .is_none_or(|c| c.target_projection[y] == c.lambda[c.source_projection[x]])
                })
                .collect()
        })
        .collect();
    TableSearch {
        source: source.table(),
        source_order: source.order(),
        target: target.table(),
        target_order: target.order(),
        candidates,
        injective: false,
        first_only: false,
    }
    .run_bounded_space(budget)
}

/// Every map between two index sets, lexicographic. Used by exhaustive
/// checks; the budget bounds `|target|^|source|`.
pub fn all_maps(
    source: usize,
    target: usize,
    budget: Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    budget.admit(power(target, source))?;
    let mut out = Vec::new();
    let mut current = vec![0; source];
    if target == 0 {
        return Ok(if source == 0 { vec![current] } else { out });
    }
    loop {
        out.push(current.clone());
        let mut i = source;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            current[i] += 1;
            if current[i] < target {
                break;
            }
            current[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: u64, q: u64) -> MembershipValue {
        MembershipValue::new(p, q).unwrap()
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn two_chain() {
        let m = chain_monoid(&[v(1, 2), v(1, 1)]).unwrap();
        assert_eq!(m.names(), &["1/2", "1"]);
        assert_eq!(m.unit(), 1);
        assert!(m
            .elements()
            .all(|x| m.inverse(x) == x && m.is_idempotent(x)));
        assert!(m.leq(0, 1) && m.leq(0, 0) && !m.leq(1, 0));
        assert_eq!(m.sigma().len(), 1);
        assert_eq!(m.is_f_inverse(), (true, &[Some(1)][..]));
        assert!(m.is_clifford());
        assert_eq!(m.green_h(), &Partition::singletons(2));
        assert_eq!(m.green_r(), &Partition::singletons(2));
        assert_eq!(m.green_l(), &Partition::singletons(2));
    }

    #[test]
    fn chain_errors() {
        assert_eq!(chain_monoid(&[]), Err(ChainError::EmptyChain));
        assert!(matches!(
            chain_monoid(&[v(1, 1), v(1, 2)]),
            Err(ChainError::Unsorted(..))
        ));
        assert!(matches!(
            chain_monoid(&[v(1, 2), v(1, 2)]),
            Err(ChainError::Unsorted(..))
        ));
        assert!(matches!(
            chain_monoid_from_fractions(&[(3, 2)]),
            Err(ChainError::OutOfRange(_))
        ));
        let trivial = chain_monoid(&[v(1, 1)]).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn three_chain_order_is_numeric_order() {
        let values = [v(1, 4), v(1, 2), v(1, 1)];
        let m = chain_monoid(&values).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(m.leq(x, y), values[x] <= values[y]);
            }
        }
    }

    #[test]
    fn groups_are_inverse_monoids() {
        for g in [
            FiniteGroup::cyclic(3),
            FiniteGroup::symmetric3(),
            FiniteGroup::klein_four(),
        ] {
            let m = FiniteInverseMonoid::from_group(&g);
            assert!(m.elements().all(|x| m.inverse(x) == g.inverse(x)));
            assert_eq!(m.idempotents(), &[g.identity()]);
            assert!(m.natural_order().pairs().all(|(x, y)| x == y));
            assert_eq!(m.sigma(), &Partition::singletons(g.order()));
            assert_eq!(m.sigma_quotient().rows(), g.rows());
            assert_eq!(m.green_h().len(), 1);
            assert!(m.is_f_inverse().0);
        }
    }

    #[test]
    fn left_zero_band_with_unit_has_two_inverses() {
        // 1 = unit; a, b left zeros
        let rows = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]];
        let err = validate_inverse_monoid(names(&["1", "a", "b"]), &rows, 0).unwrap_err();
        assert_eq!(
            err,
            MonoidError::NonUniqueInverse("a".into(), "a".into(), "b".into())
        );
    }

    #[test]
    fn validation_errors() {
        // {1, z} with z*z = 1 except unit claim on z
        let rows = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(
            validate_inverse_monoid(names(&["1", "z"]), &rows, 1),
            Err(MonoidError::NotUnital("z".into()))
        );
        // {1, t}: t*t = t is fine; {1, n}: n*n = 1 gives a group. A monoid
        // with no inverse: Z_3 under multiplication mod 4? use {1,x,x2} with
        // x*x = x2, x2 * anything non-unit = x2, so x has no inverse.
        let rows = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
        assert_eq!(
            validate_inverse_monoid(names(&["1", "x", "x2"]), &rows, 0),
            Err(MonoidError::NoInverse("x".into()))
        );
        let rows = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        assert!(matches!(
            validate_inverse_monoid(names(&["1", "p", "q"]), &rows, 0),
            Err(MonoidError::NotAssociative(..))
        ));
        assert_eq!(
            validate_inverse_monoid(vec![], &[], 0),
            Err(MonoidError::Empty)
        );
    }

    #[test]
    fn symmetric_inverse_monoid_on_two_points_is_not_clifford() {
        let m = FiniteInverseMonoid::symmetric_inverse(2);
        assert_eq!(m.order(), 7);
        assert_eq!(m.name(m.unit()), "12");
        assert!(!m.is_clifford());
        // witness: the idempotent 1- does not commute with the swap 21
        let e = m.index_of("1-").unwrap();
        let s = m.index_of("21").unwrap();
        assert!(m.is_idempotent(e));
        assert_ne!(m.mul(e, s), m.mul(s, e));
        // σ-quotient of a monoid with zero is trivial
        assert_eq!(m.sigma().len(), 1);
        assert_eq!(m.idempotents().len(), 4);
        assert!(!m.is_f_inverse().0);
    }

    #[test]
    fn homomorphism_predicates() {
        let two = chain_monoid(&[v(1, 2), v(1, 1)]).unwrap();
        let id = vec![0, 1];
        assert!(is_monoid_homomorphism(&id, &two, &two));
        assert!(is_idempotent_separating(&id, &two, &two));
        assert!(is_surjective(&id, &two, &two));
        let constant = vec![1, 1];
        assert!(is_monoid_homomorphism(&constant, &two, &two));
        assert!(!is_idempotent_separating(&constant, &two, &two));
        assert!(!is_surjective(&constant, &two, &two));
        assert!(!is_monoid_homomorphism(&[1, 0], &two, &two));
        assert!(!is_monoid_homomorphism(&[0], &two, &two));
    }

    #[test]
    fn chain_hom_counts() {
        let two = chain_monoid(&[v(1, 2), v(1, 1)]).unwrap();
        let one = chain_monoid(&[v(1, 1)]).unwrap();
        let other = chain_monoid(&[v(1, 4), v(1, 1)]).unwrap();
        let f = HomFilter::default();
        assert_eq!(
            enumerate_monoid_homomorphisms(&two, &one, &f, Budget::DEFAULT)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_monoid_homomorphisms(&two, &other, &f, Budget::DEFAULT).unwrap(),
            vec![vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn enumeration_equals_filtered_brute_force() {
        let monoids = [
            chain_monoid(&[v(1, 4), v(1, 2), v(1, 1)]).unwrap(),
            FiniteInverseMonoid::from_group(&FiniteGroup::cyclic(2)),
            FiniteInverseMonoid::symmetric_inverse(2),
        ];
        for a in &monoids {
            for b in &monoids {
                let brute: Vec<Vec<usize>> = all_maps(a.order(), b.order(), Budget::DEFAULT)
                    .unwrap()
                    .into_iter()
                    .filter(|f| is_monoid_homomorphism(f, a, b))
                    .collect();
                let found =
                    enumerate_monoid_homomorphisms(a, b, &HomFilter::default(), Budget::DEFAULT)
                        .unwrap();
                assert_eq!(found, brute);
                for f in &found {
                    // homomorphisms of inverse monoids preserve inverses
                    assert!(a.elements().all(|x| f[a.inverse(x)] == b.inverse(f[x])));
                }
                let maxima = HomFilter {
                    preserve_sigma_maxima: true,
                    commuting: None,
                };
                let filtered =
                    enumerate_monoid_homomorphisms(a, b, &maxima, Budget::DEFAULT).unwrap();
                let expected: Vec<Vec<usize>> = brute
                    .into_iter()
                    .filter(|f| preserves_sigma_maxima(f, a, b))
                    .collect();
                assert_eq!(filtered, expected);
            }
        }
    }

    #[test]
    fn sigma_is_least_group_congruence() {
        let monoids = [
            chain_monoid(&[v(1, 4), v(1, 2), v(1, 1)]).unwrap(),
            FiniteInverseMonoid::from_group(&FiniteGroup::symmetric3()),
            FiniteInverseMonoid::from_group(&FiniteGroup::klein_four()),
        ];
        for m in &monoids {
            let congruences = m.group_congruences().unwrap();
            assert!(congruences.contains(m.sigma()));
            assert!(congruences.iter().all(|rho| m.sigma().refines(rho)));
        }
        assert!(FiniteInverseMonoid::symmetric_inverse(2)
            .group_congruences()
            .is_none());
    }

    #[test]
    fn all_maps_enumerates_lexicographically() {
        assert_eq!(
            all_maps(2, 2, Budget::DEFAULT).unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(
            all_maps(0, 3, Budget::DEFAULT).unwrap(),
            vec![Vec::<usize>::new()]
        );
        assert!(all_maps(2, 0, Budget::DEFAULT).unwrap().is_empty());
        assert!(all_maps(10, 10, Budget::new(1000)).is_err());
    }
}
