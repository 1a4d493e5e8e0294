//! Fuzzy subgroups `(G, μ, U)` with exact rational membership values.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::error::{Result, Violation};
use crate::group::FiniteGroup;
use crate::monoid::chain_monoid;
use crate::premorphism::DualPremorphism;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("value {0} lies outside [0,1]")]
    OutOfRange(String),
    #[error("malformed value {0:?}, expected p/q or an integer")]
    Malformed(String),
}

/// A membership degree: an exact rational in `[0, 1]`, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MembershipValue(Ratio<u64>);

impl MembershipValue {
    pub const ZERO: MembershipValue = MembershipValue(Ratio::new_raw(0, 1));
    pub const ONE: MembershipValue = MembershipValue(Ratio::new_raw(1, 1));

    pub fn new(numerator: u64, denominator: u64) -> Result<Self, ValueError> {
        if denominator == 0 {
            return Err(ValueError::ZeroDenominator(format!("{numerator}/0")));
        }
        if numerator > denominator {
            return Err(ValueError::OutOfRange(format!("{numerator}/{denominator}")));
        }
        Ok(MembershipValue(Ratio::new(numerator, denominator)))
    }

    pub fn numerator(self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(self) -> u64 {
        *self.0.denom()
    }
}

impl fmt::Display for MembershipValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl FromStr for MembershipValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, ValueError> {
        let malformed = || ValueError::Malformed(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: u64 = p.trim().parse().map_err(|_| malformed())?;
        let q: u64 = q.trim().parse().map_err(|_| malformed())?;
        MembershipValue::new(p, q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    #[error("expected {expected} membership values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("membership value of {x} lies outside [0,1]")]
    ValueOutOfRange { x: String },
    #[error("axiom (1) fails at ({x}, {y}): μ(xy) < min(μ(x), μ(y))")]
    Axiom1Violation { x: String, y: String },
    #[error("axiom (2) fails at {x}: μ(x⁻¹) != μ(x)")]
    Axiom2Violation { x: String },
    #[error("value {0} is not in the image of μ")]
    ValueNotInChain(String),
}

/// A fuzzy subgroup: a group, a membership function, and its image chain `U`.
///
/// `U` is always the image of μ, stored ascending; its last entry is the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySubgroup {
    group: FiniteGroup,
    mu: Vec<MembershipValue>,
    chain: Vec<MembershipValue>,
    level: Vec<usize>,
}

/// Checks axioms (2) then (1) in lexicographic order of witnesses and
/// derives the chain.
pub fn validate_fuzzy(
    group: FiniteGroup,
    mu: Vec<MembershipValue>,
) -> Result<FuzzySubgroup, FuzzyError> {
    if mu.len() != group.order() {
        return Err(FuzzyError::LengthMismatch {
            expected: group.order(),
            found: mu.len(),
        });
    }
    if let Some(x) = group.elements().find(|&x| mu[group.inverse(x)] != mu[x]) {
        return Err(FuzzyError::Axiom2Violation {
            x: group.name(x).to_string(),
        });
    }
    for x in group.elements() {
        for y in group.elements() {
            if mu[group.mul(x, y)] < mu[x].min(mu[y]) {
                return Err(FuzzyError::Axiom1Violation {
                    x: group.name(x).to_string(),
                    y: group.name(y).to_string(),
                });
            }
        }
    }
    let mut chain = mu.clone();
    chain.sort_unstable();
    chain.dedup();
    let level = mu
        .iter()
        .map(|v| chain.binary_search(v).expect("value in its own image"))
        .collect();
    Ok(FuzzySubgroup {
        group,
        mu,
        chain,
        level,
    })
}

impl FuzzySubgroup {
    /// Validates from raw `(numerator, denominator)` pairs.
    pub fn from_fractions(group: FiniteGroup, values: &[(u64, u64)]) -> Result<Self, FuzzyError> {
        let mut mu = Vec::with_capacity(values.len());
        for (x, &(p, q)) in values.iter().enumerate() {
            let value = MembershipValue::new(p, q).map_err(|_| FuzzyError::ValueOutOfRange {
                x: group
                    .names()
                    .get(x)
                    .cloned()
                    .unwrap_or_else(|| format!("#{x}")),
            })?;
            mu.push(value);
        }
        validate_fuzzy(group, mu)
    }

    /// μ ≡ `value` on `group`.
    pub fn constant(group: FiniteGroup, value: MembershipValue) -> Self {
        let mu = vec![value; group.order()];
        validate_fuzzy(group, mu).expect("constant maps are fuzzy subgroups")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn mu(&self, x: usize) -> MembershipValue {
        self.mu[x]
    }

    pub fn values(&self) -> &[MembershipValue] {
        &self.mu
    }

    /// The chain `U`, ascending.
    pub fn chain(&self) -> &[MembershipValue] {
        &self.chain
    }

    /// Index of `μ(x)` in the chain.
    pub fn level_of(&self, x: usize) -> usize {
        self.level[x]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    /// `sup U = μ(e)`.
    pub fn top(&self) -> MembershipValue {
        *self.chain.last().expect("chains are nonempty")
    }

    pub fn chain_index(&self, u: MembershipValue) -> Result<usize, FuzzyError> {
        self.chain
            .binary_search(&u)
            .map_err(|_| FuzzyError::ValueNotInChain(u.to_string()))
    }

    /// `μ_u = {h : μ(h) ≥ u}`, checked to be a subgroup.
    pub fn level_subset(&self, u: MembershipValue) -> Result<Vec<usize>> {
        self.chain_index(u)?;
        let subset: Vec<usize> = self.group.elements().filter(|&h| self.mu[h] >= u).collect();
        if !self.group.is_subgroup(&subset) {
            return Err(Violation::new(
                "level subsets are subgroups",
                format!("μ_{u} = {}", self.group.format_subset(&subset)),
            )
            .into());
        }
        Ok(subset)
    }

    /// μ viewed as a dual premorphism into the chain monoid `(U, ∧)`.
    pub fn as_dual_premorphism(&self) -> Result<DualPremorphism> {
        let target = chain_monoid(&self.chain)?;
        DualPremorphism::certify(self.group.clone(), target, self.level.clone()).map_err(|e| {
            Violation::new("a fuzzy subgroup is a dual premorphism", e.to_string()).into()
        })
    }

    /// Checks `μ(e) = max μ` and `μ(x⁻¹) = μ(x)`.
    pub fn derived_facts(&self) -> Result<DerivedFacts> {
        let e = self.group.identity();
        let top = self.top();
        if self.mu[e] != top {
            return Err(
                Violation::new("μ(e) dominates", format!("μ(e) = {} < {top}", self.mu[e])).into(),
            );
        }
        if let Some(x) = self
            .group
            .elements()
            .find(|&x| self.mu[self.group.inverse(x)] != self.mu[x])
        {
            return Err(Violation::new("μ(x⁻¹) = μ(x)", self.group.name(x).to_string()).into());
        }
        Ok(DerivedFacts {
            identity_value: self.mu[e],
            top,
            chain_length: self.chain.len(),
        })
    }

    pub fn format_values(&self) -> String {
        self.group
            .elements()
            .map(|x| format!("{}={}", self.group.name(x), self.mu[x]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Witnessed facts that follow from the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedFacts {
    pub identity_value: MembershipValue,
    pub top: MembershipValue,
    pub chain_length: usize,
}
