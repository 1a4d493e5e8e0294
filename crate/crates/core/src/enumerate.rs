//! Brute-force generators: fuzzy subgroups over a finite value grid (two
//! independent ways), subgroup chains, and both hom-sets of the embedding.
//!
//! Every generated object goes through its public validator.

use std::sync::Arc;

use thiserror::Error;

use crate::budget::{power, Budget, BudgetExceeded};
use crate::error::Result;
use crate::functor::{
    validate_fc_morphism, validate_fg_morphism, FCMorphism, FCObject, FGMorphism,
};
use crate::fuzzy::{validate_fuzzy, FuzzySubgroup, MembershipValue};
use crate::group::{enumerate_group_homomorphisms, FiniteGroup};
use crate::monoid::{all_maps, enumerate_monoid_homomorphisms, Commuting, HomFilter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("a grid needs at least one level")]
    Empty,
    #[error("grid levels must be strictly increasing")]
    Unsorted,
    #[error("grid levels must lie in (0,1]")]
    OutOfRange,
    #[error("grid must contain 1")]
    MissingTop,
}

/// A finite set of membership levels in `(0, 1]` containing 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValueGrid {
    levels: Vec<MembershipValue>,
}

impl ValueGrid {
    pub fn new(levels: Vec<MembershipValue>) -> Result<Self, GridError> {
        if levels.is_empty() {
            return Err(GridError::Empty);
        }
        if levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GridError::Unsorted);
        }
        if levels[0] == MembershipValue::ZERO {
            return Err(GridError::OutOfRange);
        }
        if *levels.last().unwrap() != MembershipValue::ONE {
            return Err(GridError::MissingTop);
        }
        Ok(ValueGrid { levels })
    }

    /// `{1/4, 1/2, 3/4, 1}`.
    pub fn default_grid() -> Self {
        ValueGrid::top_levels(4)
    }

    /// The `k` largest levels of the default grid (`1 ≤ k ≤ 4`), so the
    /// grid always keeps its top value 1.
    pub fn top_levels(k: usize) -> Self {
        assert!((1..=4).contains(&k), "the default grid has 4 levels");
        let levels = (4 - k + 1..=4)
            .map(|i| MembershipValue::new(i as u64, 4).unwrap())
            .collect();
        ValueGrid { levels }
    }

    /// Every sub-grid of the default grid that keeps the top level.
    pub fn default_subgrids() -> Vec<ValueGrid> {
        let base = ValueGrid::default_grid();
        (0u32..8)
            .map(|mask| {
                let mut levels: Vec<MembershipValue> = (0..3)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| base.levels[i])
                    .collect();
                levels.push(MembershipValue::ONE);
                ValueGrid { levels }
            })
            .collect()
    }

    pub fn levels(&self) -> &[MembershipValue] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// All fuzzy subgroups `G -> grid`, by filtering every function through
/// the axioms. Ordered lexicographically by the tuple of grid indices.
pub fn enumerate_fuzzy_subgroups_filter(
    group: &FiniteGroup,
    grid: &ValueGrid,
    budget: Budget,
) -> Result<Vec<FuzzySubgroup>, BudgetExceeded> {
    let maps = all_maps(group.order(), grid.len(), budget)?;
    Ok(maps
        .into_iter()
        .filter_map(|indices| {
            let mu = indices.iter().map(|&i| grid.levels[i]).collect();
            validate_fuzzy(group.clone(), mu).ok()
        })
        .collect())
}

/// All subgroups, as sorted element lists, ordered by size then
/// lexicographically.
pub fn enumerate_subgroups(
    group: &FiniteGroup,
    budget: Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    let n = group.order();
    budget.admit(power(2, n))?;
    let mut subgroups: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|mask| (0..n).filter(|&x| mask & (1 << x) != 0).collect::<Vec<_>>())
        .filter(|s| group.is_subgroup(s))
        .collect();
    subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(subgroups)
}

/// All strictly descending chains `G = H₁ ⊋ H₂ ⊋ ... ⊋ H_k` of subgroups,
/// depth first. The budget bounds the number of chains produced.
pub fn enumerate_subgroup_chains(
    group: &FiniteGroup,
    budget: Budget,
) -> Result<Vec<Vec<Vec<usize>>>, BudgetExceeded> {
    let subgroups = enumerate_subgroups(group, budget)?;
    let whole: Vec<usize> = group.elements().collect();
    let mut out = Vec::new();
    let mut chain = vec![whole];
    fn extend(
        chain: &mut Vec<Vec<usize>>,
        subgroups: &[Vec<usize>],
        out: &mut Vec<Vec<Vec<usize>>>,
        budget: Budget,
    ) -> Result<(), BudgetExceeded> {
        out.push(chain.clone());
        budget.admit(out.len() as u128)?;
        let last = chain.last().unwrap().clone();
        for s in subgroups.iter().rev() {
            if s.len() < last.len() && s.iter().all(|x| last.binary_search(x).is_ok()) {
                chain.push(s.clone());
                extend(chain, subgroups, out, budget)?;
                chain.pop();
            }
        }
        Ok(())
    }
    extend(&mut chain, &subgroups, &mut out, budget)?;
    Ok(out)
}

fn increasing_selections(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All fuzzy subgroups `G -> grid`, built from subgroup chains: the `j`-th
/// subgroup of a chain gets the `j`-th smallest of a strictly increasing
/// selection of grid levels, and `μ(x)` is the level of the smallest chain
/// member containing `x`. Ordered like the filter enumeration.
pub fn enumerate_fuzzy_subgroups_chain(
    group: &FiniteGroup,
    grid: &ValueGrid,
    budget: Budget,
) -> Result<Vec<FuzzySubgroup>> {
    let chains = enumerate_subgroup_chains(group, budget)?;
    let mut out = Vec::new();
    for chain in &chains {
        for selection in increasing_selections(grid.len(), chain.len()) {
            budget.admit(out.len() as u128 + 1)?;
            let mut mu = vec![MembershipValue::ZERO; group.order()];
            for (subgroup, &level) in chain.iter().zip(&selection) {
                for &x in subgroup {
                    mu[x] = grid.levels[level];
                }
            }
            out.push(validate_fuzzy(group.clone(), mu)?);
        }
    }
    out.sort_by(|a, b| {
        let key = |f: &FuzzySubgroup| -> Vec<usize> {
            f.values()
                .iter()
                .map(|v| grid.levels.binary_search(v).unwrap())
                .collect()
        };
        key(a).cmp(&key(b))
    });
    Ok(out)
}

/// Order-preserving maps between chains of lengths `u` and `v` that send
/// top to top, lexicographic.
pub fn enumerate_chain_maps(
    u: usize,
    v: usize,
    budget: Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    Ok(all_maps(u, v, budget)?
        .into_iter()
        .filter(|l| l.windows(2).all(|w| w[0] <= w[1]) && l.last() == Some(&(v - 1)))
        .collect())
}

/// The hom-set of fuzzy-subgroup morphisms, ordered by `(f, λ)`.
pub fn enumerate_fg_morphisms(
    source: &Arc<FuzzySubgroup>,
    target: &Arc<FuzzySubgroup>,
    budget: Budget,
) -> Result<Vec<FGMorphism>, BudgetExceeded> {
    let homs = enumerate_group_homomorphisms(source.group(), target.group(), budget)?;
    let lambdas = enumerate_chain_maps(source.chain().len(), target.chain().len(), budget)?;
    budget.admit((homs.len() as u128) * (lambdas.len() as u128))?;
    let mut out = Vec::new();
    for f in &homs {
        for lambda in &lambdas {
            if let Ok(m) = validate_fg_morphism(source, target, f.clone(), lambda.clone()) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// The hom-set of F-inverse-cover morphisms, ordered by `(λ, f*)`.
///
/// `λ` ranges over monoid homomorphisms preserving σ-maxima; for each, `f*`
/// ranges over homomorphisms that preserve σ-maxima and land in the fibre
/// `φ'⁻¹(λ(φ(t)))` for every `t`.
pub fn enumerate_fc_morphisms(
    source: &Arc<FCObject>,
    target: &Arc<FCObject>,
    budget: Budget,
) -> Result<Vec<FCMorphism>, BudgetExceeded> {
    let maxima = HomFilter {
        preserve_sigma_maxima: true,
        commuting: None,
    };
    let lambdas = enumerate_monoid_homomorphisms(source.base(), target.base(), &maxima, budget)?;
    let mut out = Vec::new();
    for lambda in &lambdas {
        let filter = HomFilter {
            preserve_sigma_maxima: true,
            commuting: Some(Commuting {
                source_projection: source.projection(),
                target_projection: target.projection(),
                lambda,
            }),
        };
        for fstar in
            enumerate_monoid_homomorphisms(source.cover(), target.cover(), &filter, budget)?
        {
            if let Ok(m) = validate_fc_morphism(source, target, fstar, lambda.clone()) {
                out.push(m);
            }
        }
    }
    Ok(out)
}
