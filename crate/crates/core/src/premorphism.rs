//! Dual premorphisms from a finite group into a finite inverse monoid.

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::monoid::FiniteInverseMonoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PremorphismError {
    #[error("map has {found} entries for a group of order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image {0} is not an element of the monoid")]
    NotTotal(usize),
    #[error("not a dual premorphism: {0}")]
    NotDualPremorphism(String),
    #[error("{0} lies below no ψ(h)")]
    CoverageFailure(String),
}

/// A map `ψ: H -> M` with `ψ(h⁻¹) = ψ(h)⁻¹`, `ψ(hk) ≥ ψ(h)ψ(k)` in the
/// natural order, and every `u ∈ M` below some `ψ(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPremorphism {
    group: FiniteGroup,
    target: FiniteInverseMonoid,
    map: Vec<usize>,
    coverage: Vec<usize>,
}

impl DualPremorphism {
    pub fn certify(
        group: FiniteGroup,
        target: FiniteInverseMonoid,
        map: Vec<usize>,
    ) -> Result<Self, PremorphismError> {
        if map.len() != group.order() {
            return Err(PremorphismError::LengthMismatch {
                expected: group.order(),
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(PremorphismError::NotTotal(bad));
        }
        for h in group.elements() {
            if map[group.inverse(h)] != target.inverse(map[h]) {
                return Err(PremorphismError::NotDualPremorphism(format!(
                    "ψ({h}⁻¹) != ψ({h})⁻¹",
                    h = group.name(h)
                )));
            }
            for k in group.elements() {
                if !target.leq(target.mul(map[h], map[k]), map[group.mul(h, k)]) {
                    return Err(PremorphismError::NotDualPremorphism(format!(
                        "ψ({h}{k}) < ψ({h})ψ({k}) fails",
                        h = group.name(h),
                        k = group.name(k)
                    )));
                }
            }
        }
        let mut coverage = Vec::with_capacity(target.order());
        for u in target.elements() {
            let witness = group
                .elements()
                .find(|&h| map[h] == u)
                .or_else(|| group.elements().find(|&h| target.leq(u, map[h])))
                .ok_or_else(|| PremorphismError::CoverageFailure(target.name(u).to_string()))?;
            coverage.push(witness);
        }
        Ok(DualPremorphism {
            group,
            target,
            map,
            coverage,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn target(&self) -> &FiniteInverseMonoid {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// For each `u` in the monoid, an `h` with `u ≤ ψ(h)`; an exact preimage
    /// when one exists.
    pub fn coverage(&self) -> &[usize] {
        &self.coverage
    }
}
