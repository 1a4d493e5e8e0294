//! Fixed inputs shared by the benchmarks.

use fuzzcover::{FiniteGroup, FuzzySubgroup, MembershipValue};

/// `μ = 1` on the identity, `1/2` on `⟨a⟩ \ {e}`, `1/4` elsewhere.
pub fn v4_three_levels() -> FuzzySubgroup {
    FuzzySubgroup::from_fractions(FiniteGroup::klein_four(), &[(1, 1), (1, 2), (1, 4), (1, 4)])
        .expect("valid fuzzy subgroup")
}

/// A three-level fuzzy subgroup of the dihedral group of order 8 along
/// `D4 ⊋ ⟨r⟩ ⊋ ⟨r²⟩ ⊋ {e}`.
pub fn d4_chain() -> FuzzySubgroup {
    let q = |p| MembershipValue::new(p, 4).unwrap();
    // e r r^2 r^3 s rs r^2s r^3s
    let mu = vec![q(4), q(2), q(3), q(2), q(1), q(1), q(1), q(1)];
    fuzzcover::validate_fuzzy(FiniteGroup::dihedral4(), mu).expect("valid fuzzy subgroup")
}
