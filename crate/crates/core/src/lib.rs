//! Fuzzy subgroups, their F-inverse covers, and the embedding of fuzzy
//! subgroups into F-inverse covers over chain monoids.
//!
//! All structures are finite and stored as Cayley tables over `0..n`.
//! Enumerations take a [`Budget`] and refuse to start when the candidate
//! space would exceed it.

pub mod budget;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod functor;
pub mod fuzzy;
pub mod group;
pub mod monoid;
pub mod premorphism;
pub mod relation;
mod search;

pub use budget::{Budget, BudgetExceeded};
pub use cover::{
    build_cover, check_f_inverse_cover, cover_report, cover_to_dual_premorphism,
    hclass_level_isomorphism, monoid_isomorphic, premorphism_cover, theorem_r1_construct,
    CoverError, CoverMonoid, CoverReport, LevelIsomorphism, PremorphismCover, RecoveredPremorphism,
    SigmaClass,
};
pub use enumerate::{
    enumerate_chain_maps, enumerate_fc_morphisms, enumerate_fg_morphisms,
    enumerate_fuzzy_subgroups_chain, enumerate_fuzzy_subgroups_filter, enumerate_subgroup_chains,
    enumerate_subgroups, GridError, ValueGrid,
};
pub use error::{Error, ErrorKind, Result, Violation};
pub use functor::{
    compose_fc, compose_fg, omega_morphism, omega_object, reconstruct_fullness,
    validate_fc_morphism, validate_fg_morphism, verify_embedding, verify_functoriality,
    EmbeddingCertificate, FCMorphism, FCObject, FGMorphism, MorphismError, OmegaObject,
};
pub use fuzzy::{
    validate_fuzzy, DerivedFacts, FuzzyError, FuzzySubgroup, MembershipValue, ValueError,
};
pub use group::{
    enumerate_group_homomorphisms, is_group_homomorphism, validate_group, FiniteGroup, GroupError,
};
pub use monoid::{
    all_maps, chain_monoid, chain_monoid_from_fractions, enumerate_monoid_homomorphisms,
    is_idempotent_separating, is_monoid_homomorphism, is_surjective, preserves_sigma_maxima,
    validate_inverse_monoid, ChainError, Commuting, FiniteInverseMonoid, HomFilter, MonoidError,
};
pub use premorphism::{DualPremorphism, PremorphismError};
pub use relation::{set_partitions, Partition, Relation};
