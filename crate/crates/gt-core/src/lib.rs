//! A finite generalized-topological-space engine.
//!
//! A generalized topology on a finite set is a union-closed family of
//! subsets containing the empty set; spaces here are additionally strong
//! (the ground set is a member). The crate provides:
//!
//! - the interior, closure, derived-set, and neighborhood-core operators
//!   ([`space`]),
//! - subspace induction and the relative-operator laws ([`subspace`]),
//! - surjections with the g-continuous / g-open / g-closed / g-pseudo-open /
//!   g-quotient predicates, their characterization conditions, hereditary
//!   variants, and the quotient generalized topology ([`mapping`]),
//! - exhaustive and seeded-random instance generation with canonical forms
//!   ([`enumerate`]),
//! - a theorem registry with exhaustive verification sweeps and a minimal
//!   counterexample miner ([`verify`]),
//! - JSON document schemas for the CLI and other front ends ([`doc`]).

pub mod doc;
pub mod enumerate;
pub mod mapping;
pub mod set;
pub mod space;
pub mod subspace;
pub mod verify;

pub use doc::{MappingDoc, SpaceDoc, SpaceRef};
pub use enumerate::{
    canonicalize, canonicalize_pair, enumerate_strong_gts, enumerate_surjections,
    CanonicalForm, EnumBounds, EnumMode,
};
pub use mapping::{
    make_mapping, quotient_gt, ClassificationVector, GtMapping, MappingClass, MappingError,
};
pub use set::{SetFamily, SubSet, MAX_POINTS};
pub use space::{validate_gt, GtError, GtSpace};
pub use subspace::{induce_subspace, SubspaceEmbedding, SubspaceError};
pub use verify::{
    check_witness, mine_counterexample, run_suite, Conclusion, MineOutcome, MinePreset,
    TheoremId, VerifyReport, Witness,
};
