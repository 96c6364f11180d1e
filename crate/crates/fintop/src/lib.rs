//! Workbench for finite topological spaces.
//!
//! A topology on up to sixteen labeled points is stored as a bitmask family,
//! which makes every derived notion exactly computable: the crate classifies
//! subsets into sixteen set classes, evaluates generalized closure and
//! interior operators, profiles separation behaviour, classifies maps
//! between spaces by twenty-one flags, enumerates all labeled topologies up
//! to seven points, and checks a catalog of forty-one quantified claims
//! exhaustively over those enumerations, reporting counts and replayable
//! minimal counterexamples.
//!
//! The `fintop` binary exposes the same operations as subcommands
//! (`validate`, `classify`, `closure`, `profile`, `map-audit`, `enumerate`,
//! `verify`, `mine`). Runnable walkthroughs live under `examples/`:
//!
//! - `classify_subsets` tabulates the sixteen class flags over a sample space
//! - `closure_operators` compares the closure and interior family
//! - `separation_profile` reads off normality and its relatives
//! - `map_audit` classifies a map and audits its characterizations
//! - `enumerate_spaces` counts labeled topologies and homeomorphism classes
//! - `verify_claims` runs the claim catalog at configurable bounds
//! - `mine_counterexamples` hunts for sets and spaces separating the classes

pub mod claims;
pub mod enumeration;
pub mod maps;
pub mod naive;
pub mod operators;
pub mod report;
pub mod separation;
pub mod space;

mod analysis;

#[cfg(test)]
mod testdata;

pub use claims::{
    find_claim, mine, replay, run_claim, run_suite, suite_claims, Bounds, Claim, ClaimStatus,
    CostEstimate, DomainKind, InstanceDoc, MineReport, MineScope, MineTarget, SuiteError,
    SuiteReport, Verdict, WitnessRecord, CATALOG,
};
pub use enumeration::{
    count_spaces, enumerate_maps, enumerate_spaces, enumerate_up_to_homeo, MapConstraints,
};
pub use maps::{parse_map, MapClassification, MapDoc, MapError, MapFlag, SpaceMap};
pub use operators::{
    gen_closure, gen_interior, ClosureKind, ClosureOutcome, InteriorOutcome, SetClass,
    SubsetClassification,
};
pub use report::Format;
pub use separation::{Def21Reading, SeparationProfile};
pub use space::{parse_space, FiniteSpace, SpaceDoc, SpaceParseError, SubsetMask};
