//! Claim catalog, exhaustive suite runner, and counterexample miner.
//!
//! Each catalog entry quantifies over one bounded domain: all subsets of all
//! labeled topologies up to a point count, the spaces themselves, all map
//! tables between pairs of enumerated spaces, or all composable pairs of map
//! tables. A run walks its domain exhaustively, skips instances that miss the
//! hypothesis, counts the rest, and keeps the first violation in a fixed
//! iteration order as a replayable witness. Forced entries hold by
//! definition, so any violation there points at an implementation bug rather
//! than at the claim.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumeration::{enumerate_spaces, par_for_each_space};
use crate::maps::{self, MapClassification, MapDoc, MapError, MapFlag, SpaceMap};
use crate::operators::{self, SetClass};
use crate::separation::{
    is_g_normal, is_normal, is_normal_fast, is_scstar_normal, Def21Reading, SeparationEquivalents,
    SeparationProfile,
};
use crate::space::{FiniteSpace, SpaceDoc, SpaceParseError, SubsetMask};

/// Labeled topology counts by point count, used for cost estimates.
pub const SPACE_COUNTS: [u64; 8] = [1, 1, 4, 29, 355, 6942, 209_527, 9_535_241];

/// Largest point count the exhaustive space walks accept.
pub const MAX_ENUMERATION_POINTS: usize = 7;

/// Most map tables a single suite run will enumerate.
pub const MAP_TABLE_BUDGET: u64 = 50_000_000;

/// Most composable table pairs a single suite run will enumerate.
pub const PAIR_TABLE_BUDGET: u64 = 200_000_000;

/// Quantifier bounds for one verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Spaces with up to this many points feed the subset and space claims.
    pub max_space_points: usize,
    /// Point counts of the domain and codomain in single-map claims.
    pub map_points: (usize, usize),
    /// Point counts of the three spaces in composition claims.
    pub pair_points: (usize, usize, usize),
    /// How separating sets are required to relate in the normality family.
    pub reading: Def21Reading,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_space_points: 4,
            map_points: (3, 3),
            pair_points: (3, 3, 3),
            reading: Def21Reading::Disjoint,
        }
    }
}

/// Whether a claim is definitionally immediate or a substantive statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    /// Holds by unwinding definitions; a violation is an implementation bug.
    Forced,
    /// Substantive; violations are recorded and reported, not escalated.
    Stated,
}

/// The quantifier domain a claim ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainKind {
    Subsets,
    Spaces,
    Maps,
    MapPairs,
}

/// Predicate on one subset of one space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SetPred {
    Class(SetClass),
    /// Every closed set inside the subset also sits inside its SC*-interior.
    ClosedFitsStarredInterior,
}

impl SetPred {
    fn holds(self, sp: &FiniteSpace, m: SubsetMask) -> bool {
        match self {
            SetPred::Class(c) => c.holds(sp, m),
            SetPred::ClosedFitsStarredInterior => {
                let inner = operators::scstar_interior(sp, m);
                (0..(1u32 << sp.size()))
                    .map(SubsetMask::from_bits)
                    .all(|f| !sp.is_closed(f) || !f.is_subset_of(m) || f.is_subset_of(inner))
            }
        }
    }

    fn describe(self) -> &'static str {
        match self {
            SetPred::Class(c) => c.name(),
            SetPred::ClosedFitsStarredInterior => "every closed subset inside the scstar-interior",
        }
    }
}

/// Predicate on one space, read off its separation profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SpaceCond {
    Normal,
    GNormal,
    ScstarNormal,
    BinaryCoverShrinks,
    ClosedOpenInterpolation,
    /// One of the seven statements tabulated in [`SeparationEquivalents`].
    Equivalent(usize),
}

impl SpaceCond {
    fn holds(self, p: &SeparationProfile) -> bool {
        match self {
            SpaceCond::Normal => p.normal,
            SpaceCond::GNormal => p.g_normal,
            SpaceCond::ScstarNormal => p.scstar_normal,
            SpaceCond::BinaryCoverShrinks => p.binary_cover_shrinks,
            SpaceCond::ClosedOpenInterpolation => p.closed_open_interpolation,
            SpaceCond::Equivalent(i) => p.equivalents.as_array()[i],
        }
    }

    fn label(self) -> &'static str {
        match self {
            SpaceCond::Normal => "normal",
            SpaceCond::GNormal => "g-normal",
            SpaceCond::ScstarNormal => "scstar-normal",
            SpaceCond::BinaryCoverShrinks => "binary-cover-shrinks",
            SpaceCond::ClosedOpenInterpolation => "closed-open-interpolation",
            SpaceCond::Equivalent(i) => SeparationEquivalents::LABELS[i],
        }
    }
}

/// Quantified criterion on one map, named to match the audit rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MapCriterion {
    StarredCoverTransfer,
    PreimagesAlmostStarredOpen,
    ImagesRespectStarredClosure,
    GStarredCoverTransfer,
    GStarredCoverTransferRegular,
    StarredCoverTransferClosedRegular,
    PreservesGStarredClosedImages,
    PullsBackGStarredClosed,
    PreimagesOfStarredOpenAreGStarredOpen,
}

impl MapCriterion {
    fn holds(self, f: &SpaceMap) -> bool {
        match self {
            MapCriterion::StarredCoverTransfer => maps::starred_cover_transfer(f),
            MapCriterion::PreimagesAlmostStarredOpen => maps::preimages_almost_starred_open(f),
            MapCriterion::ImagesRespectStarredClosure => maps::images_respect_starred_closure(f),
            MapCriterion::GStarredCoverTransfer => maps::g_starred_cover_transfer(f),
            MapCriterion::GStarredCoverTransferRegular => maps::g_starred_cover_transfer_regular(f),
            MapCriterion::StarredCoverTransferClosedRegular => {
                maps::starred_cover_transfer_closed_regular(f)
            }
            MapCriterion::PreservesGStarredClosedImages => {
                maps::preserves_g_starred_closed_images(f)
            }
            MapCriterion::PullsBackGStarredClosed => maps::pulls_back_g_starred_closed(f),
            MapCriterion::PreimagesOfStarredOpenAreGStarredOpen => {
                maps::preimages_of_starred_open_are_g_starred_open(f)
            }
        }
    }

    fn name(self) -> &'static str {
        match self {
            MapCriterion::StarredCoverTransfer => "starred-cover-transfer",
            MapCriterion::PreimagesAlmostStarredOpen => "preimages-almost-starred-open",
            MapCriterion::ImagesRespectStarredClosure => "images-respect-starred-closure",
            MapCriterion::GStarredCoverTransfer => "g-starred-cover-transfer",
            MapCriterion::GStarredCoverTransferRegular => "g-starred-cover-transfer-regular",
            MapCriterion::StarredCoverTransferClosedRegular => {
                "starred-cover-transfer-closed-regular"
            }
            MapCriterion::PreservesGStarredClosedImages => "preserves-g-starred-closed-images",
            MapCriterion::PullsBackGStarredClosed => "pulls-back-g-starred-closed",
            MapCriterion::PreimagesOfStarredOpenAreGStarredOpen => {
                "preimages-of-starred-open-are-g-starred-open"
            }
        }
    }
}

/// Conclusion of a single-map claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MapConcl {
    Flag(MapFlag),
    Criterion(MapCriterion),
    Domain(SpaceCond),
    Codomain(SpaceCond),
}

/// Which leg of a composable pair a conclusion flag applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PairConcl {
    First(MapFlag),
    Second(MapFlag),
    Composite(MapFlag),
}

/// The quantified statement behind one catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ClaimBody {
    SetImplies {
        hyp: SetPred,
        concl: SetPred,
    },
    SetEquiv {
        lhs: SetPred,
        rhs: SetPred,
    },
    SpaceImplies {
        hyp: SpaceCond,
        concl: SpaceCond,
    },
    SpaceEquiv {
        conds: &'static [SpaceCond],
    },
    MapImplies {
        flags: &'static [MapFlag],
        domain: Option<SpaceCond>,
        codomain: Option<SpaceCond>,
        concl: MapConcl,
    },
    MapEquiv {
        flag: MapFlag,
        criterion: MapCriterion,
    },
    PairImplies {
        first: &'static [MapFlag],
        second: &'static [MapFlag],
        composite: &'static [MapFlag],
        concl: PairConcl,
    },
}

/// One catalog entry: identifier, enforcement status, prose summary, and the
/// quantified statement itself.
#[derive(Debug)]
pub struct Claim {
    pub id: &'static str,
    pub status: ClaimStatus,
    pub summary: &'static str,
    pub(crate) body: ClaimBody,
}

impl Claim {
    pub fn domain(&self) -> DomainKind {
        match self.body {
            ClaimBody::SetImplies { .. } | ClaimBody::SetEquiv { .. } => DomainKind::Subsets,
            ClaimBody::SpaceImplies { .. } | ClaimBody::SpaceEquiv { .. } => DomainKind::Spaces,
            ClaimBody::MapImplies { .. } | ClaimBody::MapEquiv { .. } => DomainKind::Maps,
            ClaimBody::PairImplies { .. } => DomainKind::MapPairs,
        }
    }

    fn bounds_label(&self, b: &Bounds) -> String {
        match self.domain() {
            DomainKind::Subsets => {
                format!("subsets of spaces with up to {} points", b.max_space_points)
            }
            DomainKind::Spaces => format!("spaces with up to {} points", b.max_space_points),
            DomainKind::Maps => format!("maps {}x{}", b.map_points.0, b.map_points.1),
            DomainKind::MapPairs => format!(
                "map pairs {}x{}x{}",
                b.pair_points.0, b.pair_points.1, b.pair_points.2
            ),
        }
    }
}

/// Every catalog entry, in the fixed report order.
pub const CATALOG: &[Claim] = &[
    Claim {
        id: "D1.1a",
        status: ClaimStatus::Forced,
        summary: "every regular open set is c*-open",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::RegularOpen),
            concl: SetPred::Class(SetClass::CstarOpen),
        },
    },
    Claim {
        id: "D1.1b",
        status: ClaimStatus::Forced,
        summary: "every c*-open set is semi-open",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::CstarOpen),
            concl: SetPred::Class(SetClass::SemiOpen),
        },
    },
    Claim {
        id: "D1.1c",
        status: ClaimStatus::Forced,
        summary: "every open set is semi-open",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::Open),
            concl: SetPred::Class(SetClass::SemiOpen),
        },
    },
    Claim {
        id: "R1.4a",
        status: ClaimStatus::Forced,
        summary: "every closed set is SC*-closed",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::Closed),
            concl: SetPred::Class(SetClass::ScstarClosed),
        },
    },
    Claim {
        id: "R1.4b",
        status: ClaimStatus::Forced,
        summary: "every SC*-closed set is SC*g-closed",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::ScstarClosed),
            concl: SetPred::Class(SetClass::ScstarGClosed),
        },
    },
    Claim {
        id: "R1.4c",
        status: ClaimStatus::Forced,
        summary: "every SC*g-closed set is gSC*-closed",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::ScstarGClosed),
            concl: SetPred::Class(SetClass::GscstarClosed),
        },
    },
    Claim {
        id: "R1.4d",
        status: ClaimStatus::Stated,
        summary: "every gSC*-closed set is SC*-closed",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::GscstarClosed),
            concl: SetPred::Class(SetClass::ScstarClosed),
        },
    },
    Claim {
        id: "R1.4e",
        status: ClaimStatus::Forced,
        summary: "every closed set is g-closed",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::Closed),
            concl: SetPred::Class(SetClass::GClosed),
        },
    },
    Claim {
        id: "R1.4f",
        status: ClaimStatus::Stated,
        summary: "every gSC*-closed set is g-closed",
        body: ClaimBody::SetImplies {
            hyp: SetPred::Class(SetClass::GscstarClosed),
            concl: SetPred::Class(SetClass::GClosed),
        },
    },
    Claim {
        id: "R2.2a",
        status: ClaimStatus::Forced,
        summary: "every normal space is g-normal",
        body: ClaimBody::SpaceImplies {
            hyp: SpaceCond::Normal,
            concl: SpaceCond::GNormal,
        },
    },
    Claim {
        id: "R2.2b",
        status: ClaimStatus::Stated,
        summary: "every g-normal space is SC*-normal",
        body: ClaimBody::SpaceImplies {
            hyp: SpaceCond::GNormal,
            concl: SpaceCond::ScstarNormal,
        },
    },
    Claim {
        id: "T2.4",
        status: ClaimStatus::Stated,
        summary: "SC*-normality, shrinking binary open covers to SC*-closed pieces, \
                  and closed-in-open SC*-interpolation coincide",
        body: ClaimBody::SpaceEquiv {
            conds: &[
                SpaceCond::ScstarNormal,
                SpaceCond::BinaryCoverShrinks,
                SpaceCond::ClosedOpenInterpolation,
            ],
        },
    },
    Claim {
        id: "T3.3",
        status: ClaimStatus::Stated,
        summary: "strongly SC*-closed maps are exactly those transferring SC*-open \
                  covers of preimages back through the map",
        body: ClaimBody::MapEquiv {
            flag: MapFlag::StronglyScstarClosed,
            criterion: MapCriterion::StarredCoverTransfer,
        },
    },
    Claim {
        id: "L3.4",
        status: ClaimStatus::Stated,
        summary: "almost SC*-irresolute maps are exactly those pulling SC*-open sets \
                  into the SC*-interior of the SC*-closure of their preimage",
        body: ClaimBody::MapEquiv {
            flag: MapFlag::AlmostScstarIrresolute,
            criterion: MapCriterion::PreimagesAlmostStarredOpen,
        },
    },
    Claim {
        id: "T3.5",
        status: ClaimStatus::Stated,
        summary: "almost SC*-irresolute maps are exactly those whose images respect \
                  SC*-closure",
        body: ClaimBody::MapEquiv {
            flag: MapFlag::AlmostScstarIrresolute,
            criterion: MapCriterion::ImagesRespectStarredClosure,
        },
    },
    Claim {
        id: "T3.6",
        status: ClaimStatus::Stated,
        summary: "strongly SC*-open continuous almost SC*-irresolute surjections carry \
                  SC*-normality onto the codomain",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::Continuous,
                MapFlag::Surjective,
                MapFlag::StronglyScstarOpen,
                MapFlag::AlmostScstarIrresolute,
            ],
            domain: Some(SpaceCond::ScstarNormal),
            codomain: None,
            concl: MapConcl::Codomain(SpaceCond::ScstarNormal),
        },
    },
    Claim {
        id: "T3.7",
        status: ClaimStatus::Stated,
        summary: "strongly SC*-closed continuous surjections carry SC*-normality onto \
                  the codomain",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::Continuous,
                MapFlag::Surjective,
                MapFlag::StronglyScstarClosed,
            ],
            domain: Some(SpaceCond::ScstarNormal),
            codomain: None,
            concl: MapConcl::Codomain(SpaceCond::ScstarNormal),
        },
    },
    Claim {
        id: "T4.5.1",
        status: ClaimStatus::Stated,
        summary: "an SC*-gSC*-closed map followed by a continuous SC*-gSC*-closed map \
                  is SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[MapFlag::ScstarGscstarClosed],
            second: &[MapFlag::Continuous, MapFlag::ScstarGscstarClosed],
            composite: &[],
            concl: PairConcl::Composite(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "T4.5.2",
        status: ClaimStatus::Stated,
        summary: "a strongly SC*-closed map followed by an SC*-gSC*-closed map is \
                  SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[MapFlag::StronglyScstarClosed],
            second: &[MapFlag::ScstarGscstarClosed],
            composite: &[],
            concl: PairConcl::Composite(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "T4.5.3",
        status: ClaimStatus::Stated,
        summary: "a quasi-SC*-closed map followed by a gSC*-closed map is \
                  SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[MapFlag::QuasiScstarClosed],
            second: &[MapFlag::GscstarClosedMap],
            composite: &[],
            concl: PairConcl::Composite(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "T4.6",
        status: ClaimStatus::Stated,
        summary: "when a composite is SC*-gSC*-closed and its first leg is an \
                  SC*-irresolute surjection, the second leg is SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[MapFlag::Surjective, MapFlag::ScstarIrresolute],
            second: &[],
            composite: &[MapFlag::ScstarGscstarClosed],
            concl: PairConcl::Second(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "L4.7",
        status: ClaimStatus::Stated,
        summary: "SC*-gSC*-closed maps are exactly those transferring gSC*-open covers \
                  of preimages back through the map",
        body: ClaimBody::MapEquiv {
            flag: MapFlag::ScstarGscstarClosed,
            criterion: MapCriterion::GStarredCoverTransfer,
        },
    },
    Claim {
        id: "T4.8",
        status: ClaimStatus::Stated,
        summary: "continuous SC*-gSC*-closed maps send gSC*-closed sets to gSC*-closed \
                  images",
        body: ClaimBody::MapImplies {
            flags: &[MapFlag::Continuous, MapFlag::ScstarGscstarClosed],
            domain: None,
            codomain: None,
            concl: MapConcl::Criterion(MapCriterion::PreservesGStarredClosedImages),
        },
    },
    Claim {
        id: "R4.9",
        status: ClaimStatus::Forced,
        summary: "every SC*-irresolute map is SC*-gSC*-continuous",
        body: ClaimBody::MapImplies {
            flags: &[MapFlag::ScstarIrresolute],
            domain: None,
            codomain: None,
            concl: MapConcl::Flag(MapFlag::ScstarGscstarContinuous),
        },
    },
    Claim {
        id: "T4.10",
        status: ClaimStatus::Forced,
        summary: "SC*-gSC*-continuity is the same as preimages of SC*-open sets being \
                  gSC*-open",
        body: ClaimBody::MapEquiv {
            flag: MapFlag::ScstarGscstarContinuous,
            criterion: MapCriterion::PreimagesOfStarredOpenAreGStarredOpen,
        },
    },
    Claim {
        id: "T4.11",
        status: ClaimStatus::Stated,
        summary: "SC*-gSC*-continuous maps pull gSC*-closed sets back to gSC*-closed \
                  sets",
        body: ClaimBody::MapImplies {
            flags: &[MapFlag::ScstarGscstarContinuous],
            domain: None,
            codomain: None,
            concl: MapConcl::Criterion(MapCriterion::PullsBackGStarredClosed),
        },
    },
    Claim {
        id: "C4.12",
        status: ClaimStatus::Stated,
        summary: "closed SC*-irresolute maps pull gSC*-closed sets back to gSC*-closed \
                  sets",
        body: ClaimBody::MapImplies {
            flags: &[MapFlag::ClosedMap, MapFlag::ScstarIrresolute],
            domain: None,
            codomain: None,
            concl: MapConcl::Criterion(MapCriterion::PullsBackGStarredClosed),
        },
    },
    Claim {
        id: "T4.13",
        status: ClaimStatus::Stated,
        summary: "bijective open SC*-gSC*-continuous maps pull gSC*-closed sets back to \
                  gSC*-closed sets",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::Bijective,
                MapFlag::OpenMap,
                MapFlag::ScstarGscstarContinuous,
            ],
            domain: None,
            codomain: None,
            concl: MapConcl::Criterion(MapCriterion::PullsBackGStarredClosed),
        },
    },
    Claim {
        id: "T4.14",
        status: ClaimStatus::Stated,
        summary: "when a composite is SC*-gSC*-closed and its second leg is a bijective \
                  open SC*-gSC*-continuous map, the first leg is SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[],
            second: &[
                MapFlag::Bijective,
                MapFlag::OpenMap,
                MapFlag::ScstarGscstarContinuous,
            ],
            composite: &[MapFlag::ScstarGscstarClosed],
            concl: PairConcl::First(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "T4.15s",
        status: ClaimStatus::Stated,
        summary: "when a composite is SC*-gSC*-closed and its second leg is an \
                  injective SC*-gSC*-continuous map, the first leg is SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[],
            second: &[MapFlag::Injective, MapFlag::ScstarGscstarContinuous],
            composite: &[MapFlag::ScstarGscstarClosed],
            concl: PairConcl::First(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "T4.15p",
        status: ClaimStatus::Stated,
        summary: "when a composite is SC*-gSC*-closed and its second leg is an \
                  injective closed SC*-gSC*-continuous map, the first leg is \
                  SC*-gSC*-closed",
        body: ClaimBody::PairImplies {
            first: &[],
            second: &[
                MapFlag::Injective,
                MapFlag::ClosedMap,
                MapFlag::ScstarGscstarContinuous,
            ],
            composite: &[MapFlag::ScstarGscstarClosed],
            concl: PairConcl::First(MapFlag::ScstarGscstarClosed),
        },
    },
    Claim {
        id: "T5.1",
        status: ClaimStatus::Stated,
        summary: "seven separation statements built from SC*-open and g-open \
                  separators coincide",
        body: ClaimBody::SpaceEquiv {
            conds: &[
                SpaceCond::Equivalent(0),
                SpaceCond::Equivalent(1),
                SpaceCond::Equivalent(2),
                SpaceCond::Equivalent(3),
                SpaceCond::Equivalent(4),
                SpaceCond::Equivalent(5),
                SpaceCond::Equivalent(6),
            ],
        },
    },
    Claim {
        id: "T5.2",
        status: ClaimStatus::Stated,
        summary: "continuous quasi-SC*-closed surjections from SC*-normal spaces have \
                  normal codomains",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::Continuous,
                MapFlag::Surjective,
                MapFlag::QuasiScstarClosed,
            ],
            domain: Some(SpaceCond::ScstarNormal),
            codomain: None,
            concl: MapConcl::Codomain(SpaceCond::Normal),
        },
    },
    Claim {
        id: "L5.3",
        status: ClaimStatus::Stated,
        summary: "a set is gSC*-open exactly when each closed subset of it sits inside \
                  its SC*-interior",
        body: ClaimBody::SetEquiv {
            lhs: SetPred::Class(SetClass::GscstarOpen),
            rhs: SetPred::ClosedFitsStarredInterior,
        },
    },
    Claim {
        id: "T5.4",
        status: ClaimStatus::Stated,
        summary: "closed injective SC*-gSC*-continuous maps into SC*-normal spaces have \
                  SC*-normal domains",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::ClosedMap,
                MapFlag::Injective,
                MapFlag::ScstarGscstarContinuous,
            ],
            domain: None,
            codomain: Some(SpaceCond::ScstarNormal),
            concl: MapConcl::Domain(SpaceCond::ScstarNormal),
        },
    },
    Claim {
        id: "C5.5",
        status: ClaimStatus::Stated,
        summary: "closed SC*-irresolute injections into SC*-normal spaces have \
                  SC*-normal domains",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::ClosedMap,
                MapFlag::Injective,
                MapFlag::ScstarIrresolute,
            ],
            domain: None,
            codomain: Some(SpaceCond::ScstarNormal),
            concl: MapConcl::Domain(SpaceCond::ScstarNormal),
        },
    },
    Claim {
        id: "L5.6",
        status: ClaimStatus::Stated,
        summary: "almost gSC*-closed maps are exactly those transferring gSC*-open \
                  covers of preimages of regular-open neighborhoods",
        body: ClaimBody::MapEquiv {
            flag: MapFlag::AlmostGscstarClosed,
            criterion: MapCriterion::GStarredCoverTransferRegular,
        },
    },
    Claim {
        id: "L5.7",
        status: ClaimStatus::Stated,
        summary: "almost gSC*-closed maps extend closed codomain sets, seen through \
                  regular-open sets around their preimage, to SC*-open sets",
        body: ClaimBody::MapImplies {
            flags: &[MapFlag::AlmostGscstarClosed],
            domain: None,
            codomain: None,
            concl: MapConcl::Criterion(MapCriterion::StarredCoverTransferClosedRegular),
        },
    },
    Claim {
        id: "T5.8",
        status: ClaimStatus::Stated,
        summary: "continuous almost gSC*-closed surjections carry normality to \
                  SC*-normality",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::Continuous,
                MapFlag::Surjective,
                MapFlag::AlmostGscstarClosed,
            ],
            domain: Some(SpaceCond::Normal),
            codomain: None,
            concl: MapConcl::Codomain(SpaceCond::ScstarNormal),
        },
    },
    Claim {
        id: "C5.9",
        status: ClaimStatus::Stated,
        summary: "continuous SC*-closed surjections carry normality to SC*-normality",
        body: ClaimBody::MapImplies {
            flags: &[
                MapFlag::Continuous,
                MapFlag::Surjective,
                MapFlag::ScstarClosedMap,
            ],
            domain: Some(SpaceCond::Normal),
            codomain: None,
            concl: MapConcl::Codomain(SpaceCond::ScstarNormal),
        },
    },
    Claim {
        id: "C5.9f",
        status: ClaimStatus::Forced,
        summary: "every SC*-closed map is almost gSC*-closed",
        body: ClaimBody::MapImplies {
            flags: &[MapFlag::ScstarClosedMap],
            domain: None,
            codomain: None,
            concl: MapConcl::Flag(MapFlag::AlmostGscstarClosed),
        },
    },
];

/// Finds a claim by id, ignoring ASCII case.
pub fn find_claim(id: &str) -> Option<&'static Claim> {
    CATALOG.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Resolves a suite selector: a named suite (`all`, `forced`, `stated`,
/// `t24`, `t51`) or a comma-separated list of claim ids. Results always come
/// back in catalog order.
pub fn suite_claims(selector: &str) -> Result<Vec<&'static Claim>, SuiteError> {
    let sel = selector.trim();
    match sel {
        "" => Ok(Vec::new()),
        "all" => Ok(CATALOG.iter().collect()),
        "forced" => Ok(CATALOG
            .iter()
            .filter(|c| c.status == ClaimStatus::Forced)
            .collect()),
        "stated" => Ok(CATALOG
            .iter()
            .filter(|c| c.status == ClaimStatus::Stated)
            .collect()),
        "t24" => Ok(vec![find_claim("T2.4").expect("cataloged")]),
        "t51" => Ok(vec![find_claim("T5.1").expect("cataloged")]),
        _ => {
            let mut wanted = Vec::new();
            for token in sel.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    continue;
                }
                let claim =
                    find_claim(token).ok_or_else(|| SuiteError::UnknownClaim(token.to_string()))?;
                wanted.push(claim.id);
            }
            Ok(CATALOG.iter().filter(|c| wanted.contains(&c.id)).collect())
        }
    }
}

/// Why a suite run could not start or finish.
#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("bounds ask for {requested} {unit}, over the budget of {budget}")]
    Budget {
        requested: u64,
        budget: u64,
        unit: &'static str,
    },
}

/// The concrete instance a witness record carries, self-contained enough to
/// re-evaluate without the original run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceDoc {
    SpaceSubset {
        space: SpaceDoc,
        subset: Vec<String>,
    },
    Space {
        space: SpaceDoc,
    },
    Map {
        map: MapDoc,
    },
    MapPair {
        first: MapDoc,
        second: MapDoc,
    },
}

/// A violation frozen as data: the claim, the sub-predicate that failed, and
/// the instance that exhibits it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub claim: String,
    pub failed: String,
    pub instance: InstanceDoc,
}

/// Per-pattern count of condition vectors seen while checking an equivalence
/// claim; `pattern` spells each condition as `T` or `F` in label order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionTally {
    pub pattern: String,
    pub count: u64,
}

/// The outcome of running one claim over its full domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub status: ClaimStatus,
    pub bounds: String,
    pub instances: u64,
    pub violations: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition_tally: Option<Vec<ConditionTally>>,
    #[serde(skip)]
    pub wall: Duration,
}

/// All verdicts of one run plus the bounds they were computed under.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub bounds: Bounds,
    pub verdicts: Vec<Verdict>,
}

impl SuiteReport {
    /// True when any definitionally forced claim saw a violation.
    pub fn forced_violation(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == ClaimStatus::Forced && v.violations > 0)
    }
}

/// Counts + first witness under a totally ordered instance key.
struct Agg<K> {
    instances: u64,
    violations: u64,
    witness: Option<(K, WitnessRecord)>,
}

impl<K: Ord> Agg<K> {
    fn new() -> Self {
        Agg {
            instances: 0,
            violations: 0,
            witness: None,
        }
    }

    fn hit(&mut self) {
        self.instances += 1;
    }

    fn violation(&mut self, key: K, make: impl FnOnce() -> WitnessRecord) {
        self.violations += 1;
        if self.witness.as_ref().is_none_or(|(k, _)| key < *k) {
            self.witness = Some((key, make()));
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.instances += other.instances;
        self.violations += other.violations;
        self.witness = match (self.witness.take(), other.witness) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

fn empty_aggs<K: Ord>(len: usize) -> Vec<Agg<K>> {
    (0..len).map(|_| Agg::new()).collect()
}

fn merge_aggs<K: Ord>(a: Vec<Agg<K>>, b: Vec<Agg<K>>) -> Vec<Agg<K>> {
    a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
}

fn subset_witness(claim: &Claim, sp: &FiniteSpace, m: SubsetMask, failed: String) -> WitnessRecord {
    WitnessRecord {
        claim: claim.id.to_string(),
        failed,
        instance: InstanceDoc::SpaceSubset {
            space: sp.to_doc(),
            subset: sp.ground().labels_of(m),
        },
    }
}

fn verdicts_from_aggs<K: Ord>(
    claims: &[&'static Claim],
    aggs: Vec<Agg<K>>,
    bounds: &Bounds,
    wall: Duration,
) -> Vec<Verdict> {
    claims
        .iter()
        .zip(aggs)
        .map(|(claim, agg)| Verdict {
            id: claim.id.to_string(),
            status: claim.status,
            bounds: claim.bounds_label(bounds),
            instances: agg.instances,
            violations: agg.violations,
            witness: agg.witness.map(|(_, w)| w),
            condition_labels: None,
            condition_tally: None,
            wall,
        })
        .collect()
}

fn run_set_claims(claims: &[&'static Claim], bounds: &Bounds) -> Vec<Verdict> {
    let started = Instant::now();
    let mut total: Vec<Agg<(usize, usize, u32)>> = empty_aggs(claims.len());
    for n in 1..=bounds.max_space_points {
        let spaces = enumerate_spaces(n);
        let level = spaces
            .par_iter()
            .enumerate()
            .map(|(si, sp)| {
                let mut local: Vec<Agg<(usize, usize, u32)>> = empty_aggs(claims.len());
                for bits in 0..(1u32 << n) {
                    let m = SubsetMask::from_bits(bits);
                    for (ci, claim) in claims.iter().enumerate() {
                        match claim.body {
                            ClaimBody::SetImplies { hyp, concl } => {
                                if !hyp.holds(sp, m) {
                                    continue;
                                }
                                local[ci].hit();
                                if !concl.holds(sp, m) {
                                    local[ci].violation((n, si, bits), || {
                                        subset_witness(
                                            claim,
                                            sp,
                                            m,
                                            format!("conclusion {} fails", concl.describe()),
                                        )
                                    });
                                }
                            }
                            ClaimBody::SetEquiv { lhs, rhs } => {
                                local[ci].hit();
                                let l = lhs.holds(sp, m);
                                let r = rhs.holds(sp, m);
                                if l != r {
                                    local[ci].violation((n, si, bits), || {
                                        subset_witness(
                                            claim,
                                            sp,
                                            m,
                                            format!(
                                                "{} is {} while {} is {}",
                                                lhs.describe(),
                                                l,
                                                rhs.describe(),
                                                r
                                            ),
                                        )
                                    });
                                }
                            }
                            _ => unreachable!("claim grouped as a subset claim"),
                        }
                    }
                }
                local
            })
            .reduce(|| empty_aggs(claims.len()), merge_aggs);
        total = merge_aggs(total, level);
    }
    verdicts_from_aggs(claims, total, bounds, started.elapsed())
}

/// Per-claim tally of condition vectors, only used by equivalence claims.
struct SpaceAgg {
    agg: Agg<(usize, usize)>,
    tally: BTreeMap<String, u64>,
}

impl SpaceAgg {
    fn new() -> Self {
        SpaceAgg {
            agg: Agg::new(),
            tally: BTreeMap::new(),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.agg = self.agg.merge(other.agg);
        for (pattern, count) in other.tally {
            *self.tally.entry(pattern).or_insert(0) += count;
        }
        self
    }
}

fn run_space_claims(claims: &[&'static Claim], bounds: &Bounds) -> Vec<Verdict> {
    let started = Instant::now();
    let empty = || claims.iter().map(|_| SpaceAgg::new()).collect::<Vec<_>>();
    let merge = |a: Vec<SpaceAgg>, b: Vec<SpaceAgg>| {
        a.into_iter()
            .zip(b)
            .map(|(x, y)| x.merge(y))
            .collect::<Vec<_>>()
    };
    let mut total = empty();
    for n in 1..=bounds.max_space_points {
        let spaces = enumerate_spaces(n);
        let level = spaces
            .par_iter()
            .enumerate()
            .map(|(si, sp)| {
                let profile = SeparationProfile::compute(sp, bounds.reading);
                let mut local = empty();
                for (ci, claim) in claims.iter().enumerate() {
                    match claim.body {
                        ClaimBody::SpaceImplies { hyp, concl } => {
                            if !hyp.holds(&profile) {
                                continue;
                            }
                            local[ci].agg.hit();
                            if !concl.holds(&profile) {
                                local[ci].agg.violation((n, si), || WitnessRecord {
                                    claim: claim.id.to_string(),
                                    failed: format!("conclusion {} fails", concl.label()),
                                    instance: InstanceDoc::Space { space: sp.to_doc() },
                                });
                            }
                        }
                        ClaimBody::SpaceEquiv { conds } => {
                            local[ci].agg.hit();
                            let vals: Vec<bool> = conds.iter().map(|c| c.holds(&profile)).collect();
                            let pattern: String =
                                vals.iter().map(|&b| if b { 'T' } else { 'F' }).collect();
                            *local[ci].tally.entry(pattern.clone()).or_insert(0) += 1;
                            if vals.iter().any(|&b| b != vals[0]) {
                                local[ci].agg.violation((n, si), || WitnessRecord {
                                    claim: claim.id.to_string(),
                                    failed: format!("conditions split as {pattern}"),
                                    instance: InstanceDoc::Space { space: sp.to_doc() },
                                });
                            }
                        }
                        _ => unreachable!("claim grouped as a space claim"),
                    }
                }
                local
            })
            .reduce(empty, merge);
        total = merge(total, level);
    }
    let wall = started.elapsed();
    claims
        .iter()
        .zip(total)
        .map(|(claim, sa)| {
            let labels = match claim.body {
                ClaimBody::SpaceEquiv { conds } => Some(
                    conds
                        .iter()
                        .map(|c| c.label().to_string())
                        .collect::<Vec<_>>(),
                ),
                _ => None,
            };
            let tally = labels.as_ref().map(|_| {
                sa.tally
                    .into_iter()
                    .map(|(pattern, count)| ConditionTally { pattern, count })
                    .collect::<Vec<_>>()
            });
            Verdict {
                id: claim.id.to_string(),
                status: claim.status,
                bounds: claim.bounds_label(bounds),
                instances: sa.agg.instances,
                violations: sa.agg.violations,
                witness: sa.agg.witness.map(|(_, w)| w),
                condition_labels: labels,
                condition_tally: tally,
                wall,
            }
        })
        .collect()
}

fn table_from_index(nx: usize, ny: usize, index: u64) -> Vec<usize> {
    let mut rest = index;
    let mut table = vec![0usize; nx];
    for slot in table.iter_mut().rev() {
        *slot = (rest % ny as u64) as usize;
        rest /= ny as u64;
    }
    table
}

fn build_map(x: &Arc<FiniteSpace>, y: &Arc<FiniteSpace>, index: u64) -> SpaceMap {
    let table = table_from_index(x.size(), y.size(), index);
    SpaceMap::new(x.clone(), y.clone(), table).expect("table digits stay in range")
}

fn failed_map_concl(concl: &MapConcl) -> String {
    match concl {
        MapConcl::Flag(fl) => format!("conclusion {} fails", fl.name()),
        MapConcl::Criterion(cr) => format!("criterion {} fails", cr.name()),
        MapConcl::Domain(c) => format!("domain is not {}", c.label()),
        MapConcl::Codomain(c) => format!("codomain is not {}", c.label()),
    }
}

fn space_count_for(points: usize) -> Result<u64, SuiteError> {
    SPACE_COUNTS
        .get(points)
        .copied()
        .filter(|_| points <= MAX_ENUMERATION_POINTS)
        .ok_or(SuiteError::Budget {
            requested: points as u64,
            budget: MAX_ENUMERATION_POINTS as u64,
            unit: "points per space",
        })
}

fn run_map_claims(claims: &[&'static Claim], bounds: &Bounds) -> Result<Vec<Verdict>, SuiteError> {
    let started = Instant::now();
    let (nx, ny) = bounds.map_points;
    let tables = (ny as u64).pow(nx as u32);
    let total_tables = space_count_for(nx)?
        .saturating_mul(space_count_for(ny)?)
        .saturating_mul(tables);
    if total_tables > MAP_TABLE_BUDGET {
        return Err(SuiteError::Budget {
            requested: total_tables,
            budget: MAP_TABLE_BUDGET,
            unit: "map tables",
        });
    }
    let xs: Vec<Arc<FiniteSpace>> = enumerate_spaces(nx).into_iter().map(Arc::new).collect();
    let ys: Vec<Arc<FiniteSpace>> = enumerate_spaces(ny).into_iter().map(Arc::new).collect();
    let reading = bounds.reading;
    let xprofiles: Vec<SeparationProfile> = xs
        .par_iter()
        .map(|sp| SeparationProfile::compute(sp, reading))
        .collect();
    let yprofiles: Vec<SeparationProfile> = ys
        .par_iter()
        .map(|sp| SeparationProfile::compute(sp, reading))
        .collect();

    let aggs = (0..xs.len() * ys.len())
        .into_par_iter()
        .map(|pi| {
            let xi = pi / ys.len();
            let yi = pi % ys.len();
            let mut local: Vec<Agg<(usize, u64)>> = empty_aggs(claims.len());
            for ti in 0..tables {
                let f = build_map(&xs[xi], &ys[yi], ti);
                let class = MapClassification::classify(&f);
                for (ci, claim) in claims.iter().enumerate() {
                    match &claim.body {
                        ClaimBody::MapImplies {
                            flags,
                            domain,
                            codomain,
                            concl,
                        } => {
                            let hyp = flags.iter().all(|&fl| class.get(fl))
                                && domain.is_none_or(|c| c.holds(&xprofiles[xi]))
                                && codomain.is_none_or(|c| c.holds(&yprofiles[yi]));
                            if !hyp {
                                continue;
                            }
                            local[ci].hit();
                            let ok = match concl {
                                MapConcl::Flag(fl) => class.get(*fl),
                                MapConcl::Criterion(cr) => cr.holds(&f),
                                MapConcl::Domain(c) => c.holds(&xprofiles[xi]),
                                MapConcl::Codomain(c) => c.holds(&yprofiles[yi]),
                            };
                            if !ok {
                                local[ci].violation((pi, ti), || WitnessRecord {
                                    claim: claim.id.to_string(),
                                    failed: failed_map_concl(concl),
                                    instance: InstanceDoc::Map { map: f.to_doc() },
                                });
                            }
                        }
                        ClaimBody::MapEquiv { flag, criterion } => {
                            local[ci].hit();
                            let l = class.get(*flag);
                            let r = criterion.holds(&f);
                            if l != r {
                                local[ci].violation((pi, ti), || WitnessRecord {
                                    claim: claim.id.to_string(),
                                    failed: format!(
                                        "flag {} is {} while criterion {} is {}",
                                        flag.name(),
                                        l,
                                        criterion.name(),
                                        r
                                    ),
                                    instance: InstanceDoc::Map { map: f.to_doc() },
                                });
                            }
                        }
                        _ => unreachable!("claim grouped as a map claim"),
                    }
                }
            }
            local
        })
        .reduce(|| empty_aggs(claims.len()), merge_aggs);
    Ok(verdicts_from_aggs(claims, aggs, bounds, started.elapsed()))
}

fn classification_matrix(
    from: &[Arc<FiniteSpace>],
    to: &[Arc<FiniteSpace>],
    tables: u64,
) -> Vec<MapClassification> {
    let per_pair: Vec<Vec<MapClassification>> = (0..from.len() * to.len())
        .into_par_iter()
        .map(|pi| {
            let a = &from[pi / to.len()];
            let b = &to[pi % to.len()];
            (0..tables)
                .map(|ti| MapClassification::classify(&build_map(a, b, ti)))
                .collect()
        })
        .collect();
    per_pair.into_iter().flatten().collect()
}

fn run_pair_claims(claims: &[&'static Claim], bounds: &Bounds) -> Result<Vec<Verdict>, SuiteError> {
    let started = Instant::now();
    let (nx, ny, nz) = bounds.pair_points;
    let f_tables = (ny as u64).pow(nx as u32);
    let g_tables = (nz as u64).pow(ny as u32);
    let c_tables = (nz as u64).pow(nx as u32);
    let total_pairs = space_count_for(nx)?
        .saturating_mul(space_count_for(ny)?)
        .saturating_mul(space_count_for(nz)?)
        .saturating_mul(f_tables)
        .saturating_mul(g_tables);
    if total_pairs > PAIR_TABLE_BUDGET {
        return Err(SuiteError::Budget {
            requested: total_pairs,
            budget: PAIR_TABLE_BUDGET,
            unit: "map table pairs",
        });
    }
    let xs: Vec<Arc<FiniteSpace>> = enumerate_spaces(nx).into_iter().map(Arc::new).collect();
    let ys: Vec<Arc<FiniteSpace>> = enumerate_spaces(ny).into_iter().map(Arc::new).collect();
    let zs: Vec<Arc<FiniteSpace>> = enumerate_spaces(nz).into_iter().map(Arc::new).collect();
    let triples = xs.len() as u64 * ys.len() as u64 * zs.len() as u64;

    let cf = classification_matrix(&xs, &ys, f_tables);
    let cg = classification_matrix(&ys, &zs, g_tables);
    let cc = classification_matrix(&xs, &zs, c_tables);

    let mut compose_index = vec![0u64; (f_tables * g_tables) as usize];
    for fi in 0..f_tables {
        let ft = table_from_index(nx, ny, fi);
        for gi in 0..g_tables {
            let gt = table_from_index(ny, nz, gi);
            let mut ci = 0u64;
            for &fx in &ft {
                ci = ci * nz as u64 + gt[fx] as u64;
            }
            compose_index[(fi * g_tables + gi) as usize] = ci;
        }
    }

    let aggs = (0..(triples as usize))
        .into_par_iter()
        .map(|tri| {
            let xi = tri / (ys.len() * zs.len());
            let rest = tri % (ys.len() * zs.len());
            let yi = rest / zs.len();
            let zi = rest % zs.len();
            let base_f = (xi * ys.len() + yi) as u64 * f_tables;
            let base_g = (yi * zs.len() + zi) as u64 * g_tables;
            let base_c = (xi * zs.len() + zi) as u64 * c_tables;
            let mut local: Vec<Agg<(usize, u64, u64)>> = empty_aggs(claims.len());
            for fi in 0..f_tables {
                let fc = &cf[(base_f + fi) as usize];
                for gi in 0..g_tables {
                    let gc = &cg[(base_g + gi) as usize];
                    let comp =
                        &cc[(base_c + compose_index[(fi * g_tables + gi) as usize]) as usize];
                    for (ci, claim) in claims.iter().enumerate() {
                        let ClaimBody::PairImplies {
                            first,
                            second,
                            composite,
                            concl,
                        } = claim.body
                        else {
                            unreachable!("claim grouped as a pair claim")
                        };
                        let hyp = first.iter().all(|&fl| fc.get(fl))
                            && second.iter().all(|&fl| gc.get(fl))
                            && composite.iter().all(|&fl| comp.get(fl));
                        if !hyp {
                            continue;
                        }
                        local[ci].hit();
                        let (ok, failed) = match concl {
                            PairConcl::First(fl) => {
                                (fc.get(fl), format!("first map fails {}", fl.name()))
                            }
                            PairConcl::Second(fl) => {
                                (gc.get(fl), format!("second map fails {}", fl.name()))
                            }
                            PairConcl::Composite(fl) => {
                                (comp.get(fl), format!("composite fails {}", fl.name()))
                            }
                        };
                        if !ok {
                            local[ci].violation((tri, fi, gi), || WitnessRecord {
                                claim: claim.id.to_string(),
                                failed,
                                instance: InstanceDoc::MapPair {
                                    first: build_map(&xs[xi], &ys[yi], fi).to_doc(),
                                    second: build_map(&ys[yi], &zs[zi], gi).to_doc(),
                                },
                            });
                        }
                    }
                }
            }
            local
        })
        .reduce(|| empty_aggs(claims.len()), merge_aggs);
    Ok(verdicts_from_aggs(claims, aggs, bounds, started.elapsed()))
}

/// Runs the given claims over their domains and aggregates one report.
pub fn run_suite(claims: &[&'static Claim], bounds: &Bounds) -> Result<SuiteReport, SuiteError> {
    if bounds.max_space_points > MAX_ENUMERATION_POINTS {
        return Err(SuiteError::Budget {
            requested: bounds.max_space_points as u64,
            budget: MAX_ENUMERATION_POINTS as u64,
            unit: "points per space",
        });
    }
    let mut set_claims = Vec::new();
    let mut space_claims = Vec::new();
    let mut map_claims = Vec::new();
    let mut pair_claims = Vec::new();
    for &claim in claims {
        match claim.domain() {
            DomainKind::Subsets => set_claims.push(claim),
            DomainKind::Spaces => space_claims.push(claim),
            DomainKind::Maps => map_claims.push(claim),
            DomainKind::MapPairs => pair_claims.push(claim),
        }
    }

    let mut by_id: BTreeMap<&str, Verdict> = BTreeMap::new();
    let mut absorb = |vs: Vec<Verdict>| {
        for v in vs {
            let id = CATALOG
                .iter()
                .find(|c| c.id == v.id)
                .expect("verdicts come from the catalog")
                .id;
            by_id.insert(id, v);
        }
    };
    if !set_claims.is_empty() {
        absorb(run_set_claims(&set_claims, bounds));
    }
    if !space_claims.is_empty() {
        absorb(run_space_claims(&space_claims, bounds));
    }
    if !map_claims.is_empty() {
        absorb(run_map_claims(&map_claims, bounds)?);
    }
    if !pair_claims.is_empty() {
        absorb(run_pair_claims(&pair_claims, bounds)?);
    }

    let verdicts = claims
        .iter()
        .map(|c| by_id.remove(c.id).expect("every claim ran"))
        .collect();
    Ok(SuiteReport {
        bounds: *bounds,
        verdicts,
    })
}

/// Runs a single claim; the library-level counterpart of one report row.
pub fn run_claim(claim: &'static Claim, bounds: &Bounds) -> Result<Verdict, SuiteError> {
    let report = run_suite(&[claim], bounds)?;
    Ok(report.verdicts.into_iter().next().expect("one claim ran"))
}

/// Rough work sizes implied by bounds, for telling the user what a raised
/// bound costs before starting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CostEstimate {
    pub subset_instances: u64,
    pub space_instances: u64,
    pub map_tables: u64,
    pub pair_tables: u64,
}

impl CostEstimate {
    pub fn for_claims(claims: &[&'static Claim], bounds: &Bounds) -> CostEstimate {
        let spaces_upto = |n: usize| -> u64 {
            (1..=n.min(MAX_ENUMERATION_POINTS))
                .map(|k| SPACE_COUNTS[k])
                .sum()
        };
        let subsets_upto = |n: usize| -> u64 {
            (1..=n.min(MAX_ENUMERATION_POINTS))
                .map(|k| SPACE_COUNTS[k] << k)
                .sum()
        };
        let mut est = CostEstimate {
            subset_instances: 0,
            space_instances: 0,
            map_tables: 0,
            pair_tables: 0,
        };
        for claim in claims {
            match claim.domain() {
                DomainKind::Subsets => {
                    est.subset_instances = subsets_upto(bounds.max_space_points);
                }
                DomainKind::Spaces => {
                    est.space_instances = spaces_upto(bounds.max_space_points);
                }
                DomainKind::Maps => {
                    let (nx, ny) = bounds.map_points;
                    est.map_tables = SPACE_COUNTS.get(nx).copied().unwrap_or(u64::MAX)
                        * SPACE_COUNTS.get(ny).copied().unwrap_or(u64::MAX)
                        * (ny as u64).pow(nx as u32);
                }
                DomainKind::MapPairs => {
                    let (nx, ny, nz) = bounds.pair_points;
                    est.pair_tables = SPACE_COUNTS.get(nx).copied().unwrap_or(u64::MAX)
                        * SPACE_COUNTS.get(ny).copied().unwrap_or(u64::MAX)
                        * SPACE_COUNTS.get(nz).copied().unwrap_or(u64::MAX)
                        * (ny as u64).pow(nx as u32)
                        * (nz as u64).pow(ny as u32);
                }
            }
        }
        est
    }
}

impl fmt::Display for CostEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} subset instances, {} spaces, {} map tables, {} map table pairs",
            self.subset_instances, self.space_instances, self.map_tables, self.pair_tables
        )
    }
}

/// Why replaying a witness failed before it could be evaluated.
#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("witness instance does not fit the claim's quantifier domain")]
    DomainMismatch,
    #[error(transparent)]
    Space(#[from] SpaceParseError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Re-evaluates an archived witness from its serialized instance alone.
/// Returns true when the violation reproduces.
pub fn replay(witness: &WitnessRecord, reading: Def21Reading) -> Result<bool, ReplayError> {
    let claim = find_claim(&witness.claim)
        .ok_or_else(|| ReplayError::UnknownClaim(witness.claim.clone()))?;
    match (&claim.body, &witness.instance) {
        (ClaimBody::SetImplies { hyp, concl }, InstanceDoc::SpaceSubset { space, subset }) => {
            let sp = FiniteSpace::from_doc(space)?;
            let m = sp.ground().mask_of(subset)?;
            Ok(hyp.holds(&sp, m) && !concl.holds(&sp, m))
        }
        (ClaimBody::SetEquiv { lhs, rhs }, InstanceDoc::SpaceSubset { space, subset }) => {
            let sp = FiniteSpace::from_doc(space)?;
            let m = sp.ground().mask_of(subset)?;
            Ok(lhs.holds(&sp, m) != rhs.holds(&sp, m))
        }
        (ClaimBody::SpaceImplies { hyp, concl }, InstanceDoc::Space { space }) => {
            let sp = FiniteSpace::from_doc(space)?;
            let profile = SeparationProfile::compute(&sp, reading);
            Ok(hyp.holds(&profile) && !concl.holds(&profile))
        }
        (ClaimBody::SpaceEquiv { conds }, InstanceDoc::Space { space }) => {
            let sp = FiniteSpace::from_doc(space)?;
            let profile = SeparationProfile::compute(&sp, reading);
            let vals: Vec<bool> = conds.iter().map(|c| c.holds(&profile)).collect();
            Ok(vals.iter().any(|&b| b != vals[0]))
        }
        (
            ClaimBody::MapImplies {
                flags,
                domain,
                codomain,
                concl,
            },
            InstanceDoc::Map { map },
        ) => {
            let f = SpaceMap::from_doc(map)?;
            let class = MapClassification::classify(&f);
            let dom_profile = SeparationProfile::compute(f.domain(), reading);
            let cod_profile = SeparationProfile::compute(f.codomain(), reading);
            let hyp = flags.iter().all(|&fl| class.get(fl))
                && domain.is_none_or(|c| c.holds(&dom_profile))
                && codomain.is_none_or(|c| c.holds(&cod_profile));
            let ok = match concl {
                MapConcl::Flag(fl) => class.get(*fl),
                MapConcl::Criterion(cr) => cr.holds(&f),
                MapConcl::Domain(c) => c.holds(&dom_profile),
                MapConcl::Codomain(c) => c.holds(&cod_profile),
            };
            Ok(hyp && !ok)
        }
        (ClaimBody::MapEquiv { flag, criterion }, InstanceDoc::Map { map }) => {
            let f = SpaceMap::from_doc(map)?;
            let class = MapClassification::classify(&f);
            Ok(class.get(*flag) != criterion.holds(&f))
        }
        (
            ClaimBody::PairImplies {
                first,
                second,
                composite,
                concl,
            },
            InstanceDoc::MapPair {
                first: fdoc,
                second: gdoc,
            },
        ) => {
            let f = SpaceMap::from_doc(fdoc)?;
            let g = SpaceMap::from_doc(gdoc)?;
            let comp = SpaceMap::compose(&f, &g)?;
            let fc = MapClassification::classify(&f);
            let gc = MapClassification::classify(&g);
            let cc = MapClassification::classify(&comp);
            let hyp = first.iter().all(|&fl| fc.get(fl))
                && second.iter().all(|&fl| gc.get(fl))
                && composite.iter().all(|&fl| cc.get(fl));
            let ok = match concl {
                PairConcl::First(fl) => fc.get(*fl),
                PairConcl::Second(fl) => gc.get(*fl),
                PairConcl::Composite(fl) => cc.get(*fl),
            };
            Ok(hyp && !ok)
        }
        _ => Err(ReplayError::DomainMismatch),
    }
}

/// A conjunction the miner searches for: a property that holds while a
/// stronger one fails, demonstrating a one-way implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MineTarget {
    GNormalNotNormal,
    ScstarNormalNotGNormal,
    GscstarClosedNotScstarClosed,
    ScstarGscstarContinuousNotScstarIrresolute,
    ScstarClosedNotClosed,
    GClosedNotClosed,
}

enum MineKind {
    Space,
    Subset,
    Map,
}

impl MineTarget {
    pub const ALL: [MineTarget; 6] = [
        MineTarget::GNormalNotNormal,
        MineTarget::ScstarNormalNotGNormal,
        MineTarget::GscstarClosedNotScstarClosed,
        MineTarget::ScstarGscstarContinuousNotScstarIrresolute,
        MineTarget::ScstarClosedNotClosed,
        MineTarget::GClosedNotClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MineTarget::GNormalNotNormal => "g-normal-not-normal",
            MineTarget::ScstarNormalNotGNormal => "scstar-normal-not-g-normal",
            MineTarget::GscstarClosedNotScstarClosed => "gscstar-closed-not-scstar-closed",
            MineTarget::ScstarGscstarContinuousNotScstarIrresolute => {
                "scstar-gscstar-continuous-not-scstar-irresolute"
            }
            MineTarget::ScstarClosedNotClosed => "scstar-closed-not-closed",
            MineTarget::GClosedNotClosed => "g-closed-not-closed",
        }
    }

    fn kind(self) -> MineKind {
        match self {
            MineTarget::GNormalNotNormal | MineTarget::ScstarNormalNotGNormal => MineKind::Space,
            MineTarget::ScstarGscstarContinuousNotScstarIrresolute => MineKind::Map,
            _ => MineKind::Subset,
        }
    }

    fn subset_holds(self, sp: &FiniteSpace, m: SubsetMask) -> bool {
        match self {
            MineTarget::GscstarClosedNotScstarClosed => {
                SetClass::GscstarClosed.holds(sp, m) && !SetClass::ScstarClosed.holds(sp, m)
            }
            MineTarget::ScstarClosedNotClosed => {
                SetClass::ScstarClosed.holds(sp, m) && !sp.is_closed(m)
            }
            MineTarget::GClosedNotClosed => SetClass::GClosed.holds(sp, m) && !sp.is_closed(m),
            _ => unreachable!("not a subset target"),
        }
    }

    fn space_holds(self, sp: &FiniteSpace, reading: Def21Reading) -> bool {
        match self {
            MineTarget::GNormalNotNormal => {
                if reading == Def21Reading::Disjoint && is_normal_fast(sp) {
                    return false;
                }
                !is_normal(sp, reading) && is_g_normal(sp, reading)
            }
            MineTarget::ScstarNormalNotGNormal => {
                !is_g_normal(sp, reading) && is_scstar_normal(sp, reading)
            }
            _ => unreachable!("not a space target"),
        }
    }
}

impl fmt::Display for MineTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MineTarget {
    type Err = MineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MineTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| MineError::UnknownTarget(s.to_string()))
    }
}

/// Where the miner looks.
#[derive(Debug, Clone)]
pub enum MineScope {
    /// One given space.
    Space(Arc<FiniteSpace>),
    /// Every enumerated space up to a point count.
    Spaces { max_points: usize },
    /// Every table between every pair of enumerated spaces of these sizes.
    Maps {
        domain_points: usize,
        codomain_points: usize,
    },
}

impl MineScope {
    fn label(&self) -> String {
        match self {
            MineScope::Space(_) => "one space".to_string(),
            MineScope::Spaces { max_points } => {
                format!("spaces with up to {max_points} points")
            }
            MineScope::Maps {
                domain_points,
                codomain_points,
            } => format!("maps {domain_points}x{codomain_points}"),
        }
    }
}

/// One mined instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MineFinding {
    pub target: String,
    pub instance: InstanceDoc,
}

/// Everything one mining run found, in canonical order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MineReport {
    pub target: String,
    pub scope: String,
    pub findings: Vec<MineFinding>,
    pub truncated: bool,
}

/// Why a mining run could not start.
#[derive(Debug, Error)]
pub enum MineError {
    #[error("unknown mine target `{0}`")]
    UnknownTarget(String),
    #[error("target `{target}` quantifies over {needs}, so this scope does not fit")]
    ScopeMismatch { target: String, needs: &'static str },
    #[error("bounds ask for {requested} {unit}, over the budget of {budget}")]
    Budget {
        requested: u64,
        budget: u64,
        unit: &'static str,
    },
}

fn subset_findings(target: MineTarget, sp: &FiniteSpace) -> Vec<MineFinding> {
    (0..(1u32 << sp.size()))
        .map(SubsetMask::from_bits)
        .filter(|&m| target.subset_holds(sp, m))
        .map(|m| MineFinding {
            target: target.name().to_string(),
            instance: InstanceDoc::SpaceSubset {
                space: sp.to_doc(),
                subset: sp.ground().labels_of(m),
            },
        })
        .collect()
}

/// Streams every space up to `max_points` through `per_space`, keeping hits
/// in walk order without ever materializing the space list. With a limit the
/// sweep holds at most that many hit spaces in memory and skips point counts
/// it no longer needs.
fn mine_over_spaces(
    max_points: usize,
    limit: Option<usize>,
    per_space: impl Fn(&FiniteSpace) -> Vec<MineFinding> + Sync,
) -> Vec<MineFinding> {
    let mut out: Vec<MineFinding> = Vec::new();
    for n in 1..=max_points {
        if limit.is_some_and(|cap| out.len() >= cap) {
            break;
        }
        let found: Mutex<BTreeMap<usize, Vec<MineFinding>>> = Mutex::new(BTreeMap::new());
        par_for_each_space(n, |idx, sp| {
            let hits = per_space(sp);
            if hits.is_empty() {
                return;
            }
            let mut map = found.lock().expect("miner mutex poisoned");
            map.insert(idx, hits);
            if let Some(cap) = limit {
                while map.len() > cap {
                    map.pop_last();
                }
            }
        });
        let level = found.into_inner().expect("miner mutex poisoned");
        out.extend(level.into_values().flatten());
    }
    out
}

/// Searches a scope for instances realizing the target, in canonical order.
/// An empty result is an answer, not an error.
pub fn mine(
    target: MineTarget,
    scope: &MineScope,
    reading: Def21Reading,
    limit: Option<usize>,
) -> Result<MineReport, MineError> {
    if let MineScope::Spaces { max_points } = scope {
        if *max_points > MAX_ENUMERATION_POINTS {
            return Err(MineError::Budget {
                requested: *max_points as u64,
                budget: MAX_ENUMERATION_POINTS as u64,
                unit: "points per space",
            });
        }
    }
    let mut findings = match (target.kind(), scope) {
        (MineKind::Subset, MineScope::Space(sp)) => subset_findings(target, sp),
        (MineKind::Subset, MineScope::Spaces { max_points }) => {
            mine_over_spaces(*max_points, limit, |sp| subset_findings(target, sp))
        }
        (MineKind::Space, MineScope::Space(sp)) => {
            if target.space_holds(sp, reading) {
                vec![MineFinding {
                    target: target.name().to_string(),
                    instance: InstanceDoc::Space { space: sp.to_doc() },
                }]
            } else {
                Vec::new()
            }
        }
        (MineKind::Space, MineScope::Spaces { max_points }) => {
            mine_over_spaces(*max_points, limit, |sp| {
                if target.space_holds(sp, reading) {
                    vec![MineFinding {
                        target: target.name().to_string(),
                        instance: InstanceDoc::Space { space: sp.to_doc() },
                    }]
                } else {
                    Vec::new()
                }
            })
        }
        (
            MineKind::Map,
            MineScope::Maps {
                domain_points,
                codomain_points,
            },
        ) => {
            let nx = *domain_points;
            let ny = *codomain_points;
            let tables = (ny as u64).pow(nx as u32);
            let total = match (SPACE_COUNTS.get(nx), SPACE_COUNTS.get(ny)) {
                (Some(&cx), Some(&cy))
                    if nx <= MAX_ENUMERATION_POINTS && ny <= MAX_ENUMERATION_POINTS =>
                {
                    cx.saturating_mul(cy).saturating_mul(tables)
                }
                _ => u64::MAX,
            };
            if total > MAP_TABLE_BUDGET {
                return Err(MineError::Budget {
                    requested: total,
                    budget: MAP_TABLE_BUDGET,
                    unit: "map tables",
                });
            }
            let xs: Vec<Arc<FiniteSpace>> =
                enumerate_spaces(nx).into_iter().map(Arc::new).collect();
            let ys: Vec<Arc<FiniteSpace>> =
                enumerate_spaces(ny).into_iter().map(Arc::new).collect();
            let per_pair: Vec<Vec<MineFinding>> = (0..xs.len() * ys.len())
                .into_par_iter()
                .map(|pi| {
                    let x = &xs[pi / ys.len()];
                    let y = &ys[pi % ys.len()];
                    let mut out = Vec::new();
                    for ti in 0..tables {
                        let f = build_map(x, y, ti);
                        let class = MapClassification::classify(&f);
                        if class.scstar_gscstar_continuous && !class.scstar_irresolute {
                            out.push(MineFinding {
                                target: target.name().to_string(),
                                instance: InstanceDoc::Map { map: f.to_doc() },
                            });
                        }
                    }
                    out
                })
                .collect();
            per_pair.into_iter().flatten().collect()
        }
        (MineKind::Map, _) => {
            return Err(MineError::ScopeMismatch {
                target: target.name().to_string(),
                needs: "maps",
            })
        }
        (_, MineScope::Maps { .. }) => {
            return Err(MineError::ScopeMismatch {
                target: target.name().to_string(),
                needs: "spaces or subsets",
            })
        }
    };
    let mut truncated = false;
    if let Some(cap) = limit {
        if findings.len() > cap {
            findings.truncate(cap);
            truncated = true;
        }
    }
    Ok(MineReport {
        target: target.name().to_string(),
        scope: scope.label(),
        findings,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    fn ids(claims: &[&'static Claim]) -> Vec<&'static str> {
        claims.iter().map(|c| c.id).collect()
    }

    fn verdict_for<'r>(report: &'r SuiteReport, id: &str) -> &'r Verdict {
        report
            .verdicts
            .iter()
            .find(|v| v.id == id)
            .unwrap_or_else(|| panic!("verdict for {id}"))
    }

    #[test]
    fn catalog_has_distinct_ids_and_eleven_forced_entries() {
        assert_eq!(CATALOG.len(), 41);
        let mut seen = std::collections::BTreeSet::new();
        for claim in CATALOG {
            assert!(seen.insert(claim.id), "duplicate id {}", claim.id);
        }
        let forced = ids(&suite_claims("forced").unwrap());
        assert_eq!(
            forced,
            [
                "D1.1a", "D1.1b", "D1.1c", "R1.4a", "R1.4b", "R1.4c", "R1.4e", "R2.2a", "R4.9",
                "T4.10", "C5.9f"
            ]
        );
        assert_eq!(suite_claims("stated").unwrap().len(), 30);
        assert_eq!(suite_claims("all").unwrap().len(), 41);
        assert!(find_claim("t2.4").is_some());
        assert!(find_claim("T9.9").is_none());
    }

    #[test]
    fn suite_selector_filters_and_orders_by_catalog() {
        let picked = suite_claims("T2.4,R1.4a").unwrap();
        assert_eq!(ids(&picked), ["R1.4a", "T2.4"]);
        assert_eq!(ids(&suite_claims("t24").unwrap()), ["T2.4"]);
        assert_eq!(ids(&suite_claims("t51").unwrap()), ["T5.1"]);
        assert!(suite_claims("").unwrap().is_empty());
        let err = suite_claims("T2.4,bogus").unwrap_err();
        assert!(err.to_string().contains("bogus"));
    }

    #[test]
    fn subset_claim_tallies_over_four_point_spaces() {
        let claims = suite_claims("D1.1a,D1.1b,D1.1c,R1.4a,R1.4b,R1.4c,R1.4d,R1.4e,L5.3").unwrap();
        let report = run_suite(&claims, &Bounds::default()).unwrap();
        let expect = [
            ("D1.1a", 1378),
            ("D1.1b", 1720),
            ("D1.1c", 2482),
            ("R1.4a", 2482),
            ("R1.4b", 5930),
            ("R1.4c", 5930),
            ("R1.4d", 5930),
            ("R1.4e", 2482),
            ("L5.3", 5930),
        ];
        for (id, instances) in expect {
            let v = verdict_for(&report, id);
            assert_eq!(v.instances, instances, "{id}");
            assert_eq!(v.violations, 0, "{id}");
            assert!(v.witness.is_none(), "{id}");
        }
        assert!(!report.forced_violation());
    }

    #[test]
    fn gscstar_closed_sets_need_not_be_g_closed() {
        let claims = suite_claims("R1.4f").unwrap();
        let report = run_suite(&claims, &Bounds::default()).unwrap();
        let v = verdict_for(&report, "R1.4f");
        assert_eq!(v.instances, 5930);
        assert_eq!(v.violations, 2202);
        let witness = v.witness.as_ref().unwrap();
        assert_eq!(witness.failed, "conclusion g-closed fails");
        let InstanceDoc::SpaceSubset { space, subset } = &witness.instance else {
            panic!("subset witness expected");
        };
        assert_eq!(space.points, ["a", "b"]);
        assert_eq!(
            space.opens,
            vec![
                vec![],
                vec!["a".to_string()],
                vec!["a".to_string(), "b".to_string()]
            ]
        );
        assert_eq!(subset, &["a".to_string()]);
        assert!(replay(witness, Def21Reading::Disjoint).unwrap());
        assert!(!report.forced_violation());
    }

    #[test]
    fn normality_ladder_and_equivalence_tallies() {
        let claims = suite_claims("R2.2a,R2.2b,T2.4,T5.1").unwrap();
        let report = run_suite(&claims, &Bounds::default()).unwrap();
        let r22a = verdict_for(&report, "R2.2a");
        assert_eq!((r22a.instances, r22a.violations), (286, 0));
        let r22b = verdict_for(&report, "R2.2b");
        assert_eq!((r22b.instances, r22b.violations), (286, 0));

        let t24 = verdict_for(&report, "T2.4");
        assert_eq!((t24.instances, t24.violations), (389, 0));
        assert_eq!(
            t24.condition_labels.as_deref().unwrap(),
            [
                "scstar-normal",
                "binary-cover-shrinks",
                "closed-open-interpolation"
            ]
        );
        assert_eq!(
            t24.condition_tally.as_deref().unwrap(),
            [ConditionTally {
                pattern: "TTT".to_string(),
                count: 389
            }]
        );

        let t51 = verdict_for(&report, "T5.1");
        assert_eq!((t51.instances, t51.violations), (389, 0));
        assert_eq!(
            t51.condition_labels.as_deref().unwrap(),
            SeparationEquivalents::LABELS
        );
        assert_eq!(
            t51.condition_tally.as_deref().unwrap(),
            [ConditionTally {
                pattern: "TTTTTTT".to_string(),
                count: 389
            }]
        );
    }

    #[test]
    fn map_claim_hypothesis_counts_over_three_point_spaces() {
        let claims = suite_claims("T5.2,T4.13,C4.12,T4.8").unwrap();
        let report = run_suite(&claims, &Bounds::default()).unwrap();
        let expect = [
            ("T4.8", 9867),
            ("C4.12", 5688),
            ("T4.13", 1152),
            ("T5.2", 6),
        ];
        for (id, instances) in expect {
            let v = verdict_for(&report, id);
            assert_eq!(v.instances, instances, "{id}");
            assert_eq!(v.violations, 0, "{id}");
            assert_eq!(v.bounds, "maps 3x3", "{id}");
        }
    }

    #[test]
    fn pair_claims_at_two_points_count_surjections() {
        let bounds = Bounds {
            max_space_points: 2,
            map_points: (2, 2),
            pair_points: (2, 2, 2),
            ..Bounds::default()
        };
        let claims = suite_claims("T4.5.2,T4.6,T4.10").unwrap();
        let report = run_suite(&claims, &bounds).unwrap();
        let t452 = verdict_for(&report, "T4.5.2");
        assert_eq!((t452.instances, t452.violations), (1024, 0));
        assert_eq!(t452.bounds, "map pairs 2x2x2");
        let t46 = verdict_for(&report, "T4.6");
        assert_eq!((t46.instances, t46.violations), (512, 0));
        let t410 = verdict_for(&report, "T4.10");
        assert_eq!((t410.instances, t410.violations), (64, 0));
        assert_eq!(t410.bounds, "maps 2x2");
    }

    #[test]
    fn empty_suite_reports_nothing_and_round_trips() {
        let report = run_suite(&[], &Bounds::default()).unwrap();
        assert!(report.verdicts.is_empty());
        assert!(!report.forced_violation());
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
        assert_eq!(back, report);
    }

    #[test]
    fn report_with_witness_round_trips_byte_for_byte() {
        let claims = suite_claims("R1.4f").unwrap();
        let bounds = Bounds {
            max_space_points: 2,
            ..Bounds::default()
        };
        let report = run_suite(&claims, &bounds).unwrap();
        assert!(verdict_for(&report, "R1.4f").witness.is_some());
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
        assert_eq!(back.verdicts[0].witness, report.verdicts[0].witness);
    }

    #[test]
    fn cost_estimate_matches_default_domain_sizes() {
        let all = suite_claims("all").unwrap();
        let est = CostEstimate::for_claims(&all, &Bounds::default());
        assert_eq!(est.subset_instances, 5930);
        assert_eq!(est.space_instances, 389);
        assert_eq!(est.map_tables, 22707);
        assert_eq!(est.pair_tables, 17_779_581);
        assert!(est.to_string().contains("22707 map tables"));
    }

    #[test]
    fn budget_guard_refuses_oversized_bounds() {
        let claims = suite_claims("T3.3").unwrap();
        let bounds = Bounds {
            map_points: (5, 5),
            ..Bounds::default()
        };
        let err = run_suite(&claims, &bounds).unwrap_err();
        assert!(matches!(err, SuiteError::Budget { .. }));
        let claims = suite_claims("R1.4a").unwrap();
        let bounds = Bounds {
            max_space_points: 9,
            ..Bounds::default()
        };
        assert!(matches!(
            run_suite(&claims, &bounds),
            Err(SuiteError::Budget { .. })
        ));
    }

    #[test]
    fn replay_rejects_mismatched_instance_kinds() {
        let witness = WitnessRecord {
            claim: "R1.4f".to_string(),
            failed: "conclusion g-closed fails".to_string(),
            instance: InstanceDoc::Space {
                space: testdata::sierpinski().to_doc(),
            },
        };
        assert!(matches!(
            replay(&witness, Def21Reading::Disjoint),
            Err(ReplayError::DomainMismatch)
        ));
        let witness = WitnessRecord {
            claim: "nope".to_string(),
            failed: String::new(),
            instance: InstanceDoc::Space {
                space: testdata::sierpinski().to_doc(),
            },
        };
        assert!(matches!(
            replay(&witness, Def21Reading::Disjoint),
            Err(ReplayError::UnknownClaim(_))
        ));
    }

    #[test]
    fn mining_sample_space_for_starred_but_not_closed_sets() {
        let sp = Arc::new(testdata::ex15());
        let report = mine(
            MineTarget::ScstarClosedNotClosed,
            &MineScope::Space(sp.clone()),
            Def21Reading::Disjoint,
            None,
        )
        .unwrap();
        assert_eq!(report.findings.len(), 11);
        let InstanceDoc::SpaceSubset { subset, .. } = &report.findings[0].instance else {
            panic!("subset finding expected");
        };
        assert_eq!(subset, &["r".to_string()]);
        assert!(!report.truncated);

        let report = mine(
            MineTarget::GClosedNotClosed,
            &MineScope::Space(sp),
            Def21Reading::Disjoint,
            None,
        )
        .unwrap();
        let subsets: Vec<&Vec<String>> = report
            .findings
            .iter()
            .map(|f| match &f.instance {
                InstanceDoc::SpaceSubset { subset, .. } => subset,
                other => panic!("subset finding expected, got {other:?}"),
            })
            .collect();
        assert_eq!(
            subsets,
            [
                &vec!["q".to_string(), "r".to_string(), "s".to_string()],
                &vec!["q".to_string(), "s".to_string(), "t".to_string()],
            ]
        );
    }

    #[test]
    fn mining_limit_truncates_and_reports_it() {
        let sp = Arc::new(testdata::ex15());
        let report = mine(
            MineTarget::ScstarClosedNotClosed,
            &MineScope::Space(sp),
            Def21Reading::Disjoint,
            Some(3),
        )
        .unwrap();
        assert_eq!(report.findings.len(), 3);
        assert!(report.truncated);
    }

    #[test]
    fn mining_scstar_normal_spaces_that_are_not_g_normal() {
        let report = mine(
            MineTarget::ScstarNormalNotGNormal,
            &MineScope::Spaces { max_points: 4 },
            Def21Reading::Disjoint,
            None,
        )
        .unwrap();
        assert_eq!(report.findings.len(), 103);
        let InstanceDoc::Space { space } = &report.findings[0].instance else {
            panic!("space finding expected");
        };
        assert_eq!(space.points, ["a", "b", "c"]);
        assert_eq!(
            space.opens,
            vec![
                vec![],
                vec!["a".to_string()],
                vec!["a".to_string(), "b".to_string()],
                vec!["a".to_string(), "c".to_string()],
                vec!["a".to_string(), "b".to_string(), "c".to_string()],
            ]
        );
    }

    #[test]
    fn mining_finds_no_g_normal_space_that_is_not_normal() {
        let report = mine(
            MineTarget::GNormalNotNormal,
            &MineScope::Spaces { max_points: 4 },
            Def21Reading::Disjoint,
            None,
        )
        .unwrap();
        assert!(report.findings.is_empty());
        assert!(!report.truncated);
    }

    #[test]
    fn mining_collapse_targets_come_back_empty() {
        let report = mine(
            MineTarget::GscstarClosedNotScstarClosed,
            &MineScope::Spaces { max_points: 3 },
            Def21Reading::Disjoint,
            None,
        )
        .unwrap();
        assert!(report.findings.is_empty());

        let report = mine(
            MineTarget::ScstarGscstarContinuousNotScstarIrresolute,
            &MineScope::Maps {
                domain_points: 2,
                codomain_points: 2,
            },
            Def21Reading::Disjoint,
            None,
        )
        .unwrap();
        assert!(report.findings.is_empty());
    }

    #[test]
    fn mining_scope_mismatches_are_rejected() {
        let err = mine(
            MineTarget::ScstarClosedNotClosed,
            &MineScope::Maps {
                domain_points: 2,
                codomain_points: 2,
            },
            Def21Reading::Disjoint,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, MineError::ScopeMismatch { .. }));
        let err = mine(
            MineTarget::ScstarGscstarContinuousNotScstarIrresolute,
            &MineScope::Spaces { max_points: 2 },
            Def21Reading::Disjoint,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, MineError::ScopeMismatch { .. }));
        assert!("scstar-closed-not-closed".parse::<MineTarget>().is_ok());
        assert!("nonsense".parse::<MineTarget>().is_err());
    }
}
