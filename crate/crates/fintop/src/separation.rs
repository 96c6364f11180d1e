//! Separation properties built on the set classes.
//!
//! Each normality variant asks that every pair of disjoint closed sets be
//! covered by two members of some family, one around each closed set. The
//! family varies: open sets for plain normality, g-open sets for the
//! generalized form, starred-open sets for the starred form.
//!
//! The separating pair itself can be read two ways, so every predicate takes
//! a [`Def21Reading`]. The default requires the two family members to be
//! disjoint. The lenient reading drops that requirement, which makes every
//! variant true in every space because the whole ground set always contains
//! both closed sets; it is kept selectable so the degeneracy can be
//! demonstrated rather than asserted.

use serde::{Deserialize, Serialize};

use crate::space::{FiniteSpace, SubsetMask};

/// How to read the separating pair in a normality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Def21Reading {
    /// The two family members must be disjoint.
    #[default]
    Disjoint,
    /// Containment only; degenerate, every space passes every variant.
    Lenient,
}

fn masks(sp: &FiniteSpace) -> impl Iterator<Item = SubsetMask> {
    (0..(1u32 << sp.size())).map(SubsetMask::from_bits)
}

/// Whether every pair of disjoint closed sets is separated by members of the
/// family described by `member`.
pub fn separates_disjoint_closed_pairs(
    sp: &FiniteSpace,
    member: impl Fn(SubsetMask) -> bool,
    reading: Def21Reading,
) -> bool {
    let closeds = sp.closeds();
    for &a in &closeds {
        for &b in &closeds {
            if !a.intersect(b).is_empty() {
                continue;
            }
            let mut found = false;
            'search: for u in masks(sp) {
                if !member(u) || !a.is_subset_of(u) {
                    continue;
                }
                for v in masks(sp) {
                    if !member(v) || !b.is_subset_of(v) {
                        continue;
                    }
                    if reading == Def21Reading::Lenient || u.intersect(v).is_empty() {
                        found = true;
                        break 'search;
                    }
                }
            }
            if !found {
                return false;
            }
        }
    }
    true
}

pub fn is_normal(sp: &FiniteSpace, reading: Def21Reading) -> bool {
    separates_disjoint_closed_pairs(sp, |m| sp.is_open(m), reading)
}

pub fn is_g_normal(sp: &FiniteSpace, reading: Def21Reading) -> bool {
    let a = sp.analysis();
    separates_disjoint_closed_pairs(sp, |m| a.g_open.contains(m), reading)
}

pub fn is_scstar_normal(sp: &FiniteSpace, reading: Def21Reading) -> bool {
    let a = sp.analysis();
    separates_disjoint_closed_pairs(sp, |m| a.scstar_open.contains(m), reading)
}

/// Whether every two-set open cover shrinks to a starred-closed cover with
/// one piece inside each open.
pub fn binary_cover_shrinks(sp: &FiniteSpace) -> bool {
    let an = sp.analysis();
    let full = sp.full();
    for &u in sp.opens() {
        for &v in sp.opens() {
            if u.union(v) != full {
                continue;
            }
            let mut found = false;
            'search: for a in masks(sp) {
                if !an.scstar_closed.contains(a) || !a.is_subset_of(u) {
                    continue;
                }
                for b in masks(sp) {
                    if an.scstar_closed.contains(b) && b.is_subset_of(v) && a.union(b) == full {
                        found = true;
                        break 'search;
                    }
                }
            }
            if !found {
                return false;
            }
        }
    }
    true
}

/// Whether every closed set inside an open set passes through a starred-open
/// set whose starred closure stays inside the open set.
pub fn closed_open_interpolation(sp: &FiniteSpace) -> bool {
    let an = sp.analysis();
    for h in masks(sp) {
        if !sp.is_closed(h) {
            continue;
        }
        for &k in sp.opens() {
            if !h.is_subset_of(k) {
                continue;
            }
            let found = masks(sp).any(|u| {
                an.scstar_open.contains(u)
                    && h.is_subset_of(u)
                    && SubsetMask::from_bits(an.sccl_t[u.bits() as usize]).is_subset_of(k)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// The seven conditions that are claimed pairwise equivalent for every
/// space, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationEquivalents {
    /// Disjoint closed pairs separate by disjoint starred-open sets.
    pub starred_separation: bool,
    /// Disjoint closed pairs separate by disjoint gSC*-open sets.
    pub g_starred_separation: bool,
    /// Closed set inside an open set: a gSC*-open set takes the closure of
    /// the first inside, with starred closure still inside the second.
    pub closed_in_open_via_g_starred: bool,
    /// Closed set inside a g-open set: a starred-open set contains it with
    /// starred closure inside the interior of the g-open set.
    pub closed_in_g_open_via_starred: bool,
    /// Same as above with a gSC*-open middle set.
    pub closed_in_g_open_via_g_starred: bool,
    /// g-closed set inside an open set: a starred-open set takes its closure
    /// inside, with starred closure still inside the open set.
    pub g_closed_in_open_via_starred: bool,
    /// Same as above with a gSC*-open middle set.
    pub g_closed_in_open_via_g_starred: bool,
}

impl SeparationEquivalents {
    /// Kebab-case names in the same order as [`SeparationEquivalents::as_array`].
    pub const LABELS: [&'static str; 7] = [
        "starred-separation",
        "g-starred-separation",
        "closed-in-open-via-g-starred",
        "closed-in-g-open-via-starred",
        "closed-in-g-open-via-g-starred",
        "g-closed-in-open-via-starred",
        "g-closed-in-open-via-g-starred",
    ];

    pub fn as_array(&self) -> [bool; 7] {
        [
            self.starred_separation,
            self.g_starred_separation,
            self.closed_in_open_via_g_starred,
            self.closed_in_g_open_via_starred,
            self.closed_in_g_open_via_g_starred,
            self.g_closed_in_open_via_starred,
            self.g_closed_in_open_via_g_starred,
        ]
    }

    pub fn all(&self) -> bool {
        self.as_array().iter().all(|b| *b)
    }

    pub fn compute(sp: &FiniteSpace, reading: Def21Reading) -> Self {
        let an = sp.analysis();
        let sccl = |m: SubsetMask| SubsetMask::from_bits(an.sccl_t[m.bits() as usize]);
        let cl = |m: SubsetMask| SubsetMask::from_bits(an.cl_t[m.bits() as usize]);
        let int = |m: SubsetMask| SubsetMask::from_bits(an.int_t[m.bits() as usize]);

        let starred_separation = is_scstar_normal(sp, reading);
        let g_starred_separation =
            separates_disjoint_closed_pairs(sp, |m| an.gsc_open.contains(m), reading);

        let mut closed_in_open_via_g_starred = true;
        for a in masks(sp) {
            if !sp.is_closed(a) {
                continue;
            }
            for &b in sp.opens() {
                if !a.is_subset_of(b) {
                    continue;
                }
                if !masks(sp).any(|u| {
                    an.gsc_open.contains(u) && cl(a).is_subset_of(u) && sccl(u).is_subset_of(b)
                }) {
                    closed_in_open_via_g_starred = false;
                }
            }
        }

        let mut closed_in_g_open_via_starred = true;
        let mut closed_in_g_open_via_g_starred = true;
        for a in masks(sp) {
            if !sp.is_closed(a) {
                continue;
            }
            for b in masks(sp) {
                if !an.g_open.contains(b) || !a.is_subset_of(b) {
                    continue;
                }
                let ib = int(b);
                if !masks(sp).any(|u| {
                    an.scstar_open.contains(u) && a.is_subset_of(u) && sccl(u).is_subset_of(ib)
                }) {
                    closed_in_g_open_via_starred = false;
                }
                if !masks(sp).any(|g| {
                    an.gsc_open.contains(g) && a.is_subset_of(g) && sccl(g).is_subset_of(ib)
                }) {
                    closed_in_g_open_via_g_starred = false;
                }
            }
        }

        let mut g_closed_in_open_via_starred = true;
        let mut g_closed_in_open_via_g_starred = true;
        for a in masks(sp) {
            if !an.g_closed.contains(a) {
                continue;
            }
            for &b in sp.opens() {
                if !a.is_subset_of(b) {
                    continue;
                }
                if !masks(sp).any(|u| {
                    an.scstar_open.contains(u) && cl(a).is_subset_of(u) && sccl(u).is_subset_of(b)
                }) {
                    g_closed_in_open_via_starred = false;
                }
                if !masks(sp).any(|g| {
                    an.gsc_open.contains(g) && cl(a).is_subset_of(g) && sccl(g).is_subset_of(b)
                }) {
                    g_closed_in_open_via_g_starred = false;
                }
            }
        }

        SeparationEquivalents {
            starred_separation,
            g_starred_separation,
            closed_in_open_via_g_starred,
            closed_in_g_open_via_starred,
            closed_in_g_open_via_g_starred,
            g_closed_in_open_via_starred,
            g_closed_in_open_via_g_starred,
        }
    }
}

/// All separation facts about one space in one record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationProfile {
    pub normal: bool,
    pub g_normal: bool,
    pub scstar_normal: bool,
    pub binary_cover_shrinks: bool,
    pub closed_open_interpolation: bool,
    pub equivalents: SeparationEquivalents,
}

impl SeparationProfile {
    pub fn compute(sp: &FiniteSpace, reading: Def21Reading) -> Self {
        SeparationProfile {
            normal: is_normal(sp, reading),
            g_normal: is_g_normal(sp, reading),
            scstar_normal: is_scstar_normal(sp, reading),
            binary_cover_shrinks: binary_cover_shrinks(sp),
            closed_open_interpolation: closed_open_interpolation(sp),
            equivalents: SeparationEquivalents::compute(sp, reading),
        }
    }
}

/// Fast normality test used by the miner at larger sizes: a space is normal
/// exactly when every disjoint closed pair admits an open set around the
/// first whose closure misses the second; the complement of that closure is
/// the other half of the separation.
pub fn is_normal_fast(sp: &FiniteSpace) -> bool {
    let closeds = sp.closeds();
    for &a in &closeds {
        for &b in &closeds {
            if !a.intersect(b).is_empty() {
                continue;
            }
            let found = sp
                .opens()
                .iter()
                .any(|&u| a.is_subset_of(u) && sp.closure(u).intersect(b).is_empty());
            if !found {
                return false;
            }
        }
    }
    true
}
