//! Set classes and closure-style operators on a space.
//!
//! The weak classes layer up from two primitives. A set is semi-open when it
//! sits inside the closure of its interior, semi-closed when it contains the
//! interior of its closure, and c*-open when it is both at once. The starred
//! closed class asks that the semi-closure of a set land inside every
//! c*-open superset; its open class is defined on complements. On top of
//! those sit the generalized classes, each comparing a closure against a
//! kernel: g-closed (closure inside the open kernel), gSC*-closed (starred
//! closure inside the open kernel), and SC*g-closed (starred closure inside
//! the starred kernel).
//!
//! Generalized closures are intersections of class supersets. Only the
//! semi-closed class is guaranteed to be intersection-stable, so
//! [`gen_closure`] reports whether the value it returns still belongs to the
//! class it was built from; for the c* kind that flag does go false on real
//! spaces (see [`ClosureOutcome::kind_closed`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::space::{FiniteSpace, SubsetMask};

pub fn is_semi_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().semi_open.contains(m)
}

pub fn is_semi_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().semi_closed.contains(m)
}

pub fn is_cstar_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().cstar_open.contains(m)
}

pub fn is_cstar_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().cstar_closed.contains(m)
}

pub fn is_regular_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().regular_open.contains(m)
}

pub fn is_regular_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().regular_closed.contains(m)
}

pub fn is_scstar_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().scstar_open.contains(m)
}

pub fn is_scstar_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().scstar_closed.contains(m)
}

pub fn is_g_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().g_open.contains(m)
}

pub fn is_g_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().g_closed.contains(m)
}

pub fn is_gscstar_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().gsc_open.contains(m)
}

pub fn is_gscstar_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().gsc_closed.contains(m)
}

pub fn is_scstar_g_open(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().scg_open.contains(m)
}

pub fn is_scstar_g_closed(sp: &FiniteSpace, m: SubsetMask) -> bool {
    sp.analysis().scg_closed.contains(m)
}

/// Intersection of semi-closed supersets; always semi-closed itself, and
/// equal to the union of the set with the interior of its closure.
pub fn semi_closure(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    SubsetMask::from_bits(sp.analysis().scl_t[m.bits() as usize])
}

/// Union of semi-open subsets.
pub fn semi_interior(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    sp.complement(semi_closure(sp, sp.complement(m)))
}

/// Intersection of c*-closed supersets. May fail to be c*-closed; use
/// [`gen_closure`] to see the flag.
pub fn cstar_closure(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    SubsetMask::from_bits(sp.analysis().cstar_cl_t[m.bits() as usize])
}

/// Intersection of starred-closed supersets.
pub fn scstar_closure(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    SubsetMask::from_bits(sp.analysis().sccl_t[m.bits() as usize])
}

/// Union of starred-open subsets.
pub fn scstar_interior(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    sp.complement(scstar_closure(sp, sp.complement(m)))
}

/// Intersection of open supersets.
pub fn open_kernel(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    SubsetMask::from_bits(sp.analysis().kernel_t[m.bits() as usize])
}

/// Intersection of c*-open supersets.
pub fn cstar_kernel(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    SubsetMask::from_bits(sp.analysis().cstar_ker_t[m.bits() as usize])
}

/// Intersection of starred-open supersets.
pub fn scstar_kernel(sp: &FiniteSpace, m: SubsetMask) -> SubsetMask {
    SubsetMask::from_bits(sp.analysis().sc_ker_t[m.bits() as usize])
}

/// Whether `nbd` is a starred neighbourhood of the point `x`, meaning `x`
/// lies in the starred interior of `nbd`.
pub fn is_scstar_nbd(sp: &FiniteSpace, x: usize, nbd: SubsetMask) -> bool {
    scstar_interior(sp, nbd).contains(x)
}

/// Which generalized closure to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureKind {
    Semi,
    Cstar,
    Scstar,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 3] = [ClosureKind::Semi, ClosureKind::Cstar, ClosureKind::Scstar];

    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Semi => "semi",
            ClosureKind::Cstar => "cstar",
            ClosureKind::Scstar => "scstar",
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "semi" => Ok(ClosureKind::Semi),
            "cstar" => Ok(ClosureKind::Cstar),
            "scstar" => Ok(ClosureKind::Scstar),
            other => Err(format!(
                "unknown closure kind `{other}` (expected semi, cstar, or scstar)"
            )),
        }
    }
}

/// Result of a generalized closure, with a diagnostic telling whether the
/// value still belongs to the class the closure was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOutcome {
    pub value: SubsetMask,
    pub kind_closed: bool,
}

/// Result of a generalized interior, dual to [`ClosureOutcome`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InteriorOutcome {
    pub value: SubsetMask,
    pub kind_open: bool,
}

/// Intersection of all `kind`-closed supersets of `m`.
pub fn gen_closure(sp: &FiniteSpace, kind: ClosureKind, m: SubsetMask) -> ClosureOutcome {
    let (value, kind_closed) = match kind {
        ClosureKind::Semi => {
            let v = semi_closure(sp, m);
            (v, is_semi_closed(sp, v))
        }
        ClosureKind::Cstar => {
            let v = cstar_closure(sp, m);
            (v, is_cstar_closed(sp, v))
        }
        ClosureKind::Scstar => {
            let v = scstar_closure(sp, m);
            (v, is_scstar_closed(sp, v))
        }
    };
    if kind == ClosureKind::Semi {
        debug_assert!(kind_closed, "semi-closed sets are intersection-stable");
    }
    ClosureOutcome { value, kind_closed }
}

/// Union of all `kind`-open subsets of `m`.
pub fn gen_interior(sp: &FiniteSpace, kind: ClosureKind, m: SubsetMask) -> InteriorOutcome {
    let co = gen_closure(sp, kind, sp.complement(m));
    InteriorOutcome {
        value: sp.complement(co.value),
        kind_open: co.kind_closed,
    }
}

/// One set class a subset can be tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetClass {
    Open,
    Closed,
    RegularOpen,
    RegularClosed,
    SemiOpen,
    SemiClosed,
    CstarOpen,
    CstarClosed,
    ScstarOpen,
    ScstarClosed,
    GOpen,
    GClosed,
    GscstarOpen,
    GscstarClosed,
    ScstarGOpen,
    ScstarGClosed,
}

impl SetClass {
    pub const ALL: [SetClass; 16] = [
        SetClass::Open,
        SetClass::Closed,
        SetClass::RegularOpen,
        SetClass::RegularClosed,
        SetClass::SemiOpen,
        SetClass::SemiClosed,
        SetClass::CstarOpen,
        SetClass::CstarClosed,
        SetClass::ScstarOpen,
        SetClass::ScstarClosed,
        SetClass::GOpen,
        SetClass::GClosed,
        SetClass::GscstarOpen,
        SetClass::GscstarClosed,
        SetClass::ScstarGOpen,
        SetClass::ScstarGClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetClass::Open => "open",
            SetClass::Closed => "closed",
            SetClass::RegularOpen => "regular-open",
            SetClass::RegularClosed => "regular-closed",
            SetClass::SemiOpen => "semi-open",
            SetClass::SemiClosed => "semi-closed",
            SetClass::CstarOpen => "cstar-open",
            SetClass::CstarClosed => "cstar-closed",
            SetClass::ScstarOpen => "scstar-open",
            SetClass::ScstarClosed => "scstar-closed",
            SetClass::GOpen => "g-open",
            SetClass::GClosed => "g-closed",
            SetClass::GscstarOpen => "gscstar-open",
            SetClass::GscstarClosed => "gscstar-closed",
            SetClass::ScstarGOpen => "scstar-g-open",
            SetClass::ScstarGClosed => "scstar-g-closed",
        }
    }

    /// Whether `m` belongs to this class in `sp`.
    pub fn holds(self, sp: &FiniteSpace, m: SubsetMask) -> bool {
        match self {
            SetClass::Open => sp.is_open(m),
            SetClass::Closed => sp.is_closed(m),
            SetClass::RegularOpen => is_regular_open(sp, m),
            SetClass::RegularClosed => is_regular_closed(sp, m),
            SetClass::SemiOpen => is_semi_open(sp, m),
            SetClass::SemiClosed => is_semi_closed(sp, m),
            SetClass::CstarOpen => is_cstar_open(sp, m),
            SetClass::CstarClosed => is_cstar_closed(sp, m),
            SetClass::ScstarOpen => is_scstar_open(sp, m),
            SetClass::ScstarClosed => is_scstar_closed(sp, m),
            SetClass::GOpen => is_g_open(sp, m),
            SetClass::GClosed => is_g_closed(sp, m),
            SetClass::GscstarOpen => is_gscstar_open(sp, m),
            SetClass::GscstarClosed => is_gscstar_closed(sp, m),
            SetClass::ScstarGOpen => is_scstar_g_open(sp, m),
            SetClass::ScstarGClosed => is_scstar_g_closed(sp, m),
        }
    }

    /// All members of the class in `sp`, ascending by mask.
    pub fn family(self, sp: &FiniteSpace) -> Vec<SubsetMask> {
        let size = 1u32 << sp.size();
        (0..size)
            .map(SubsetMask::from_bits)
            .filter(|m| self.holds(sp, *m))
            .collect()
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SetClass::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SetClass::ALL.iter().map(|c| c.name()).collect();
                format!(
                    "unknown set class `{s}` (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// Membership of one subset in all sixteen classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetClassification {
    pub open: bool,
    pub closed: bool,
    pub regular_open: bool,
    pub regular_closed: bool,
    pub semi_open: bool,
    pub semi_closed: bool,
    pub cstar_open: bool,
    pub cstar_closed: bool,
    pub scstar_open: bool,
    pub scstar_closed: bool,
    pub g_open: bool,
    pub g_closed: bool,
    pub gscstar_open: bool,
    pub gscstar_closed: bool,
    pub scstar_g_open: bool,
    pub scstar_g_closed: bool,
}

impl SubsetClassification {
    pub fn classify(sp: &FiniteSpace, m: SubsetMask) -> Self {
        SubsetClassification {
            open: sp.is_open(m),
            closed: sp.is_closed(m),
            regular_open: is_regular_open(sp, m),
            regular_closed: is_regular_closed(sp, m),
            semi_open: is_semi_open(sp, m),
            semi_closed: is_semi_closed(sp, m),
            cstar_open: is_cstar_open(sp, m),
            cstar_closed: is_cstar_closed(sp, m),
            scstar_open: is_scstar_open(sp, m),
            scstar_closed: is_scstar_closed(sp, m),
            g_open: is_g_open(sp, m),
            g_closed: is_g_closed(sp, m),
            gscstar_open: is_gscstar_open(sp, m),
            gscstar_closed: is_gscstar_closed(sp, m),
            scstar_g_open: is_scstar_g_open(sp, m),
            scstar_g_closed: is_scstar_g_closed(sp, m),
        }
    }

    /// Flags paired with their class, in the canonical order of
    /// [`SetClass::ALL`].
    pub fn flags(&self) -> [(SetClass, bool); 16] {
        [
            (SetClass::Open, self.open),
            (SetClass::Closed, self.closed),
            (SetClass::RegularOpen, self.regular_open),
            (SetClass::RegularClosed, self.regular_closed),
            (SetClass::SemiOpen, self.semi_open),
            (SetClass::SemiClosed, self.semi_closed),
            (SetClass::CstarOpen, self.cstar_open),
            (SetClass::CstarClosed, self.cstar_closed),
            (SetClass::ScstarOpen, self.scstar_open),
            (SetClass::ScstarClosed, self.scstar_closed),
            (SetClass::GOpen, self.g_open),
            (SetClass::GClosed, self.g_closed),
            (SetClass::GscstarOpen, self.gscstar_open),
            (SetClass::GscstarClosed, self.gscstar_closed),
            (SetClass::ScstarGOpen, self.scstar_g_open),
            (SetClass::ScstarGClosed, self.scstar_g_closed),
        ]
    }
}
