//! Maps between finite spaces and their classification.
//!
//! A map is a total function on points. Twenty-one boolean flags describe
//! how it treats the set classes on each side: the classical ones
//! (continuity, open and closed maps, the regularity-based variants) and the
//! starred family, which asks images or preimages of starred or closed sets
//! to land in a starred, generalized, or plain class.
//!
//! The audit criteria at the bottom are the quantifier characterizations
//! that are claimed to pin down individual flags; [`audit`] evaluates flag
//! and criterion independently so the equivalences can be checked rather
//! than assumed.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::operators;
use crate::space::{parse_space, FiniteSpace, SpaceDoc, SpaceParseError, SubsetMask};

/// Errors raised while building or reading a map.
#[derive(Debug, thiserror::Error)]
pub enum MapError {
    #[error("table has {got} entries for a domain of {expected} points")]
    TableArity { expected: usize, got: usize },
    #[error("table sends a point to index {index}, outside the codomain")]
    PointRange { index: usize },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown point `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("point `{label}` is mapped more than once")]
    RepeatedPoint { label: String },
    #[error("point `{label}` is never mapped")]
    UnmappedPoint { label: String },
    #[error("failed to read `{path}`: {source}")]
    SpaceFile {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("in `{path}`: {source}")]
    SpaceParse {
        path: String,
        #[source]
        source: SpaceParseError,
    },
    #[error(transparent)]
    Space(#[from] SpaceParseError),
    #[error("structured document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("composition needs the first codomain to equal the second domain")]
    ComposeMismatch,
}

/// A total map between two finite spaces, with image and preimage of every
/// subset precomputed.
#[derive(Clone)]
pub struct SpaceMap {
    domain: Arc<FiniteSpace>,
    codomain: Arc<FiniteSpace>,
    table: Vec<usize>,
    img: Vec<u32>,
    pre: Vec<u32>,
}

impl SpaceMap {
    pub fn new(
        domain: Arc<FiniteSpace>,
        codomain: Arc<FiniteSpace>,
        table: Vec<usize>,
    ) -> Result<Self, MapError> {
        let nx = domain.size();
        let ny = codomain.size();
        if table.len() != nx {
            return Err(MapError::TableArity {
                expected: nx,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= ny) {
            return Err(MapError::PointRange { index: bad });
        }
        let mut img = vec![0u32; 1 << nx];
        for a in 0..(1u32 << nx) {
            let mut m = 0u32;
            for (x, &t) in table.iter().enumerate() {
                if a >> x & 1 == 1 {
                    m |= 1 << t;
                }
            }
            img[a as usize] = m;
        }
        let mut pre = vec![0u32; 1 << ny];
        for b in 0..(1u32 << ny) {
            let mut m = 0u32;
            for (x, &t) in table.iter().enumerate() {
                if b >> t & 1 == 1 {
                    m |= 1 << x;
                }
            }
            pre[b as usize] = m;
        }
        Ok(SpaceMap {
            domain,
            codomain,
            table,
            img,
            pre,
        })
    }

    pub fn domain(&self) -> &FiniteSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSpace {
        &self.codomain
    }

    pub fn domain_arc(&self) -> &Arc<FiniteSpace> {
        &self.domain
    }

    pub fn codomain_arc(&self) -> &Arc<FiniteSpace> {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Where the point `x` goes.
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        SubsetMask::from_bits(self.img[a.bits() as usize])
    }

    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        SubsetMask::from_bits(self.pre[b.bits() as usize])
    }

    /// The composite `g` after `f`, defined when `f` lands where `g` starts.
    pub fn compose(f: &SpaceMap, g: &SpaceMap) -> Result<SpaceMap, MapError> {
        if f.codomain() != g.domain() {
            return Err(MapError::ComposeMismatch);
        }
        let table = f.table.iter().map(|&x| g.table[x]).collect();
        SpaceMap::new(f.domain.clone(), g.codomain.clone(), table)
    }

    /// Structured self-contained form.
    pub fn to_doc(&self) -> MapDoc {
        MapDoc {
            domain: self.domain.to_doc(),
            codomain: self.codomain.to_doc(),
            table: self
                .table
                .iter()
                .enumerate()
                .map(|(x, &t)| {
                    (
                        self.domain.ground().label(x).to_string(),
                        self.codomain.ground().label(t).to_string(),
                    )
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &MapDoc) -> Result<Self, MapError> {
        let domain = Arc::new(FiniteSpace::from_doc(&doc.domain)?);
        let codomain = Arc::new(FiniteSpace::from_doc(&doc.codomain)?);
        let mut table = vec![usize::MAX; domain.size()];
        for (from, to) in &doc.table {
            let x = domain
                .ground()
                .index_of(from)
                .ok_or_else(|| MapError::UnknownLabel {
                    line: 0,
                    label: from.clone(),
                })?;
            let t = codomain
                .ground()
                .index_of(to)
                .ok_or_else(|| MapError::UnknownLabel {
                    line: 0,
                    label: to.clone(),
                })?;
            if table[x] != usize::MAX {
                return Err(MapError::RepeatedPoint {
                    label: from.clone(),
                });
            }
            table[x] = t;
        }
        if let Some(x) = table.iter().position(|&t| t == usize::MAX) {
            return Err(MapError::UnmappedPoint {
                label: domain.ground().label(x).to_string(),
            });
        }
        SpaceMap::new(domain, codomain, table)
    }
}

impl PartialEq for SpaceMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.table == other.table
    }
}

impl Eq for SpaceMap {}

impl fmt::Debug for SpaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .map(|(x, &t)| {
                format!(
                    "{}->{}",
                    self.domain.ground().label(x),
                    self.codomain.ground().label(t)
                )
            })
            .collect();
        write!(f, "SpaceMap{{{}}}", pairs.join(", "))
    }
}

/// Structured (serde) form of a map document, carrying both spaces inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub domain: SpaceDoc,
    pub codomain: SpaceDoc,
    pub table: Vec<(String, String)>,
}

/// Parses either map format. The line-oriented form names its spaces by
/// path, resolved against `base`; the JSON form is self-contained.
pub fn parse_map(text: &str, base: &Path) -> Result<SpaceMap, MapError> {
    if text.trim_start().starts_with('{') {
        let doc: MapDoc = serde_json::from_str(text)?;
        return SpaceMap::from_doc(&doc);
    }
    parse_map_text(text, base)
}

fn load_space(base: &Path, rel: &str) -> Result<FiniteSpace, MapError> {
    let path = base.join(rel);
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(&path).map_err(|source| MapError::SpaceFile {
        path: shown.clone(),
        source,
    })?;
    parse_space(&text).map_err(|source| MapError::SpaceParse {
        path: shown,
        source,
    })
}

fn parse_map_text(text: &str, base: &Path) -> Result<SpaceMap, MapError> {
    let mut domain: Option<FiniteSpace> = None;
    let mut codomain: Option<FiniteSpace> = None;
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("domain:") {
            domain = Some(load_space(base, rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("codomain:") {
            codomain = Some(load_space(base, rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("map:") {
            let (from, to) = rest.split_once("->").ok_or(MapError::Syntax {
                line: line_no,
                msg: "expected `map: <point> -> <point>`".into(),
            })?;
            pairs.push((line_no, from.trim().to_string(), to.trim().to_string()));
        } else {
            return Err(MapError::Syntax {
                line: line_no,
                msg: format!("expected `domain:`, `codomain:`, or `map:`, found `{line}`"),
            });
        }
    }
    let domain = Arc::new(domain.ok_or(MapError::Syntax {
        line: 0,
        msg: "missing domain line".into(),
    })?);
    let codomain = Arc::new(codomain.ok_or(MapError::Syntax {
        line: 0,
        msg: "missing codomain line".into(),
    })?);
    let mut table = vec![usize::MAX; domain.size()];
    for (line, from, to) in pairs {
        let x = domain
            .ground()
            .index_of(&from)
            .ok_or_else(|| MapError::UnknownLabel {
                line,
                label: from.clone(),
            })?;
        let t = codomain
            .ground()
            .index_of(&to)
            .ok_or_else(|| MapError::UnknownLabel {
                line,
                label: to.clone(),
            })?;
        if table[x] != usize::MAX {
            return Err(MapError::RepeatedPoint { label: from });
        }
        table[x] = t;
    }
    if let Some(x) = table.iter().position(|&t| t == usize::MAX) {
        return Err(MapError::UnmappedPoint {
            label: domain.ground().label(x).to_string(),
        });
    }
    SpaceMap::new(domain, codomain, table)
}

/// The twenty-one classification flags of a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapClassification {
    pub continuous: bool,
    pub open_map: bool,
    pub closed_map: bool,
    pub surjective: bool,
    pub injective: bool,
    pub bijective: bool,
    pub r_map: bool,
    pub completely_continuous: bool,
    pub rc_continuous: bool,
    pub strongly_scstar_open: bool,
    pub strongly_scstar_closed: bool,
    pub almost_scstar_irresolute: bool,
    pub scstar_closed_map: bool,
    pub scstar_g_closed_map: bool,
    pub gscstar_closed_map: bool,
    pub quasi_scstar_closed: bool,
    pub scstar_scstar_g_closed: bool,
    pub scstar_gscstar_closed: bool,
    pub almost_gscstar_closed: bool,
    pub scstar_gscstar_continuous: bool,
    pub scstar_irresolute: bool,
}

fn masks(sp: &FiniteSpace) -> impl Iterator<Item = SubsetMask> {
    (0..(1u32 << sp.size())).map(SubsetMask::from_bits)
}

impl MapClassification {
    pub fn classify(f: &SpaceMap) -> Self {
        let x = f.domain();
        let y = f.codomain();
        let ax = x.analysis();
        let ay = y.analysis();

        let continuous = y.opens().iter().all(|&v| x.is_open(f.preimage(v)));
        let open_map = x.opens().iter().all(|&u| y.is_open(f.image(u)));
        let closed_map = masks(x)
            .filter(|&a| x.is_closed(a))
            .all(|a| y.is_closed(f.image(a)));
        let surjective = f.image(x.full()) == y.full();
        let injective = {
            let mut seen = 0u32;
            f.table().iter().all(|&t| {
                let bit = 1u32 << t;
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        };
        let r_map = masks(y)
            .filter(|&v| ay.regular_open.contains(v))
            .all(|v| ax.regular_open.contains(f.preimage(v)));
        let completely_continuous = y
            .opens()
            .iter()
            .all(|&v| ax.regular_open.contains(f.preimage(v)));
        let rc_continuous = masks(y)
            .filter(|&v| ay.regular_closed.contains(v))
            .all(|v| ax.regular_closed.contains(f.preimage(v)));
        let strongly_scstar_open = masks(x)
            .filter(|&u| ax.scstar_open.contains(u))
            .all(|u| ay.scstar_open.contains(f.image(u)));
        let strongly_scstar_closed = masks(x)
            .filter(|&a| ax.scstar_closed.contains(a))
            .all(|a| ay.scstar_closed.contains(f.image(a)));
        let almost_scstar_irresolute = (0..x.size()).all(|pt| {
            let fpt = f.apply(pt);
            masks(y)
                .filter(|&v| operators::scstar_interior(y, v).contains(fpt))
                .all(|v| {
                    let inner = operators::scstar_closure(x, f.preimage(v));
                    operators::scstar_interior(x, inner).contains(pt)
                })
        });
        let scstar_closed_map = masks(x)
            .filter(|&a| x.is_closed(a))
            .all(|a| ay.scstar_closed.contains(f.image(a)));
        let scstar_g_closed_map = masks(x)
            .filter(|&a| x.is_closed(a))
            .all(|a| ay.scg_closed.contains(f.image(a)));
        let gscstar_closed_map = masks(x)
            .filter(|&a| x.is_closed(a))
            .all(|a| ay.gsc_closed.contains(f.image(a)));
        let quasi_scstar_closed = masks(x)
            .filter(|&a| ax.scstar_closed.contains(a))
            .all(|a| y.is_closed(f.image(a)));
        let scstar_scstar_g_closed = masks(x)
            .filter(|&a| ax.scstar_closed.contains(a))
            .all(|a| ay.scg_closed.contains(f.image(a)));
        let scstar_gscstar_closed = masks(x)
            .filter(|&a| ax.scstar_closed.contains(a))
            .all(|a| ay.gsc_closed.contains(f.image(a)));
        let almost_gscstar_closed = masks(x)
            .filter(|&a| ax.regular_closed.contains(a))
            .all(|a| ay.gsc_closed.contains(f.image(a)));
        let scstar_gscstar_continuous = masks(y)
            .filter(|&b| ay.scstar_closed.contains(b))
            .all(|b| ax.gsc_closed.contains(f.preimage(b)));
        let scstar_irresolute = masks(y)
            .filter(|&v| ay.scstar_open.contains(v))
            .all(|v| ax.scstar_open.contains(f.preimage(v)));

        MapClassification {
            continuous,
            open_map,
            closed_map,
            surjective,
            injective,
            bijective: surjective && injective,
            r_map,
            completely_continuous,
            rc_continuous,
            strongly_scstar_open,
            strongly_scstar_closed,
            almost_scstar_irresolute,
            scstar_closed_map,
            scstar_g_closed_map,
            gscstar_closed_map,
            quasi_scstar_closed,
            scstar_scstar_g_closed,
            scstar_gscstar_closed,
            almost_gscstar_closed,
            scstar_gscstar_continuous,
            scstar_irresolute,
        }
    }

    /// Reads one flag by selector.
    pub fn get(&self, flag: MapFlag) -> bool {
        match flag {
            MapFlag::Continuous => self.continuous,
            MapFlag::OpenMap => self.open_map,
            MapFlag::ClosedMap => self.closed_map,
            MapFlag::Surjective => self.surjective,
            MapFlag::Injective => self.injective,
            MapFlag::Bijective => self.bijective,
            MapFlag::RMap => self.r_map,
            MapFlag::CompletelyContinuous => self.completely_continuous,
            MapFlag::RcContinuous => self.rc_continuous,
            MapFlag::StronglyScstarOpen => self.strongly_scstar_open,
            MapFlag::StronglyScstarClosed => self.strongly_scstar_closed,
            MapFlag::AlmostScstarIrresolute => self.almost_scstar_irresolute,
            MapFlag::ScstarClosedMap => self.scstar_closed_map,
            MapFlag::ScstarGClosedMap => self.scstar_g_closed_map,
            MapFlag::GscstarClosedMap => self.gscstar_closed_map,
            MapFlag::QuasiScstarClosed => self.quasi_scstar_closed,
            MapFlag::ScstarScstarGClosed => self.scstar_scstar_g_closed,
            MapFlag::ScstarGscstarClosed => self.scstar_gscstar_closed,
            MapFlag::AlmostGscstarClosed => self.almost_gscstar_closed,
            MapFlag::ScstarGscstarContinuous => self.scstar_gscstar_continuous,
            MapFlag::ScstarIrresolute => self.scstar_irresolute,
        }
    }

    /// Flags paired with kebab-case names, in declaration order.
    pub fn flags(&self) -> [(&'static str, bool); 21] {
        MapFlag::ALL.map(|flag| (flag.name(), self.get(flag)))
    }
}

/// Selector naming one of the twenty-one classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapFlag {
    Continuous,
    OpenMap,
    ClosedMap,
    Surjective,
    Injective,
    Bijective,
    RMap,
    CompletelyContinuous,
    RcContinuous,
    StronglyScstarOpen,
    StronglyScstarClosed,
    AlmostScstarIrresolute,
    ScstarClosedMap,
    ScstarGClosedMap,
    GscstarClosedMap,
    QuasiScstarClosed,
    ScstarScstarGClosed,
    ScstarGscstarClosed,
    AlmostGscstarClosed,
    ScstarGscstarContinuous,
    ScstarIrresolute,
}

impl MapFlag {
    pub const ALL: [MapFlag; 21] = [
        MapFlag::Continuous,
        MapFlag::OpenMap,
        MapFlag::ClosedMap,
        MapFlag::Surjective,
        MapFlag::Injective,
        MapFlag::Bijective,
        MapFlag::RMap,
        MapFlag::CompletelyContinuous,
        MapFlag::RcContinuous,
        MapFlag::StronglyScstarOpen,
        MapFlag::StronglyScstarClosed,
        MapFlag::AlmostScstarIrresolute,
        MapFlag::ScstarClosedMap,
        MapFlag::ScstarGClosedMap,
        MapFlag::GscstarClosedMap,
        MapFlag::QuasiScstarClosed,
        MapFlag::ScstarScstarGClosed,
        MapFlag::ScstarGscstarClosed,
        MapFlag::AlmostGscstarClosed,
        MapFlag::ScstarGscstarContinuous,
        MapFlag::ScstarIrresolute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapFlag::Continuous => "continuous",
            MapFlag::OpenMap => "open-map",
            MapFlag::ClosedMap => "closed-map",
            MapFlag::Surjective => "surjective",
            MapFlag::Injective => "injective",
            MapFlag::Bijective => "bijective",
            MapFlag::RMap => "r-map",
            MapFlag::CompletelyContinuous => "completely-continuous",
            MapFlag::RcContinuous => "rc-continuous",
            MapFlag::StronglyScstarOpen => "strongly-scstar-open",
            MapFlag::StronglyScstarClosed => "strongly-scstar-closed",
            MapFlag::AlmostScstarIrresolute => "almost-scstar-irresolute",
            MapFlag::ScstarClosedMap => "scstar-closed-map",
            MapFlag::ScstarGClosedMap => "scstar-g-closed-map",
            MapFlag::GscstarClosedMap => "gscstar-closed-map",
            MapFlag::QuasiScstarClosed => "quasi-scstar-closed",
            MapFlag::ScstarScstarGClosed => "scstar-scstar-g-closed",
            MapFlag::ScstarGscstarClosed => "scstar-gscstar-closed",
            MapFlag::AlmostGscstarClosed => "almost-gscstar-closed",
            MapFlag::ScstarGscstarContinuous => "scstar-gscstar-continuous",
            MapFlag::ScstarIrresolute => "scstar-irresolute",
        }
    }
}

/// Every starred-open set around a preimage is refined by the preimage of a
/// starred-open set around the original target set.
pub fn starred_cover_transfer(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    for a in masks(y) {
        let pa = f.preimage(a);
        for u in masks(x) {
            if !ax.scstar_open.contains(u) || !pa.is_subset_of(u) {
                continue;
            }
            let found = masks(y).any(|v| {
                ay.scstar_open.contains(v) && a.is_subset_of(v) && f.preimage(v).is_subset_of(u)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// Preimages of starred-open sets sit inside the starred interior of their
/// own starred closure.
pub fn preimages_almost_starred_open(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ay = y.analysis();
    for v in masks(y) {
        if !ay.scstar_open.contains(v) {
            continue;
        }
        let p = f.preimage(v);
        let hull = operators::scstar_interior(x, operators::scstar_closure(x, p));
        if !p.is_subset_of(hull) {
            return false;
        }
    }
    true
}

/// Images of starred closures land inside starred closures of images.
pub fn images_respect_starred_closure(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    for u in masks(x) {
        if !ax.scstar_open.contains(u) {
            continue;
        }
        let lhs = f.image(operators::scstar_closure(x, u));
        let rhs = operators::scstar_closure(y, f.image(u));
        if !lhs.is_subset_of(rhs) {
            return false;
        }
    }
    true
}

/// Like [`starred_cover_transfer`] with a g-starred-open refining set.
pub fn g_starred_cover_transfer(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    for b in masks(y) {
        let pb = f.preimage(b);
        for u in masks(x) {
            if !ax.scstar_open.contains(u) || !pb.is_subset_of(u) {
                continue;
            }
            let found = masks(y).any(|v| {
                ay.gsc_open.contains(v) && b.is_subset_of(v) && f.preimage(v).is_subset_of(u)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// Like [`g_starred_cover_transfer`], quantifying only over regular-open
/// sets around the preimage.
pub fn g_starred_cover_transfer_regular(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    for b in masks(y) {
        let pb = f.preimage(b);
        for u in masks(x) {
            if !ax.regular_open.contains(u) || !pb.is_subset_of(u) {
                continue;
            }
            let found = masks(y).any(|v| {
                ay.gsc_open.contains(v) && b.is_subset_of(v) && f.preimage(v).is_subset_of(u)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// Closed sets in the codomain, seen through regular-open sets around their
/// preimage, extend to starred-open sets whose preimage stays inside.
pub fn starred_cover_transfer_closed_regular(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    for m in masks(y) {
        if !y.is_closed(m) {
            continue;
        }
        let pm = f.preimage(m);
        for u in masks(x) {
            if !ax.regular_open.contains(u) || !pm.is_subset_of(u) {
                continue;
            }
            let found = masks(y).any(|v| {
                ay.scstar_open.contains(v) && m.is_subset_of(v) && f.preimage(v).is_subset_of(u)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// Images of g-starred-closed sets stay g-starred-closed.
pub fn preserves_g_starred_closed_images(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    masks(x)
        .filter(|&h| ax.gsc_closed.contains(h))
        .all(|h| ay.gsc_closed.contains(f.image(h)))
}

/// Preimages of g-starred-closed sets stay g-starred-closed.
pub fn pulls_back_g_starred_closed(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    masks(y)
        .filter(|&k| ay.gsc_closed.contains(k))
        .all(|k| ax.gsc_closed.contains(f.preimage(k)))
}

/// Preimages of starred-open sets are g-starred-open.
pub fn preimages_of_starred_open_are_g_starred_open(f: &SpaceMap) -> bool {
    let x = f.domain();
    let y = f.codomain();
    let ax = x.analysis();
    let ay = y.analysis();
    masks(y)
        .filter(|&v| ay.scstar_open.contains(v))
        .all(|v| ax.gsc_open.contains(f.preimage(v)))
}

/// One row of the characterization audit: a flag next to the quantifier
/// criterion said to pin it down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub claim: String,
    pub flag: String,
    pub criterion: String,
    pub flag_holds: bool,
    pub criterion_holds: bool,
}

/// Evaluates the six characterization rows for one map. The first five are
/// claimed as equivalences; the last is claimed one-directional, from the
/// flag to the criterion.
pub fn audit(f: &SpaceMap) -> Vec<AuditRow> {
    let c = MapClassification::classify(f);
    let row = |claim: &str, flag: &str, criterion: &str, fh: bool, ch: bool| AuditRow {
        claim: claim.to_string(),
        flag: flag.to_string(),
        criterion: criterion.to_string(),
        flag_holds: fh,
        criterion_holds: ch,
    };
    vec![
        row(
            "T3.3",
            "strongly-scstar-closed",
            "starred-cover-transfer",
            c.strongly_scstar_closed,
            starred_cover_transfer(f),
        ),
        row(
            "L3.4",
            "almost-scstar-irresolute",
            "preimages-almost-starred-open",
            c.almost_scstar_irresolute,
            preimages_almost_starred_open(f),
        ),
        row(
            "T3.5",
            "almost-scstar-irresolute",
            "images-respect-starred-closure",
            c.almost_scstar_irresolute,
            images_respect_starred_closure(f),
        ),
        row(
            "L4.7",
            "scstar-gscstar-closed",
            "g-starred-cover-transfer",
            c.scstar_gscstar_closed,
            g_starred_cover_transfer(f),
        ),
        row(
            "L5.6",
            "almost-gscstar-closed",
            "g-starred-cover-transfer-regular",
            c.almost_gscstar_closed,
            g_starred_cover_transfer_regular(f),
        ),
        row(
            "L5.7",
            "almost-gscstar-closed",
            "starred-cover-transfer-closed-regular",
            c.almost_gscstar_closed,
            starred_cover_transfer_closed_regular(f),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    fn cross_identity() -> SpaceMap {
        SpaceMap::new(
            Arc::new(testdata::ex15()),
            Arc::new(testdata::ex16()),
            vec![0, 1, 2, 3],
        )
        .unwrap()
    }

    #[test]
    fn pointwise_identity_between_the_samples_has_the_expected_flags() {
        let c = MapClassification::classify(&cross_identity());
        assert!(!c.continuous && !c.open_map && !c.closed_map);
        assert!(c.surjective && c.injective && c.bijective);
        assert!(!c.r_map && !c.completely_continuous && !c.rc_continuous);
        assert!(c.strongly_scstar_open && c.strongly_scstar_closed);
        assert!(c.almost_scstar_irresolute);
        assert!(c.scstar_closed_map && c.scstar_g_closed_map && c.gscstar_closed_map);
        assert!(!c.quasi_scstar_closed);
        assert!(c.scstar_scstar_g_closed && c.scstar_gscstar_closed);
        assert!(c.almost_gscstar_closed && c.scstar_gscstar_continuous && c.scstar_irresolute);
    }

    #[test]
    fn audit_rows_agree_on_the_cross_identity() {
        for r in audit(&cross_identity()) {
            assert!(r.flag_holds, "{} flag", r.claim);
            assert!(r.criterion_holds, "{} criterion", r.claim);
        }
    }

    #[test]
    fn identity_on_a_space_is_everything_except_the_two_strict_flags() {
        let sp = Arc::new(testdata::ex15());
        let f = SpaceMap::new(sp.clone(), sp, vec![0, 1, 2, 3]).unwrap();
        let c = MapClassification::classify(&f);
        for (name, holds) in c.flags() {
            match name {
                "completely-continuous" | "quasi-scstar-closed" => {
                    assert!(!holds, "{name} should fail on this identity")
                }
                _ => assert!(holds, "{name} should hold on the identity"),
            }
        }
    }

    #[test]
    fn constant_map_to_a_point_has_all_flags_except_injectivity() {
        let one = crate::space::parse_space("points: z\nopen:\nopen: *\n").unwrap();
        let f = SpaceMap::new(Arc::new(testdata::ex15()), Arc::new(one), vec![0, 0, 0, 0]).unwrap();
        let c = MapClassification::classify(&f);
        for (name, holds) in c.flags() {
            match name {
                "injective" | "bijective" => assert!(!holds, "{name}"),
                _ => assert!(holds, "{name}"),
            }
        }
    }

    #[test]
    fn image_and_preimage_tables() {
        let f = cross_identity();
        let g15 = f.domain().ground();
        let m = g15.parse_subset("q,s").unwrap();
        assert_eq!(f.image(m), m);
        assert_eq!(f.preimage(m), m);
        let swap = SpaceMap::new(
            Arc::new(testdata::ex15()),
            Arc::new(testdata::ex15()),
            vec![1, 0, 3, 2],
        )
        .unwrap();
        assert_eq!(
            swap.image(g15.parse_subset("q,s").unwrap()),
            g15.parse_subset("r,t").unwrap()
        );
        assert_eq!(
            swap.preimage(g15.parse_subset("q").unwrap()),
            g15.parse_subset("r").unwrap()
        );
    }

    #[test]
    fn composition_follows_point_by_point() {
        let sp = Arc::new(testdata::ex15());
        let f = SpaceMap::new(sp.clone(), sp.clone(), vec![1, 2, 3, 0]).unwrap();
        let g = SpaceMap::new(sp.clone(), sp.clone(), vec![3, 2, 1, 0]).unwrap();
        let comp = SpaceMap::compose(&f, &g).unwrap();
        assert_eq!(comp.table(), &[2, 1, 0, 3]);
        let other = Arc::new(testdata::ex16());
        let h = SpaceMap::new(other.clone(), other, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(
            SpaceMap::compose(&f, &h),
            Err(MapError::ComposeMismatch)
        ));
    }

    #[test]
    fn text_format_resolves_space_paths() {
        let base = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        let text = std::fs::read_to_string(base.join("ex15_to_ex16.map")).unwrap();
        let f = parse_map(&text, &base).unwrap();
        assert_eq!(f.table(), &[0, 1, 2, 3]);
        assert_eq!(f.domain(), &testdata::ex15());
        assert_eq!(f.codomain(), &testdata::ex16());
    }

    #[test]
    fn structured_round_trip_preserves_the_map() {
        let f = cross_identity();
        let json = serde_json::to_string(&f.to_doc()).unwrap();
        let parsed = parse_map(&json, std::path::Path::new(".")).unwrap();
        assert_eq!(parsed, f);
    }

    #[test]
    fn incomplete_tables_are_rejected() {
        let doc = MapDoc {
            domain: testdata::ex15().to_doc(),
            codomain: testdata::ex16().to_doc(),
            table: vec![("q".into(), "q".into()), ("r".into(), "r".into())],
        };
        assert!(matches!(
            SpaceMap::from_doc(&doc),
            Err(MapError::UnmappedPoint { .. })
        ));
    }
}
