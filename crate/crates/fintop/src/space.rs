//! Finite topological spaces on small ground sets.
//!
//! Points are indices into a list of labels and subsets are bit masks, so a
//! space on up to 16 points fits in a machine word per subset. A family of
//! subsets is a topology when it contains the empty set and the whole ground
//! set and is closed under pairwise union and intersection; on a finite
//! family that pairwise closure already gives closure under arbitrary unions
//! and intersections.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;

/// Maximum number of points a ground set may carry.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set, one bit per point.
///
/// Bits at and above the ground size are always zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    /// The empty subset.
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Builds a mask from raw bits.
    pub fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    /// Raw bits of the mask.
    pub fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set of `n` points.
    pub fn full(n: usize) -> Self {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    /// The one-point subset `{i}`.
    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    /// Whether point `i` belongs to the subset.
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    /// Set difference `self \ other`.
    pub fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement relative to a ground set of `n` points.
    pub fn complement_in(self, n: usize) -> Self {
        Self::full(n).minus(self)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of points in the subset.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Iterates member points in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({:#b})", self.0)
    }
}

/// The labelled point set a space is built over.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Builds a ground set from distinct labels; at most [`MAX_POINTS`] of them.
    pub fn new(labels: Vec<String>) -> Result<Self, SpaceParseError> {
        if labels.is_empty() {
            return Err(SpaceParseError::NoPoints);
        }
        if labels.len() > MAX_POINTS {
            return Err(SpaceParseError::TooManyPoints { n: labels.len() });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(SpaceParseError::Syntax {
                    line: 1,
                    msg: "empty point label".into(),
                });
            }
            if !seen.insert(l.clone()) {
                return Err(SpaceParseError::DuplicateLabel { label: l.clone() });
            }
        }
        Ok(GroundSet { labels })
    }

    /// Ground set labelled `a`, `b`, `c`, ... for generated spaces.
    pub fn alphabetic(n: usize) -> Result<Self, SpaceParseError> {
        let labels = (0..n)
            .map(|i| char::from(b'a' + i as u8).to_string())
            .collect();
        Self::new(labels)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Mask holding every point.
    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.size())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Renders a mask as `{q,r}`; the empty subset renders as `{}`.
    pub fn format_subset(&self, m: SubsetMask) -> String {
        let mut out = String::from("{");
        for (k, i) in m.points().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i]);
        }
        out.push('}');
        out
    }

    /// Parses a comma-separated label list; `""` is the empty subset and `*`
    /// the whole ground set.
    pub fn parse_subset(&self, text: &str) -> Result<SubsetMask, SpaceParseError> {
        let text = text.trim();
        if text.is_empty() || text == "{}" {
            return Ok(SubsetMask::EMPTY);
        }
        if text == "*" {
            return Ok(self.full());
        }
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(text);
        let mut mask = SubsetMask::EMPTY;
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let i = self
                .index_of(tok)
                .ok_or_else(|| SpaceParseError::UnknownLabel {
                    line: 0,
                    label: tok.to_string(),
                })?;
            mask = mask.union(SubsetMask::singleton(i));
        }
        Ok(mask)
    }

    /// Converts label lists to a mask, erroring on unknown labels.
    pub fn mask_of(&self, labels: &[String]) -> Result<SubsetMask, SpaceParseError> {
        let mut mask = SubsetMask::EMPTY;
        for l in labels {
            let i = self
                .index_of(l)
                .ok_or_else(|| SpaceParseError::UnknownLabel {
                    line: 0,
                    label: l.clone(),
                })?;
            mask = mask.union(SubsetMask::singleton(i));
        }
        Ok(mask)
    }

    /// Converts a mask back to the list of member labels.
    pub fn labels_of(&self, m: SubsetMask) -> Vec<String> {
        m.points().map(|i| self.labels[i].clone()).collect()
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet({})", self.labels.join(" "))
    }
}

/// Why a family of subsets fails the topology axioms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyViolation {
    #[error("the empty set is not in the family")]
    MissingEmpty,
    #[error("the whole ground set is not in the family")]
    MissingFull,
    #[error("union {union} of {a} and {b} is not in the family")]
    MissingUnion {
        a: String,
        b: String,
        union: String,
        masks: (SubsetMask, SubsetMask, SubsetMask),
    },
    #[error("intersection {inter} of {a} and {b} is not in the family")]
    MissingIntersection {
        a: String,
        b: String,
        inter: String,
        masks: (SubsetMask, SubsetMask, SubsetMask),
    },
}

/// Errors raised while reading a space description.
#[derive(Debug, thiserror::Error)]
pub enum SpaceParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown point label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("duplicate point label `{label}`")]
    DuplicateLabel { label: String },
    #[error("line {line}: duplicate open set")]
    DuplicateOpen { line: usize },
    #[error("a space needs at least one point")]
    NoPoints,
    #[error("{n} points exceed the supported maximum of {MAX_POINTS}")]
    TooManyPoints { n: usize },
    #[error("not a topology: {0}")]
    Invalid(#[from] TopologyViolation),
    #[error("structured document: {0}")]
    Json(#[from] serde_json::Error),
}

/// Checks the topology axioms, reporting the first violation found when
/// scanning the family in ascending mask order (unions before intersections
/// within a pair).
pub fn validate_topology(
    ground: &GroundSet,
    opens: &[SubsetMask],
) -> Result<(), TopologyViolation> {
    let full = ground.full();
    let mut sorted: Vec<SubsetMask> = opens.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.binary_search(&SubsetMask::EMPTY).is_err() {
        return Err(TopologyViolation::MissingEmpty);
    }
    if sorted.binary_search(&full).is_err() {
        return Err(TopologyViolation::MissingFull);
    }
    for i in 0..sorted.len() {
        for j in (i + 1)..sorted.len() {
            let (a, b) = (sorted[i], sorted[j]);
            let u = a.union(b);
            if sorted.binary_search(&u).is_err() {
                return Err(TopologyViolation::MissingUnion {
                    a: ground.format_subset(a),
                    b: ground.format_subset(b),
                    union: ground.format_subset(u),
                    masks: (a, b, u),
                });
            }
            let v = a.intersect(b);
            if sorted.binary_search(&v).is_err() {
                return Err(TopologyViolation::MissingIntersection {
                    a: ground.format_subset(a),
                    b: ground.format_subset(b),
                    inter: ground.format_subset(v),
                    masks: (a, b, v),
                });
            }
        }
    }
    Ok(())
}

/// A validated finite topological space.
///
/// Immutable after construction; derived tables are memoized behind a
/// [`OnceLock`], so values can be shared freely between threads.
pub struct FiniteSpace {
    ground: GroundSet,
    opens: Vec<SubsetMask>,
    open_bits: Vec<u64>,
    min_nbd: Vec<SubsetMask>,
    analysis: OnceLock<Analysis>,
}

impl FiniteSpace {
    /// Validates the family and builds the space. Opens are sorted ascending
    /// and deduplicated.
    pub fn new(ground: GroundSet, mut opens: Vec<SubsetMask>) -> Result<Self, TopologyViolation> {
        opens.sort();
        opens.dedup();
        validate_topology(&ground, &opens)?;
        Ok(Self::build(ground, opens))
    }

    /// Builds from a family already known to be a topology, sorted ascending.
    pub(crate) fn from_opens_unchecked(ground: GroundSet, opens: Vec<SubsetMask>) -> Self {
        debug_assert!(validate_topology(&ground, &opens).is_ok());
        Self::build(ground, opens)
    }

    fn build(ground: GroundSet, opens: Vec<SubsetMask>) -> Self {
        let n = ground.size();
        let words = (1usize << n).div_ceil(64);
        let mut open_bits = vec![0u64; words];
        for o in &opens {
            let b = o.bits() as usize;
            open_bits[b / 64] |= 1 << (b % 64);
        }
        let mut min_nbd = vec![ground.full(); n];
        for o in &opens {
            for (x, nbd) in min_nbd.iter_mut().enumerate() {
                if o.contains(x) {
                    *nbd = nbd.intersect(*o);
                }
            }
        }
        FiniteSpace {
            ground,
            opens,
            open_bits,
            min_nbd,
            analysis: OnceLock::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.size()
    }

    /// Mask of the whole ground set.
    pub fn full(&self) -> SubsetMask {
        self.ground.full()
    }

    /// Complement of `m` within this space.
    pub fn complement(&self, m: SubsetMask) -> SubsetMask {
        m.complement_in(self.size())
    }

    /// The open sets, ascending by mask.
    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    /// The closed sets, ascending by mask.
    pub fn closeds(&self) -> Vec<SubsetMask> {
        let mut cs: Vec<SubsetMask> = self.opens.iter().map(|o| self.complement(*o)).collect();
        cs.sort();
        cs
    }

    pub fn is_open(&self, m: SubsetMask) -> bool {
        let b = m.bits() as usize;
        self.open_bits[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn is_closed(&self, m: SubsetMask) -> bool {
        self.is_open(self.complement(m))
    }

    /// Smallest open set containing the point `x`.
    ///
    /// A finite topology is closed under arbitrary intersections, so this is
    /// itself open, and a set is open exactly when it contains the minimal
    /// neighbourhood of each of its points.
    pub fn min_nbd(&self, x: usize) -> SubsetMask {
        self.min_nbd[x]
    }

    /// Union of all open subsets of `m`.
    pub fn interior(&self, m: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for x in m.points() {
            if self.min_nbd[x].is_subset_of(m) {
                out = out.union(SubsetMask::singleton(x));
            }
        }
        out
    }

    /// Intersection of all closed supersets of `m`.
    pub fn closure(&self, m: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for x in 0..self.size() {
            if !self.min_nbd[x].intersect(m).is_empty() {
                out = out.union(SubsetMask::singleton(x));
            }
        }
        out
    }

    pub(crate) fn analysis(&self) -> &Analysis {
        self.analysis.get_or_init(|| Analysis::compute(self))
    }

    /// Renders the space in the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("points: {}\n", self.ground.labels().join(" "));
        for o in &self.opens {
            if o.is_empty() {
                out.push_str("open:\n");
            } else if *o == self.full() {
                out.push_str("open: *\n");
            } else {
                let labels: Vec<&str> = o.points().map(|i| self.ground.label(i)).collect();
                out.push_str(&format!("open: {}\n", labels.join(" ")));
            }
        }
        out
    }

    /// Structured form of the space for serde formats.
    pub fn to_doc(&self) -> SpaceDoc {
        SpaceDoc {
            points: self.ground.labels().to_vec(),
            opens: self
                .opens
                .iter()
                .map(|o| self.ground.labels_of(*o))
                .collect(),
        }
    }

    /// Rebuilds a space from its structured form.
    pub fn from_doc(doc: &SpaceDoc) -> Result<Self, SpaceParseError> {
        let ground = GroundSet::new(doc.points.clone())?;
        let mut opens = Vec::with_capacity(doc.opens.len());
        let mut seen = BTreeSet::new();
        for labels in &doc.opens {
            let m = ground.mask_of(labels)?;
            if !seen.insert(m) {
                return Err(SpaceParseError::DuplicateOpen { line: 0 });
            }
            opens.push(m);
        }
        Ok(FiniteSpace::new(ground, opens)?)
    }
}

impl Clone for FiniteSpace {
    fn clone(&self) -> Self {
        FiniteSpace {
            ground: self.ground.clone(),
            opens: self.opens.clone(),
            open_bits: self.open_bits.clone(),
            min_nbd: self.min_nbd.clone(),
            analysis: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.opens == other.opens
    }
}

impl Eq for FiniteSpace {}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .opens
            .iter()
            .map(|o| self.ground.format_subset(*o))
            .collect();
        write!(f, "FiniteSpace{{{}}}", sets.join(", "))
    }
}

/// Structured (serde) form of a space document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

/// Parses either format: the line-oriented text form or, when the first
/// non-blank byte is `{`, the structured JSON form.
pub fn parse_space(text: &str) -> Result<FiniteSpace, SpaceParseError> {
    if text.trim_start().starts_with('{') {
        let doc: SpaceDoc = serde_json::from_str(text)?;
        return FiniteSpace::from_doc(&doc);
    }
    parse_space_text(text)
}

fn parse_space_text(text: &str) -> Result<FiniteSpace, SpaceParseError> {
    let mut ground: Option<GroundSet> = None;
    let mut opens: Vec<SubsetMask> = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("points:") {
            if ground.is_some() {
                return Err(SpaceParseError::Syntax {
                    line: line_no,
                    msg: "repeated points line".into(),
                });
            }
            let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            ground = Some(GroundSet::new(labels)?);
        } else if let Some(rest) = line.strip_prefix("open:") {
            let ground = ground.as_ref().ok_or(SpaceParseError::Syntax {
                line: line_no,
                msg: "open set listed before the points line".into(),
            })?;
            let rest = rest.trim();
            let mask = if rest == "*" {
                ground.full()
            } else {
                let mut m = SubsetMask::EMPTY;
                for tok in rest.split_whitespace() {
                    let i = ground
                        .index_of(tok)
                        .ok_or_else(|| SpaceParseError::UnknownLabel {
                            line: line_no,
                            label: tok.to_string(),
                        })?;
                    m = m.union(SubsetMask::singleton(i));
                }
                m
            };
            if !seen.insert(mask) {
                return Err(SpaceParseError::DuplicateOpen { line: line_no });
            }
            opens.push(mask);
        } else {
            return Err(SpaceParseError::Syntax {
                line: line_no,
                msg: format!("expected `points:` or `open:`, found `{line}`"),
            });
        }
    }
    let ground = ground.ok_or(SpaceParseError::NoPoints)?;
    Ok(FiniteSpace::new(ground, opens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    #[test]
    fn parse_four_point_space_with_five_opens() {
        let sp = testdata::ex15();
        assert_eq!(sp.size(), 4);
        assert_eq!(sp.opens().len(), 5);
        assert!(sp.is_open(sp.ground().parse_subset("r,t").unwrap()));
        assert!(!sp.is_open(sp.ground().parse_subset("q").unwrap()));
    }

    #[test]
    fn missing_union_is_reported_with_the_offending_pair() {
        let ground = GroundSet::new(vec!["q".into(), "r".into(), "s".into(), "t".into()]).unwrap();
        let opens = vec![
            SubsetMask::EMPTY,
            ground.parse_subset("q").unwrap(),
            ground.parse_subset("s,t").unwrap(),
            ground.full(),
        ];
        let err = validate_topology(&ground, &opens).unwrap_err();
        match err {
            TopologyViolation::MissingUnion { union, masks, .. } => {
                assert_eq!(union, "{q,s,t}");
                assert_eq!(masks.0, ground.parse_subset("q").unwrap());
                assert_eq!(masks.1, ground.parse_subset("s,t").unwrap());
            }
            other => panic!("expected MissingUnion, got {other:?}"),
        }
    }

    #[test]
    fn missing_union_on_three_points() {
        let ground = GroundSet::new(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let opens = vec![
            SubsetMask::EMPTY,
            SubsetMask::singleton(0),
            SubsetMask::singleton(1),
            ground.full(),
        ];
        let err = validate_topology(&ground, &opens).unwrap_err();
        assert!(matches!(err, TopologyViolation::MissingUnion { .. }));
    }

    #[test]
    fn empty_and_full_are_required() {
        let ground = GroundSet::new(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(
            validate_topology(&ground, &[ground.full()]),
            Err(TopologyViolation::MissingEmpty)
        );
        assert_eq!(
            validate_topology(&ground, &[SubsetMask::EMPTY]),
            Err(TopologyViolation::MissingFull)
        );
    }

    #[test]
    fn interior_and_closure_on_known_space() {
        let sp = testdata::ex16();
        let g = sp.ground();
        // interior picks the largest open subset, closure the smallest closed superset
        assert_eq!(
            sp.interior(g.parse_subset("q,s,t").unwrap()),
            g.parse_subset("q,s").unwrap()
        );
        assert_eq!(
            sp.closure(g.parse_subset("s").unwrap()),
            g.parse_subset("s,t").unwrap()
        );
        assert_eq!(sp.interior(SubsetMask::EMPTY), SubsetMask::EMPTY);
        assert_eq!(sp.closure(SubsetMask::EMPTY), SubsetMask::EMPTY);
        assert_eq!(sp.interior(sp.full()), sp.full());
        assert_eq!(sp.closure(sp.full()), sp.full());
    }

    #[test]
    fn closure_is_interior_dual() {
        let sp = testdata::ex15();
        for bits in 0..16u32 {
            let m = SubsetMask::from_bits(bits);
            let dual = sp.complement(sp.interior(sp.complement(m)));
            assert_eq!(sp.closure(m), dual);
        }
    }

    #[test]
    fn text_round_trip_preserves_the_space() {
        for sp in [testdata::ex15(), testdata::ex16(), testdata::ex23()] {
            let parsed = parse_space(&sp.to_text()).unwrap();
            assert_eq!(parsed, sp);
        }
    }

    #[test]
    fn structured_round_trip_preserves_the_space() {
        let sp = testdata::ex23();
        let json = serde_json::to_string(&sp.to_doc()).unwrap();
        let parsed = parse_space(&json).unwrap();
        assert_eq!(parsed, sp);
    }

    #[test]
    fn unknown_label_names_the_line() {
        let err = parse_space("points: a b\nopen:\nopen: z\nopen: *\n").unwrap_err();
        match err {
            SpaceParseError::UnknownLabel { line, label } => {
                assert_eq!(line, 3);
                assert_eq!(label, "z");
            }
            other => panic!("expected UnknownLabel, got {other}"),
        }
    }

    #[test]
    fn duplicate_open_sets_are_rejected() {
        let err = parse_space("points: a b\nopen:\nopen: a\nopen: a\nopen: *\n").unwrap_err();
        assert!(matches!(err, SpaceParseError::DuplicateOpen { line: 4 }));
    }

    #[test]
    fn invalid_family_fails_to_parse() {
        let err = parse_space("points: q r s t\nopen:\nopen: q\nopen: s t\nopen: *\n").unwrap_err();
        assert!(matches!(err, SpaceParseError::Invalid(_)));
    }

    #[test]
    fn one_point_space_works() {
        let sp = parse_space("points: a\nopen:\nopen: *\n").unwrap();
        assert_eq!(sp.size(), 1);
        assert_eq!(sp.closure(SubsetMask::singleton(0)), sp.full());
    }

    #[test]
    fn sixteen_points_are_accepted_and_seventeen_rejected() {
        let labels: Vec<String> = (0..16).map(|i| format!("p{i}")).collect();
        let ground = GroundSet::new(labels).unwrap();
        let sp = FiniteSpace::new(ground, vec![SubsetMask::EMPTY, SubsetMask::full(16)]).unwrap();
        assert_eq!(sp.full().len(), 16);
        let too_many: Vec<String> = (0..17).map(|i| format!("p{i}")).collect();
        assert!(matches!(
            GroundSet::new(too_many),
            Err(SpaceParseError::TooManyPoints { n: 17 })
        ));
    }
}
