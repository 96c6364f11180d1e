//! Rendering of library results in three styles: `text` for reading,
//! `structured` for machine consumption (JSON that re-serializes to the same
//! bytes), and `tabular` for flat tab-separated rows that diff cleanly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::claims::{InstanceDoc, MineReport, SuiteReport};
use crate::maps::{audit, AuditRow, MapClassification, MapDoc, SpaceMap};
use crate::operators::{self, SetClass, SubsetClassification};
use crate::separation::{SeparationEquivalents, SeparationProfile};
use crate::space::{FiniteSpace, SpaceDoc, SubsetMask};

/// Output style selector shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
    Tabular,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Structured => "structured",
            Format::Tabular => "tabular",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "structured" => Ok(Format::Structured),
            "tabular" => Ok(Format::Tabular),
            other => Err(format!(
                "unknown format `{other}`, expected text, structured, or tabular"
            )),
        }
    }
}

fn set_text(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

/// The line-oriented text form of a structured space document.
pub fn space_doc_text(doc: &SpaceDoc) -> String {
    let mut out = format!("points: {}\n", doc.points.join(" "));
    for open in &doc.opens {
        if open.is_empty() {
            out.push_str("open:\n");
        } else if open.len() == doc.points.len() {
            out.push_str("open: *\n");
        } else {
            out.push_str(&format!("open: {}\n", open.join(" ")));
        }
    }
    out
}

fn space_doc_compact(doc: &SpaceDoc) -> String {
    let opens: Vec<String> = doc.opens.iter().map(|o| set_text(o)).collect();
    format!("points {} opens {}", doc.points.join(" "), opens.join(" "))
}

fn map_doc_compact(doc: &MapDoc) -> String {
    let pairs: Vec<String> = doc
        .table
        .iter()
        .map(|(from, to)| format!("{from}->{to}"))
        .collect();
    format!(
        "[{}] from {} to {}",
        pairs.join(" "),
        space_doc_compact(&doc.domain),
        space_doc_compact(&doc.codomain)
    )
}

/// One-line description of a witness or mining instance.
pub fn instance_compact(instance: &InstanceDoc) -> String {
    match instance {
        InstanceDoc::SpaceSubset { space, subset } => {
            format!(
                "subset {} in {}",
                set_text(subset),
                space_doc_compact(space)
            )
        }
        InstanceDoc::Space { space } => space_doc_compact(space),
        InstanceDoc::Map { map } => map_doc_compact(map),
        InstanceDoc::MapPair { first, second } => format!(
            "first {} then {}",
            map_doc_compact(first),
            map_doc_compact(second)
        ),
    }
}

/// Indented multi-line description of a witness instance.
pub fn instance_block(instance: &InstanceDoc, indent: &str) -> String {
    let mut out = String::new();
    let mut push_doc = |title: &str, doc: &SpaceDoc| {
        out.push_str(&format!("{indent}{title}:\n"));
        for line in space_doc_text(doc).lines() {
            out.push_str(&format!("{indent}  {line}\n"));
        }
    };
    match instance {
        InstanceDoc::SpaceSubset { space, subset } => {
            push_doc("space", space);
            out.push_str(&format!("{indent}subset: {}\n", set_text(subset)));
        }
        InstanceDoc::Space { space } => push_doc("space", space),
        InstanceDoc::Map { map } => {
            push_doc("domain", &map.domain);
            push_doc("codomain", &map.codomain);
            for (from, to) in &map.table {
                out.push_str(&format!("{indent}map: {from} -> {to}\n"));
            }
        }
        InstanceDoc::MapPair { first, second } => {
            push_doc("domain", &first.domain);
            push_doc("middle", &first.codomain);
            push_doc("codomain", &second.codomain);
            for (from, to) in &first.table {
                out.push_str(&format!("{indent}first: {from} -> {to}\n"));
            }
            for (from, to) in &second.table {
                out.push_str(&format!("{indent}second: {from} -> {to}\n"));
            }
        }
    }
    out
}

/// Classification of one subset: the sixteen class flags by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetReport {
    pub subset: Vec<String>,
    pub flags: Vec<FlagRow>,
}

/// One named boolean in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagRow {
    pub name: String,
    pub holds: bool,
}

impl SubsetReport {
    pub fn compute(sp: &FiniteSpace, m: SubsetMask) -> Self {
        let class = SubsetClassification::classify(sp, m);
        SubsetReport {
            subset: sp.ground().labels_of(m),
            flags: class
                .flags()
                .iter()
                .map(|(c, holds)| FlagRow {
                    name: c.name().to_string(),
                    holds: *holds,
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("subset {}\n", set_text(&self.subset));
        let width = self.flags.iter().map(|f| f.name.len()).max().unwrap_or(0);
        for f in &self.flags {
            out.push_str(&format!("  {:width$}  {}\n", f.name, f.holds));
        }
        out
    }

    pub fn tabular(&self) -> String {
        let mut out = String::from("class\tholds\n");
        for f in &self.flags {
            out.push_str(&format!("{}\t{}\n", f.name, f.holds));
        }
        out
    }
}

/// Every subset of a space belonging to one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub class: String,
    pub members: Vec<Vec<String>>,
}

impl FamilyReport {
    pub fn compute(sp: &FiniteSpace, class: SetClass) -> Self {
        FamilyReport {
            class: class.name().to_string(),
            members: class
                .family(sp)
                .into_iter()
                .map(|m| sp.ground().labels_of(m))
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("{} family, {} members\n", self.class, self.members.len());
        for member in &self.members {
            out.push_str(&format!("  {}\n", set_text(member)));
        }
        out
    }

    pub fn tabular(&self) -> String {
        let mut out = String::from("member\n");
        for member in &self.members {
            out.push_str(&format!("{}\n", set_text(member)));
        }
        out
    }
}

/// The eight derived sets of one subset, in a fixed presentation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub subset: Vec<String>,
    pub values: Vec<NamedSet>,
}

/// One derived set with the operator that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSet {
    pub name: String,
    pub members: Vec<String>,
}

impl ClosureReport {
    pub fn compute(sp: &FiniteSpace, m: SubsetMask) -> Self {
        let rows: [(&str, SubsetMask); 8] = [
            ("interior", sp.interior(m)),
            ("closure", sp.closure(m)),
            ("semi-closure", operators::semi_closure(sp, m)),
            ("semi-interior", operators::semi_interior(sp, m)),
            ("cstar-closure", operators::cstar_closure(sp, m)),
            (
                "cstar-interior",
                operators::gen_interior(sp, operators::ClosureKind::Cstar, m).value,
            ),
            ("scstar-closure", operators::scstar_closure(sp, m)),
            ("scstar-interior", operators::scstar_interior(sp, m)),
        ];
        ClosureReport {
            subset: sp.ground().labels_of(m),
            values: rows
                .iter()
                .map(|(name, v)| NamedSet {
                    name: name.to_string(),
                    members: sp.ground().labels_of(*v),
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("subset {}\n", set_text(&self.subset));
        let width = self.values.iter().map(|v| v.name.len()).max().unwrap_or(0);
        for v in &self.values {
            out.push_str(&format!("  {:width$}  {}\n", v.name, set_text(&v.members)));
        }
        out
    }

    pub fn tabular(&self) -> String {
        let mut out = String::from("operator\tresult\n");
        for v in &self.values {
            out.push_str(&format!("{}\t{}\n", v.name, set_text(&v.members)));
        }
        out
    }
}

/// Text form of a separation profile, one named flag per line.
pub fn profile_text(profile: &SeparationProfile) -> String {
    let mut out = String::new();
    out.push_str(&format!("normal: {}\n", profile.normal));
    out.push_str(&format!("g-normal: {}\n", profile.g_normal));
    out.push_str(&format!("scstar-normal: {}\n", profile.scstar_normal));
    out.push_str(&format!(
        "binary-cover-shrinks: {}\n",
        profile.binary_cover_shrinks
    ));
    out.push_str(&format!(
        "closed-open-interpolation: {}\n",
        profile.closed_open_interpolation
    ));
    for (label, value) in SeparationEquivalents::LABELS
        .iter()
        .zip(profile.equivalents.as_array())
    {
        out.push_str(&format!("{label}: {value}\n"));
    }
    out
}

/// Tab-separated form of a separation profile.
pub fn profile_tabular(profile: &SeparationProfile) -> String {
    let mut out = String::from("property\tholds\n");
    for line in profile_text(profile).lines() {
        let (name, value) = line.split_once(": ").expect("name: value lines");
        out.push_str(&format!("{name}\t{value}\n"));
    }
    out
}

/// Classification flags of one map plus the audit of its characterizations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapAuditReport {
    pub classification: MapClassification,
    pub audit: Vec<AuditRow>,
}

impl MapAuditReport {
    pub fn compute(f: &SpaceMap) -> Self {
        MapAuditReport {
            classification: MapClassification::classify(f),
            audit: audit(f),
        }
    }

    pub fn text(&self) -> String {
        let flags = self.classification.flags();
        let width = flags.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        let mut out = String::from("classification\n");
        for (name, holds) in flags {
            out.push_str(&format!("  {name:width$}  {holds}\n"));
        }
        out.push_str("characterization audit\n");
        for row in &self.audit {
            let verdict = if row.flag_holds == row.criterion_holds {
                "agree"
            } else {
                "DISAGREE"
            };
            out.push_str(&format!(
                "  {}  flag {}={} criterion {}={}  {}\n",
                row.claim, row.flag, row.flag_holds, row.criterion, row.criterion_holds, verdict
            ));
        }
        out
    }

    pub fn tabular(&self) -> String {
        let mut out = String::from("kind\tname\tvalue\n");
        for (name, holds) in self.classification.flags() {
            out.push_str(&format!("flag\t{name}\t{holds}\n"));
        }
        for row in &self.audit {
            out.push_str(&format!(
                "audit\t{}\t{}\n",
                row.claim,
                row.flag_holds == row.criterion_holds
            ));
        }
        out
    }
}

/// Topology counts per point count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub rows: Vec<EnumerateRow>,
}

/// Counts for one point count; the homeomorphism column is present only when
/// the permutation reduction was in budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateRow {
    pub points: usize,
    pub labeled: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homeo_classes: Option<u64>,
}

impl EnumerateReport {
    pub fn text(&self) -> String {
        let mut out = String::from("points  labeled   homeo-classes\n");
        for row in &self.rows {
            let homeo = row
                .homeo_classes
                .map(|h| h.to_string())
                .unwrap_or_else(|| "-".to_string());
            out.push_str(&format!(
                "{:<6}  {:<8}  {}\n",
                row.points, row.labeled, homeo
            ));
        }
        out
    }

    pub fn tabular(&self) -> String {
        let mut out = String::from("points\tlabeled\thomeo_classes\n");
        for row in &self.rows {
            let homeo = row
                .homeo_classes
                .map(|h| h.to_string())
                .unwrap_or_else(|| "-".to_string());
            out.push_str(&format!("{}\t{}\t{}\n", row.points, row.labeled, homeo));
        }
        out
    }
}

/// Text form of a verification run, one block per claim.
pub fn suite_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for v in &report.verdicts {
        let status = match v.status {
            crate::claims::ClaimStatus::Forced => "forced",
            crate::claims::ClaimStatus::Stated => "stated",
        };
        out.push_str(&format!(
            "{}  {}  over {}\n  instances {}  violations {}\n",
            v.id, status, v.bounds, v.instances, v.violations
        ));
        if let Some(labels) = &v.condition_labels {
            out.push_str(&format!("  conditions: {}\n", labels.join(" | ")));
        }
        if let Some(tally) = &v.condition_tally {
            for t in tally {
                out.push_str(&format!("  pattern {} x{}\n", t.pattern, t.count));
            }
        }
        if let Some(w) = &v.witness {
            out.push_str(&format!("  witness: {}\n", w.failed));
            out.push_str(&instance_block(&w.instance, "    "));
        }
    }
    out
}

/// Flat tab-separated form of a verification run, one row per claim.
pub fn suite_tabular(report: &SuiteReport) -> String {
    let mut out = String::from("id\tstatus\tbounds\tinstances\tviolations\twitness\n");
    for v in &report.verdicts {
        let status = match v.status {
            crate::claims::ClaimStatus::Forced => "forced",
            crate::claims::ClaimStatus::Stated => "stated",
        };
        let witness = v
            .witness
            .as_ref()
            .map(|w| format!("{}; {}", w.failed, instance_compact(&w.instance)))
            .unwrap_or_else(|| "-".to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            v.id, status, v.bounds, v.instances, v.violations, witness
        ));
    }
    out
}

/// Text form of a mining run.
pub fn mine_text(report: &MineReport) -> String {
    let mut out = format!(
        "target {} over {}\nfindings {}{}\n",
        report.target,
        report.scope,
        report.findings.len(),
        if report.truncated { " (truncated)" } else { "" }
    );
    for (i, finding) in report.findings.iter().enumerate() {
        out.push_str(&format!(
            "  {}. {}\n",
            i + 1,
            instance_compact(&finding.instance)
        ));
    }
    out
}

/// Flat tab-separated form of a mining run, one row per finding.
pub fn mine_tabular(report: &MineReport) -> String {
    let mut out = String::from("index\ttarget\tinstance\n");
    for (i, finding) in report.findings.iter().enumerate() {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            i + 1,
            finding.target,
            instance_compact(&finding.instance)
        ));
    }
    out
}
