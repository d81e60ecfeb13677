//! Check reports. Every verification produces one `CheckItem` per law
//! diagram, tagged with a stable label drawn from a fixed enumeration, and
//! failures carry the first differing basis point. Reports are never
//! fail-fast: a suite runs all of its diagrams.

use crate::word::PointWitness;
use serde::Serialize;

/// The fixed enumeration of law labels used in reports.
pub const LABELS: &[&str] = &[
    "mon-com",
    "common",
    "lift.mon.mon",
    "lift.comon.comon",
    "comp-fun",
    "H.1",
    "D.1.5",
    "D.1.17",
    "D.1.18",
    "D.1.18b",
    "T.1.8",
    "canon",
    "E.1.24",
    "P.1.11",
    "P.1.13",
    "T.1.14",
    "id.split",
    "double.ent",
    "E.1.4",
    "E.1.5",
    "E.1.6",
    "E.1.7",
    "E.1.8",
    "E.1.9",
    "E.1.10",
    "E.1.11",
    "E.1.12",
    "E.1.13",
    "E.1.14",
    "E.1.15",
    "P.1.1",
    "D.1.2",
    "D.1.3",
    "bimod",
    "Yang",
    "HH-bim",
    "YB1",
    "YB2",
    "bim.anti",
    "bim.S.E",
    "adj.nat",
    "prop.mate",
    "adj.mon.com",
    "adj.dist",
    "adj.bim",
    "adj.Hopf",
    "adj.tau",
    "Hopf-dual",
    "Hopf-group",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckItem {
    /// Unique machine id of the check within its suite, e.g. "monad.assoc".
    pub id: String,
    /// Law label from [`LABELS`].
    pub label: &'static str,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PointWitness>,
    /// Free-form extra detail (ranks, certificates, derived values).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckItem {
    pub fn new(id: &str, label: &'static str, witness: Option<PointWitness>) -> Self {
        debug_assert!(LABELS.contains(&label), "unknown label {label}");
        CheckItem { id: id.to_string(), label, ok: witness.is_none(), witness, note: None }
    }

    pub fn pass(id: &str, label: &'static str) -> Self {
        Self::new(id, label, None)
    }

    pub fn fail_note(id: &str, label: &'static str, note: String) -> Self {
        let mut c = Self::new(id, label, None);
        c.ok = false;
        c.note = Some(note);
        c
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

/// Overall verdict for a full verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    #[serde(rename = "hopf-monad")]
    HopfMonad,
    #[serde(rename = "bimonad-no-antipode")]
    BimonadNoAntipode,
    #[serde(rename = "not-bimonad")]
    NotBimonad,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Classification::HopfMonad => "hopf-monad",
            Classification::BimonadNoAntipode => "bimonad-no-antipode",
            Classification::NotBimonad => "not-bimonad",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub instance: String,
    pub suite: String,
    pub checks: Vec<CheckItem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(instance: &str, suite: &str) -> Self {
        Report {
            instance: instance.to_string(),
            suite: suite.to_string(),
            checks: Vec::new(),
            classification: None,
            elapsed_ms: 0,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn find(&self, id: &str) -> Option<&CheckItem> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failing(&self) -> Vec<&CheckItem> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("instance: {}  suite: {}\n", self.instance, self.suite));
        for c in &self.checks {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} [{:>10}] {}", c.label, c.id));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  {w}"));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!("  ({n})"));
            }
            out.push('\n');
        }
        if let Some(c) = self.classification {
            out.push_str(&format!("classification: {c}\n"));
        }
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        out
    }
}
