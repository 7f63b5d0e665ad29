//! Structured verification reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cache::content_hash;
use crate::gflin::text::write_mat;
use crate::gflin::Mat;
use crate::modrep::Module;

pub const REPORT_FORMAT: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    BudgetExceeded,
}

impl Verdict {
    /// Process exit status for this verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
            Verdict::BudgetExceeded => 3,
        }
    }

    /// Combined verdict of several reports: any failure dominates, then budget, then
    /// inconclusive.
    pub fn combine(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Pass;
        for v in vs {
            out = match (out, v) {
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                (Verdict::BudgetExceeded, _) | (_, Verdict::BudgetExceeded) => Verdict::BudgetExceeded,
                (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
                _ => Verdict::Pass,
            };
        }
        out
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Module,
    Matrix,
    Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub kind: WitnessKind,
    /// Content hash for modules and matrices, the value itself otherwise.
    pub digest: String,
}

fn hash_text(s: &str) -> String {
    Sha256::digest(s.as_bytes())[..16]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Witness {
    pub fn module(label: impl Into<String>, m: &Module) -> Self {
        Witness {
            label: format!("{} (dim {})", label.into(), m.dim()),
            kind: WitnessKind::Module,
            digest: content_hash(m),
        }
    }

    pub fn matrix(label: impl Into<String>, a: &Mat) -> Self {
        Witness {
            label: format!("{} ({}x{})", label.into(), a.rows(), a.cols()),
            kind: WitnessKind::Matrix,
            digest: hash_text(&write_mat(a)),
        }
    }

    pub fn value(label: impl Into<String>, v: impl ToString) -> Self {
        Witness {
            label: label.into(),
            kind: WitnessKind::Value,
            digest: v.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub claim: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub seed: u64,
    pub budget_dim: usize,
    pub field_ext: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            p: None,
            k: None,
            seed: crate::rng::DEFAULT_SEED,
            budget_dim: crate::modrep::DECOMPOSE_BUDGET,
            field_ext: 1,
        }
    }
}

impl Params {
    pub fn with_pk(mut self, p: usize, k: usize) -> Self {
        self.p = Some(p);
        self.k = Some(k);
        self
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Phase {
    pub name: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format: u32,
    pub check_id: String,
    pub params: Params,
    pub verdict: Verdict,
    pub assertions: Vec<Assertion>,
    #[serde(default)]
    pub notes: Vec<String>,
    /// Wall-clock per phase; not part of the hashed body.
    #[serde(default)]
    pub timing: Vec<Phase>,
}

impl Report {
    /// Canonical JSON of everything except timing.
    pub fn body_json(&self) -> String {
        let mut body = self.clone();
        body.timing.clear();
        serde_json::to_string_pretty(&body).expect("report serializes")
    }

    pub fn body_hash(&self) -> String {
        hash_text(&self.body_json())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::Parse(e.to_string()))
    }

    pub fn total_millis(&self) -> u64 {
        self.timing.iter().map(|p| p.millis).sum()
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let mut params = Vec::new();
        if let Some(p) = self.params.p {
            params.push(format!("p={p}"));
        }
        if let Some(k) = self.params.k {
            params.push(format!("k={k}"));
        }
        let failed = self
            .assertions
            .iter()
            .filter(|a| a.verdict != Verdict::Pass)
            .count();
        format!(
            "{:<30} {:<10} {:<16} {}/{} assertions, {} ms",
            self.check_id,
            params.join(" "),
            self.verdict.to_string(),
            self.assertions.len() - failed,
            self.assertions.len(),
            self.total_millis()
        )
    }
}
