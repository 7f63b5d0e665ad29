//! Per-check state: parameters, collected assertions and phase timings.

use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::gflin::{field_make, FieldCtx};
use crate::modrep::{is_isomorphic, Iso, Module};

use super::report::{Assertion, Params, Phase, Report, Verdict, Witness, REPORT_FORMAT};

pub struct Ctx {
    pub params: Params,
    assertions: Vec<Assertion>,
    notes: Vec<String>,
    timing: Vec<Phase>,
    phase: Option<(String, Instant)>,
}

impl Ctx {
    pub fn new(params: Params) -> Self {
        Ctx {
            params,
            assertions: Vec::new(),
            notes: Vec::new(),
            timing: Vec::new(),
            phase: None,
        }
    }

    pub fn p(&self) -> usize {
        self.params.p.expect("validated")
    }

    pub fn k(&self) -> usize {
        self.params.k.expect("validated")
    }

    /// `GF(p^e)` with `e` the requested extension degree.
    pub fn field(&self) -> Result<Arc<FieldCtx>> {
        let f = field_make(self.p() as u32, self.params.field_ext)?;
        Ok(f)
    }

    /// A field of degree a multiple of both `d` and the requested extension degree.
    pub fn field_containing(&self, d: u32) -> Result<Arc<FieldCtx>> {
        let e = self.params.field_ext;
        let g = gcd(d, e);
        field_make(self.p() as u32, d / g * e)
    }

    pub fn note(&mut self, s: impl Into<String>) {
        let s = s.into();
        if !self.notes.contains(&s) {
            self.notes.push(s);
        }
    }

    pub fn note_field(&mut self, f: &FieldCtx) {
        self.note(format!(
            "{} stands in for an algebraically closed field of characteristic {}",
            f.name(),
            f.p()
        ));
    }

    /// Starts a named timing phase, closing the previous one.
    pub fn phase(&mut self, name: &str) {
        self.end_phase();
        self.phase = Some((name.to_string(), Instant::now()));
    }

    pub fn end_phase(&mut self) {
        if let Some((name, t)) = self.phase.take() {
            self.timing.push(Phase {
                name,
                millis: t.elapsed().as_millis() as u64,
            });
        }
    }

    /// Fails with a budget error when `m` is larger than the dimension budget.
    pub fn guard(&self, m: &Module) -> Result<()> {
        if m.dim() > self.params.budget_dim {
            return Err(Error::Budget {
                what: "module dimension",
                needed: m.dim(),
                limit: self.params.budget_dim,
            });
        }
        Ok(())
    }

    pub fn record(&mut self, claim: impl Into<String>, holds: bool, witnesses: Vec<Witness>) -> bool {
        self.push(claim, if holds { Verdict::Pass } else { Verdict::Fail }, witnesses, None);
        holds
    }

    pub fn push(&mut self, claim: impl Into<String>, verdict: Verdict, witnesses: Vec<Witness>, detail: Option<String>) {
        self.assertions.push(Assertion {
            claim: claim.into(),
            verdict,
            witnesses,
            detail,
        });
    }

    /// Asserts `a ≅ b`, recording the intertwiner on success.
    pub fn assert_iso(&mut self, claim: impl Into<String>, a: &Module, b: &Module) -> Result<bool> {
        let base = vec![Witness::module(a.label(), a), Witness::module(b.label(), b)];
        let iso = is_isomorphic(a, b)?;
        Ok(self.record_iso(claim, iso, base))
    }

    /// Asserts `a ≇ b`.
    pub fn assert_not_iso(&mut self, claim: impl Into<String>, a: &Module, b: &Module) -> Result<bool> {
        let mut w = vec![Witness::module(a.label(), a), Witness::module(b.label(), b)];
        let claim = claim.into();
        match is_isomorphic(a, b)? {
            Iso::No => {
                w.push(Witness::value("isomorphism test", "no"));
                self.push(claim, Verdict::Pass, w, None);
                Ok(true)
            }
            Iso::Yes(m) => {
                w.push(Witness::matrix("isomorphism", &m));
                self.push(claim, Verdict::Fail, w, None);
                Ok(false)
            }
            Iso::Inconclusive(why) => {
                self.push(claim, Verdict::Inconclusive, w, Some(why));
                Ok(false)
            }
        }
    }

    pub fn record_iso(&mut self, claim: impl Into<String>, iso: Iso, mut w: Vec<Witness>) -> bool {
        let claim = claim.into();
        match iso {
            Iso::Yes(m) => {
                w.push(Witness::matrix("isomorphism", &m));
                self.push(claim, Verdict::Pass, w, None);
                true
            }
            Iso::No => {
                self.push(claim, Verdict::Fail, w, Some("not isomorphic".into()));
                false
            }
            Iso::Inconclusive(why) => {
                self.push(claim, Verdict::Inconclusive, w, Some(why));
                false
            }
        }
    }

    pub fn finish(mut self, check_id: &str) -> Report {
        self.end_phase();
        // a pass needs a witness
        for a in &mut self.assertions {
            if a.verdict == Verdict::Pass && a.witnesses.is_empty() {
                a.verdict = Verdict::Inconclusive;
                a.detail = Some("no witness recorded".into());
            }
        }
        let verdict = if self.assertions.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::combine(self.assertions.iter().map(|a| a.verdict))
        };
        Report {
            format: REPORT_FORMAT,
            check_id: check_id.to_string(),
            params: self.params,
            verdict,
            assertions: self.assertions,
            notes: self.notes,
            timing: self.timing,
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
