//! Named verification checks, suites and their structured reports.

mod checks;
mod context;
mod oracle;
mod report;

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use context::Ctx;
pub use oracle::{
    exhaustive_submodules, frobenius_instance, mackey_dimensions, mackey_isomorphism,
    meataxe_agreement, omega_inverse_instance,
};
pub use report::{Assertion, Params, Phase, Report, Verdict, Witness, WitnessKind, REPORT_FORMAT};

/// Which of `p`, `k` a check consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Needs {
    Nothing,
    P,
    PK,
}

pub struct CheckInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub needs: Needs,
    run: fn(&mut Ctx) -> Result<()>,
}

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "algebra-smoke",
        summary: "field, matrix and permutation-group property checks",
        needs: Needs::Nothing,
        run: oracle::algebra_smoke,
    },
    CheckInfo {
        id: "trivial-omega-table",
        summary: "Heller translates of the trivial module of S_p are hook Spechts and their duals; period 2p-2 (1 if p = 2)",
        needs: Needs::P,
        run: checks::trivial_omega_table,
    },
    CheckInfo {
        id: "induced-cyclic-decomposition",
        summary: "Ind from C_p to S_p of F is F + Ω² + ... + Ω^(2p-4) plus a projective",
        needs: Needs::P,
        run: checks::induced_cyclic_decomposition,
    },
    CheckInfo {
        id: "lie-klyachko-model",
        summary: "Lie(k) extended to GF(p^d) is induced from a faithful character of C_k",
        needs: Needs::PK,
        run: checks::lie_klyachko_model,
    },
    CheckInfo {
        id: "lie-heller-shift",
        summary: "Ω⁰(Lie(pk)) ≅ Ω¹(Ind_{S_p×S_k}(F ⊠ Lie(k)))",
        needs: Needs::PK,
        run: checks::lie_heller_shift,
    },
    CheckInfo {
        id: "symmetrization-stable",
        summary: "Ω⁰(Lie(pk)) ≅ Ω(S^p(Lie(k))) and Ω⁰(S^p(Lie(k))) ≅ Ω⁰(Ind_{S_k×S_p}(Lie(k) ⊠ F))",
        needs: Needs::PK,
        run: checks::symmetrization_stable,
    },
    CheckInfo {
        id: "lie-period",
        summary: "period of Lie(pk) is 2p-2 (1 if p = 2)",
        needs: Needs::PK,
        run: checks::lie_period,
    },
    CheckInfo {
        id: "hook-induced-indecomposable",
        summary: "Ω⁰(Ind(hook ⊠ P_s)) are indecomposable and give Ω^i(Lie(pk))",
        needs: Needs::PK,
        run: checks::hook_induced_indecomposable,
    },
    CheckInfo {
        id: "lambda-restriction",
        summary: "Res to Δ_k(S_p) of Λ_k is F^|Γ1| + (Ind_{C_p} F)^|Γ2| + projective",
        needs: Needs::PK,
        run: checks::lambda_restriction,
    },
    CheckInfo {
        id: "double-coset-choice",
        summary: "(Δ, D) double cosets meeting p have representatives in the centralizer of Δ_k(C_p)",
        needs: Needs::PK,
        run: checks::double_coset_choice,
    },
    CheckInfo {
        id: "lie-vertex-source",
        summary: "non-projective summands of Ω^i(Lie(pk)) have vertex Δ_k(C_p) and source F or Ω(F)",
        needs: Needs::PK,
        run: checks::lie_vertex_source,
    },
    CheckInfo {
        id: "oracle-suite",
        summary: "meataxe vs exhaustive search, Frobenius reciprocity, Ω∘Ω⁻¹, Mackey dimensions",
        needs: Needs::Nothing,
        run: oracle::oracle_suite,
    },
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

fn validate(info: &CheckInfo, params: &Params) -> Result<()> {
    let missing = |what: &str| Error::BadParams(format!("{} needs {what}", info.id));
    match info.needs {
        Needs::Nothing => Ok(()),
        Needs::P => params.p.map(|_| ()).ok_or_else(|| missing("--p")),
        Needs::PK => {
            params.p.ok_or_else(|| missing("--p"))?;
            params.k.ok_or_else(|| missing("--k"))?;
            Ok(())
        }
    }
}

/// Runs one registered check. Budget overruns and algorithmic failures become verdicts;
/// unknown checks and malformed parameters are errors.
pub fn run_check(check_id: &str, params: &Params) -> Result<Report> {
    let info = check_info(check_id).ok_or_else(|| Error::UnknownCheck(check_id.to_string()))?;
    validate(info, params)?;
    if params.field_ext == 0 {
        return Err(Error::BadParams("field extension degree must be at least 1".into()));
    }
    let mut params = params.clone();
    match info.needs {
        Needs::Nothing => {
            params.p = None;
            params.k = None;
        }
        Needs::P => params.k = None,
        Needs::PK => {}
    }
    crate::rng::set_global_seed(params.seed);
    let start = Instant::now();
    let mut ctx = Ctx::new(params.clone());
    let outcome = (info.run)(&mut ctx);
    ctx.end_phase();
    let mut report = ctx.finish(check_id);
    match outcome {
        Ok(()) => {}
        Err(e) if e.is_budget() => {
            report.verdict = Verdict::combine([report.verdict, Verdict::BudgetExceeded]);
            report.notes.push(format!("budget exceeded: {e}"));
        }
        Err(e @ (Error::BadParams(_) | Error::NotPrime(_) | Error::UnknownCheck(_))) => return Err(e),
        Err(e) => {
            report.verdict = Verdict::combine([report.verdict, Verdict::Inconclusive]);
            report.notes.push(format!("computation stopped: {e}"));
        }
    }
    if report.timing.is_empty() {
        report.timing.push(Phase {
            name: "total".into(),
            millis: start.elapsed().as_millis() as u64,
        });
    }
    Ok(report)
}

/// One member of a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteEntry {
    pub check_id: &'static str,
    pub p: Option<usize>,
    pub k: Option<usize>,
}

pub const SUITES: &[&str] = &["smoke", "paper-small", "paper-full"];

const PAIR_CHECKS: &[&str] = &[
    "lie-heller-shift",
    "lie-period",
    "symmetrization-stable",
    "hook-induced-indecomposable",
    "lambda-restriction",
    "double-coset-choice",
    "lie-vertex-source",
];

pub fn suite_entries(name: &str) -> Result<Vec<SuiteEntry>> {
    let e = |check_id, p, k| SuiteEntry { check_id, p, k };
    let mut out = vec![e("algebra-smoke", None, None)];
    let pairs: &[(usize, usize)] = match name {
        "smoke" => {
            out.push(e("trivial-omega-table", Some(3), None));
            out.push(e("induced-cyclic-decomposition", Some(3), None));
            out.push(e("lie-klyachko-model", Some(3), Some(2)));
            out.push(e("lie-period", Some(2), Some(1)));
            return Ok(out);
        }
        "paper-small" => &[(2, 1), (3, 1), (3, 2)],
        "paper-full" => &[(2, 1), (3, 1), (3, 2), (2, 3), (5, 1)],
        _ => return Err(Error::BadParams(format!("unknown suite `{name}`"))),
    };
    out.push(e("trivial-omega-table", Some(3), None));
    out.push(e("trivial-omega-table", Some(5), None));
    out.push(e("induced-cyclic-decomposition", Some(3), None));
    out.push(e("induced-cyclic-decomposition", Some(5), None));
    for (k, p) in [(2, 3), (3, 2), (4, 3)] {
        out.push(e("lie-klyachko-model", Some(p), Some(k)));
    }
    for &check in PAIR_CHECKS {
        for &(p, k) in pairs {
            out.push(e(check, Some(p), Some(k)));
        }
    }
    out.push(e("oracle-suite", None, None));
    Ok(out)
}

/// Runs a suite with up to `jobs` checks at once; reports come back in suite order.
pub fn run_suite(name: &str, base: &Params, jobs: usize) -> Result<Vec<Report>> {
    let entries = suite_entries(name)?;
    let run = |e: &SuiteEntry| {
        let mut params = base.clone();
        params.p = e.p;
        params.k = e.k;
        run_check(e.check_id, &params)
    };
    if jobs <= 1 {
        return entries.iter().map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParams(e.to_string()))?;
    pool.install(|| entries.par_iter().map(run).collect())
}
