//! End-to-end acceptance criteria. Each criterion runs one or more registered checks and
//! prints a single pass/fail line.

use heller_core::verify::{run_check, Params, Report, Verdict};

struct Criterion {
    name: &'static str,
    runs: &'static [(&'static str, Option<usize>, Option<usize>)],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "trivial module of S_3: Heller translates and period 4",
        runs: &[("trivial-omega-table", Some(3), None)],
    },
    Criterion {
        name: "trivial module of S_5: Heller translates and period 8",
        runs: &[("trivial-omega-table", Some(5), None)],
    },
    Criterion {
        name: "induced trivial module from C_p splits into even Heller translates",
        runs: &[
            ("induced-cyclic-decomposition", Some(3), None),
            ("induced-cyclic-decomposition", Some(5), None),
        ],
    },
    Criterion {
        name: "Lie(k) is induced from a faithful linear character of C_k",
        runs: &[
            ("lie-klyachko-model", Some(3), Some(2)),
            ("lie-klyachko-model", Some(2), Some(3)),
            ("lie-klyachko-model", Some(3), Some(4)),
        ],
    },
    Criterion {
        name: "Lie(pk) is a Heller translate of an induced module",
        runs: &[
            ("lie-heller-shift", Some(2), Some(1)),
            ("lie-heller-shift", Some(3), Some(1)),
            ("lie-heller-shift", Some(3), Some(2)),
            ("lie-heller-shift", Some(2), Some(3)),
            ("lie-heller-shift", Some(5), Some(1)),
        ],
    },
    Criterion {
        name: "symmetrization of Lie(k) is stably Ω⁻¹ of Lie(pk)",
        runs: &[
            ("symmetrization-stable", Some(3), Some(2)),
            ("symmetrization-stable", Some(2), Some(3)),
        ],
    },
    Criterion {
        name: "Lie(pk) is periodic of period 2p-2 (1 if p = 2)",
        runs: &[
            ("lie-period", Some(2), Some(1)),
            ("lie-period", Some(2), Some(3)),
            ("lie-period", Some(3), Some(1)),
            ("lie-period", Some(3), Some(2)),
            ("lie-period", Some(5), Some(1)),
        ],
    },
    Criterion {
        name: "hook-induced blocks are indecomposable Heller translates of Lie(6)",
        runs: &[("hook-induced-indecomposable", Some(3), Some(2))],
    },
    Criterion {
        name: "restriction of the lambda module to the diagonal S_p",
        runs: &[("lambda-restriction", Some(3), Some(2))],
    },
    Criterion {
        name: "double-coset representatives centralize the diagonal C_p",
        runs: &[
            ("double-coset-choice", Some(3), Some(2)),
            ("double-coset-choice", Some(2), Some(3)),
        ],
    },
    Criterion {
        name: "vertex and source of the non-projective part of Lie(6)",
        runs: &[("lie-vertex-source", Some(3), Some(2))],
    },
    Criterion {
        name: "independent oracles agree with the core algorithms",
        runs: &[("oracle-suite", None, None)],
    },
];

fn run(check: &str, p: Option<usize>, k: Option<usize>) -> Report {
    let params = Params {
        p,
        k,
        ..Params::default()
    };
    run_check(check, &params).unwrap_or_else(|e| panic!("{check}: {e}"))
}

fn main() {
    let mut failed = Vec::new();
    for (i, c) in CRITERIA.iter().enumerate() {
        let reports: Vec<Report> = c.runs.iter().map(|&(id, p, k)| run(id, p, k)).collect();
        let verdict = Verdict::combine(reports.iter().map(|r| r.verdict));
        let status = if verdict == Verdict::Pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {}", i + 1, c.name);
        if verdict != Verdict::Pass {
            for r in &reports {
                println!("    {}", r.summary());
                for a in r.assertions.iter().filter(|a| a.verdict != Verdict::Pass) {
                    println!("      {} [{}] {}", a.claim, a.verdict, a.detail.as_deref().unwrap_or(""));
                }
                for n in &r.notes {
                    println!("      note: {n}");
                }
            }
            failed.push(i + 1);
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed.len(), CRITERIA.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
