use heller_core::verify::{run_check, run_suite, Params, Report, Verdict};

#[test]
fn smoke_suite_passes() {
    let reports = run_suite("smoke", &Params::default(), 2).unwrap();
    for r in &reports {
        println!("{}", r.summary());
        for a in &r.assertions {
            if a.verdict != Verdict::Pass {
                println!("  {} {:?} {:?}", a.claim, a.verdict, a.detail);
            }
        }
        for n in &r.notes {
            println!("  note: {n}");
        }
    }
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
}

#[test]
fn report_json_round_trip() {
    let r = run_check("trivial-omega-table", &Params::default().with_p(3)).unwrap();
    let back = Report::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.body_hash(), r.body_hash());
}

#[test]
fn reports_are_deterministic() {
    let params = Params::default().with_pk(3, 2);
    let a = run_check("lie-klyachko-model", &params).unwrap();
    let b = run_check("lie-klyachko-model", &params).unwrap();
    assert_eq!(a.body_hash(), b.body_hash());
}

#[test]
fn malformed_requests_are_errors() {
    assert!(run_check("no-such-check", &Params::default()).is_err());
    assert!(run_check("lie-period", &Params::default().with_p(3)).is_err());
    assert!(run_check("lie-period", &Params::default().with_pk(4, 1)).is_err());
    assert!(run_check("lie-period", &Params::default().with_pk(3, 3)).is_err());
}

#[test]
fn budget_overrun_is_reported() {
    let mut params = Params::default().with_pk(3, 2);
    params.budget_dim = 50;
    let r = run_check("lie-heller-shift", &params).unwrap();
    assert_eq!(r.verdict, Verdict::BudgetExceeded);
}
