//! The acceptance criteria, each under a pinned time limit. Prints one
//! PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use valdim::suite::{self, Case, SuiteName};

const SEED: u64 = 1;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn tally(cases: &[Case], expected: usize) -> Result<String, String> {
    let passed = cases.iter().filter(|c| c.passed()).count();
    if cases.len() != expected {
        return Err(format!("expected {expected} cases, ran {}", cases.len()));
    }
    match cases.iter().find(|c| !c.passed()) {
        None => Ok(format!("{passed}/{expected} cases")),
        Some(c) => Err(format!(
            "{passed}/{expected} cases; first failure in {} #{}: {}",
            c.check,
            cases.iter().position(|x| std::ptr::eq(x, c)).unwrap(),
            c.reason.as_deref().unwrap_or("no reason")
        )),
    }
}

fn lprelim() -> Result<String, String> {
    tally(&suite::lprelim_identity(SEED, 500), 500)
}

fn r_pairs() -> Result<String, String> {
    tally(&suite::r_pair_witnesses(SEED, 200), 200)
}

fn r_independence() -> Result<String, String> {
    let mut cases = vec![suite::r_refutation()];
    cases.extend(suite::r_phi_checks(SEED, 50));
    tally(&cases, 51)
}

fn w_totality() -> Result<String, String> {
    tally(&suite::w_totality(SEED, 200), 200)
}

fn w_preorders() -> Result<String, String> {
    let n = suite::w_matrices().len() * 200;
    tally(&suite::w_preorder_witnesses(SEED, 200), n)
}

fn v_pairs() -> Result<String, String> {
    tally(&suite::v_pair_witnesses(SEED, 200), 200)
}

fn v_independence() -> Result<String, String> {
    tally(&[suite::v_refutation()], 1)
}

fn vdim() -> Result<String, String> {
    let n = suite::vdim_matrices().len() * 50;
    tally(&suite::vdim_pipeline(SEED, 50), n)
}

fn overring() -> Result<String, String> {
    tally(&suite::overring_pipeline(SEED, 50), 50)
}

fn analytic() -> Result<String, String> {
    let mut cases = suite::analytic_homogenize(SEED, 100);
    cases.push(suite::analytic_r_independence());
    tally(&cases, 101)
}

fn determinism() -> Result<String, String> {
    for name in SuiteName::ALL {
        let first = suite::run_suite(name, 42, 2).to_json();
        let second = suite::run_suite(name, 42, 2).to_json();
        if first != second {
            return Err(format!("suite {name} differs between runs"));
        }
    }
    Ok(format!("{} suites byte-identical", SuiteName::ALL.len()))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "monomial map preserves leading coefficients", limit: secs(30), run: lprelim },
        Criterion { id: 2, name: "lex witnesses for pairs in R", limit: secs(60), run: r_pairs },
        Criterion { id: 3, name: "(v, u*v) in R: bounded refutation and constant-part check", limit: secs(300), run: r_independence },
        Criterion { id: 4, name: "W: divisibility totality and additive value", limit: secs(30), run: w_totality },
        Criterion { id: 5, name: "W: preorder witnesses", limit: secs(120), run: w_preorders },
        Criterion { id: 6, name: "V: lex witnesses and transport composition", limit: secs(60), run: v_pairs },
        Criterion { id: 7, name: "(v, v^(1 s2)) in V: bounded refutation", limit: secs(300), run: v_independence },
        Criterion { id: 8, name: "valuative-dimension pipeline over V", limit: secs(120), run: vdim },
        Criterion { id: 9, name: "overring pipeline over quotients of V", limit: secs(120), run: overring },
        Criterion { id: 10, name: "homogeneous relations in V, none for (v, u*v) in R", limit: secs(180), run: analytic },
        Criterion { id: 11, name: "suite reports are deterministic", limit: secs(10), run: determinism },
    ];
    let mut failed = 0;
    for c in criteria {
        let (tx, rx) = mpsc::channel();
        let run = c.run;
        let start = Instant::now();
        thread::spawn(move || {
            let _ = tx.send(run());
        });
        let result = match rx.recv_timeout(c.limit) {
            Ok(r) => r,
            Err(mpsc::RecvTimeoutError::Timeout) => Err("time limit exceeded".into()),
            Err(mpsc::RecvTimeoutError::Disconnected) => Err("criterion panicked".into()),
        };
        let elapsed = start.elapsed().as_secs_f64();
        let limit = c.limit.as_secs();
        match result {
            Ok(detail) => println!("PASS {:>2} {}: {detail} ({elapsed:.1}s, limit {limit}s)", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {}: {detail} ({elapsed:.1}s, limit {limit}s)", c.id, c.name);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
