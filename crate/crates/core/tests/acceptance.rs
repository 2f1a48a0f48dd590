//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use evenperm::verify::{run_family, Bounds, Family, Report, Verdict};

struct Criterion {
    id: u32,
    title: &'static str,
    runs: Vec<(Family, Bounds)>,
}

fn criteria() -> Vec<Criterion> {
    let b = Bounds::new;
    vec![
        Criterion {
            id: 1,
            title: "engine against oracle, all 132-avoiding patterns of length <= 5, n <= 12",
            runs: vec![(Family::Engine, b(5, 12))],
        },
        Criterion {
            id: 2,
            title: "worked examples 12, 123, 213",
            runs: vec![(Family::Examples, b(0, 0))],
        },
        Criterion {
            id: 3,
            title: "even/odd counts of all 132-avoiders through length 14",
            runs: vec![(Family::Parity, b(0, 14))],
        },
        Criterion {
            id: 4,
            title: "Chebyshev and R_k identities",
            runs: vec![(Family::Chebyshev, b(50, 0))],
        },
        Criterion {
            id: 5,
            title: "closed-form families equal the engine and the oracle",
            runs: vec![
                (Family::Increasing, b(8, 12)),
                (Family::TwoOneK, b(8, 12)),
                (Family::Kd, b(9, 12)),
                (Family::Wedge, b(7, 12)),
            ],
        },
        Criterion {
            id: 6,
            title: "signed coefficient identities for 12345, 1234567, 123456789, n <= 25",
            runs: vec![(Family::Coefficients, b(9, 25))],
        },
        Criterion {
            id: 7,
            title: "exact-count containment of increasing patterns and the exactly-once equations",
            runs: vec![
                (Family::ContainOnce, b(6, 12)),
                (Family::ContainEqs, b(3, 10)),
            ],
        },
        Criterion {
            id: 8,
            title: "right-to-left maxima distribution, n <= 12",
            runs: vec![(Family::Rlm, b(0, 12))],
        },
        Criterion {
            id: 9,
            title: "two restrictions (L = 4..7, n <= 12) and G_k(x, y) (k = 1..3, n <= 10)",
            runs: vec![(Family::TwoRestrict, b(7, 12)), (Family::GkXy, b(4, 10))],
        },
    ]
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let mut report = Report::default();
        for (family, bounds) in &c.runs {
            report.extend(run_family(*family, bounds));
        }
        let ok = report.passed() && !report.checks.is_empty();
        all_ok &= ok;
        println!(
            "criterion {}: {} ({} checks, {} discrepancy, {:.1}s) {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            report.checks.len(),
            report.count(Verdict::Discrepancy),
            start.elapsed().as_secs_f64(),
            c.title
        );
        for f in report.failures() {
            println!("    failed: {} {} ({})", f.family, f.params, f.source);
            println!("      expected: {}", f.expected);
            println!("      observed: {}", f.observed);
        }
        for d in report
            .checks
            .iter()
            .filter(|d| d.verdict == Verdict::Discrepancy)
        {
            println!("    discrepancy: {} {} ({})", d.family, d.params, d.source);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
