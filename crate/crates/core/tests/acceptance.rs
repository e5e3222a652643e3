//! Acceptance run over the built-in corpus. Prints one line per criterion
//! and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qwzeta::algebra::{charpoly_exact, int};
use qwzeta::experiments::{
    builtin_corpus, run_identity_suite, srg_distinguish, CorpusEntry, Identity, SuiteConfig, VerificationReport,
    DEFAULT_SEED,
};
use qwzeta::graph::families;
use qwzeta::spectra::{compare, roots, SpectrumMultiset};
use qwzeta::walk::{edge_matrices, positive_support, transition_matrix};
use qwzeta::zeta::power_traces;

const MINUTE: Duration = Duration::from_secs(60);

struct Criterion {
    pass: bool,
    name: &'static str,
    detail: String,
}

fn time_of(report: &VerificationReport, ids: &[Identity]) -> Duration {
    report
        .timings
        .iter()
        .filter(|(id, _)| ids.contains(id))
        .map(|(_, d)| *d)
        .sum()
}

/// All listed identities pass, each checked on exactly `expected` graphs,
/// within `budget`.
fn identities(
    report: &VerificationReport,
    name: &'static str,
    ids: &[Identity],
    expected: usize,
    budget: Option<Duration>,
) -> Criterion {
    let mut pass = true;
    let mut parts = Vec::new();
    for &id in ids {
        let o = report.outcome(id).expect("identity in report");
        pass &= o.passed() && o.checked == expected;
        parts.push(format!("{} {}/{} graphs", id.name(), o.checked - o.failed, o.checked));
        if let Some(w) = &o.witness {
            parts.push(format!("first failure {}: {}", w.graph, w.detail));
        }
    }
    if ids.iter().any(|&id| report.outcome(id).is_some_and(|o| o.checked != expected)) {
        parts.push(format!("expected {expected} graphs"));
    }
    let elapsed = time_of(report, ids);
    if let Some(budget) = budget {
        pass &= elapsed < budget;
        parts.push(format!("{:.1}s of {}s", elapsed.as_secs_f64(), budget.as_secs()));
    }
    Criterion {
        pass,
        name,
        detail: parts.join(", "),
    }
}

fn count(corpus: &[CorpusEntry], f: impl Fn(&CorpusEntry) -> bool) -> usize {
    corpus.iter().filter(|e| f(e)).count()
}

fn petersen_fixture() -> bool {
    let g = families::petersen();
    let u = transition_matrix(&g, &g.arcs()).unwrap().into_matrix();
    let spectrum = roots(&charpoly_exact(&positive_support(&u)).unwrap()).unwrap();
    let c = Complex64::new;
    let s7 = 7f64.sqrt() / 2.0;
    let mut expected = vec![c(2.0, 0.0), c(1.0, 0.0)];
    for _ in 0..5 {
        expected.extend([c(0.5, s7), c(0.5, -s7), c(1.0, 0.0), c(-1.0, 0.0)]);
    }
    for _ in 0..4 {
        expected.extend([c(-1.0, 1.0), c(-1.0, -1.0)]);
    }
    compare(&spectrum, &SpectrumMultiset::new(expected).with_tolerance(1e-8)).equal
}

fn k4_triangle_trace() -> bool {
    let g = families::complete(4);
    let traces = power_traces(&edge_matrices(&g.arcs()).edge_matrix(), 3).unwrap();
    traces[3] == int(24)
}

fn srg_pair() -> Criterion {
    let start = Instant::now();
    let result = srg_distinguish(&families::shrikhande(), &families::rook_4x4());
    let elapsed = start.elapsed();
    let (pass, detail) = match result {
        Ok(d) => {
            let equal: Vec<bool> = d.details.iter().map(|l| l.equal).collect();
            let levels: Vec<String> = d
                .details
                .iter()
                .map(|l| format!("{}:{}", l.operator, if l.equal { "equal" } else { "differ" }))
                .collect();
            (
                d.level == Some(3) && equal == [true, true, true, false],
                format!("level {:?} [{}]", d.level, levels.join(" ")),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    Criterion {
        pass: pass && elapsed < 10 * MINUTE,
        name: "Shrikhande vs 4x4 rook: equal at A, U+, U2+; differ at U3+",
        detail: format!("{detail}, {:.1}s of 600s", elapsed.as_secs_f64()),
    }
}

fn main() -> ExitCode {
    let corpus = builtin_corpus(DEFAULT_SEED);
    let config = SuiteConfig::default();
    let start = Instant::now();
    let report = run_identity_suite(&corpus, &config);
    let suite_time = start.elapsed();
    let total = corpus.len();
    let md2 = count(&corpus, |e| e.tags.md2);
    let trees = count(&corpus, |e| e.tags.tree);
    let tol_ok = config.tolerance == 1e-8 && config.order == 8 && config.weight_trials == 10;

    let mut criteria = vec![
        identities(
            &report,
            "charpoly(U) equals the T form and the D/A form, exactly",
            &[Identity::CharpolyUViaT, Identity::CharpolyUViaDegrees],
            total,
            Some(2 * MINUTE),
        ),
        identities(
            &report,
            "Bass identity for the Ihara zeta, exactly",
            &[Identity::BassIdentity],
            total,
            Some(2 * MINUTE),
        ),
        identities(
            &report,
            "weighted zeta edge form equals vertex form, 10 seeded trials",
            &[Identity::WeightedZeta],
            total,
            Some(3 * MINUTE),
        ),
        identities(
            &report,
            "(U^T)+ = B - J0 on simple md2 graphs",
            &[Identity::EdgeMatrixSupport],
            count(&corpus, |e| e.tags.simple && e.tags.md2),
            None,
        ),
        identities(
            &report,
            "Spec(U) from Spec(T) at 1e-8 when m >= n",
            &[Identity::SpectrumUFromT],
            count(&corpus, |e| e.graph.edge_count() >= e.graph.vertex_count()),
            None,
        ),
        identities(
            &report,
            "Spec(U+) from Spec(A) at 1e-8 on regular md2 graphs",
            &[Identity::SpectrumUPlusFromA],
            count(&corpus, |e| e.tags.md2 && e.tags.regular_k.is_some()),
            None,
        ),
        identities(
            &report,
            "charpoly(U+) equals the A/D form on md2 graphs, exactly",
            &[Identity::CharpolyUPlus],
            md2,
            None,
        ),
        identities(
            &report,
            "Euler product over prime reduced cycles to order 8, n <= 5",
            &[Identity::EulerProduct],
            count(&corpus, |e| e.graph.vertex_count() <= 5),
            None,
        ),
        srg_pair(),
        identities(
            &report,
            "U^T U = I, T stochastic, charpoly(U) self-reciprocal, spectra conjugate-closed",
            &[
                Identity::Orthogonality,
                Identity::StochasticT,
                Identity::SelfReciprocal,
                Identity::ConjugateClosure,
            ],
            total,
            None,
        ),
    ];

    criteria[1].pass &= trees > 0;
    criteria[1].detail.push_str(&format!(", {trees} trees"));
    let petersen = petersen_fixture();
    criteria[5].pass &= petersen && tol_ok;
    criteria[5].detail.push_str(&format!(", Petersen fixture {}", if petersen { "ok" } else { "FAILED" }));
    let trace = k4_triangle_trace();
    criteria[7].pass &= trace;
    criteria[7].detail.push_str(&format!(", K4 tr((B-J0)^3) = 24 {}", if trace { "ok" } else { "FAILED" }));

    println!("corpus: {total} graphs, suite {:.1}s", suite_time.as_secs_f64());
    for (i, c) in criteria.iter().enumerate() {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        println!("[{verdict}] criterion {:>2}: {} ({})", i + 1, c.name, c.detail);
    }
    let passed = criteria.iter().filter(|c| c.pass).count();
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
