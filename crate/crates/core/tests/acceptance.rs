//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact; a criterion passes only with zero failing instances.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use upq_packets::cli;
use upq_packets::halfint::{partition_into_segments, HalfInt};
use upq_packets::oracle::{
    oracle_contains, oracle_lowest_weights, sweep_verify, two_block_sweep, Check, SweepConfig,
    SweepReport,
};
use upq_packets::packets::{inf_char, AParameter, Summand};
use upq_packets::weights::{inf_char_of_lowest_weight, GroupSignature, KWeight};

const MAX_N: usize = 6;
const WEIGHT_WINDOW: i64 = 3;
const CHAR_WINDOW: i64 = 4;
const TWO_BLOCK_MAX_N: usize = 6;
/// Block values in `[-4, 4]`, a window of width 8.
const TWO_BLOCK_HALF_WIDTH: i64 = 4;
/// Failing instances tolerated per criterion.
const TOLERANCE: usize = 0;

struct Line {
    id: u8,
    name: &'static str,
    failures: usize,
    detail: String,
}

impl Line {
    fn passed(&self) -> bool {
        self.failures.saturating_sub(TOLERANCE) == 0
    }
}

fn psi(p: usize, q: usize, ta: &[(i64, usize)]) -> AParameter {
    AParameter::new(
        GroupSignature::new(p, q).unwrap(),
        ta.iter().map(|&(t, a)| Summand { t, a }).collect(),
    )
    .unwrap()
}

fn weight(p: usize, q: usize, lam: &[i64]) -> KWeight {
    KWeight::new(p, q, lam.to_vec()).unwrap()
}

fn max_multiplicity(x: &AParameter) -> usize {
    inf_char(x).entries().iter().map(|&(_, m)| m).max().unwrap_or(0)
}

/// Criterion 2 cannot hold as stated: the closed form claims a lowest
/// weight module for parameters whose infinitesimal character repeats a
/// value three times, which no `P ⊔ Q` can. Every failure must be of that
/// kind, with the oracle finding nothing and the normalization giving zero.
fn criterion_two_failures_are_explained(r: &SweepReport) -> bool {
    let failing: BTreeSet<String> = r
        .mismatches
        .iter()
        .filter(|m| m.check == Check::LowestWeight)
        .map(|m| m.psi.to_string())
        .collect();
    let nonvanishing: BTreeSet<String> = r
        .property_failures
        .iter()
        .filter(|f| f.check == Check::Nonvanishing)
        .filter_map(|f| f.psi.as_ref().map(|p| p.to_string()))
        .collect();
    r.failures_of(Check::RoundTripA) == 0
        && failing == nonvanishing
        && r.mismatches.iter().filter(|m| m.check == Check::LowestWeight).all(|m| {
            m.theorem_verdict.starts_with("error")
                && m.oracle_verdict == "none"
                && max_multiplicity(&m.psi) == 3
                && oracle_lowest_weights(&m.psi).unwrap().is_empty()
        })
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap_or_default()
}

fn lowest_k_type_in(json: &str) -> Option<Vec<i64>> {
    let v: serde_json::Value = serde_json::from_str(json).ok()?;
    serde_json::from_value(v["lowest_k_type"].clone()).ok()
}

/// The worked fixtures: values come from the oracle here, then must match
/// both the frozen files and the current command line output.
fn fixtures() -> (usize, String) {
    let mut bad = Vec::new();
    let forward = [
        ("u11_chi0_s2.json", psi(1, 1, &[(0, 2)]), weight(1, 1, &[0, 0])),
        ("u11_chi1_s1_chim1_s1.json", psi(1, 1, &[(1, 1), (-1, 1)]), weight(1, 1, &[1, -1])),
        ("u12_chi1_s2_chim2_s1.json", psi(1, 2, &[(1, 2), (-2, 1)]), weight(1, 2, &[1, 0, -1])),
    ];
    for (file, x, w) in &forward {
        let oracle = oracle_lowest_weights(x).unwrap();
        if oracle != vec![w.clone()] {
            bad.push(format!("{file}: oracle gives {oracle:?}"));
        }
        let frozen = golden(file);
        if lowest_k_type_in(&frozen).as_deref() != Some(w.lambda()) {
            bad.push(format!("{file}: frozen lowest K-type differs from {w}"));
        }
        let summands = serde_json::to_string(x.summands()).unwrap();
        let (p, q) = (x.sig().p.to_string(), x.sig().q.to_string());
        let out = cli::run(["upq-packets", "classify-psi", "--p", &p, "--q", &q, "--psi", &summands]);
        if out.stdout != frozen {
            bad.push(format!("{file}: output differs from the frozen file"));
        }
    }

    let w = weight(1, 1, &[1, 0]);
    let oracle: Vec<AParameter> = partition_into_segments(&inf_char_of_lowest_weight(&w))
        .iter()
        .map(|parts| AParameter::from_segments(w.sig(), parts).unwrap())
        .filter(|x| oracle_contains(x, &w).unwrap())
        .collect();
    let expected = vec![psi(1, 1, &[(1, 1), (1, 1)])];
    if oracle != expected {
        bad.push(format!("u11_lambda_1_0.json: oracle gives {oracle:?}"));
    }
    let frozen = golden("u11_lambda_1_0.json");
    if serde_json::from_str::<Vec<AParameter>>(&frozen).ok() != Some(expected) {
        bad.push("u11_lambda_1_0.json: frozen parameters differ".into());
    }
    let out = cli::run(["upq-packets", "classify-lambda", "--p", "1", "--q", "1", "--lambda", "[1,0]"]);
    if out.stdout != frozen {
        bad.push("u11_lambda_1_0.json: output differs from the frozen file".into());
    }
    (bad.len(), if bad.is_empty() { "4 fixtures".into() } else { bad.join("; ") })
}

fn main() -> ExitCode {
    let cfg = SweepConfig::new(MAX_N, WEIGHT_WINDOW, HalfInt::from_int(CHAR_WINDOW)).unwrap();
    let r = sweep_verify(&cfg);
    let two = two_block_sweep(TWO_BLOCK_MAX_N, TWO_BLOCK_HALF_WIDTH).unwrap();
    let (fixture_failures, fixture_detail) = fixtures();

    let basic: Vec<usize> = (1..=8).map(|k| r.failures_of(Check::BasicProperty(k))).collect();
    let lines = [
        Line {
            id: 1,
            name: "membership closed form = oracle",
            failures: r.failures_of(Check::Contains),
            detail: format!("{} instances", r.instances_checked),
        },
        Line {
            id: 2,
            name: "lowest K-type of a packet = oracle",
            failures: r.failures_of(Check::LowestWeight) + r.failures_of(Check::RoundTripA),
            detail: match &r.minimized {
                Some(m) => format!("smallest: {} gives {}", m.mismatch.psi, m.mismatch.theorem_verdict),
                None => String::new(),
            },
        },
        Line {
            id: 3,
            name: "at most one lowest weight member, at d_0",
            failures: r.failures_of(Check::Uniqueness) + r.failures_of(Check::MultiplicityOne),
            detail: format!("{} memberships", r.memberships_found),
        },
        Line {
            id: 4,
            name: "two-block nonvanishing criterion",
            failures: two.failures.len(),
            detail: format!("{} cases", two.cases),
        },
        Line {
            id: 5,
            name: "realization round trip",
            failures: r.failures_of(Check::Realization) + r.failures_of(Check::RoundTripB),
            detail: format!("{} instances", r.instances_checked),
        },
        Line {
            id: 6,
            name: "AS shape and block rewrites",
            failures: r.failures_of(Check::LowestWeightShape)
                + r.failures_of(Check::Rewrite)
                + usize::from(r.rewrites_checked == 0),
            detail: format!("{} rewrites compared", r.rewrites_checked),
        },
        Line {
            id: 7,
            name: "worked fixtures",
            failures: fixture_failures,
            detail: fixture_detail,
        },
        Line {
            id: 8,
            name: "structural properties of d_0",
            failures: basic.iter().sum::<usize>() + usize::from(r.memberships_found == 0),
            detail: format!("failures by item {basic:?}"),
        },
    ];

    println!(
        "acceptance: N <= {MAX_N}, |λ_i| <= {WEIGHT_WINDOW}, |χ| <= {CHAR_WINDOW}, two-block N <= {TWO_BLOCK_MAX_N} values in [-{TWO_BLOCK_HALF_WIDTH}, {TWO_BLOCK_HALF_WIDTH}], tolerance {TOLERANCE}"
    );
    for l in &lines {
        let verdict = if l.passed() { "PASS" } else { "FAIL" };
        let detail = if l.detail.is_empty() { String::new() } else { format!("; {}", l.detail) };
        println!("{verdict} criterion {}: {} ({} failing{detail})", l.id, l.name, l.failures);
    }
    let others = r.failures_of(Check::Error);
    println!("other errors: {others}");

    let explained = criterion_two_failures_are_explained(&r);
    if !lines[1].passed() {
        println!(
            "note: criterion 2 failures {} the triple-multiplicity family",
            if explained { "are exactly" } else { "are NOT all in" }
        );
    }
    let unexpected = lines.iter().any(|l| l.id != 2 && !l.passed()) || others > 0 || !explained;
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
