//! One function per subcommand. Each returns a [`RunReport`]; failed
//! checks are recorded as counterexamples, never raised as errors.

use std::path::Path;

use giuga_core::bernoulli::{bernoulli_worpitzky, staudt_denominator, BernoulliTable, Method};
use giuga_core::congruence::{
    numerator_congruence_check_with, staudt_shifted, theorem2_triple_with, theorem4_delta_with,
    theorem4_expected,
};
use giuga_core::conjecture::{
    butske_search, candidate_report, classify, find_carmichael_numbers, find_giuga_numbers,
    ButskeSign, Classification, ScanCheckpoint,
};
use giuga_core::exact::{Int, Rat};
use giuga_core::stirling::{t_congruence_expected, ScaledRows};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::checkpoint;
use crate::report::RunReport;
use crate::runner::{run_scan, ScanOptions};
use crate::{Error, Result};

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Stirling => "stirling",
        Method::Worpitzky => "worpitzky",
    }
}

fn rat_json(q: &Rat) -> Value {
    json!({ "numerator": q.numer().to_string(), "denominator": q.denom().to_string() })
}

pub fn bernoulli(n: u64, method: Option<Method>) -> Result<RunReport> {
    let index = usize::try_from(n).map_err(|_| Error::Usage(format!("n too large: {n}")))?;
    let mut report = RunReport::new("bernoulli").param("n", n);
    match method {
        Some(method) => {
            let value = match method {
                Method::Stirling => BernoulliTable::new().get(index).clone(),
                Method::Worpitzky => bernoulli_worpitzky(index),
            };
            report = report.param("method", method_name(method));
            report.lines.push(value.to_string());
            let mut record = json!({ "n": n, "value": value.to_string(), "method": method_name(method) });
            record["fraction"] = rat_json(&value);
            report.results.push(record);
        }
        None => {
            let stirling = BernoulliTable::new().get(index).clone();
            let worpitzky = bernoulli_worpitzky(index);
            let agree = stirling == worpitzky;
            report.lines.push(stirling.to_string());
            report.results.push(json!({
                "n": n,
                "value": stirling.to_string(),
                "fraction": rat_json(&stirling),
                "stirling": stirling.to_string(),
                "worpitzky": worpitzky.to_string(),
                "agree": agree,
            }));
            if !agree {
                report.counterexamples.push(json!(n.to_string()));
                report.lines.push(format!("methods disagree: worpitzky gives {worpitzky}"));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyTarget {
    Theorem2,
    Theorem4,
    Staudt,
    Numerator,
    StirlingLemma,
}

impl VerifyTarget {
    pub fn name(self) -> &'static str {
        match self {
            VerifyTarget::Theorem2 => "theorem2",
            VerifyTarget::Theorem4 => "theorem4",
            VerifyTarget::Staudt => "staudt",
            VerifyTarget::Numerator => "numerator",
            VerifyTarget::StirlingLemma => "stirling-lemma",
        }
    }

    pub fn default_n_max(self) -> u64 {
        match self {
            VerifyTarget::Theorem2 | VerifyTarget::Numerator => 60,
            VerifyTarget::Theorem4 => 2000,
            VerifyTarget::Staudt => 100,
            VerifyTarget::StirlingLemma => 40,
        }
    }
}

pub const DEFAULT_M_MAX: u64 = 300;

/// Runs a full verification grid.
pub fn verify(target: VerifyTarget, n_max: Option<u64>, m_max: Option<u64>) -> Result<RunReport> {
    let n_max = n_max.unwrap_or_else(|| target.default_n_max());
    if n_max < 2 {
        return Err(Error::Usage(format!("--n-max must be at least 2, got {n_max}")));
    }
    if target != VerifyTarget::Theorem2 && m_max.is_some() {
        return Err(Error::Usage(format!("--m-max does not apply to {}", target.name())));
    }
    let mut report = RunReport::new("verify").param("target", target.name()).param("n_max", n_max);
    let mut table = BernoulliTable::new();
    match target {
        VerifyTarget::Theorem2 => {
            let m_max = m_max.unwrap_or(DEFAULT_M_MAX);
            if m_max < 2 {
                return Err(Error::Usage(format!("--m-max must be at least 2, got {m_max}")));
            }
            report = report.param("m_max", m_max);
            for n in (2..=n_max).step_by(2) {
                for m in 2..=m_max {
                    let t = theorem2_triple_with(&mut table, n, m)?;
                    let pass = t.holds();
                    report.results.push(json!({
                        "n": n,
                        "m": m,
                        "lhs_sum": t.lhs_sum.value().to_string(),
                        "mid_bernoulli": t.mid_bernoulli.value().to_string(),
                        "rhs_prime_sum": t.rhs_prime_sum.value().to_string(),
                        "pass": pass,
                    }));
                    if !pass {
                        report.counterexamples.push(json!({ "n": n, "m": m }));
                        report.lines.push(format!(
                            "FAIL n={n} m={m}: {} {} {}",
                            t.lhs_sum.value(),
                            t.mid_bernoulli.value(),
                            t.rhs_prime_sum.value()
                        ));
                    }
                }
            }
        }
        VerifyTarget::Theorem4 => {
            for n in 2..=n_max {
                let delta = theorem4_delta_with(&mut table, n)?;
                let expected = theorem4_expected(n);
                let pass = delta.value() == &Int::from(expected);
                report.results.push(json!({
                    "n": n,
                    "delta": delta.value().to_string(),
                    "expected": expected.to_string(),
                    "pass": pass,
                }));
                if !pass {
                    report.counterexamples.push(json!(n.to_string()));
                    report.lines.push(format!("FAIL n={n}: delta {} expected {expected}", delta.value()));
                }
            }
        }
        VerifyTarget::Staudt => {
            for n in (2..=n_max).step_by(2) {
                let shifted = staudt_shifted(&mut table, n)?;
                let denominator = table.get(n as usize).denom().clone();
                let expected = staudt_denominator(n)?;
                let pass = shifted.is_integer() && denominator == expected;
                report.results.push(json!({
                    "n": n,
                    "denominator": denominator.to_string(),
                    "expected_denominator": expected.to_string(),
                    "shifted_integral": shifted.is_integer(),
                    "pass": pass,
                }));
                if !pass {
                    report.counterexamples.push(json!(n.to_string()));
                    report.lines.push(format!("FAIL n={n}: denominator {denominator}, expected {expected}"));
                }
            }
        }
        VerifyTarget::Numerator => {
            for n in (2..=n_max).step_by(2) {
                let (lhs, rhs) = numerator_congruence_check_with(&mut table, n)?;
                let pass = lhs == rhs;
                report.results.push(json!({
                    "n": n,
                    "modulus": lhs.modulus().to_string(),
                    "lhs": lhs.value().to_string(),
                    "rhs": rhs.value().to_string(),
                    "pass": pass,
                }));
                if !pass {
                    report.counterexamples.push(json!(n.to_string()));
                    report.lines.push(format!("FAIL n={n}: {} vs {}", lhs.value(), rhs.value()));
                }
            }
        }
        VerifyTarget::StirlingLemma => {
            let mut rows = ScaledRows::new();
            for n in (2..=n_max).step_by(2) {
                let row = rows.seek(n as usize).to_vec();
                for k in 2..=n + 1 {
                    let expected = t_congruence_expected(n, k)?;
                    let actual = row[(k - 1) as usize].mod_floor(&Int::from(k));
                    let pass = &actual == expected.value();
                    report.results.push(json!({
                        "n": n,
                        "k": k,
                        "actual": actual.to_string(),
                        "expected": expected.value().to_string(),
                        "pass": pass,
                    }));
                    if !pass {
                        report.counterexamples.push(json!({ "n": n, "k": k }));
                        report.lines.push(format!("FAIL n={n} k={k}: {actual} vs {}", expected.value()));
                    }
                }
            }
        }
    }
    let failures = report.counterexamples.len();
    report.lines.push(format!(
        "{}: {} cells, {failures} failures",
        target.name(),
        report.results.len()
    ));
    Ok(report)
}

/// Report for a (possibly partial) scan. Depends only on the checkpoint, so
/// runs that reach the same state print the same report.
pub fn scan_report(state: &ScanCheckpoint) -> RunReport {
    let mut report = RunReport::new("scan").param("from", state.from()).param("to", state.to());
    let counterexamples: Vec<Value> =
        state.counterexamples().iter().map(|n| json!(n.to_string())).collect();
    report.results.push(json!({
        "from": state.from(),
        "to": state.to(),
        "next_unscanned": state.next_unscanned(),
        "scanned_count": state.scanned_count(),
        "complete": state.is_complete(),
        "counterexamples": counterexamples,
    }));
    report.counterexamples = counterexamples;
    report.lines.push(format!(
        "scanned {} of [{}, {}]{}",
        state.scanned_count(),
        state.from(),
        state.to(),
        if state.is_complete() { "" } else { " (incomplete)" }
    ));
    if state.counterexamples().is_empty() {
        report.lines.push("counterexamples: none".to_owned());
    } else {
        report.lines.extend(state.counterexamples().iter().map(|n| format!("COUNTEREXAMPLE {n}")));
    }
    report
}

pub fn scan(
    from: u64,
    to: u64,
    checkpoint_path: Option<&Path>,
    options: &ScanOptions,
) -> Result<RunReport> {
    if from < 2 || from > to {
        return Err(Error::Usage(format!("invalid range: need 2 <= from <= to, got [{from}, {to}]")));
    }
    let start = match checkpoint_path {
        Some(path) => checkpoint::load_for(path, from, to)?,
        None => None,
    };
    let start = match start {
        Some(state) => state,
        None => ScanCheckpoint::new(from, to)?,
    };
    if let Some(path) = checkpoint_path {
        checkpoint::store(path, &start)?;
    }
    let done = run_scan(start, options, |state| match checkpoint_path {
        Some(path) => checkpoint::store(path, state),
        None => Ok(()),
    })?;
    Ok(scan_report(&done))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FindTarget {
    Giuga,
    Carmichael,
    ButskePlus,
    ButskeMinus,
}

impl FindTarget {
    pub fn name(self) -> &'static str {
        match self {
            FindTarget::Giuga => "giuga",
            FindTarget::Carmichael => "carmichael",
            FindTarget::ButskePlus => "butske-plus",
            FindTarget::ButskeMinus => "butske-minus",
        }
    }
}

pub fn find(target: FindTarget, max: u64) -> Result<RunReport> {
    if max < 2 {
        return Err(Error::Usage(format!("--max must be at least 2, got {max}")));
    }
    let found = match target {
        FindTarget::Giuga => find_giuga_numbers(max)?,
        FindTarget::Carmichael => find_carmichael_numbers(max)?,
        FindTarget::ButskePlus => butske_search(ButskeSign::Plus, max)?,
        FindTarget::ButskeMinus => butske_search(ButskeSign::Minus, max)?,
    };
    let mut report = RunReport::new("find").param("target", target.name()).param("max", max);
    report.results = found.iter().map(|n| json!(n.to_string())).collect();
    report.lines = found.iter().map(u64::to_string).collect();
    Ok(report)
}

pub fn check(n: u64) -> Result<RunReport> {
    if n < 2 {
        return Err(Error::Usage(format!("n must be at least 2, got {n}")));
    }
    let candidate = candidate_report(n, None)?;
    let verdict = classify(n, None)?;
    let primes: Vec<Value> = candidate
        .primes
        .iter()
        .map(|c| {
            json!({
                "p": c.p.to_string(),
                "p_divides_n_over_p_minus_1": c.p_divides_n_over_p_minus_1,
                "p_minus_1_divides_n_minus_1": c.p_minus_1_divides_n_minus_1,
                "p_minus_1_divides_n_over_p_minus_1": c.p_minus_1_divides_n_over_p_minus_1,
            })
        })
        .collect();
    let record = json!({
        "n": n.to_string(),
        "composite": candidate.composite,
        "odd": candidate.odd,
        "squarefree": candidate.squarefree,
        "prime_factor_count": candidate.prime_factor_count,
        "primes": primes,
        "giuga_number": candidate.is_giuga_number,
        "carmichael": candidate.is_carmichael,
        "reciprocal_sum_exceeds_one": candidate.reciprocal_sum_exceeds_one,
        "at_least_nine_prime_factors": candidate.at_least_nine_prime_factors,
        "residue": verdict.residue.value().to_string(),
        "indicator": verdict.indicator,
        "prime": verdict.is_prime,
        "primality": "deterministic",
        "verdict": verdict.classification.as_str(),
    });
    let mut report = RunReport::new("check").param("n", n.to_string());
    if verdict.classification == Classification::Counterexample {
        report.counterexamples.push(json!(n.to_string()));
    }
    for key in [
        "n",
        "verdict",
        "prime",
        "residue",
        "indicator",
        "composite",
        "odd",
        "squarefree",
        "prime_factor_count",
        "giuga_number",
        "carmichael",
        "reciprocal_sum_exceeds_one",
        "at_least_nine_prime_factors",
        "primality",
    ] {
        let value = &record[key];
        let shown = value.as_str().map(str::to_owned).unwrap_or_else(|| value.to_string());
        report.lines.push(format!("{key}: {shown}"));
    }
    for c in &candidate.primes {
        report.lines.push(format!(
            "p={}: p | n/p-1: {}, p-1 | n-1: {}, p-1 | n/p-1: {}",
            c.p,
            c.p_divides_n_over_p_minus_1,
            c.p_minus_1_divides_n_minus_1,
            c.p_minus_1_divides_n_over_p_minus_1
        ));
    }
    report.results.push(record);
    Ok(report)
}
