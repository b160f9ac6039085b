//! Parallel runners for the verification suites. Each worker owns its own
//! evaluator; results are merged into reports sorted by case id, so output
//! does not depend on scheduling.

use rayon::prelude::*;

use schurcat::bimrep::checks::{bubble_checks, degree_coherence, divided_power_suite, thick_bubble_suite};
use schurcat::bimrep::relations::{check_case, instances};
use schurcat::bimrep::Evaluator;
use schurcat::qschur;
use schurcat::report::{CaseResult, Report};
use schurcat::soergel::ek::Ek;
use schurcat::soergel::relations::{check_soergel_case, soergel_cases};
use schurcat::supersym::lemma_suite;
use schurcat::Error;

pub fn presentation(n: usize, d: usize) -> Report {
    Report::new(&format!("presentation n={n} d={d}"), qschur::check_schur_presentation(n, d))
}

/// Hecke relations and commutation with the quantum group generators.
pub fn hecke(n: usize, d: usize) -> Report {
    let mut cases = qschur::check_hecke(n, d);
    cases.extend(qschur::check_hecke_commutation(n, d));
    Report::new(&format!("hecke n={n} d={d}"), cases)
}

pub fn sigma(n: usize, d: usize) -> Result<Report, Error> {
    Ok(Report::new(&format!("sigma n={n} d={d}"), qschur::sigma_check(n, d)?))
}

pub fn tau(n: usize, d: usize) -> Report {
    Report::new(&format!("tau n={n} d={d}"), qschur::tau_check(n, d))
}

/// Route agreement of the dimension formula.
pub fn dimension(n: usize, d: usize) -> Report {
    let r = qschur::schur_dimension_routes(n, d);
    let case = CaseResult::new(
        "dimension",
        format!("n={n},d={d}"),
        r.binomial == r.tableaux,
        Some(format!("binomial={} tableaux={}", r.binomial, r.tableaux)),
    );
    Report::new("dimension", vec![case])
}

/// The relation suite, one evaluator per worker.
pub fn relations(n: usize, d: usize, family: Option<&str>, seed: u64) -> Result<Report, Error> {
    let cases = instances(n, d as i64, family)?;
    let results = cases
        .par_iter()
        .map_init(|| Evaluator::new(d), |ev, c| check_case(ev, c, seed))
        .collect();
    Ok(Report::new(&format!("relations n={n} d={d}"), results))
}

pub fn coherence(n: usize, d: usize) -> Report {
    degree_coherence(n, d as i64)
}

/// Bubble checks at `(n, d)` plus thick bubbles for `n = 2` up to size `d`.
pub fn bubbles(n: usize, d: usize, seed: u64) -> Result<Report, Error> {
    let mut parts = vec![bubble_checks(n, d as i64, seed)?];
    if n == 2 {
        parts.push(thick_bubble_suite(d as i64)?);
    }
    Ok(Report::merge(&format!("bubbles n={n} d={d}"), parts))
}

pub fn divided_powers(n: usize, d: usize, max_m: usize, seed: u64) -> Result<Report, Error> {
    divided_power_suite(n, d as i64, max_m, seed)
}

pub fn supersym(max_size: u32, max_ab: usize, max_lr: u32) -> Report {
    lemma_suite(max_size, max_ab, max_lr)
}

/// The Soergel suite, one evaluator per worker and one shared oracle.
pub fn soergel(n: usize, d: usize, seed: u64) -> Result<Report, Error> {
    let ek = Ek::new()?;
    let cases = soergel_cases(n, d)?;
    let results = cases
        .par_iter()
        .map_init(|| Evaluator::new(d), |ev, c| check_soergel_case(ev, &ek, c, n, d, seed))
        .flatten()
        .collect();
    Ok(Report::new(&format!("soergel n={n} d={d}"), results))
}
