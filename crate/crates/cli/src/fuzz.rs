//! Corpus-driven stress run: color every trial graph, verify every output,
//! and cross-check small cases against the exact oracle.

use hexachrome_core::corpus::{Corpus, CorpusItem};
use hexachrome_core::engine::{color_p2p3, color_p6};
use hexachrome_core::oracle::{chromatic_number, verify_coloring, Budget};
use hexachrome_core::recognition::neighborhood_rule_violations;

use crate::report::{FuzzJson, SCHEMA};

/// Largest order sent to the exact oracle per trial.
const ORACLE_CAP: usize = 12;
const FAILURE_SAMPLE: usize = 20;

#[derive(Default)]
struct TrialResult {
    member: bool,
    bull_free_member: bool,
    four_color_member: bool,
    colors: u32,
    bull_free_colors: u32,
    gap: Option<u32>,
    failures: Vec<String>,
}

fn run_trial(item: &CorpusItem) -> TrialResult {
    let g = &item.graph;
    let report = &item.report;
    let mut r = TrialResult::default();
    let mut failures = Vec::new();
    let tag = format!("trial {} [{}]", item.index, item.label);

    let rules = neighborhood_rule_violations(g);
    if rules.is_empty() != (report.diamond_free() && report.k4_free()) {
        failures.push(format!(
            "{tag}: neighborhood rules disagree with the pattern search"
        ));
    }
    if item.label.starts_with("duplicated(") && !report.is_p6_diamond_k4_free() {
        failures.push(format!("{tag}: a duplication left the certified class"));
    }

    if report.is_p6_diamond_k4_free() {
        r.member = true;
        match color_p6(g, &Budget::from_env()) {
            Ok(outcome) => {
                if let Err(e) = verify_coloring(g, &outcome.coloring) {
                    failures.push(format!("{tag}: improper six-class coloring: {e}"));
                }
                if outcome.coloring.k as usize > outcome.bound || outcome.bound > 6 {
                    failures.push(format!(
                        "{tag}: palette {} exceeds bound {}",
                        outcome.coloring.k, outcome.bound
                    ));
                }
                r.colors = outcome.coloring.colors_used();
                if report.bull_free() {
                    r.bull_free_member = true;
                    r.bull_free_colors = r.colors;
                    if outcome.bound > 4 {
                        failures.push(format!(
                            "{tag}: bull-free member got bound {}, expected at most 4",
                            outcome.bound
                        ));
                    }
                }
                if g.n() <= ORACLE_CAP {
                    match chromatic_number(g, &Budget::from_env()) {
                        Ok(best) => {
                            let chi = best.colors_used();
                            if chi > r.colors {
                                failures.push(format!(
                                    "{tag}: oracle chi {chi} exceeds the engine's {} colors",
                                    r.colors
                                ));
                            } else {
                                r.gap = Some(r.colors - chi);
                            }
                        }
                        Err(e) => failures.push(format!("{tag}: oracle cross-check failed: {e}")),
                    }
                }
            }
            Err(e) => failures.push(format!("{tag}: six-color pipeline failed: {e}")),
        }
        if report.is_p2up3_diamond_k4_free() {
            r.four_color_member = true;
            match color_p2p3(g, &Budget::from_env()) {
                Ok(outcome) => {
                    if let Err(e) = verify_coloring(g, &outcome.coloring) {
                        failures.push(format!("{tag}: improper four-class coloring: {e}"));
                    }
                    if outcome.coloring.k as usize > outcome.bound || outcome.bound > 6 {
                        failures.push(format!(
                            "{tag}: palette {} exceeds bound {}",
                            outcome.coloring.k, outcome.bound
                        ));
                    }
                }
                Err(e) => failures.push(format!("{tag}: four-color pipeline failed: {e}")),
            }
        }
    }
    r.failures = failures;
    r
}

pub fn run(seed: u64, n_max: usize, trials: usize, jobs: usize) -> FuzzJson {
    let jobs = jobs.max(1).min(trials.max(1));
    let mut results: Vec<Option<TrialResult>> = Vec::new();
    results.resize_with(trials, || None);

    if trials > 0 {
        let corpus = Corpus::new(seed, n_max);
        std::thread::scope(|scope| {
            let corpus = &corpus;
            let workers: Vec<_> = (0..jobs)
                .map(|w| {
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        let mut i = w;
                        while i < trials {
                            out.push((i, run_trial(&corpus.item(i))));
                            i += jobs;
                        }
                        out
                    })
                })
                .collect();
            for worker in workers {
                for (i, r) in worker.join().expect("fuzz worker panicked") {
                    results[i] = Some(r);
                }
            }
        });
    }

    let mut json = FuzzJson {
        schema: SCHEMA,
        command: "fuzz",
        seed,
        n_max,
        trials,
        jobs,
        members: 0,
        bull_free_members: 0,
        four_color_members: 0,
        max_colors: 0,
        max_colors_bull_free: 0,
        oracle_checked: 0,
        max_gap: 0,
        violations: 0,
        failures: Vec::new(),
    };
    for r in results.into_iter().map(|r| r.expect("every trial ran")) {
        json.members += r.member as usize;
        json.bull_free_members += r.bull_free_member as usize;
        json.four_color_members += r.four_color_member as usize;
        json.max_colors = json.max_colors.max(r.colors);
        json.max_colors_bull_free = json.max_colors_bull_free.max(r.bull_free_colors);
        if let Some(gap) = r.gap {
            json.oracle_checked += 1;
            json.max_gap = json.max_gap.max(gap);
        }
        json.violations += r.failures.len();
        for f in r.failures {
            if json.failures.len() < FAILURE_SAMPLE {
                json.failures.push(f);
            }
        }
    }
    json
}
