//! Acceptance suite: one line per criterion, exact equality at the stated
//! ranks, wall-clock budgets enforced. Runs without the libtest harness so
//! the lines are always shown.

use std::time::{Duration, Instant};

use octacomb::fibers::fiber_table;
use octacomb::verify::{run_check, Check, CheckOptions};
use octacomb::{CoxeterType, CoxeterWord, SignedPermutation};

struct Line {
    id: &'static str,
    what: String,
    pass: bool,
    elapsed: Duration,
    budget: Option<Duration>,
    note: String,
}

impl Line {
    fn ok(&self) -> bool {
        self.pass && self.budget.is_none_or(|b| self.elapsed <= b)
    }

    fn render(&self) -> String {
        let budget = self.budget.map(|b| format!(", budget {}s", b.as_secs())).unwrap_or_default();
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        let note = if self.note.is_empty() { String::new() } else { format!(" [{}]", self.note) };
        format!("criterion {:<3} {verdict}  {} ({:.2}s{budget}){note}", self.id, self.what, self.elapsed.as_secs_f64())
    }
}

/// Runs `check` at every rank, returning whether all passed and the first failure.
fn checks(list: &[(Check, &[usize])]) -> (bool, String) {
    let opts = CheckOptions::default();
    for (check, ranks) in list {
        for &n in *ranks {
            let r = run_check(*check, n, &opts).expect("check runs");
            if !r.passed() {
                return (false, r.to_json_line(true));
            }
        }
    }
    (true, String::new())
}

fn timed(id: &'static str, what: impl Into<String>, budget: Option<u64>, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (pass, note) = f();
    Line { id, what: what.into(), pass, elapsed: start.elapsed(), budget: budget.map(Duration::from_secs), note }
}

fn w(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn letters(s: &str) -> Vec<u8> {
    s.split('s').filter(|t| !t.is_empty()).map(|t| t.parse().unwrap()).collect()
}

/// `(window, μ word, π word)` rows as printed in the source, `μ = e` left empty.
type SourceRow = (&'static str, &'static str, &'static str);

const FIBER_16: [SourceRow; 16] = [
    ("[1,5,2,3,4]", "", "s4s3s2"),
    ("[-1,5,2,3,4]", "s0", "s4s3s2"),
    ("[-2,5,1,3,4]", "s1s0", "s4s3s2"),
    ("[-3,5,1,2,4]", "s2s1s0", "s4s3s2"),
    ("[-4,5,1,2,3]", "s3s2s1s0", "s4s3s2"),
    ("[-2,5,-1,3,4]", "s0s1s0", "s4s3s2"),
    ("[-3,5,-1,2,4]", "s0s2s1s0", "s4s3s2"),
    ("[-4,5,-1,2,3]", "s0s3s2s1s0", "s4s3s2"),
    ("[-3,5,-2,1,4]", "s1s0s2s1s0", "s4s3s2"),
    ("[-4,5,-2,1,3]", "s1s0s3s2s1s0", "s4s3s2"),
    ("[-4,5,-3,1,2]", "s2s1s0s3s2s1s0", "s4s3s2"),
    ("[-3,5,-2,-1,2]", "s0s1s0s2s1s0", "s4s3s2"),
    ("[-4,5,-2,-1,3]", "s0s1s0s3s2s1s0", "s4s3s2"),
    ("[-4,5,-3,-1,2]", "s2s1s0s3s2s1s0", "s4s3s2"),
    ("[-4,5,-3,1,2]", "s2s1s0s3s2s1s0", "s4s3s2"),
    ("[-4,5,-3,-1,-2]", "s2s1s0s3s2s1s0", "s4s3s2"),
];

const FIBER_4: [SourceRow; 4] = [
    ("[2,4,5,1,3]", "", "s1s3s2s4s3"),
    ("[2,4,5,-1,3]", "s0", "s1s3s2s4s3"),
    ("[1,4,5,-2,3]", "s1s0", "s1s3s2s4s3"),
    ("[1,4,5,-3,2]", "s2s1s0", "s1s3s2s4s3"),
];

/// Indices (0-based) of source rows that disagree with the computed table.
fn table_mismatches(pi: &str, source: &[SourceRow]) -> Vec<usize> {
    let rows = fiber_table(&w(pi)).unwrap();
    assert_eq!(rows.len(), source.len());
    (0..source.len())
        .filter(|&i| {
            let (win, mu, p) = source[i];
            let r = &rows[i];
            r.window.to_string() != win || r.mu_word != letters(mu) || r.pi_factors.concat() != letters(p)
        })
        .collect()
}

/// Why a source row cannot be right: it is not a signed permutation, it
/// repeats an earlier row, or its word does not evaluate to its window.
fn source_row_defect(source: &[SourceRow], i: usize) -> Option<&'static str> {
    let (win, mu, p) = source[i];
    let Ok(target) = win.parse::<SignedPermutation>() else {
        return Some("not a signed permutation");
    };
    if source[..i].iter().any(|r| r.0 == win) {
        return Some("repeats an earlier window");
    }
    let pi = CoxeterWord::new(CoxeterType::B, target.rank(), letters(p)).unwrap().evaluate();
    let mu_w = CoxeterWord::new(CoxeterType::B, target.rank(), letters(mu)).unwrap().evaluate();
    if mu_w.compose(&pi).unwrap() != target {
        return Some("word does not evaluate to the window");
    }
    None
}

fn main() {
    let mut lines = Vec::new();

    lines.push(timed("1", "counting identities, n = 1..6", Some(60), || {
        checks(&[(Check::Counts, &[1, 2, 3, 4, 5, 6])])
    }));

    lines.push(timed("2", "cells over all of B_n, n = 1..5", Some(10), || {
        checks(&[(Check::Cells, &[1, 2, 3, 4, 5]), (Check::Shapes, &[1, 2, 3, 4, 5])])
    }));
    lines.push(timed("2b", "cells over all of B_6", Some(300), || checks(&[(Check::Cells, &[6])])));

    lines.push(timed("3", "domino RSK symmetries over all of B_n, n = 1..4", Some(10), || {
        checks(&[(Check::Taskin, &[1, 2, 3, 4])])
    }));

    lines.push(timed("4", "fibers partition FC(B_n), n = 1..6; 4-row table verbatim", None, || {
        let (ok, note) = checks(&[(Check::Fibers, &[1, 2, 3, 4, 5, 6])]);
        let four = table_mismatches("[2,4,5,1,3]", &FIBER_4);
        (ok && four.is_empty(), if four.is_empty() { note } else { format!("4-row table rows {four:?} differ") })
    }));

    // The 16-row source table has four defective rows; reproducing it
    // verbatim would mean emitting a duplicate and a non-permutation.
    let mut sixteen = Vec::new();
    let l = timed("4b", "16-row fiber table verbatim", None, || {
        sixteen = table_mismatches("[1,5,2,3,4]", &FIBER_16);
        let defects: Vec<String> = sixteen
            .iter()
            .map(|&i| format!("row {}: {}", i + 1, source_row_defect(&FIBER_16, i).unwrap_or("no defect found")))
            .collect();
        (sixteen.is_empty(), format!("{} of 16 rows verbatim; {}", 16 - sixteen.len(), defects.join("; ")))
    });
    lines.push(l);

    lines.push(timed("5", "type B equidistribution, n = 1..6", Some(30), || {
        checks(&[(Check::Equidistribution, &[1, 2, 3, 4, 5, 6]), (Check::Rubey, &[1, 2, 3, 4, 5, 6])])
    }));

    lines.push(timed("6", "q-weighted Chow expansion n = 1..5, type A analogue n = 1..7", Some(60), || {
        checks(&[
            (Check::ThmMain, &[1, 2, 3, 4, 5]),
            (Check::ThmA, &[1, 2, 3, 4, 5, 6, 7]),
            (Check::Thm3, &[1, 2, 3, 4, 5]),
            (Check::Cor4, &[1, 2, 3, 4, 5]),
        ])
    }));

    lines.push(timed("7", "domino hook formula, Carré–Leclerc bijection and descents, n ≤ 5", None, || {
        checks(&[
            (Check::MvDistributions, &[1, 2, 3, 4, 5]),
            (Check::ClProperties, &[1, 2, 3, 4, 5]),
            (Check::CorDegree, &[1, 2, 3, 4, 5, 6, 7]),
        ])
    }));

    lines.push(timed("8", "Chow vs Poirier positivity, n = 3,4", None, || {
        checks(&[(Check::ChowPositiveFc, &[3, 4]), (Check::NotPoirier, &[3, 4]), (Check::PoirierImpliesChow, &[3])])
    }));

    lines.push(timed("9", "cross-oracle agreement on B_4 / FC(B_4)", None, || checks(&[(Check::CrossOracles, &[4])])));

    println!();
    for l in &lines {
        println!("{}", l.render());
    }
    println!();

    // 4b is red by construction: rows 12, 14, 15, 16 of the source table are
    // defective. Hold it to exactly that so any other drift still fails.
    let known_red = ["4b"];
    let expected_defects = vec![11, 13, 14, 15];
    assert_eq!(sixteen, expected_defects, "16-row table drifted beyond the known source defects");
    for &i in &sixteen {
        assert!(source_row_defect(&FIBER_16, i).is_some(), "source row {} looks valid", i + 1);
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.ok() && !known_red.contains(&l.id)).map(|l| l.id).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
