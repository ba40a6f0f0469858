//! Table reproduction, equivalence and conjecture scans, and report export.
//!
//! Every scan builds its task list up front, counts the tasks in parallel
//! and assembles the report in task order, so the output does not depend
//! on the number of worker threads or on the state of the count cache.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{compositions, ContentSpec, CountRecord, Counter};
use crate::error::{Error, Result};
use crate::shape::FerrersShape;
use crate::word::{pats, Pattern, PatternSet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    Unequal,
    ConjectureConsistent,
    CounterexampleFound,
}

impl Verdict {
    /// Whether the verdict reports an inequality or counterexample.
    pub fn is_negative(self) -> bool {
        matches!(self, Verdict::Unequal | Verdict::CounterexampleFound)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub description: String,
    pub pattern_sets: Vec<PatternSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub content: Option<ContentSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_cols: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_alphabet: Option<usize>,
}

/// Two counts that differ. For table reproduction `count_a` is the
/// computed value and `count_b` the tabulated one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub shape: FerrersShape,
    pub content: ContentSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub patterns: Option<PatternSet>,
    pub count_a: u64,
    pub count_b: u64,
}

/// One tabulated cell next to the recomputed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub shape: FerrersShape,
    pub content: ContentSpec,
    pub patterns: PatternSet,
    pub expected: u64,
    pub computed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub scope: Scope,
    pub records: Vec<CountRecord>,
    pub mismatches: Vec<Mismatch>,
    pub verdict: Verdict,
    /// Shapes where the first count is strictly smaller (conjecture scans).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub strict_inequalities: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<TableCell>,
}

/// A tabulated value from one of the four fixtures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCell {
    pub shape: FerrersShape,
    pub content: ContentSpec,
    pub patterns: PatternSet,
    pub expected: u64,
}

const TABLES: [&str; 4] = [
    include_str!("../fixtures/table1.txt"),
    include_str!("../fixtures/table2.txt"),
    include_str!("../fixtures/table3.txt"),
    include_str!("../fixtures/table4.txt"),
];

/// The tabulated cells of table `id` (1 to 4), in the published order.
pub fn table_fixture(id: usize) -> Result<Vec<FixtureCell>> {
    let text = id
        .checked_sub(1)
        .and_then(|i| TABLES.get(i))
        .ok_or_else(|| Error::Parse(format!("no table {id}, expected 1 to 4")))?;
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(Error::Parse(format!("bad fixture line {line:?}")));
            }
            Ok(FixtureCell {
                shape: f[0].parse()?,
                content: f[1].parse()?,
                patterns: f[2].parse()?,
                expected: f[3]
                    .parse()
                    .map_err(|e| Error::Parse(format!("{line:?}: {e}")))?,
            })
        })
        .collect()
}

type Task = (FerrersShape, ContentSpec, PatternSet);

fn run(tasks: &[Task], counter: &Counter) -> Result<Vec<CountRecord>> {
    tasks
        .par_iter()
        .map(|(shape, content, set)| counter.record(shape, content, set))
        .collect()
}

/// Recomputes every cell of table `id` and compares it with the fixture.
pub fn reproduce_table(id: usize, counter: &Counter) -> Result<ScanReport> {
    let fixture = table_fixture(id)?;
    let tasks: Vec<Task> = fixture
        .iter()
        .map(|c| (c.shape.clone(), c.content.clone(), c.patterns.clone()))
        .collect();
    let records = run(&tasks, counter)?;
    let cells: Vec<TableCell> = fixture
        .into_iter()
        .zip(&records)
        .map(|(c, r)| TableCell {
            shape: c.shape,
            content: c.content,
            patterns: c.patterns,
            expected: c.expected,
            computed: r.count,
        })
        .collect();
    let mismatches: Vec<Mismatch> = cells
        .iter()
        .filter(|c| c.computed != c.expected)
        .map(|c| Mismatch {
            shape: c.shape.clone(),
            content: c.content.clone(),
            patterns: Some(c.patterns.clone()),
            count_a: c.computed,
            count_b: c.expected,
        })
        .collect();
    let mut pattern_sets: Vec<PatternSet> = Vec::new();
    for c in &cells {
        if !pattern_sets.contains(&c.patterns) {
            pattern_sets.push(c.patterns.clone());
        }
    }
    let verdict = if mismatches.is_empty() {
        Verdict::Equal
    } else {
        Verdict::Unequal
    };
    Ok(ScanReport {
        scope: Scope {
            description: format!("table {id}: recomputed against the tabulated values"),
            pattern_sets,
            ..Scope::default()
        },
        records,
        mismatches,
        verdict,
        strict_inequalities: Vec::new(),
        cells,
    })
}

/// Pairs up the records of `tasks` built as (A, B) alternately.
fn pairs(records: &[CountRecord]) -> impl Iterator<Item = (&CountRecord, &CountRecord)> {
    records.chunks(2).map(|p| (&p[0], &p[1]))
}

fn mismatch(a: &CountRecord, b: &CountRecord) -> Mismatch {
    Mismatch {
        shape: a.shape.clone(),
        content: a.content.clone(),
        patterns: None,
        count_a: a.count,
        count_b: b.count,
    }
}

/// Compares `|W^a_λ(Ω)|` with `|W^a_λ(Σ)|` for every shape within the
/// bounds and every positive composition `a`.
pub fn check_equivalence(
    omega: &PatternSet,
    sigma: &PatternSet,
    max_cols: usize,
    max_rows: usize,
    counter: &Counter,
) -> Result<ScanReport> {
    let mut tasks = Vec::new();
    for shape in FerrersShape::all_within(max_cols, max_rows) {
        for a in compositions(shape.num_cols(), shape.num_rows(), true) {
            let content = ContentSpec::Exact(a);
            tasks.push((shape.clone(), content.clone(), omega.clone()));
            tasks.push((shape.clone(), content, sigma.clone()));
        }
    }
    let records = run(&tasks, counter)?;
    let mismatches: Vec<Mismatch> = pairs(&records)
        .filter(|(a, b)| a.count != b.count)
        .map(|(a, b)| mismatch(a, b))
        .collect();
    let verdict = if mismatches.is_empty() {
        Verdict::Equal
    } else {
        Verdict::Unequal
    };
    Ok(ScanReport {
        scope: Scope {
            description: format!(
                "every shape with at most {max_cols} columns and {max_rows} rows, every positive row content"
            ),
            pattern_sets: vec![omega.clone(), sigma.clone()],
            max_cols: Some(max_cols),
            max_rows: Some(max_rows),
            ..Scope::default()
        },
        records,
        mismatches,
        verdict,
        strict_inequalities: Vec::new(),
        cells: Vec::new(),
    })
}

/// Tests `|W_λ(231)| ≤ |W_λ(312)|` on every shape within the bounds, with
/// row contents restricted by `regime`.
pub fn scan_conjecture1(
    max_cols: usize,
    max_rows: usize,
    regime: &ContentSpec,
    counter: &Counter,
) -> Result<ScanReport> {
    if let ContentSpec::Exact(_) = regime {
        return Err(Error::Parse(
            "the inequality scan takes unconstrained or positive-rows contents".into(),
        ));
    }
    let (a, b) = (pats("231"), pats("312"));
    let tasks: Vec<Task> = FerrersShape::all_within(max_cols, max_rows)
        .into_iter()
        .flat_map(|s| {
            [
                (s.clone(), regime.clone(), a.clone()),
                (s, regime.clone(), b.clone()),
            ]
        })
        .collect();
    let records = run(&tasks, counter)?;
    let mismatches: Vec<Mismatch> = pairs(&records)
        .filter(|(x, y)| x.count > y.count)
        .map(|(x, y)| mismatch(x, y))
        .collect();
    let strict: Vec<Mismatch> = pairs(&records)
        .filter(|(x, y)| x.count < y.count)
        .map(|(x, y)| mismatch(x, y))
        .collect();
    let verdict = if mismatches.is_empty() {
        Verdict::ConjectureConsistent
    } else {
        Verdict::CounterexampleFound
    };
    Ok(ScanReport {
        scope: Scope {
            description: format!(
                "|W(231)| <= |W(312)| on every shape with at most {max_cols} columns and {max_rows} rows"
            ),
            pattern_sets: vec![a, b],
            content: Some(regime.clone()),
            max_cols: Some(max_cols),
            max_rows: Some(max_rows),
            ..Scope::default()
        },
        records,
        mismatches,
        verdict,
        strict_inequalities: strict,
        cells: Vec::new(),
    })
}

/// `231⊕β` and `312⊕β` as patterns.
pub fn conjecture2_patterns(beta: &Word) -> Result<(Pattern, Pattern)> {
    let lift = |base: &str| -> Result<Pattern> {
        let w: Word = base.parse()?;
        Pattern::new(w.direct_sum(beta))
    };
    if !beta.is_empty() {
        let p = Pattern::new(beta.clone())?;
        if !p.is_permutation() {
            return Err(Error::InvalidPattern {
                pattern: beta.to_string(),
                reason: "not a permutation".into(),
            });
        }
    }
    Ok((lift("231")?, lift("312")?))
}

/// Compares word counts of `231⊕β` and `312⊕β` for every length
/// `n ≤ max_length` and alphabet size `m ≤ max_alphabet`, length-major.
/// The first mismatch is the smallest witness of non-equivalence.
pub fn scan_conjecture2(
    beta: &Word,
    max_length: usize,
    max_alphabet: usize,
    counter: &Counter,
) -> Result<ScanReport> {
    let (a, b) = conjecture2_patterns(beta)?;
    let (a, b) = (PatternSet::new([a]), PatternSet::new([b]));
    let mut tasks = Vec::new();
    for n in 1..=max_length {
        for m in 1..=max_alphabet {
            let rect = FerrersShape::rectangle(m, n)?;
            tasks.push((rect.clone(), ContentSpec::Unconstrained, a.clone()));
            tasks.push((rect, ContentSpec::Unconstrained, b.clone()));
        }
    }
    let records = run(&tasks, counter)?;
    let mismatches: Vec<Mismatch> = pairs(&records)
        .filter(|(x, y)| x.count != y.count)
        .map(|(x, y)| mismatch(x, y))
        .collect();
    let verdict = if mismatches.is_empty() {
        Verdict::Equal
    } else {
        Verdict::Unequal
    };
    Ok(ScanReport {
        scope: Scope {
            description: format!(
                "words of length at most {max_length} over at most {max_alphabet} letters (m x n rectangles)"
            ),
            pattern_sets: vec![a, b],
            content: Some(ContentSpec::Unconstrained),
            max_length: Some(max_length),
            max_alphabet: Some(max_alphabet),
            ..Scope::default()
        },
        records,
        mismatches,
        verdict,
        strict_inequalities: Vec::new(),
        cells: Vec::new(),
    })
}

impl ScanReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per (shape, pattern set), one column per row content, in
    /// order of first appearance.
    pub fn to_csv(&self) -> Result<String> {
        let mut contents: Vec<&ContentSpec> = Vec::new();
        let mut rows: Vec<(&FerrersShape, &PatternSet)> = Vec::new();
        let mut cells: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for r in &self.records {
            let c = match contents.iter().position(|&c| c == &r.content) {
                Some(i) => i,
                None => {
                    contents.push(&r.content);
                    contents.len() - 1
                }
            };
            let key = (&r.shape, &r.patterns);
            let row = match rows.iter().position(|&k| k == key) {
                Some(i) => i,
                None => {
                    rows.push(key);
                    rows.len() - 1
                }
            };
            cells.insert((row, c), r.count);
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["shape".to_string(), "patterns".to_string()];
        header.extend(contents.iter().map(|c| c.to_string()));
        w.write_record(&header).map_err(csv_err)?;
        for (i, (shape, set)) in rows.iter().enumerate() {
            let mut line = vec![shape.to_string(), set.to_string()];
            line.extend((0..contents.len()).map(|c| {
                cells
                    .get(&(i, c))
                    .map(|v| v.to_string())
                    .unwrap_or_default()
            }));
            w.write_record(&line).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.scope.description);
        if !self.cells.is_empty() {
            for c in &self.cells {
                let mark = if c.computed == c.expected {
                    "ok"
                } else {
                    "MISMATCH"
                };
                let _ = writeln!(
                    out,
                    "{:<16} {:<14} {:<6} computed {:>8}  expected {:>8}  {mark}",
                    c.shape.to_string(),
                    c.content.to_string(),
                    c.patterns.to_string(),
                    c.computed,
                    c.expected
                );
            }
        } else {
            for (a, b) in pairs(&self.records) {
                let _ = writeln!(
                    out,
                    "{:<16} {:<14} {} {:>10}  {} {:>10}",
                    a.shape.to_string(),
                    a.content.to_string(),
                    a.patterns,
                    a.count,
                    b.patterns,
                    b.count
                );
            }
        }
        for m in &self.mismatches {
            let _ = writeln!(
                out,
                "mismatch: {} {} {} vs {}",
                m.shape, m.content, m.count_a, m.count_b
            );
        }
        if !self.strict_inequalities.is_empty() {
            let _ = writeln!(
                out,
                "strict inequalities: {}",
                self.strict_inequalities.len()
            );
        }
        let _ = writeln!(out, "verdict: {}", verdict_name(self.verdict));
        out
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Equal => "equal",
        Verdict::Unequal => "unequal",
        Verdict::ConjectureConsistent => "conjecture-consistent",
        Verdict::CounterexampleFound => "counterexample-found",
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}
