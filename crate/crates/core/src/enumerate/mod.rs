//! Exhaustive counting and enumeration of pattern-avoiding fillings.
//!
//! Columns are placed left to right. A branch is cut as soon as the newly
//! placed column completes an occurrence of some forbidden pattern; every
//! occurrence has a rightmost column, so the cut is exact. Row contents are
//! tracked per row so that infeasible branches (a row that can no longer
//! receive its required 1's) are also cut early.

mod cache;
mod compositions;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use cache::{CountCache, Counter};
pub use compositions::{compositions, Compositions};

use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::matcher::{ends_at_last, word_avoids_all};
use crate::shape::{join_usize, parse_usize_list, FerrersShape};
use crate::word::{Composition, PatternSet, Word};

/// Which row contents are admitted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContentSpec {
    /// Exactly `a_i` 1's in row `i`. Entries may be zero.
    Exact(Vec<usize>),
    /// Any number of 1's per row, including none.
    Unconstrained,
    /// At least one 1 in every row.
    PositiveRows,
}

impl ContentSpec {
    pub fn exact(a: &Composition) -> Self {
        ContentSpec::Exact(a.parts().to_vec())
    }
}

impl fmt::Display for ContentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContentSpec::Exact(a) => f.write_str(&join_usize(a)),
            ContentSpec::Unconstrained => f.write_str("unconstrained"),
            ContentSpec::PositiveRows => f.write_str("positive-rows"),
        }
    }
}

impl fmt::Debug for ContentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContentSpec({self})")
    }
}

impl FromStr for ContentSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "unconstrained" | "all" => Ok(ContentSpec::Unconstrained),
            "positive-rows" | "positive" => Ok(ContentSpec::PositiveRows),
            other => Ok(ContentSpec::Exact(parse_usize_list(other)?)),
        }
    }
}

impl Serialize for ContentSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ContentSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One computed cardinality `|W^content_shape(patterns)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountRecord {
    pub shape: FerrersShape,
    pub content: ContentSpec,
    pub patterns: PatternSet,
    pub count: u64,
}

/// Precompiled search problem.
#[derive(Debug, Clone)]
struct Problem {
    heights: Vec<usize>,
    num_rows: usize,
    patterns: Vec<(Vec<usize>, usize)>,
    content: ContentSpec,
}

impl Problem {
    fn new(shape: &FerrersShape, content: &ContentSpec, set: &PatternSet) -> Result<Self> {
        if let ContentSpec::Exact(a) = content {
            check_content(shape, a)?;
        }
        Ok(Problem {
            heights: shape.column_heights().to_vec(),
            num_rows: shape.num_rows(),
            patterns: set
                .iter()
                .map(|p| (p.letters().to_vec(), p.num_values()))
                .collect(),
            content: content.clone(),
        })
    }

    fn num_cols(&self) -> usize {
        self.heights.len()
    }
}

fn check_content(shape: &FerrersShape, a: &[usize]) -> Result<()> {
    let bad = |reason: String| Error::BadComposition {
        shape: shape.rows().to_vec(),
        content: a.to_vec(),
        reason,
    };
    if a.len() != shape.num_rows() {
        return Err(bad(format!(
            "{} parts for {} rows",
            a.len(),
            shape.num_rows()
        )));
    }
    let total: usize = a.iter().sum();
    if total != shape.num_cols() {
        return Err(bad(format!(
            "parts sum to {} but the shape has {} columns",
            total,
            shape.num_cols()
        )));
    }
    Ok(())
}

/// Mutable DFS state: placed columns plus per-row bookkeeping.
#[derive(Debug, Clone)]
struct State<'p> {
    problem: &'p Problem,
    cols: Vec<usize>,
    /// Remaining capacity (exact) or number of 1's placed (other modes),
    /// indexed by 1-based row.
    rows: Vec<usize>,
    empty_rows: usize,
}

impl<'p> State<'p> {
    fn new(problem: &'p Problem) -> Self {
        let mut rows = vec![0; problem.num_rows + 1];
        if let ContentSpec::Exact(a) = &problem.content {
            rows[1..].copy_from_slice(a);
        }
        State {
            problem,
            cols: Vec::with_capacity(problem.num_cols()),
            rows,
            empty_rows: problem.num_rows,
        }
    }

    fn is_complete(&self) -> bool {
        self.cols.len() == self.problem.num_cols()
    }

    /// Places the next column's 1 in `row`. Returns false (leaving the
    /// state unchanged) if this creates a forbidden occurrence or makes the
    /// row contents unreachable.
    fn try_place(&mut self, row: usize) -> bool {
        let p = self.problem;
        let j = self.cols.len();
        match p.content {
            ContentSpec::Exact(_) => {
                if self.rows[row] == 0 {
                    return false;
                }
            }
            ContentSpec::PositiveRows | ContentSpec::Unconstrained => {}
        }
        self.cols.push(row);
        self.bump(row);
        let height = p.heights[j];
        let ok = p
            .patterns
            .iter()
            .all(|(letters, k)| !ends_at_last(&self.cols, height, letters, *k))
            && self.feasible();
        if !ok {
            self.undo();
        }
        ok
    }

    fn bump(&mut self, row: usize) {
        match self.problem.content {
            ContentSpec::Exact(_) => self.rows[row] -= 1,
            _ => {
                if self.rows[row] == 0 {
                    self.empty_rows -= 1;
                }
                self.rows[row] += 1;
            }
        }
    }

    fn undo(&mut self) {
        let row = self.cols.pop().expect("undo on empty state");
        match self.problem.content {
            ContentSpec::Exact(_) => self.rows[row] += 1,
            _ => {
                self.rows[row] -= 1;
                if self.rows[row] == 0 {
                    self.empty_rows += 1;
                }
            }
        }
    }

    /// Can the remaining columns still satisfy the row constraint?
    fn feasible(&self) -> bool {
        let p = self.problem;
        let j = self.cols.len();
        let reach = p.heights.get(j).copied().unwrap_or(0);
        match p.content {
            ContentSpec::Unconstrained => true,
            ContentSpec::Exact(_) => self.rows[reach + 1..].iter().all(|&c| c == 0),
            ContentSpec::PositiveRows => {
                self.empty_rows <= p.num_cols() - j && self.rows[reach + 1..].iter().all(|&c| c > 0)
            }
        }
    }

    fn count(&mut self) -> u64 {
        if self.is_complete() {
            return 1;
        }
        let height = self.problem.heights[self.cols.len()];
        let mut total: u64 = 0;
        for row in 1..=height {
            if self.try_place(row) {
                total = total.checked_add(self.count()).expect("count exceeds u64");
                self.undo();
            }
        }
        total
    }

    /// All valid prefixes of length `depth` (or complete fillings, if
    /// shorter), in lexicographic order.
    fn prefixes(&mut self, depth: usize, out: &mut Vec<Vec<usize>>) {
        if self.cols.len() == depth || self.is_complete() {
            out.push(self.cols.clone());
            return;
        }
        let height = self.problem.heights[self.cols.len()];
        for row in 1..=height {
            if self.try_place(row) {
                self.prefixes(depth, out);
                self.undo();
            }
        }
    }
}

fn count_problem(problem: &Problem) -> u64 {
    let mut root = State::new(problem);
    if !root.feasible() {
        return 0;
    }
    let depth = problem.num_cols().min(2);
    let mut prefixes = Vec::new();
    root.prefixes(depth, &mut prefixes);
    prefixes
        .par_iter()
        .map(|prefix| {
            let mut st = State::new(problem);
            for &row in prefix {
                let placed = st.try_place(row);
                debug_assert!(placed);
            }
            st.count()
        })
        .reduce(|| 0, |a, b| a.checked_add(b).expect("count exceeds u64"))
}

/// Counts fillings of `shape` with the given row contents avoiding `set`.
pub fn count(shape: &FerrersShape, content: &ContentSpec, set: &PatternSet) -> Result<u64> {
    Ok(count_problem(&Problem::new(shape, content, set)?))
}

/// `|W^a_λ(Ω)|`.
pub fn count_fillings(shape: &FerrersShape, a: &Composition, set: &PatternSet) -> Result<u64> {
    count(shape, &ContentSpec::exact(a), set)
}

/// `|W_λ(Ω)|`: one 1 per column, rows unconstrained (possibly empty).
pub fn count_all_fillings(shape: &FerrersShape, set: &PatternSet) -> u64 {
    count(shape, &ContentSpec::Unconstrained, set).expect("unconstrained content is always valid")
}

/// Fillings with at least one 1 in every row; 0 when the shape has more
/// rows than columns.
pub fn count_positive_fillings(shape: &FerrersShape, set: &PatternSet) -> u64 {
    count(shape, &ContentSpec::PositiveRows, set).expect("positive-rows content is always valid")
}

/// `|W_{n,m}(Ω)|`: words of length `n` over `{1..m}`, counted as fillings
/// of the `m x n` rectangle.
pub fn count_words(n: usize, m: usize, set: &PatternSet) -> Result<u64> {
    let rect = FerrersShape::rectangle(m, n)?;
    Ok(count_all_fillings(&rect, set))
}

/// `|W_{n,m}(Ω)|` by direct iteration over all `mⁿ` words with the
/// word-level matcher. Independent of the filling engine; only practical
/// for small `n, m`.
pub fn count_words_direct(n: usize, m: usize, set: &PatternSet) -> u64 {
    let mut letters = vec![1usize; n];
    let mut total = 0;
    loop {
        let w = Word::new(letters.clone()).expect("positive letters");
        if word_avoids_all(&w, set) {
            total += 1;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            if letters[i] < m {
                letters[i] += 1;
                break;
            }
            letters[i] = 1;
        }
    }
}

/// Streams every avoiding filling exactly once, in lexicographic order of
/// the column list.
pub fn enumerate_fillings(
    shape: &FerrersShape,
    content: &ContentSpec,
    set: &PatternSet,
) -> Result<FillingIter> {
    Ok(FillingIter::new(
        shape.clone(),
        Problem::new(shape, content, set)?,
    ))
}

/// Iterator returned by [`enumerate_fillings`].
pub struct FillingIter {
    shape: FerrersShape,
    problem: Box<Problem>,
    cols: Vec<usize>,
    rows: Vec<usize>,
    empty_rows: usize,
    cursor: Vec<usize>,
    finished: bool,
}

impl FillingIter {
    fn new(shape: FerrersShape, problem: Problem) -> Self {
        let problem = Box::new(problem);
        let st = State::new(&problem);
        let finished = !st.feasible();
        let (rows, empty_rows) = (st.rows, st.empty_rows);
        let n = problem.num_cols();
        FillingIter {
            shape,
            problem,
            cols: Vec::with_capacity(n),
            rows,
            empty_rows,
            cursor: vec![1; n + 1],
            finished,
        }
    }

    fn with_state<R>(&mut self, f: impl FnOnce(&mut State<'_>) -> R) -> R {
        let mut st = State {
            problem: &self.problem,
            cols: std::mem::take(&mut self.cols),
            rows: std::mem::take(&mut self.rows),
            empty_rows: self.empty_rows,
        };
        let out = f(&mut st);
        self.cols = st.cols;
        self.rows = st.rows;
        self.empty_rows = st.empty_rows;
        out
    }
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        let n = self.problem.num_cols();
        while !self.finished {
            let d = self.cols.len();
            if d == n {
                let out = Filling::new(self.shape.clone(), self.cols.clone())
                    .expect("engine places 1's inside the shape");
                self.with_state(|st| st.undo());
                return Some(out);
            }
            let height = self.problem.heights[d];
            let mut advanced = false;
            while self.cursor[d] <= height {
                let row = self.cursor[d];
                self.cursor[d] += 1;
                if self.with_state(|st| st.try_place(row)) {
                    self.cursor[d + 1] = 1;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if d == 0 {
                    self.finished = true;
                } else {
                    self.with_state(|st| st.undo());
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::avoids_all;
    use crate::word::pats;

    fn shape(s: &str) -> FerrersShape {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Filters all `Π h_j` fillings with the full (non-incremental) matcher.
    fn naive(shape: &FerrersShape, content: &ContentSpec, set: &PatternSet) -> u64 {
        let h = shape.column_heights();
        let mut cols = vec![1usize; h.len()];
        let mut total = 0;
        loop {
            let f = Filling::new(shape.clone(), cols.clone()).unwrap();
            let c = f.content();
            let ok = match content {
                ContentSpec::Exact(a) => &c == a,
                ContentSpec::Unconstrained => true,
                ContentSpec::PositiveRows => c.iter().all(|&x| x > 0),
            };
            if ok && avoids_all(&f, set) {
                total += 1;
            }
            let mut i = h.len();
            loop {
                if i == 0 {
                    return total;
                }
                i -= 1;
                if cols[i] < h[i] {
                    cols[i] += 1;
                    break;
                }
                cols[i] = 1;
            }
        }
    }

    #[test]
    fn table_one_cells() {
        let s = shape("5,5,4");
        assert_eq!(
            count_fillings(&s, &comp("2,2,1"), &pats("231")).unwrap(),
            18
        );
        assert_eq!(count_fillings(&s, &comp("1,1,3"), &pats("312")).unwrap(), 8);
        let s2 = shape("5,5,5,4");
        assert_eq!(
            count_fillings(&s2, &comp("1,2,1,1"), &pats("312")).unwrap(),
            25
        );
        assert_eq!(
            count_fillings(&s2, &comp("1,1,2,1"), &pats("312")).unwrap(),
            26
        );
        // the published table has 26 here; brute force over all 4⁴·3 fillings gives 25
        assert_eq!(
            count_fillings(&s2, &comp("1,2,1,1"), &pats("231")).unwrap(),
            25
        );
        assert_eq!(
            count_fillings(&shape("2,2"), &comp("1,1"), &PatternSet::empty()).unwrap(),
            2
        );
    }

    #[test]
    fn bad_composition() {
        let s = shape("5,5,4");
        assert!(matches!(
            count_fillings(&s, &comp("2,2"), &pats("231")),
            Err(Error::BadComposition { .. })
        ));
        assert!(matches!(
            count_fillings(&s, &comp("2,2,2"), &pats("231")),
            Err(Error::BadComposition { .. })
        ));
    }

    #[test]
    fn all_and_positive() {
        assert_eq!(count_all_fillings(&shape("2,1"), &PatternSet::empty()), 2);
        // unconstrained rows; values checked against an independent brute force
        assert_eq!(count_all_fillings(&shape("6,6,6,4"), &pats("231")), 1548);
        assert_eq!(count_all_fillings(&shape("6,6,6,4"), &pats("312")), 1552);
        assert_eq!(
            count_all_fillings(&shape("7,7,5,3,3,3"), &pats("231")),
            6492
        );
        // at least one 1 per row: the regime of the published shape table
        assert_eq!(
            count_positive_fillings(&shape("6,6,6,4"), &pats("231")),
            425
        );
        assert_eq!(
            count_positive_fillings(&shape("6,6,6,4"), &pats("312")),
            429
        );
        assert_eq!(
            count_positive_fillings(&shape("7,7,5,3,3,3"), &pats("231")),
            70
        );
        assert_eq!(
            count_positive_fillings(&shape("7,7,5,3,3,3"), &pats("312")),
            70
        );
        assert_eq!(count_positive_fillings(&shape("5,5,5,4"), &pats("312")), 97);
        assert_eq!(
            count_positive_fillings(&shape("1"), &PatternSet::empty()),
            1
        );
        assert_eq!(
            count_positive_fillings(&shape("1,1"), &PatternSet::empty()),
            0
        );
    }

    #[test]
    fn empty_set_counts_every_filling() {
        for s in ["5,5,4", "3,2,1", "4,4,4,1"] {
            let s = shape(s);
            let product: u64 = s.column_heights().iter().map(|&h| h as u64).product();
            assert_eq!(count_all_fillings(&s, &PatternSet::empty()), product);
        }
    }

    #[test]
    fn positive_is_sum_over_compositions() {
        for s in ["5,5,5,4", "6,6,6,4", "5,4,4,2"] {
            let s = shape(s);
            for set in ["231", "312", "2314+11"] {
                let set = pats(set);
                let by_parts: u64 = compositions(s.num_cols(), s.num_rows(), true)
                    .map(|a| count(&s, &ContentSpec::Exact(a), &set).unwrap())
                    .sum();
                let all_parts: u64 = compositions(s.num_cols(), s.num_rows(), false)
                    .map(|a| count(&s, &ContentSpec::Exact(a), &set).unwrap())
                    .sum();
                assert_eq!(count_positive_fillings(&s, &set), by_parts);
                assert_eq!(count_all_fillings(&s, &set), all_parts);
            }
        }
    }

    #[test]
    fn small_word_counts() {
        for n in 1..5 {
            assert_eq!(count_words(n, 1, &pats("12")).unwrap(), 1);
        }
        for (n, m) in [(3, 3), (4, 3), (5, 2), (4, 4)] {
            for set in ["231", "312", "2314", "11", "121+212"] {
                let set = pats(set);
                assert_eq!(
                    count_words(n, m, &set).unwrap(),
                    count_words_direct(n, m, &set),
                    "n={n} m={m} set={set}"
                );
            }
        }
    }

    #[test]
    fn engine_matches_naive_filter() {
        let sets = ["231", "312", "231+221", "12", "121", "-"];
        for s in ["3,3,2", "4,3,1", "3,3,3", "4,4,2,1", "2,2,2,2"] {
            let s = shape(s);
            for set in sets {
                let set = pats(set);
                for content in [ContentSpec::Unconstrained, ContentSpec::PositiveRows] {
                    assert_eq!(
                        count(&s, &content, &set).unwrap(),
                        naive(&s, &content, &set),
                        "{s} {content} {set}"
                    );
                }
                for a in compositions(s.num_cols(), s.num_rows(), false) {
                    let content = ContentSpec::Exact(a);
                    assert_eq!(
                        count(&s, &content, &set).unwrap(),
                        naive(&s, &content, &set),
                        "{s} {content} {set}"
                    );
                }
            }
        }
    }

    #[test]
    fn stream_examples() {
        let got: Vec<_> = enumerate_fillings(
            &shape("2,2"),
            &ContentSpec::exact(&comp("1,1")),
            &pats("12"),
        )
        .unwrap()
        .map(|f| f.col_to_row().to_vec())
        .collect();
        assert_eq!(got, vec![vec![2, 1]]);
        let one: Vec<_> = enumerate_fillings(
            &shape("1"),
            &ContentSpec::exact(&comp("1")),
            &PatternSet::empty(),
        )
        .unwrap()
        .collect();
        assert_eq!(one.len(), 1);
        let s = shape("5,5,4");
        let all: Vec<_> = enumerate_fillings(&s, &ContentSpec::exact(&comp("2,2,1")), &pats("231"))
            .unwrap()
            .collect();
        assert_eq!(all.len(), 18);
        assert!(all
            .windows(2)
            .all(|w| w[0].col_to_row() < w[1].col_to_row()));
        assert!(all
            .iter()
            .all(|f| f.content() == vec![2, 2, 1] && avoids_all(f, &pats("231"))));
    }

    #[test]
    fn stream_agrees_with_count() {
        for s in ["4,4,3", "5,3,3,1", "3,3,3,3"] {
            let s = shape(s);
            for content in [ContentSpec::Unconstrained, ContentSpec::PositiveRows] {
                let set = pats("312+11");
                let n = enumerate_fillings(&s, &content, &set).unwrap().count() as u64;
                assert_eq!(n, count(&s, &content, &set).unwrap());
            }
        }
    }

    #[test]
    fn content_spec_text() {
        assert_eq!(
            "2,2,1".parse::<ContentSpec>().unwrap(),
            ContentSpec::Exact(vec![2, 2, 1])
        );
        assert_eq!(
            "unconstrained".parse::<ContentSpec>().unwrap(),
            ContentSpec::Unconstrained
        );
        assert_eq!(ContentSpec::PositiveRows.to_string(), "positive-rows");
        let rec = CountRecord {
            shape: shape("5,5,4"),
            content: ContentSpec::Exact(vec![2, 2, 1]),
            patterns: pats("231"),
            count: 18,
        };
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"shape":"5,5,4","content":"2,2,1","patterns":"231","count":18}"#
        );
    }
}
