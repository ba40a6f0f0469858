//! Pattern containment for fillings and words.
//!
//! A filling of a Ferrers shape contains a pattern `x` (with `k` distinct
//! letters and length `r`) when there are columns `c₁<…<c_r` and rows
//! `ρ₁<…<ρ_k` such that column `c_j` has its 1 in row `ρ_{x_j}` and the
//! whole `k x r` window lies inside the shape. For a Ferrers shape the
//! window is inside exactly when its top-right cell `(ρ_k, c_r)` is.
//!
//! The filling routes choose the row injection first and then match the
//! columns greedily from the left. Leftmost matching minimises `c_r`, so it
//! finds a window inside the shape whenever one exists for that injection.

use crate::filling::Filling;
use crate::shape::FerrersShape;
use crate::word::{Pattern, PatternSet, Word};

const MAX_VALUES: usize = 32;

/// Does `f` contain `x`?
pub fn contains(f: &Filling, x: &Pattern) -> bool {
    let shape = f.shape();
    let k = x.num_values();
    if k > shape.num_rows() || x.len() > f.num_cols() {
        return false;
    }
    let mut rho = [0usize; MAX_VALUES + 1];
    choose_rows(
        1,
        1,
        k,
        shape.num_rows(),
        &mut rho,
        &mut |rho| match greedy_match(f.col_to_row(), x.letters(), rho) {
            Some(last_col) => shape.row_len(rho[k]) >= last_col,
            None => false,
        },
    )
}

/// Does `f` avoid every pattern in `set`?
pub fn avoids_all(f: &Filling, set: &PatternSet) -> bool {
    set.iter().all(|x| !contains(f, x))
}

/// The first pattern of `set` that `f` contains, if any.
pub fn first_contained<'a>(f: &Filling, set: &'a PatternSet) -> Option<&'a Pattern> {
    set.iter().find(|x| contains(f, x))
}

/// Whether some occurrence of `x` in the partial filling `prefix` (columns
/// `1..=j` of `shape` placed, `j = prefix.len()`) has column `j` as its
/// rightmost column.
pub fn contains_using_last_column(shape: &FerrersShape, prefix: &[usize], x: &Pattern) -> bool {
    match prefix.len() {
        0 => false,
        j => ends_at_last(prefix, shape.height(j), x.letters(), x.num_values()),
    }
}

/// Incremental check used by the enumeration engine. `cols` are the rows of
/// the placed columns (1-based), `height` is the height of the last placed
/// column, `letters` the pattern and `k` its number of distinct letters.
pub(crate) fn ends_at_last(cols: &[usize], height: usize, letters: &[usize], k: usize) -> bool {
    let r = letters.len();
    let j = cols.len();
    if j < r || k > height {
        return false;
    }
    let last_row = cols[j - 1];
    let fixed = letters[r - 1];
    // rows below and above the fixed letter must fit
    if last_row < fixed || height - last_row < k - fixed {
        return false;
    }
    let head = &letters[..r - 1];
    let prefix = &cols[..j - 1];
    let mut rho = [0usize; MAX_VALUES + 1];
    choose_rows_fixed(1, 1, k, height, fixed, last_row, &mut rho, &mut |rho| {
        greedy_match(prefix, head, rho).is_some()
    })
}

/// Enumerates `ρ_v < ρ_{v+1} < … < ρ_k ≤ max_row` starting at `min_row`,
/// stopping at the first assignment accepted by `found`.
fn choose_rows(
    v: usize,
    min_row: usize,
    k: usize,
    max_row: usize,
    rho: &mut [usize; MAX_VALUES + 1],
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if v > k {
        return found(&rho[..=k]);
    }
    let upper = max_row - (k - v);
    for row in min_row..=upper {
        rho[v] = row;
        if choose_rows(v + 1, row + 1, k, max_row, rho, found) {
            return true;
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn choose_rows_fixed(
    v: usize,
    min_row: usize,
    k: usize,
    max_row: usize,
    fixed: usize,
    fixed_row: usize,
    rho: &mut [usize; MAX_VALUES + 1],
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if v > k {
        return found(&rho[..=k]);
    }
    if v == fixed {
        if fixed_row < min_row {
            return false;
        }
        rho[v] = fixed_row;
        return choose_rows_fixed(
            v + 1,
            fixed_row + 1,
            k,
            max_row,
            fixed,
            fixed_row,
            rho,
            found,
        );
    }
    let upper = if v < fixed {
        fixed_row - (fixed - v)
    } else {
        max_row - (k - v)
    };
    for row in min_row..=upper {
        rho[v] = row;
        if choose_rows_fixed(v + 1, row + 1, k, max_row, fixed, fixed_row, rho, found) {
            return true;
        }
    }
    false
}

/// Leftmost embedding of `letters` into `cols` under the row injection
/// `rho` (indexed by letter). Returns the 1-based column of the last letter.
fn greedy_match(cols: &[usize], letters: &[usize], rho: &[usize]) -> Option<usize> {
    if letters.is_empty() {
        return Some(0);
    }
    let mut t = 0;
    for (c, &row) in cols.iter().enumerate() {
        if row == rho[letters[t]] {
            t += 1;
            if t == letters.len() {
                return Some(c + 1);
            }
        }
    }
    None
}

/// Does the word `w` contain `x`, straight from the order-theoretic
/// definition: some subsequence of `w` compares pairwise (`<`, `=`, `>`)
/// exactly like `x`.
pub fn word_contains(w: &Word, x: &Pattern) -> bool {
    let r = x.len();
    let n = w.len();
    if r > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    'next: loop {
        if same_relative_order(w.letters(), &idx, x.letters()) {
            return true;
        }
        // advance to the next r-combination of 0..n
        for i in (0..r).rev() {
            if idx[i] < n - r + i {
                idx[i] += 1;
                for t in i + 1..r {
                    idx[t] = idx[t - 1] + 1;
                }
                continue 'next;
            }
        }
        return false;
    }
}

fn same_relative_order(w: &[usize], idx: &[usize], x: &[usize]) -> bool {
    for s in 0..x.len() {
        for t in s + 1..x.len() {
            if w[idx[s]].cmp(&w[idx[t]]) != x[s].cmp(&x[t]) {
                return false;
            }
        }
    }
    true
}

pub fn word_avoids_all(w: &Word, set: &PatternSet) -> bool {
    set.iter().all(|x| !word_contains(w, x))
}
