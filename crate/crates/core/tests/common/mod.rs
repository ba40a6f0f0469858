//! Brute-force reference implementations shared by the integration tests.
//! Nothing here goes through the matcher or the enumeration engine.

#![allow(dead_code)]

use shape_wilf::FerrersShape;

/// Every way to put one 1 in each column of `shape`, as column-to-row lists.
pub fn all_fillings(shape: &FerrersShape) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &h in shape.column_heights() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (1..=h).map(move |r| {
                    let mut next = prefix.clone();
                    next.push(r);
                    next
                })
            })
            .collect();
    }
    out
}

pub fn content(cols: &[usize], rows: usize) -> Vec<usize> {
    let mut c = vec![0; rows];
    for &r in cols {
        c[r - 1] += 1;
    }
    c
}

/// Literal definition: some set of columns whose 1's are order-isomorphic
/// to `pattern` (equal letters on equal rows), with the top-right cell of
/// the spanned window inside the shape.
pub fn contains(shape: &FerrersShape, cols: &[usize], pattern: &[usize]) -> bool {
    let r = pattern.len();
    let n = cols.len();
    let mut chosen = Vec::with_capacity(r);
    fn go(
        start: usize,
        n: usize,
        r: usize,
        chosen: &mut Vec<usize>,
        check: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == r {
            return check(chosen);
        }
        for c in start..n {
            chosen.push(c);
            if go(c + 1, n, r, chosen, check) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(0, n, r, &mut chosen, &mut |idx: &[usize]| {
        for s in 0..r {
            for t in 0..r {
                if cols[idx[s]].cmp(&cols[idx[t]]) != pattern[s].cmp(&pattern[t]) {
                    return false;
                }
            }
        }
        let top = idx.iter().map(|&i| cols[i]).max().unwrap();
        let right = idx[r - 1] + 1;
        shape.row_len(top) >= right
    })
}

pub fn avoids(shape: &FerrersShape, cols: &[usize], patterns: &[Vec<usize>]) -> bool {
    patterns.iter().all(|p| !contains(shape, cols, p))
}

pub fn digits(s: &str) -> Vec<usize> {
    s.chars()
        .map(|c| c.to_digit(10).unwrap() as usize)
        .collect()
}

/// Full rook placements of a square-bottomed shape (`m` rows, `m` columns).
pub fn permutations(shape: &FerrersShape) -> Vec<Vec<usize>> {
    all_fillings(shape)
        .into_iter()
        .filter(|c| content(c, shape.num_rows()).iter().all(|&k| k == 1))
        .collect()
}
