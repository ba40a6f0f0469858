//! Ferrers shapes in French convention and their right/up border.
//!
//! Rows are numbered from 1 at the bottom, columns from 1 at the left. A
//! shape `(5,5,4)` has two bottom rows of length five and a top row of
//! length four.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A left-justified diagram whose row lengths weakly decrease from bottom
/// to top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FerrersShape {
    rows: Vec<usize>,
    heights: Vec<usize>,
}

impl FerrersShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::NotFerrers("shape has no rows".into()));
        }
        if let Some(pos) = rows.iter().position(|&r| r == 0) {
            return Err(Error::NotFerrers(format!("row {} is empty", pos + 1)));
        }
        if let Some(pos) = rows.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotFerrers(format!(
                "row {} (length {}) is shorter than row {} (length {})",
                pos + 1,
                rows[pos],
                pos + 2,
                rows[pos + 1]
            )));
        }
        let heights = (1..=rows[0])
            .map(|j| rows.iter().take_while(|&&len| len >= j).count())
            .collect();
        Ok(FerrersShape { rows, heights })
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Result<Self> {
        Self::new(vec![cols; rows])
    }

    /// Every shape with at most `max_rows` rows and at most `max_cols`
    /// columns, ordered by cell count and then by row vector.
    pub fn all_within(max_cols: usize, max_rows: usize) -> Vec<FerrersShape> {
        fn extend(rows: &mut Vec<usize>, cap: usize, max_rows: usize, out: &mut Vec<Vec<usize>>) {
            if !rows.is_empty() {
                out.push(rows.clone());
            }
            if rows.len() == max_rows {
                return;
            }
            for len in 1..=cap {
                rows.push(len);
                extend(rows, len, max_rows, out);
                rows.pop();
            }
        }
        let mut all = Vec::new();
        extend(&mut Vec::new(), max_cols, max_rows, &mut all);
        all.sort_by(|a, b| {
            let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
            sa.cmp(&sb).then_with(|| a.cmp(b))
        });
        all.into_iter()
            .map(|rows| FerrersShape::new(rows).expect("weakly decreasing rows"))
            .collect()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Length of the bottom row, which is also the number of columns.
    pub fn num_cols(&self) -> usize {
        self.rows[0]
    }

    /// Length of row `i` (1-based from the bottom).
    pub fn row_len(&self, i: usize) -> usize {
        self.rows[i - 1]
    }

    /// `h_j` = number of rows of length at least `j`, for `j = 1..=λ₁`.
    pub fn column_heights(&self) -> &[usize] {
        &self.heights
    }

    /// Height of column `j` (1-based).
    pub fn height(&self, j: usize) -> usize {
        self.heights[j - 1]
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.rows.len() && col >= 1 && col <= self.rows[row - 1]
    }

    pub fn is_rectangle(&self) -> bool {
        self.rows.iter().all(|&r| r == self.rows[0])
    }

    /// Vertices along the right/up border, from the top-left corner
    /// `(0, m)` to the bottom-right corner `(λ₁, 0)`.
    pub fn border_path(&self) -> BorderVertexPath {
        let m = self.rows.len();
        let mut vertices = Vec::with_capacity(m + self.num_cols() + 1);
        let (mut x, mut y) = (0, m);
        vertices.push((x, y));
        while y > 0 {
            while x < self.rows[y - 1] {
                x += 1;
                vertices.push((x, y));
            }
            y -= 1;
            vertices.push((x, y));
        }
        BorderVertexPath { vertices }
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_usize(&self.rows))
    }
}

impl fmt::Debug for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FerrersShape({})", self)
    }
}

impl FromStr for FerrersShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_usize_list(s)?)
    }
}

impl TryFrom<String> for FerrersShape {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FerrersShape> for String {
    fn from(s: FerrersShape) -> String {
        s.to_string()
    }
}

/// Lattice points on the right/up border of a shape, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderVertexPath {
    vertices: Vec<(usize, usize)>,
}

impl BorderVertexPath {
    pub fn vertices(&self) -> &[(usize, usize)] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.iter().copied()
    }

    /// Index of vertex `(x, y)` in the path, if it lies on the border.
    pub fn position(&self, vertex: (usize, usize)) -> Option<usize> {
        self.vertices.iter().position(|&v| v == vertex)
    }
}

pub(crate) fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `"10,10,7"`. Input without commas is read one digit per entry, so
/// `"554"` is 5,5,4. Surrounding parentheses are ignored.
pub(crate) fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_column_shape() {
        let s = FerrersShape::new(vec![10, 10, 10, 7, 4, 4]).unwrap();
        assert_eq!(s.column_heights(), &[6, 6, 6, 6, 4, 4, 4, 3, 3, 3]);
        assert_eq!(s.num_cols(), 10);
        assert_eq!(s.num_rows(), 6);
    }

    #[test]
    fn column_heights_small() {
        let s: FerrersShape = "5,5,4".parse().unwrap();
        assert_eq!(s.column_heights(), &[3, 3, 3, 3, 2]);
        let one: FerrersShape = "1".parse().unwrap();
        assert_eq!(one.column_heights(), &[1]);
    }

    #[test]
    fn rejects_increasing_rows() {
        assert!(matches!(
            FerrersShape::new(vec![4, 5]),
            Err(Error::NotFerrers(_))
        ));
        assert!(matches!(
            FerrersShape::new(vec![]),
            Err(Error::NotFerrers(_))
        ));
        assert!(matches!(
            FerrersShape::new(vec![3, 0]),
            Err(Error::NotFerrers(_))
        ));
    }

    #[test]
    fn border_of_small_shapes() {
        let s = FerrersShape::new(vec![2, 1]).unwrap();
        assert_eq!(
            s.border_path().vertices(),
            &[(0, 2), (1, 2), (1, 1), (2, 1), (2, 0)]
        );
        let one = FerrersShape::new(vec![1]).unwrap();
        assert_eq!(one.border_path().vertices(), &[(0, 1), (1, 1), (1, 0)]);
        let big = FerrersShape::new(vec![10, 10, 10, 10, 10, 10, 10, 7, 4, 4]).unwrap();
        assert_eq!(big.border_path().len(), 21);
    }

    #[test]
    fn text_encoding() {
        let s: FerrersShape = "10,10,10,7,4,4".parse().unwrap();
        assert_eq!(s.to_string(), "10,10,10,7,4,4");
        let t: FerrersShape = "(6664)".parse().unwrap();
        assert_eq!(t.rows(), &[6, 6, 6, 4]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "\"6,6,6,4\"");
        let back: FerrersShape = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn shapes_within_bounds() {
        let all = FerrersShape::all_within(2, 2);
        let rows: Vec<&[usize]> = all.iter().map(|s| s.rows()).collect();
        assert_eq!(rows, [&[1][..], &[1, 1], &[2], &[2, 1], &[2, 2]]);
        // partitions fitting in a 3 x 4 box: binomial(7, 3) - 1 non-empty ones
        assert_eq!(FerrersShape::all_within(4, 3).len(), 34);
    }
}
