//! 0-1 fillings with exactly one 1 per column, and full rook placements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{join_usize, parse_usize_list, FerrersShape};
use crate::word::Word;

/// A filling of a Ferrers shape with exactly one 1 in every column.
///
/// `col_to_row[j - 1]` is the row (1-based from the bottom) of the 1 in
/// column `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFilling", into = "RawFilling")]
pub struct Filling {
    shape: FerrersShape,
    col_to_row: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawFilling {
    shape: FerrersShape,
    col_to_row: String,
}

impl TryFrom<RawFilling> for Filling {
    type Error = Error;

    fn try_from(raw: RawFilling) -> Result<Self> {
        Filling::parse(raw.shape, &raw.col_to_row)
    }
}

impl From<Filling> for RawFilling {
    fn from(f: Filling) -> RawFilling {
        RawFilling {
            col_to_row: join_usize(&f.col_to_row),
            shape: f.shape,
        }
    }
}

impl Filling {
    pub fn new(shape: FerrersShape, col_to_row: Vec<usize>) -> Result<Self> {
        if col_to_row.len() != shape.num_cols() {
            return Err(Error::InvalidFilling(format!(
                "{} column entries for shape {} with {} columns",
                col_to_row.len(),
                shape,
                shape.num_cols()
            )));
        }
        for (j, &r) in col_to_row.iter().enumerate() {
            if r == 0 || r > shape.height(j + 1) {
                return Err(Error::InvalidFilling(format!(
                    "column {} has its 1 in row {}, outside shape {}",
                    j + 1,
                    r,
                    shape
                )));
            }
        }
        Ok(Filling { shape, col_to_row })
    }

    /// Parses the column list (e.g. `"1,4,6,5,2"` or `"14652"`) on `shape`.
    pub fn parse(shape: FerrersShape, cols: &str) -> Result<Self> {
        Self::new(shape, parse_usize_list(cols)?)
    }

    /// `M(w)`: the filling of the `max(w) x |w|` rectangle with a 1 in
    /// column `j`, row `w_j`.
    pub fn from_word(w: &Word) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidFilling("empty word".into()));
        }
        let shape = FerrersShape::rectangle(w.max_letter(), w.len())?;
        Ok(Filling {
            shape,
            col_to_row: w.letters().to_vec(),
        })
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn col_to_row(&self) -> &[usize] {
        &self.col_to_row
    }

    /// Row of the 1 in column `j` (1-based).
    pub fn row_of(&self, j: usize) -> usize {
        self.col_to_row[j - 1]
    }

    pub fn num_cols(&self) -> usize {
        self.col_to_row.len()
    }

    /// Number of 1's in each row, bottom to top; zero for empty rows.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.shape.num_rows()];
        for &r in &self.col_to_row {
            c[r - 1] += 1;
        }
        c
    }

    /// Reads the filling back as a word (one letter per column).
    pub fn to_word(&self) -> Word {
        Word::new(self.col_to_row.clone()).expect("rows are positive")
    }

    pub fn is_full_rook_placement(&self) -> bool {
        self.shape.num_rows() == self.shape.num_cols() && self.content().iter().all(|&c| c == 1)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", join_usize(&self.col_to_row), self.shape)
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({self})")
    }
}

/// `filling_content`.
pub fn filling_content(f: &Filling) -> Vec<usize> {
    f.content()
}

/// `word_to_filling`.
pub fn word_to_filling(w: &Word) -> Result<Filling> {
    Filling::from_word(w)
}

/// A filling with exactly one 1 in every row and every column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Filling", into = "Filling")]
pub struct FullRookPlacement(Filling);

impl FullRookPlacement {
    pub fn new(filling: Filling) -> Result<Self> {
        if filling.shape.num_rows() != filling.shape.num_cols() {
            return Err(Error::InvalidFilling(format!(
                "shape {} has {} rows but {} columns",
                filling.shape,
                filling.shape.num_rows(),
                filling.shape.num_cols()
            )));
        }
        if !filling.content().iter().all(|&c| c == 1) {
            return Err(Error::InvalidFilling(format!(
                "{filling} is not one 1 per row"
            )));
        }
        Ok(FullRookPlacement(filling))
    }

    pub fn from_cols(shape: FerrersShape, col_to_row: Vec<usize>) -> Result<Self> {
        Self::new(Filling::new(shape, col_to_row)?)
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn into_filling(self) -> Filling {
        self.0
    }

    pub fn shape(&self) -> &FerrersShape {
        self.0.shape()
    }

    pub fn col_to_row(&self) -> &[usize] {
        self.0.col_to_row()
    }

    pub fn size(&self) -> usize {
        self.0.num_cols()
    }
}

impl TryFrom<Filling> for FullRookPlacement {
    type Error = Error;

    fn try_from(f: Filling) -> Result<Self> {
        FullRookPlacement::new(f)
    }
}

impl From<FullRookPlacement> for Filling {
    fn from(r: FullRookPlacement) -> Filling {
        r.0
    }
}

impl fmt::Display for FullRookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for FullRookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FullRookPlacement({})", self.0)
    }
}
