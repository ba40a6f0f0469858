//! Border statistics of full rook placements, the map `α` from 231- to
//! 312-avoiding full rook placements, and its transfer to fillings with
//! several 1's per row through band blowup and shrinking.
//!
//! For a border vertex `v = (x, y)` the region "to the left and below" is
//! the set of cells `(row, col)` with `col ≤ x` and `row ≤ y`. `I_R(v)` is
//! the longest strictly increasing chain of 1's of `R` in that region and
//! `N_R(v)` the number of 1's in it. `α` replaces every non-zero `I` value
//! by `N - I + 1` and returns the unique 312-avoiding placement with that
//! `I`-sequence.
//!
//! Placements are recovered from their `I`-sequence by a pruned search over
//! full rook placements of the requested avoidance class. Every column `x`
//! owns at least one border vertex, so once columns `1..=x` are placed the
//! values at those vertices are final and can be checked.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::filling::{Filling, FullRookPlacement};
use crate::matcher::{ends_at_last, first_contained};
use crate::shape::FerrersShape;
use crate::word::{pats, Composition, PatternSet};

/// Which permutation pattern a full rook placement avoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AvoidanceClass {
    Avoids231,
    Avoids312,
}

impl AvoidanceClass {
    pub fn pattern_letters(self) -> [usize; 3] {
        match self {
            AvoidanceClass::Avoids231 => [2, 3, 1],
            AvoidanceClass::Avoids312 => [3, 1, 2],
        }
    }

    pub fn patterns(self) -> PatternSet {
        match self {
            AvoidanceClass::Avoids231 => pats("231"),
            AvoidanceClass::Avoids312 => pats("312"),
        }
    }
}

impl fmt::Display for AvoidanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AvoidanceClass::Avoids231 => f.write_str("231"),
            AvoidanceClass::Avoids312 => f.write_str("312"),
        }
    }
}

/// How the 1's of a band are arranged after blowup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Bottom/left to top/right.
    Increasing,
    /// Top/left to bottom/right.
    Decreasing,
}

/// Integer labels on the border vertices of a shape, in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BorderSequence {
    values: Vec<usize>,
}

impl BorderSequence {
    pub fn new(values: Vec<usize>) -> Self {
        BorderSequence { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Debug for BorderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BorderSequence({:?})", self.values)
    }
}

impl Serialize for BorderSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl From<Vec<usize>> for BorderSequence {
    fn from(values: Vec<usize>) -> Self {
        BorderSequence { values }
    }
}

/// Grouping of the rows of a blown-up shape into bands, one band per row
/// of the original shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandStructure {
    composition: Composition,
    band_of: Vec<usize>,
    starts: Vec<usize>,
}

impl BandStructure {
    pub fn new(composition: Composition) -> Self {
        let mut band_of = Vec::with_capacity(composition.total());
        let mut starts = Vec::with_capacity(composition.len());
        for (i, &size) in composition.parts().iter().enumerate() {
            starts.push(band_of.len() + 1);
            band_of.extend(std::iter::repeat_n(i + 1, size));
        }
        BandStructure {
            composition,
            band_of,
            starts,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn num_bands(&self) -> usize {
        self.starts.len()
    }

    /// Total number of blown-up rows.
    pub fn num_rows(&self) -> usize {
        self.band_of.len()
    }

    /// Band (original row) of blown-up row `row`, both 1-based.
    pub fn band_of(&self, row: usize) -> usize {
        self.band_of[row - 1]
    }

    /// Blown-up rows forming band `i`.
    pub fn row_range(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let start = self.starts[i - 1];
        start..=start + self.composition.parts()[i - 1] - 1
    }
}

/// Positions in the border path of the vertices `u₀,…,u_{a_i}` on the
/// right edge of band `i` of a blown-up shape, from bottom to top.
pub fn band_border_positions(
    shape: &FerrersShape,
    bands: &BandStructure,
    i: usize,
) -> Option<Vec<usize>> {
    let path = shape.border_path();
    let range = bands.row_range(i);
    let x = shape.row_len(*range.start());
    (range.start() - 1..=*range.end())
        .map(|y| path.position((x, y)))
        .collect()
}

/// Longest strictly increasing subsequence of `rows`.
fn longest_increasing(rows: impl Iterator<Item = usize>) -> usize {
    // tails[l] = smallest last row of an increasing chain of length l + 1
    let mut tails: Vec<usize> = Vec::new();
    for r in rows {
        let pos = tails.partition_point(|&t| t < r);
        if pos == tails.len() {
            tails.push(r);
        } else {
            tails[pos] = r;
        }
    }
    tails.len()
}

fn chain_at(cols: &[usize], x: usize, y: usize) -> usize {
    longest_increasing(cols.iter().take(x).copied().filter(|&r| r <= y))
}

/// `I(R)`.
pub fn i_sequence(r: &FullRookPlacement) -> BorderSequence {
    let cols = r.col_to_row();
    r.shape()
        .border_path()
        .iter()
        .map(|(x, y)| chain_at(cols, x, y))
        .collect::<Vec<_>>()
        .into()
}

/// `N(R)`.
pub fn n_sequence(r: &FullRookPlacement) -> BorderSequence {
    let cols = r.col_to_row();
    r.shape()
        .border_path()
        .iter()
        .map(|(x, y)| cols.iter().take(x).filter(|&&row| row <= y).count())
        .collect::<Vec<_>>()
        .into()
}

fn require_avoids(f: &Filling, set: &PatternSet) -> Result<()> {
    match first_contained(f, set) {
        Some(p) => Err(Error::NotAvoiding {
            filling: f.col_to_row().to_vec(),
            pattern: p.to_string(),
        }),
        None => Ok(()),
    }
}

/// `0` where `I` is `0`, otherwise `N - I + 1`. The same rule inverts
/// itself because `N` only depends on the shape.
fn flip(i: &BorderSequence, n: &BorderSequence) -> BorderSequence {
    i.values
        .iter()
        .zip(&n.values)
        .map(|(&i, &n)| if i == 0 { 0 } else { n + 1 - i })
        .collect::<Vec<_>>()
        .into()
}

/// The sequence `α` feeds to reconstruction for a 231-avoiding `R₁`.
pub fn alpha_sequence(r1: &FullRookPlacement) -> Result<BorderSequence> {
    require_avoids(r1.filling(), &AvoidanceClass::Avoids231.patterns())?;
    Ok(flip(&i_sequence(r1), &n_sequence(r1)))
}

/// The unique full rook placement of `class` on `shape` whose
/// `I`-sequence is `s`.
pub fn reconstruct(
    shape: &FerrersShape,
    s: &BorderSequence,
    class: AvoidanceClass,
) -> Result<FullRookPlacement> {
    let mut found = reconstruct_all(shape, s, class, 2)?;
    match found.len() {
        0 => Err(Error::NoSuchPlacement {
            shape: shape.rows().to_vec(),
            sequence: s.values.clone(),
            kind: class.to_string(),
        }),
        1 => Ok(found.pop().expect("one placement")),
        _ => Err(Error::TheoremViolation(format!(
            "two {class}-avoiding placements on {shape} share I-sequence {:?}: {} and {}",
            s.values, found[0], found[1]
        ))),
    }
}

/// Every full rook placement of `class` on `shape` with `I`-sequence `s`,
/// stopping after `limit` hits.
pub fn reconstruct_all(
    shape: &FerrersShape,
    s: &BorderSequence,
    class: AvoidanceClass,
    limit: usize,
) -> Result<Vec<FullRookPlacement>> {
    let path = shape.border_path();
    if s.len() != path.len() {
        return Err(Error::ShapeMismatch(format!(
            "sequence of length {} for shape {} with {} border vertices",
            s.len(),
            shape,
            path.len()
        )));
    }
    let n = shape.num_cols();
    if shape.num_rows() != n {
        return Err(Error::ShapeMismatch(format!(
            "shape {shape} has no full rook placement"
        )));
    }
    // checks[x] = (y, expected I) for the vertices in column line x
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for ((x, y), &v) in path.iter().zip(&s.values) {
        checks[x].push((y, v));
    }
    if checks[0].iter().any(|&(_, v)| v != 0) {
        return Ok(Vec::new());
    }
    let mut search = Reconstruction {
        heights: shape.column_heights(),
        checks: &checks,
        pattern: class.pattern_letters(),
        cols: Vec::with_capacity(n),
        used: vec![false; n + 1],
        found: Vec::new(),
        limit,
    };
    search.run();
    search
        .found
        .into_iter()
        .map(|cols| FullRookPlacement::from_cols(shape.clone(), cols))
        .collect()
}

struct Reconstruction<'a> {
    heights: &'a [usize],
    checks: &'a [Vec<(usize, usize)>],
    pattern: [usize; 3],
    cols: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl Reconstruction<'_> {
    fn run(&mut self) {
        if self.found.len() >= self.limit {
            return;
        }
        let j = self.cols.len();
        if j == self.heights.len() {
            self.found.push(self.cols.clone());
            return;
        }
        let height = self.heights[j];
        for row in 1..=height {
            if self.used[row] {
                continue;
            }
            self.cols.push(row);
            let ok = !ends_at_last(&self.cols, height, &self.pattern, 3)
                && self.checks[j + 1]
                    .iter()
                    .all(|&(y, v)| chain_at(&self.cols, j + 1, y) == v);
            if ok {
                self.used[row] = true;
                self.run();
                self.used[row] = false;
            }
            self.cols.pop();
        }
    }
}

/// `α`: 231-avoiding to 312-avoiding full rook placements of one shape.
pub fn alpha(r1: &FullRookPlacement) -> Result<FullRookPlacement> {
    let target = alpha_sequence(r1)?;
    reconstruct(r1.shape(), &target, AvoidanceClass::Avoids312).map_err(|e| internal(e, r1))
}

/// `α⁻¹`: 312-avoiding to 231-avoiding full rook placements.
pub fn alpha_inverse(r2: &FullRookPlacement) -> Result<FullRookPlacement> {
    require_avoids(r2.filling(), &AvoidanceClass::Avoids312.patterns())?;
    let target = flip(&i_sequence(r2), &n_sequence(r2));
    reconstruct(r2.shape(), &target, AvoidanceClass::Avoids231).map_err(|e| internal(e, r2))
}

/// A failed reconstruction inside `α` contradicts the bijection theorem.
fn internal(e: Error, input: &FullRookPlacement) -> Error {
    match e {
        Error::NoSuchPlacement { sequence, kind, .. } => Error::TheoremViolation(format!(
            "no {kind}-avoiding placement realizes {sequence:?} (input {input}, I = {:?}, N = {:?})",
            i_sequence(input).values,
            n_sequence(input).values
        )),
        other => other,
    }
}

/// Replaces row `i` of `t` by `a_i` rows of the same length and spreads
/// its `a_i` 1's over them in the given monotone order, keeping columns.
pub fn blowup(
    t: &Filling,
    a: &Composition,
    direction: Direction,
) -> Result<(FullRookPlacement, BandStructure)> {
    let content = t.content();
    if content != a.parts() {
        return Err(Error::ContentMismatch {
            expected: a.parts().to_vec(),
            actual: content,
        });
    }
    let bands = BandStructure::new(a.clone());
    let rows: Vec<usize> = t
        .shape()
        .rows()
        .iter()
        .zip(a.parts())
        .flat_map(|(&len, &k)| std::iter::repeat_n(len, k))
        .collect();
    let shape = FerrersShape::new(rows)?;
    let mut seen = vec![0usize; a.len() + 1];
    let cols = t
        .col_to_row()
        .iter()
        .map(|&i| {
            let range = bands.row_range(i);
            let k = seen[i];
            seen[i] += 1;
            match direction {
                Direction::Increasing => range.start() + k,
                Direction::Decreasing => range.end() - k,
            }
        })
        .collect();
    Ok((FullRookPlacement::from_cols(shape, cols)?, bands))
}

/// Collapses every band of `r` back to a single row.
pub fn shrink(r: &FullRookPlacement, bands: &BandStructure) -> Result<Filling> {
    let shape = r.shape();
    if shape.num_rows() != bands.num_rows() {
        return Err(Error::ShapeMismatch(format!(
            "placement on {} has {} rows, bands cover {}",
            shape,
            shape.num_rows(),
            bands.num_rows()
        )));
    }
    let mut rows = Vec::with_capacity(bands.num_bands());
    for i in 1..=bands.num_bands() {
        let range = bands.row_range(i);
        let len = shape.row_len(*range.start());
        if range.clone().any(|row| shape.row_len(row) != len) {
            return Err(Error::ShapeMismatch(format!(
                "band {i} of {shape} has rows of different lengths"
            )));
        }
        rows.push(len);
    }
    let cols = r
        .col_to_row()
        .iter()
        .map(|&row| bands.band_of(row))
        .collect();
    Filling::new(FerrersShape::new(rows)?, cols)
}

/// Are the 1's of every band monotone in `direction` when read by column?
pub fn band_monotone(r: &FullRookPlacement, bands: &BandStructure, direction: Direction) -> bool {
    if r.shape().num_rows() != bands.num_rows() {
        return false;
    }
    let mut last: Vec<Option<usize>> = vec![None; bands.num_bands() + 1];
    for &row in r.col_to_row() {
        let band = bands.band_of(row);
        if let Some(prev) = last[band] {
            let ok = match direction {
                Direction::Increasing => row > prev,
                Direction::Decreasing => row < prev,
            };
            if !ok {
                return false;
            }
        }
        last[band] = Some(row);
    }
    true
}

/// The two band bijections between word-pattern classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// `{231,221}` to `{312,212}`.
    #[serde(rename = "11")]
    Eleven,
    /// `{231,121}` to `{312,211}`.
    #[serde(rename = "12")]
    Twelve,
}

impl Theorem {
    /// Pattern sets of the 231 side and the 312 side.
    pub fn classes(self) -> (PatternSet, PatternSet) {
        match self {
            Theorem::Eleven => (pats("231+221"), pats("312+212")),
            Theorem::Twelve => (pats("231+121"), pats("312+211")),
        }
    }

    /// Band arrangement used on the 231 side; the 312 side uses the other.
    pub fn source_direction(self) -> Direction {
        match self {
            Theorem::Eleven => Direction::Increasing,
            Theorem::Twelve => Direction::Decreasing,
        }
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "11" => Ok(Theorem::Eleven),
            "12" => Ok(Theorem::Twelve),
            other => Err(Error::Parse(format!(
                "unknown theorem {other:?}, expected 11 or 12"
            ))),
        }
    }
}

fn opposite(d: Direction) -> Direction {
    match d {
        Direction::Increasing => Direction::Decreasing,
        Direction::Decreasing => Direction::Increasing,
    }
}

/// Every intermediate object of one application of a band bijection.
#[derive(Debug, Clone, Serialize)]
pub struct BijectionTrace {
    pub theorem: Theorem,
    pub inverse: bool,
    pub input: Filling,
    pub content: Composition,
    pub blowup: FullRookPlacement,
    pub blowup_i: BorderSequence,
    pub blowup_n: BorderSequence,
    pub target_i: BorderSequence,
    pub placement: FullRookPlacement,
    pub placement_i: BorderSequence,
    pub output: Filling,
}

/// Runs the forward (`inverse = false`, 231 side to 312 side) or backward
/// map and records the intermediate placements and border sequences.
pub fn trace(
    theorem: Theorem,
    inverse: bool,
    t: &Filling,
    a: &Composition,
) -> Result<BijectionTrace> {
    let (left, right) = theorem.classes();
    let (from, to) = if inverse {
        (&right, &left)
    } else {
        (&left, &right)
    };
    let blow_dir = if inverse {
        opposite(theorem.source_direction())
    } else {
        theorem.source_direction()
    };
    require_avoids(t, from)?;
    let (r, bands) = blowup(t, a, blow_dir)?;
    let blowup_i = i_sequence(&r);
    let blowup_n = n_sequence(&r);
    let class = if inverse {
        AvoidanceClass::Avoids312
    } else {
        AvoidanceClass::Avoids231
    };
    if let Err(e) = require_avoids(r.filling(), &class.patterns()) {
        return Err(Error::TheoremViolation(format!(
            "blowup {r} of {t} is not {class}-avoiding: {e}"
        )));
    }
    let target_i = flip(&blowup_i, &blowup_n);
    let image = if inverse {
        alpha_inverse(&r)?
    } else {
        alpha(&r)?
    };
    // the image must be monotone the other way within every band
    if !band_monotone(&image, &bands, opposite(blow_dir)) {
        return Err(Error::TheoremViolation(format!(
            "image {image} of {r} is not band-{:?}",
            opposite(blow_dir)
        )));
    }
    let output = shrink(&image, &bands)?;
    if let Some(p) = first_contained(&output, to) {
        return Err(Error::TheoremViolation(format!(
            "image {output} of {t} contains {p}"
        )));
    }
    Ok(BijectionTrace {
        theorem,
        inverse,
        input: t.clone(),
        content: a.clone(),
        blowup_i,
        blowup_n,
        target_i,
        placement_i: i_sequence(&image),
        blowup: r,
        placement: image,
        output,
    })
}

/// `{231,221}`-avoiders to `{312,212}`-avoiders with the same content.
pub fn theorem11_map(t1: &Filling, a: &Composition) -> Result<Filling> {
    trace(Theorem::Eleven, false, t1, a).map(|tr| tr.output)
}

pub fn theorem11_inverse(t2: &Filling, a: &Composition) -> Result<Filling> {
    trace(Theorem::Eleven, true, t2, a).map(|tr| tr.output)
}

/// `{231,121}`-avoiders to `{312,211}`-avoiders with the same content.
pub fn theorem12_map(t1: &Filling, a: &Composition) -> Result<Filling> {
    trace(Theorem::Twelve, false, t1, a).map(|tr| tr.output)
}

pub fn theorem12_inverse(t2: &Filling, a: &Composition) -> Result<Filling> {
    trace(Theorem::Twelve, true, t2, a).map(|tr| tr.output)
}
