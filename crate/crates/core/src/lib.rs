//! Pattern-avoiding words and 0-1 fillings of Ferrers shapes.
//!
//! The crate counts fillings with one 1 per column that avoid a set of
//! patterns, reproduces the known counting tables, and implements the band
//! blowup / `α` / shrink maps that biject `{231,221}`- with
//! `{312,212}`-avoiders and `{231,121}`- with `{312,211}`-avoiders on every
//! Ferrers shape.

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod filling;
pub mod harness;
pub mod matcher;
pub mod shape;
pub mod word;

pub use error::{Error, Result};
pub use filling::{filling_content, word_to_filling, Filling, FullRookPlacement};
pub use shape::{BorderVertexPath, FerrersShape};
pub use word::{pat, pats, Composition, Pattern, PatternSet, Word};
