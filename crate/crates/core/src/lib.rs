//! Diairesis: four-valued determination logic and dichotomic concept
//! division.
//!
//! - [`truth`]: the four determination values `n`, `f`, `t`, `b` as subsets
//!   of `{0, 1}`, their connectives and knowledge lattice.
//! - [`formula`]: propositional formulas, four-valued evaluation and
//!   designated-value entailment (which is not explosive).
//! - [`diairesis`]: predicate tables, division trees, φ-number branch codes,
//!   parts versus classes.
//! - [`fractal`]: banded raster rendering of branch determination and a PPM
//!   writer.

pub mod diairesis;
pub mod formula;
pub mod fractal;
pub mod truth;

/// Exact rational used for fuzzy values, unit-interval positions and the
/// doubling/halving sequences.
pub type Rational = num_rational::BigRational;

pub use diairesis::{
    Concept, DiairesisError, DiaireticNode, DiaireticTree, PhiNumber, PredicateTable,
};
pub use formula::{entails, parse, EvalError, Formula, ParseError, Valuation};
pub use fractal::{Colormap, FractalError, FractalParams, RasterImage};
pub use truth::{TruthError, TruthValue4};
