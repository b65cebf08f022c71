//! Dichotomic division of concepts over a finite predicate table.
//!
//! A [`PredicateTable`] fixes the universe: which item satisfies which
//! predicate. A [`Concept`] is a set of its items. Division by a predicate
//! splits a concept into the satisfying part and its exclusive complement;
//! repeating this builds a [`DiaireticTree`] whose branches are coded by
//! [`PhiNumber`]s (root `1`, then `0`/`1` per division, positive side `1`).

mod classes;
mod phi;
mod table;
mod tree;

use thiserror::Error;

pub use classes::{
    large_and_small, powerset, singletons, MAX_CLASS_PREDICATES, MAX_POWERSET_ITEMS,
};
pub use phi::PhiNumber;
pub use table::{Concept, PredicateTable};
pub use tree::{DiaireticNode, DiaireticTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiairesisError {
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("unknown item {0:?}")]
    UnknownItem(String),
    #[error("item index {0} is not in the table")]
    ForeignItem(usize),
    #[error("predicate {0:?} appears more than once in the division order")]
    DuplicatePredicate(String),
    #[error("invalid predicate table: {0}")]
    InvalidTable(String),
    #[error("invalid φ-number {0:?}: expected a bit string starting with 1")]
    InvalidPhi(String),
    #[error("the root φ-number has no decision bits")]
    NoDecisions,
    #[error("part is not a subset of the whole")]
    NotASubset,
    #[error("{actual} {what} exceed the limit of {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
}
