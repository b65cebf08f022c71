//! Parts and classes: powersets, singletons and the natural-class test.

use num_bigint::BigInt;
use num_traits::One;

use super::{Concept, DiairesisError, PredicateTable};
use crate::Rational;

/// Largest set whose powerset is materialized.
pub const MAX_POWERSET_ITEMS: usize = 20;

/// Largest predicate count for the natural-class test.
pub const MAX_CLASS_PREDICATES: usize = 12;

/// All subsets of `items`, ordered by size and then by the positions of
/// their members: `{}, {a}, {b}, {c}, {a,b}, {a,c}, {b,c}, {a,b,c}`.
pub fn powerset<T: Clone>(items: &[T]) -> Result<Vec<Vec<T>>, DiairesisError> {
    let n = items.len();
    if n > MAX_POWERSET_ITEMS {
        return Err(DiairesisError::Capacity {
            what: "powerset items",
            limit: MAX_POWERSET_ITEMS,
            actual: n,
        });
    }
    let mut out = Vec::with_capacity(1 << n);
    for k in 0..=n {
        let mut pos: Vec<usize> = (0..k).collect();
        loop {
            out.push(pos.iter().map(|&i| items[i].clone()).collect());
            // advance to the next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| pos[i] != i + n - k) else {
                break;
            };
            pos[i] += 1;
            for j in i + 1..k {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
    Ok(out)
}

/// The one-element subsets of `items`, in order.
pub fn singletons<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    items.iter().map(|x| vec![x.clone()]).collect()
}

impl Concept {
    pub fn powerset(&self) -> Result<Vec<Concept>, DiairesisError> {
        Ok(powerset(&self.to_vec())?
            .into_iter()
            .map(Concept::from_indices)
            .collect())
    }

    pub fn singletons(&self) -> Vec<Concept> {
        self.iter().map(|i| Concept::from_indices([i])).collect()
    }
}

impl PredicateTable {
    /// Whether `part` is cut out of `whole` by some conjunction of predicate
    /// literals, each predicate used at most once (the empty conjunction
    /// gives `whole`).
    ///
    /// A non-empty part is a class exactly when the literals all its members
    /// share pick out no other member of `whole`. The empty part is a class
    /// when `whole` is empty or some full row pattern is missing from it.
    pub fn is_natural_class(
        &self,
        part: &Concept,
        whole: &Concept,
    ) -> Result<bool, DiairesisError> {
        let k = self.predicates().len();
        if k > MAX_CLASS_PREDICATES {
            return Err(DiairesisError::Capacity {
                what: "class-search predicates",
                limit: MAX_CLASS_PREDICATES,
                actual: k,
            });
        }
        self.check_concept(whole)?;
        if !part.is_subset(whole) {
            return Err(DiairesisError::NotASubset);
        }

        let Some(first) = part.iter().next() else {
            let mut patterns: Vec<&[bool]> = whole.iter().map(|i| self.row(i)).collect();
            patterns.sort_unstable();
            patterns.dedup();
            return Ok(whole.is_empty() || patterns.len() < 1 << k);
        };

        // literals shared by every member of the part
        let reference = self.row(first);
        let shared: Vec<usize> = (0..k)
            .filter(|&p| part.iter().all(|i| self.holds(i, p) == reference[p]))
            .collect();
        let extension = whole
            .iter()
            .filter(|&i| shared.iter().all(|&p| self.holds(i, p) == reference[p]));
        Ok(extension.eq(part.iter()))
    }
}

/// Doubling `[2, 4, …, 2^k]` and halving `[1/2, 1/4, …, 1/2^k]` of the unit.
pub fn large_and_small(k: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut doubling = Vec::with_capacity(k);
    let mut halving = Vec::with_capacity(k);
    let mut power = BigInt::one();
    for _ in 0..k {
        power <<= 1u32;
        doubling.push(Rational::from_integer(power.clone()));
        halving.push(Rational::new(BigInt::one(), power.clone()));
    }
    (doubling, halving)
}
