use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::DiairesisError;

/// Items × boolean predicates. Row-major, total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateTable {
    items: Vec<String>,
    predicates: Vec<String>,
    cells: Vec<bool>,
}

/// A set of items of some [`PredicateTable`], held as row indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Concept(BTreeSet<usize>);

fn check_names(kind: &'static str, names: &[String]) -> Result<(), DiairesisError> {
    let mut seen = HashSet::with_capacity(names.len());
    for name in names {
        if name.is_empty() {
            return Err(DiairesisError::InvalidTable(format!("empty {kind} name")));
        }
        if !seen.insert(name.as_str()) {
            return Err(DiairesisError::InvalidTable(format!(
                "duplicate {kind} {name:?}"
            )));
        }
    }
    Ok(())
}

impl PredicateTable {
    /// `rows[i][j]` is whether item `i` satisfies predicate `j`.
    pub fn new<I, P, R>(items: I, predicates: P, rows: R) -> Result<Self, DiairesisError>
    where
        I: IntoIterator,
        I::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
        R: IntoIterator,
        R::Item: AsRef<[bool]>,
    {
        let items: Vec<String> = items.into_iter().map(Into::into).collect();
        let predicates: Vec<String> = predicates.into_iter().map(Into::into).collect();
        check_names("item", &items)?;
        check_names("predicate", &predicates)?;

        let mut cells = Vec::with_capacity(items.len() * predicates.len());
        let mut count = 0;
        for row in rows {
            let row = row.as_ref();
            if row.len() != predicates.len() {
                return Err(DiairesisError::InvalidTable(format!(
                    "row {count} has {} cells, expected {}",
                    row.len(),
                    predicates.len()
                )));
            }
            cells.extend_from_slice(row);
            count += 1;
        }
        if count != items.len() {
            return Err(DiairesisError::InvalidTable(format!(
                "{count} rows for {} items",
                items.len()
            )));
        }
        Ok(PredicateTable {
            items,
            predicates,
            cells,
        })
    }

    /// Builds a table by evaluating each named predicate on each item.
    #[allow(clippy::type_complexity)]
    pub fn from_fn<T: fmt::Display>(
        items: &[T],
        predicates: &[(&str, &dyn Fn(&T) -> bool)],
    ) -> Result<Self, DiairesisError> {
        let rows: Vec<Vec<bool>> = items
            .iter()
            .map(|it| predicates.iter().map(|(_, p)| p(it)).collect())
            .collect();
        PredicateTable::new(
            items.iter().map(|it| it.to_string()),
            predicates.iter().map(|(n, _)| *n),
            rows,
        )
    }

    pub fn items(&self) -> &[String] {
        &self.items
    }

    pub fn predicates(&self) -> &[String] {
        &self.predicates
    }

    pub fn item_index(&self, id: &str) -> Result<usize, DiairesisError> {
        self.items
            .iter()
            .position(|i| i == id)
            .ok_or_else(|| DiairesisError::UnknownItem(id.to_string()))
    }

    pub fn predicate_index(&self, name: &str) -> Result<usize, DiairesisError> {
        self.predicates
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| DiairesisError::UnknownPredicate(name.to_string()))
    }

    /// Panics if either index is out of range.
    #[inline]
    pub fn holds(&self, item: usize, predicate: usize) -> bool {
        assert!(predicate < self.predicates.len());
        self.cells[item * self.predicates.len() + predicate]
    }

    pub fn row(&self, item: usize) -> &[bool] {
        let w = self.predicates.len();
        &self.cells[item * w..(item + 1) * w]
    }

    /// The concept holding every item of the table.
    pub fn universe(&self) -> Concept {
        Concept((0..self.items.len()).collect())
    }

    pub fn concept<S: AsRef<str>>(&self, ids: &[S]) -> Result<Concept, DiairesisError> {
        ids.iter()
            .map(|id| self.item_index(id.as_ref()))
            .collect::<Result<BTreeSet<_>, _>>()
            .map(Concept)
    }

    pub(crate) fn check_concept(&self, c: &Concept) -> Result<(), DiairesisError> {
        match c.0.iter().next_back() {
            Some(&last) if last >= self.items.len() => Err(DiairesisError::ForeignItem(last)),
            _ => Ok(()),
        }
    }

    /// Splits `c` into the members satisfying `predicate` and the rest.
    pub fn divide(
        &self,
        c: &Concept,
        predicate: &str,
    ) -> Result<(Concept, Concept), DiairesisError> {
        let p = self.predicate_index(predicate)?;
        self.check_concept(c)?;
        Ok(self.divide_by_index(c, p))
    }

    pub(crate) fn divide_by_index(&self, c: &Concept, p: usize) -> (Concept, Concept) {
        let (pos, neg) = c.0.iter().partition(|&&i| self.holds(i, p));
        (Concept(pos), Concept(neg))
    }

    /// `| |positive| − |negative| |` for the division of `c` by `predicate`.
    pub fn balance_score(&self, c: &Concept, predicate: &str) -> Result<usize, DiairesisError> {
        let p = self.predicate_index(predicate)?;
        self.check_concept(c)?;
        let pos = self.positive_count(c, p);
        Ok(pos.abs_diff(c.len() - pos))
    }

    pub(crate) fn positive_count(&self, c: &Concept, p: usize) -> usize {
        c.0.iter().filter(|&&i| self.holds(i, p)).count()
    }

    /// Whether `predicate` puts at least one member of `c` on each side.
    pub(crate) fn discriminates(&self, c: &Concept, p: usize) -> bool {
        let pos = self.positive_count(c, p);
        pos > 0 && pos < c.len()
    }

    /// True when `c` is a singleton or no predicate splits it into two
    /// non-empty parts.
    pub fn is_indivisible(&self, c: &Concept) -> bool {
        c.len() == 1 || !(0..self.predicates.len()).any(|p| self.discriminates(c, p))
    }

    /// Ids of the members of `c`, in table order.
    pub fn ids<'a>(&'a self, c: &'a Concept) -> impl Iterator<Item = &'a str> + 'a {
        c.0.iter().map(move |&i| self.items[i].as_str())
    }
}

impl Concept {
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Concept {
        Concept(indices.into_iter().collect())
    }

    pub fn empty() -> Concept {
        Concept::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(&index)
    }

    pub fn is_subset(&self, other: &Concept) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Concept) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &Concept) -> Concept {
        Concept(self.0.union(&other.0).copied().collect())
    }

    /// Member indices, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Concept {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Concept::from_indices(iter)
    }
}
