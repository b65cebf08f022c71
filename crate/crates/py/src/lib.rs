//! Python bindings: truth values, formulas, division trees, powersets and
//! the fractal renderer.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use diairesis_cli::{build_tree, dot, items, tree_report, Mode};
use diairesis_core::diairesis::{large_and_small as ls_sequences, powerset as powerset_of};
use diairesis_core::fractal::{branch_to_unit_interval, render_fractal};
use diairesis_core::{
    formula, Colormap, DiairesisError, DiaireticTree, FractalParams, PhiNumber, PredicateTable,
    Rational, TruthValue4, Valuation,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn diairesis_err(e: DiairesisError) -> PyErr {
    match e {
        DiairesisError::UnknownItem(_) | DiairesisError::UnknownPredicate(_) => {
            PyKeyError::new_err(e.to_string())
        }
        other => value_err(other),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.to_string(),))
}

fn phi_arg(bits: &str) -> PyResult<PhiNumber> {
    bits.parse().map_err(diairesis_err)
}

/// One of the four determination values `n`, `f`, `t`, `b`.
#[pyclass(
    name = "TruthValue",
    frozen,
    eq,
    hash,
    from_py_object,
    module = "diairesis"
)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyTruthValue(TruthValue4);

#[pymethods]
impl PyTruthValue {
    /// Accepts a letter (`"t"`) or name (`"both"`).
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        name.parse().map(PyTruthValue).map_err(value_err)
    }

    #[staticmethod]
    fn all() -> Vec<PyTruthValue> {
        TruthValue4::ALL.into_iter().map(PyTruthValue).collect()
    }

    #[staticmethod]
    fn from_subset(elements: Vec<u64>) -> PyResult<Self> {
        TruthValue4::from_subset(elements)
            .map(PyTruthValue)
            .map_err(value_err)
    }

    #[staticmethod]
    fn embed_classical(b: bool) -> Self {
        PyTruthValue(TruthValue4::embed_classical(b))
    }

    #[allow(clippy::wrong_self_convention)]
    fn to_subset(&self) -> Vec<u32> {
        self.0.to_subset().into_iter().map(u32::from).collect()
    }

    fn neg(&self) -> Self {
        PyTruthValue(self.0.neg())
    }

    fn conj(&self, other: &PyTruthValue) -> Self {
        PyTruthValue(self.0.conj(other.0))
    }

    fn disj(&self, other: &PyTruthValue) -> Self {
        PyTruthValue(self.0.disj(other.0))
    }

    fn knowledge_leq(&self, other: &PyTruthValue) -> bool {
        self.0.knowledge_leq(other.0)
    }

    fn knowledge_join(&self, other: &PyTruthValue) -> Self {
        PyTruthValue(self.0.knowledge_join(other.0))
    }

    fn knowledge_meet(&self, other: &PyTruthValue) -> Self {
        PyTruthValue(self.0.knowledge_meet(other.0))
    }

    fn is_designated(&self) -> bool {
        self.0.is_designated()
    }

    #[getter]
    fn letter(&self) -> String {
        self.0.letter().to_string()
    }

    #[getter]
    fn name(&self) -> &'static str {
        self.0.human_name()
    }

    fn __invert__(&self) -> Self {
        self.neg()
    }

    fn __and__(&self, other: &PyTruthValue) -> Self {
        self.conj(other)
    }

    fn __or__(&self, other: &PyTruthValue) -> Self {
        self.disj(other)
    }

    fn __str__(&self) -> String {
        self.letter()
    }

    fn __repr__(&self) -> String {
        format!("TruthValue('{}')", self.0.letter())
    }
}

/// Canonical text of a formula.
#[pyfunction]
fn normalize(text: &str) -> PyResult<String> {
    formula::parse(text)
        .map(|f| f.to_string())
        .map_err(value_err)
}

/// Sorted atom names of a formula.
#[pyfunction]
fn atoms(text: &str) -> PyResult<Vec<String>> {
    let f = formula::parse(text).map_err(value_err)?;
    Ok(f.atoms().into_iter().collect())
}

fn valuation(assignments: BTreeMap<String, PyTruthValue>) -> Valuation {
    assignments.into_iter().map(|(k, v)| (k, v.0)).collect()
}

/// Evaluates `text` with a mapping of atom names to truth values.
#[pyfunction]
fn evaluate(text: &str, assignments: BTreeMap<String, PyTruthValue>) -> PyResult<PyTruthValue> {
    let f = formula::parse(text).map_err(value_err)?;
    f.evaluate(&valuation(assignments))
        .map(PyTruthValue)
        .map_err(|e| PyKeyError::new_err(e.to_string()))
}

fn parse_all(texts: &[String]) -> PyResult<Vec<formula::Formula>> {
    texts
        .iter()
        .map(|t| formula::parse(t).map_err(value_err))
        .collect()
}

#[pyfunction]
fn entails(premises: Vec<String>, conclusion: &str) -> PyResult<bool> {
    let premises = parse_all(&premises)?;
    let conclusion = formula::parse(conclusion).map_err(value_err)?;
    formula::entails(&premises, &conclusion).map_err(value_err)
}

/// First valuation making every premise designated and the conclusion not,
/// as `{atom: TruthValue}`, or `None`.
#[pyfunction]
fn countermodel(
    premises: Vec<String>,
    conclusion: &str,
) -> PyResult<Option<BTreeMap<String, PyTruthValue>>> {
    let premises = parse_all(&premises)?;
    let conclusion = formula::parse(conclusion).map_err(value_err)?;
    let found = formula::countermodel(&premises, &conclusion).map_err(value_err)?;
    Ok(found.map(|v| {
        v.iter()
            .map(|(k, t)| (k.to_string(), PyTruthValue(t)))
            .collect()
    }))
}

/// Boolean item × predicate table.
#[pyclass(name = "PredicateTable", frozen, module = "diairesis")]
struct PyPredicateTable(Arc<PredicateTable>);

#[pymethods]
impl PyPredicateTable {
    #[new]
    fn new(items: Vec<String>, predicates: Vec<String>, rows: Vec<Vec<bool>>) -> PyResult<Self> {
        PredicateTable::new(items, predicates, rows)
            .map(|t| PyPredicateTable(Arc::new(t)))
            .map_err(diairesis_err)
    }

    /// Loads a CSV or JSON items file.
    #[staticmethod]
    #[pyo3(signature = (path, json = false))]
    fn load(path: PathBuf, json: bool) -> PyResult<Self> {
        items::load(&path, json)
            .map(|t| PyPredicateTable(Arc::new(t)))
            .map_err(value_err)
    }

    #[getter]
    fn items(&self) -> Vec<String> {
        self.0.items().to_vec()
    }

    #[getter]
    fn predicates(&self) -> Vec<String> {
        self.0.predicates().to_vec()
    }

    /// `(positive, negative)` member ids of `members` divided by `predicate`.
    fn divide(
        &self,
        members: Vec<String>,
        predicate: &str,
    ) -> PyResult<(Vec<String>, Vec<String>)> {
        let c = self.0.concept(&members).map_err(diairesis_err)?;
        let (pos, neg) = self.0.divide(&c, predicate).map_err(diairesis_err)?;
        let ids = |c| self.0.ids(&c).map(str::to_string).collect::<Vec<_>>();
        Ok((ids(pos), ids(neg)))
    }

    fn balance_score(&self, members: Vec<String>, predicate: &str) -> PyResult<usize> {
        let c = self.0.concept(&members).map_err(diairesis_err)?;
        self.0.balance_score(&c, predicate).map_err(diairesis_err)
    }

    fn is_stoicheion(&self, members: Vec<String>) -> PyResult<bool> {
        let c = self.0.concept(&members).map_err(diairesis_err)?;
        Ok(self.0.is_indivisible(&c))
    }

    fn is_natural_class(&self, part: Vec<String>, whole: Vec<String>) -> PyResult<bool> {
        let part = self.0.concept(&part).map_err(diairesis_err)?;
        let whole = self.0.concept(&whole).map_err(diairesis_err)?;
        self.0
            .is_natural_class(&part, &whole)
            .map_err(diairesis_err)
    }

    /// Complete tree dividing every item by `order`, one predicate per level.
    fn tree(&self, order: Vec<String>) -> PyResult<PyTree> {
        let t = DiaireticTree::build(self.0.clone(), self.0.universe(), &order)
            .map_err(diairesis_err)?;
        Ok(PyTree(t))
    }

    #[pyo3(signature = (max_depth = None))]
    fn balanced_tree(&self, max_depth: Option<usize>) -> PyResult<PyTree> {
        let depth = max_depth.unwrap_or(self.0.predicates().len());
        let t = DiaireticTree::build_balanced(self.0.clone(), self.0.universe(), depth)
            .map_err(diairesis_err)?;
        Ok(PyTree(t))
    }

    fn __repr__(&self) -> String {
        format!(
            "PredicateTable({} items, {} predicates)",
            self.0.items().len(),
            self.0.predicates().len()
        )
    }
}

/// A division tree.
#[pyclass(name = "Tree", frozen, module = "diairesis")]
struct PyTree(DiaireticTree);

#[pymethods]
impl PyTree {
    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    /// Leaves in φ order as `(bits, decimal, determination, member ids)`.
    fn leaves(&self) -> Vec<(String, String, PyTruthValue, Vec<String>)> {
        self.0
            .leaves()
            .into_iter()
            .map(|leaf| {
                let phi = leaf.phi();
                (
                    phi.to_string(),
                    phi.decimal().to_string(),
                    PyTruthValue(phi.branch_determination()),
                    self.0
                        .table()
                        .ids(leaf.concept())
                        .map(str::to_string)
                        .collect(),
                )
            })
            .collect()
    }

    fn determination(&self) -> PyTruthValue {
        PyTruthValue(self.0.determination())
    }

    /// φ bits of the leaf the item falls into.
    fn classify(&self, item: &str) -> PyResult<String> {
        let (_, phi) = self.0.classify(item).map_err(diairesis_err)?;
        Ok(phi.to_string())
    }

    fn report(&self) -> String {
        tree_report(&self.0)
    }

    fn dot(&self) -> String {
        dot(&self.0)
    }
}

/// Reads an items file and builds a tree, like the `tree` subcommand.
#[pyfunction]
#[pyo3(signature = (path, order = None, balanced = false, max_depth = None, json = false))]
fn load_tree(
    path: PathBuf,
    order: Option<Vec<String>>,
    balanced: bool,
    max_depth: Option<usize>,
    json: bool,
) -> PyResult<PyTree> {
    let table = items::load(&path, json).map_err(value_err)?;
    let mode = if balanced {
        Mode::Balanced { max_depth }
    } else {
        Mode::Given(order.unwrap_or_default())
    };
    build_tree(table, &mode).map(PyTree).map_err(value_err)
}

#[pyfunction]
fn phi_decimal(bits: &str) -> PyResult<String> {
    Ok(phi_arg(bits)?.decimal().to_string())
}

/// -1, 0 or 1 under first-difference order.
#[pyfunction]
fn lex_compare(a: &str, b: &str) -> PyResult<i8> {
    Ok(phi_arg(a)?.lex_compare(&phi_arg(b)?) as i8)
}

#[pyfunction]
fn branch_determination(bits: &str) -> PyResult<PyTruthValue> {
    Ok(PyTruthValue(phi_arg(bits)?.branch_determination()))
}

#[pyfunction]
fn fuzzy_determination<'py>(py: Python<'py>, bits: &str) -> PyResult<Bound<'py, PyAny>> {
    let v = phi_arg(bits)?
        .fuzzy_determination()
        .map_err(diairesis_err)?;
    fraction(py, &v)
}

#[pyfunction]
fn unit_interval<'py>(py: Python<'py>, bits: &str) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &branch_to_unit_interval(&phi_arg(bits)?))
}

#[pyfunction]
fn powerset(items: Vec<String>) -> PyResult<Vec<Vec<String>>> {
    powerset_of(&items).map_err(diairesis_err)
}

/// `(doubling, halving)` as lists of `fractions.Fraction`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn large_and_small<'py>(
    py: Python<'py>,
    k: usize,
) -> PyResult<(Vec<Bound<'py, PyAny>>, Vec<Bound<'py, PyAny>>)> {
    let (doubling, halving) = ls_sequences(k);
    let convert = |xs: Vec<Rational>| {
        xs.iter()
            .map(|x| fraction(py, x))
            .collect::<PyResult<Vec<_>>>()
    };
    Ok((convert(doubling)?, convert(halving)?))
}

/// Binary PPM bytes of the fractal bands.
#[pyfunction]
#[pyo3(signature = (depth, cell_size = 1, colormap = "grayscale"))]
fn render_ppm<'py>(
    py: Python<'py>,
    depth: u32,
    cell_size: u32,
    colormap: &str,
) -> PyResult<Bound<'py, PyBytes>> {
    let colormap: Colormap = colormap.parse().map_err(value_err)?;
    let params = FractalParams::new(depth, cell_size).with_colormap(colormap);
    let img = render_fractal(&params).map_err(value_err)?;
    Ok(PyBytes::new(py, &img.encode_ppm()))
}

#[pymodule]
fn diairesis(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTruthValue>()?;
    m.add_class::<PyPredicateTable>()?;
    m.add_class::<PyTree>()?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(atoms, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(entails, m)?)?;
    m.add_function(wrap_pyfunction!(countermodel, m)?)?;
    m.add_function(wrap_pyfunction!(load_tree, m)?)?;
    m.add_function(wrap_pyfunction!(phi_decimal, m)?)?;
    m.add_function(wrap_pyfunction!(lex_compare, m)?)?;
    m.add_function(wrap_pyfunction!(branch_determination, m)?)?;
    m.add_function(wrap_pyfunction!(fuzzy_determination, m)?)?;
    m.add_function(wrap_pyfunction!(unit_interval, m)?)?;
    m.add_function(wrap_pyfunction!(powerset, m)?)?;
    m.add_function(wrap_pyfunction!(large_and_small, m)?)?;
    m.add_function(wrap_pyfunction!(render_ppm, m)?)?;
    Ok(())
}
