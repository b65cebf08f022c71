//! Batch front end over the diairesis library. Each `cmd_*` function returns
//! the exact text the binary prints, so the binary is a thin dispatcher.

pub mod items;

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use diairesis_core::diairesis::powerset;
use diairesis_core::fractal::render_fractal;
use diairesis_core::{
    DiairesisError, DiaireticNode, DiaireticTree, EvalError, FractalError, FractalParams,
    ParseError, PredicateTable, TruthValue4, Valuation,
};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use items::ItemsError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Items(#[from] ItemsError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Diairesis(#[from] DiairesisError),
    #[error(transparent)]
    Fractal(#[from] FractalError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 usage/parse/malformed input, 3 missing atom, 4 unknown predicate or
    /// item, 5 capacity exceeded, 6 write failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Items(_) | CliError::Fractal(_) => {
                2
            }
            CliError::Eval(EvalError::MissingAtom(_)) => 3,
            CliError::Eval(EvalError::TooManyAtoms { .. }) => 5,
            CliError::Diairesis(e) => match e {
                DiairesisError::UnknownPredicate(_) | DiairesisError::UnknownItem(_) => 4,
                DiairesisError::Capacity { .. } => 5,
                _ => 2,
            },
            CliError::Write { .. } => 6,
        }
    }
}

/// How a tree is grown from a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// Apply the listed predicates, one per generation.
    Given(Vec<String>),
    /// Greedy balanced division; `None` allows as many generations as there
    /// are predicates.
    Balanced { max_depth: Option<usize> },
}

pub fn build_tree(table: PredicateTable, mode: &Mode) -> Result<DiaireticTree, CliError> {
    let table = Arc::new(table);
    let universe = table.universe();
    Ok(match mode {
        Mode::Given(order) => DiaireticTree::build(table, universe, order)?,
        Mode::Balanced { max_depth } => {
            let depth = max_depth.unwrap_or(table.predicates().len());
            DiaireticTree::build_balanced(table, universe, depth)?
        }
    })
}

pub fn load_tree(input: &Path, json: bool, mode: &Mode) -> Result<DiaireticTree, CliError> {
    build_tree(items::load(input, json)?, mode)
}

fn members(tree: &DiaireticTree, node: &DiaireticNode) -> String {
    if node.concept().is_empty() {
        "-".to_string()
    } else {
        tree.table()
            .ids(node.concept())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// One line per leaf in φ order: `bits decimal letter members`, then the
/// determination of the whole tree.
pub fn tree_report(tree: &DiaireticTree) -> String {
    let mut out = String::new();
    for leaf in tree.leaves() {
        let phi = leaf.phi();
        let _ = writeln!(
            out,
            "{phi} {} {} {}",
            phi.decimal(),
            phi.branch_determination(),
            members(tree, leaf)
        );
    }
    let _ = writeln!(out, "determination {}", tree.determination());
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph; node ids are φ-bit strings, nodes and then edges emitted in
/// φ order.
pub fn dot(tree: &DiaireticTree) -> String {
    let nodes = tree.nodes();
    let mut out = String::from("digraph diairesis {\n  node [shape=box];\n");
    for node in &nodes {
        let detail = match tree.split_name(node) {
            Some(p) => p.to_string(),
            None => members(tree, node),
        };
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{} | {}\"];",
            node.phi(),
            node.phi(),
            dot_escape(&detail)
        );
    }
    for node in &nodes[1..] {
        let bits = node.phi().bits();
        let parent = &bits[..bits.len() - 1];
        let parent: String = parent.iter().map(|&b| if b { '1' } else { '0' }).collect();
        let label = if bits[bits.len() - 1] { 1 } else { 0 };
        let _ = writeln!(
            out,
            "  \"{parent}\" -> \"{}\" [label=\"{label}\"];",
            node.phi()
        );
    }
    out.push_str("}\n");
    out
}

pub fn classify_line(tree: &DiaireticTree, item: &str) -> Result<String, CliError> {
    let (_, phi) = tree.classify(item)?;
    Ok(format!(
        "{phi} {} {}\n",
        phi.decimal(),
        phi.branch_determination()
    ))
}

pub fn cmd_eval<S: AsRef<str>>(formula: &str, assignments: &[S]) -> Result<String, CliError> {
    let formula = diairesis_core::parse(formula)?;
    let mut valuation = Valuation::new();
    for a in assignments {
        let a = a.as_ref();
        let (atom, value) = a.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("assignment {a:?} is not of the form atom=value"))
        })?;
        let value: TruthValue4 = value
            .parse()
            .map_err(|e| CliError::Usage(format!("assignment {a:?}: {e}")))?;
        valuation.set(atom.trim(), value);
    }
    Ok(format!("{}\n", formula.evaluate(&valuation)?))
}

/// `items` is a comma-separated list; the empty string is the empty set.
pub fn cmd_powerset(items: &str) -> Result<String, CliError> {
    let items: Vec<&str> = if items.trim().is_empty() {
        Vec::new()
    } else {
        items.split(',').map(str::trim).collect()
    };
    for (i, item) in items.iter().enumerate() {
        if item.is_empty() {
            return Err(CliError::Usage("empty item in list".into()));
        }
        if items[..i].contains(item) {
            return Err(CliError::Usage(format!("duplicate item {item:?}")));
        }
    }
    let subsets = powerset(&items)?;
    let mut out = String::new();
    for s in &subsets {
        let _ = writeln!(out, "{{{}}}", s.join(","));
    }
    let _ = writeln!(out, "count={}", subsets.len());
    Ok(out)
}

/// Renders, writes the PPM to `out_path` and reports its size and SHA-256.
pub fn cmd_fractal(params: &FractalParams, out_path: &Path) -> Result<String, CliError> {
    let img = render_fractal(params)?;
    let bytes = img.encode_ppm();
    fs::write(out_path, &bytes).map_err(|source| CliError::Write {
        path: out_path.display().to_string(),
        source,
    })?;
    Ok(format!(
        "width={} height={} sha256={}\n",
        img.width(),
        img.height(),
        hex::encode(Sha256::digest(&bytes))
    ))
}
