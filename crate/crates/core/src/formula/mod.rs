//! Propositional formulas over named atoms with `~`, `&` and `|`, evaluated
//! in the four-valued tables of [`TruthValue4`].

mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::truth::TruthValue4;

pub use parse::{parse, ParseError};

/// Entailment enumerates all `4^k` valuations; `k` is capped here.
pub const MAX_ENTAILMENT_ATOMS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom {0:?} has no assigned value")]
    MissingAtom(String),
    #[error("{atoms} distinct atoms exceed the entailment limit of {limit}")]
    TooManyAtoms { atoms: usize, limit: usize },
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    /// Sorted, deduplicated atom names.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                if !out.contains(name) {
                    out.insert(name.clone());
                }
            }
            Formula::Not(inner) => inner.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn evaluate(&self, valuation: &Valuation) -> Result<TruthValue4, EvalError> {
        Ok(match self {
            Formula::Atom(name) => valuation
                .get(name)
                .ok_or_else(|| EvalError::MissingAtom(name.clone()))?,
            Formula::Not(inner) => inner.evaluate(valuation)?.neg(),
            Formula::And(l, r) => l.evaluate(valuation)?.conj(r.evaluate(valuation)?),
            Formula::Or(l, r) => l.evaluate(valuation)?.disj(r.evaluate(valuation)?),
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Not(..) => 3,
            Formula::Atom(..) => 4,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Canonical text with the fewest parentheses that still parse back to the
/// same tree. Binary operators are left-associative, so a right operand of
/// equal precedence is parenthesized.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Not(inner) => {
                f.write_str("~")?;
                inner.write_operand(f, inner.precedence() < 3)
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                let prec = self.precedence();
                let op = if prec == 2 { " & " } else { " | " };
                l.write_operand(f, l.precedence() < prec)?;
                f.write_str(op)?;
                r.write_operand(f, r.precedence() <= prec)
            }
        }
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Assignment of determination values to atom names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, TruthValue4>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn with(mut self, atom: impl Into<String>, value: TruthValue4) -> Valuation {
        self.0.insert(atom.into(), value);
        self
    }

    pub fn set(&mut self, atom: impl Into<String>, value: TruthValue4) {
        self.0.insert(atom.into(), value);
    }

    pub fn get(&self, atom: &str) -> Option<TruthValue4> {
        self.0.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue4)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: Into<String>> FromIterator<(S, TruthValue4)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (S, TruthValue4)>>(iter: I) -> Self {
        Valuation(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (atom, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{atom}={v}")?;
        }
        Ok(())
    }
}

/// Every valuation over `atoms`, in odometer order: the last atom varies
/// fastest and values run n, f, t, b.
pub fn valuations(atoms: &[String]) -> impl Iterator<Item = Valuation> + '_ {
    let total = 4usize.pow(atoms.len() as u32);
    (0..total).map(move |mut index| {
        let mut v = Valuation::new();
        for atom in atoms.iter().rev() {
            v.set(atom.clone(), TruthValue4::from_bits((index % 4) as u8));
            index /= 4;
        }
        v
    })
}

/// The first valuation (in [`valuations`] order) under which every premise is
/// designated but the conclusion is not, if one exists.
pub fn countermodel(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Option<Valuation>, EvalError> {
    let mut atoms = conclusion.atoms();
    for p in premises {
        atoms.extend(p.atoms());
    }
    if atoms.len() > MAX_ENTAILMENT_ATOMS {
        return Err(EvalError::TooManyAtoms {
            atoms: atoms.len(),
            limit: MAX_ENTAILMENT_ATOMS,
        });
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    for v in valuations(&atoms) {
        let mut holds = true;
        for p in premises {
            if !p.evaluate(&v)?.is_designated() {
                holds = false;
                break;
            }
        }
        if holds && !conclusion.evaluate(&v)?.is_designated() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Designated-value consequence with designated set `{t, b}`.
pub fn entails(premises: &[Formula], conclusion: &Formula) -> Result<bool, EvalError> {
    countermodel(premises, conclusion).map(|c| c.is_none())
}
