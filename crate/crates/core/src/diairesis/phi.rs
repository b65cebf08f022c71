use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use super::DiairesisError;
use crate::truth::TruthValue4;
use crate::Rational;

/// Binary path code of a branch: a leading root `1`, then one decision bit
/// per division (`0` for the negative side, `1` for the positive side).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiNumber {
    bits: Vec<bool>,
}

impl PhiNumber {
    /// The undivided concept: `"1"`.
    pub fn root() -> PhiNumber {
        PhiNumber { bits: vec![true] }
    }

    /// Root bit followed by `decisions`.
    pub fn from_decisions<I: IntoIterator<Item = bool>>(decisions: I) -> PhiNumber {
        let mut phi = PhiNumber::root();
        phi.bits.extend(decisions);
        phi
    }

    /// The code of the child on the `bit` side.
    pub fn child(&self, bit: bool) -> PhiNumber {
        let mut bits = Vec::with_capacity(self.bits.len() + 1);
        bits.extend_from_slice(&self.bits);
        bits.push(bit);
        PhiNumber { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn decision_bits(&self) -> &[bool] {
        &self.bits[1..]
    }

    /// Number of divisions along the branch.
    pub fn generation(&self) -> usize {
        self.bits.len() - 1
    }

    /// Binary value of the full string, root bit included.
    pub fn decimal(&self) -> BigUint {
        let mut v = BigUint::default();
        for &b in &self.bits {
            v <<= 1u32;
            if b {
                v += 1u32;
            }
        }
        v
    }

    /// First-difference order: the first differing bit decides (`0 < 1`);
    /// a proper prefix precedes its extensions.
    pub fn lex_compare(&self, other: &PhiNumber) -> Ordering {
        for (a, b) in self.bits.iter().zip(&other.bits) {
            match (a, b) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        self.bits.len().cmp(&other.bits.len())
    }

    /// `n` with no decisions, `t` when every decision is `1`, else `f`.
    pub fn branch_determination(&self) -> TruthValue4 {
        let decisions = self.decision_bits();
        if decisions.is_empty() {
            TruthValue4::Neither
        } else if decisions.iter().all(|&b| b) {
            TruthValue4::True
        } else {
            TruthValue4::False
        }
    }

    /// Share of positive decisions along the branch.
    pub fn fuzzy_determination(&self) -> Result<Rational, DiairesisError> {
        let decisions = self.decision_bits();
        if decisions.is_empty() {
            return Err(DiairesisError::NoDecisions);
        }
        let ones = decisions.iter().filter(|&&b| b).count();
        Ok(Rational::new(
            BigInt::from(ones),
            BigInt::from(decisions.len()),
        ))
    }
}

impl Ord for PhiNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_compare(other)
    }
}

impl PartialOrd for PhiNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PhiNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for PhiNumber {
    type Err = DiairesisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || DiairesisError::InvalidPhi(s.to_string());
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(invalid()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if bits.first() != Some(&true) {
            return Err(invalid());
        }
        Ok(PhiNumber { bits })
    }
}
