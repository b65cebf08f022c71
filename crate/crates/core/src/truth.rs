//! Four determination values and their connectives.
//!
//! A value is a subset of the classical pair `{0, 1}`, stored as two bits:
//!
//! | bit 1 (`1` ∈ s) | bit 0 (`0` ∈ s) | subset   | variant   | letter |
//! |-----------------|-----------------|----------|-----------|--------|
//! | 0               | 0               | `∅`      | `Neither` | `n`    |
//! | 0               | 1               | `{0}`    | `False`   | `f`    |
//! | 1               | 0               | `{1}`    | `True`    | `t`    |
//! | 1               | 1               | `{0, 1}` | `Both`    | `b`    |
//!
//! The knowledge order is subset inclusion, so `knowledge_join` and
//! `knowledge_meet` are bitwise or/and. The logical connectives are *not*
//! derived from that order: they are literal lookup tables. In particular
//! `Both ∧ Neither = Both`, unlike Belnap's FOUR.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the four determination values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum TruthValue4 {
    /// No division performed: `∅`.
    Neither = 0b00,
    /// Indetermined: `{0}`.
    False = 0b01,
    /// Determined: `{1}`.
    True = 0b10,
    /// A completed division holding both: `{0, 1}`.
    Both = 0b11,
}

use TruthValue4::{Both as B, False as F, Neither as N, True as T};

const FROM_BITS: [TruthValue4; 4] = [N, F, T, B];

// Row/column index is `TruthValue4 as usize`, i.e. order n, f, t, b.
const NEG: [TruthValue4; 4] = [N, T, F, B];

#[rustfmt::skip]
const CONJ: [[TruthValue4; 4]; 4] = [
    //        n  f  t  b
    /* n */ [N, F, T, B],
    /* f */ [F, F, F, F],
    /* t */ [T, F, T, B],
    /* b */ [B, F, B, B],
];

#[rustfmt::skip]
const DISJ: [[TruthValue4; 4]; 4] = [
    //        n  f  t  b
    /* n */ [N, F, T, B],
    /* f */ [F, F, T, B],
    /* t */ [T, T, T, T],
    /* b */ [B, B, T, B],
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruthError {
    #[error("subset element {0} is not a classical truth value (expected 0 or 1)")]
    NotABit(u64),
    #[error("unknown truth value {0:?} (expected one of n, f, t, b)")]
    UnknownName(String),
}

impl TruthValue4 {
    /// All four values in bit order: n, f, t, b.
    pub const ALL: [TruthValue4; 4] = FROM_BITS;

    /// Values taken as "accepted" by entailment.
    pub const DESIGNATED: [TruthValue4; 2] = [T, B];

    #[inline]
    pub const fn bits(self) -> u8 {
        self as u8
    }

    #[inline]
    pub const fn from_bits(bits: u8) -> TruthValue4 {
        FROM_BITS[(bits & 0b11) as usize]
    }

    pub const fn neg(self) -> TruthValue4 {
        NEG[self as usize]
    }

    pub const fn conj(self, other: TruthValue4) -> TruthValue4 {
        CONJ[self as usize][other as usize]
    }

    pub const fn disj(self, other: TruthValue4) -> TruthValue4 {
        DISJ[self as usize][other as usize]
    }

    /// The subset of `{0, 1}` this value stands for, ascending.
    pub fn to_subset(self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2);
        if self.bits() & 0b01 != 0 {
            out.push(0);
        }
        if self.bits() & 0b10 != 0 {
            out.push(1);
        }
        out
    }

    /// Inverse of [`to_subset`](Self::to_subset). Duplicates are allowed.
    pub fn from_subset<I>(elements: I) -> Result<TruthValue4, TruthError>
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let mut bits = 0u8;
        for e in elements {
            match e.into() {
                0 => bits |= 0b01,
                1 => bits |= 0b10,
                other => return Err(TruthError::NotABit(other)),
            }
        }
        Ok(TruthValue4::from_bits(bits))
    }

    /// Subset inclusion on the underlying sets.
    pub const fn knowledge_leq(self, other: TruthValue4) -> bool {
        self.bits() & !other.bits() == 0
    }

    pub const fn knowledge_join(self, other: TruthValue4) -> TruthValue4 {
        TruthValue4::from_bits(self.bits() | other.bits())
    }

    pub const fn knowledge_meet(self, other: TruthValue4) -> TruthValue4 {
        TruthValue4::from_bits(self.bits() & other.bits())
    }

    pub const fn embed_classical(b: bool) -> TruthValue4 {
        if b {
            T
        } else {
            F
        }
    }

    /// `Some` for the two classical values.
    pub const fn as_classical(self) -> Option<bool> {
        match self {
            T => Some(true),
            F => Some(false),
            _ => None,
        }
    }

    pub fn is_designated(self) -> bool {
        matches!(self, T | B)
    }

    pub const fn letter(self) -> char {
        match self {
            N => 'n',
            F => 'f',
            T => 't',
            B => 'b',
        }
    }

    pub const fn human_name(self) -> &'static str {
        match self {
            N => "none",
            F => "indetermined",
            T => "determined",
            B => "both",
        }
    }
}

impl From<bool> for TruthValue4 {
    fn from(b: bool) -> Self {
        TruthValue4::embed_classical(b)
    }
}

impl std::ops::Not for TruthValue4 {
    type Output = TruthValue4;
    fn not(self) -> TruthValue4 {
        self.neg()
    }
}

impl std::ops::BitAnd for TruthValue4 {
    type Output = TruthValue4;
    fn bitand(self, rhs: TruthValue4) -> TruthValue4 {
        self.conj(rhs)
    }
}

impl std::ops::BitOr for TruthValue4 {
    type Output = TruthValue4;
    fn bitor(self, rhs: TruthValue4) -> TruthValue4 {
        self.disj(rhs)
    }
}

/// Single letter; `{:#}` gives the human name.
impl fmt::Display for TruthValue4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            f.write_str(self.human_name())
        } else {
            write!(f, "{}", self.letter())
        }
    }
}

impl FromStr for TruthValue4 {
    type Err = TruthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "n" | "none" => Ok(N),
            "f" | "indetermined" | "false" => Ok(F),
            "t" | "determined" | "true" => Ok(T),
            "b" | "both" => Ok(B),
            _ => Err(TruthError::UnknownName(s.to_string())),
        }
    }
}
