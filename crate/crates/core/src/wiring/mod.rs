//! Generalized wiring diagrams (allowable sequences with multi-crossings).
//!
//! Wires are numbered `1..=n` by their top-to-bottom order at the left edge of
//! the diagram. A [`Move`] reverses a contiguous block of the current order and
//! stands for one crossing point whose multiplicity is the block length.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profiles::TiProfile;

mod complex;

pub use complex::{
    CellComplex, Classification, ComplexError, EdgeViolation, ProjectiveEdge, ProjectiveFace,
    SimpleEdgeCheck,
};

/// Upper limit on `n` accepted from files; keeps the pair table bounded.
pub const MAX_WIRES: u32 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    /// 1-based position of the top of the block.
    pub pos: u32,
    pub len: u32,
}

impl Move {
    pub const fn new(pos: u32, len: u32) -> Self {
        Self { pos, len }
    }

    /// Last position covered by the block (1-based, inclusive).
    pub fn end(&self) -> u32 {
        self.pos + self.len - 1
    }

    /// Blocks that share no position commute.
    pub fn is_disjoint(&self, other: &Move) -> bool {
        self.end() < other.pos || other.end() < self.pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WiringError {
    #[error("wire count {n} outside 1..={max}", max = MAX_WIRES)]
    BadWireCount { n: u32 },
    #[error("move {index} has length {len}; blocks need at least two wires")]
    BlockTooShort { index: usize, len: u32 },
    #[error("move {index} block {pos}..{pos}+{len}-1 leaves positions 1..={n}")]
    BlockOutOfRange { index: usize, pos: u32, len: u32, n: u32 },
    #[error("move {index} crosses wires {a} and {b} a second time")]
    RepeatedCrossing { index: usize, a: u32, b: u32 },
    #[error("wires {a} and {b} never cross")]
    MissingCrossing { a: u32, b: u32 },
    #[error("arrangement is trivial (all wires pass through one point)")]
    Trivial,
    #[error(transparent)]
    Profile(#[from] crate::profiles::ProfileError),
}

/// Outcome of a successful [`AllowableSequence::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WiringValidation {
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AllowableSequence {
    n: u32,
    moves: Vec<Move>,
}

impl AllowableSequence {
    /// Wraps the moves without checking them; call [`validate`](Self::validate).
    pub fn new(n: u32, moves: Vec<Move>) -> Self {
        Self { n, moves }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Replays the moves and checks that every pair of wires crosses exactly once.
    pub fn validate(&self) -> Result<WiringValidation, WiringError> {
        let n = self.n;
        if n == 0 || n > MAX_WIRES {
            return Err(WiringError::BadWireCount { n });
        }
        let nu = n as usize;
        let mut order: Vec<u32> = (1..=n).collect();
        let mut crossed = vec![false; nu * nu];
        for (index, mv) in self.moves.iter().enumerate() {
            if mv.len < 2 {
                return Err(WiringError::BlockTooShort { index, len: mv.len });
            }
            if mv.pos < 1 || mv.pos.checked_add(mv.len - 1).is_none_or(|end| end > n) {
                return Err(WiringError::BlockOutOfRange { index, pos: mv.pos, len: mv.len, n });
            }
            let block = &mut order[(mv.pos - 1) as usize..mv.end() as usize];
            for (x, &a) in block.iter().enumerate() {
                for &b in &block[x + 1..] {
                    let (lo, hi) = (a.min(b), a.max(b));
                    let cell = &mut crossed[(lo - 1) as usize * nu + (hi - 1) as usize];
                    if *cell {
                        return Err(WiringError::RepeatedCrossing { index, a: lo, b: hi });
                    }
                    *cell = true;
                }
            }
            block.reverse();
        }
        for a in 1..=n {
            for b in a + 1..=n {
                if !crossed[(a - 1) as usize * nu + (b - 1) as usize] {
                    return Err(WiringError::MissingCrossing { a, b });
                }
            }
        }
        let trivial = self.moves.len() == 1 && self.moves[0].len == n;
        Ok(WiringValidation { trivial })
    }

    /// `t_i` = number of moves of length `i`.
    pub fn ti_profile(&self) -> Result<TiProfile, WiringError> {
        self.validate()?;
        let ti = TiProfile::new(self.n, self.moves.iter().map(|m| (m.len, 1)))?;
        debug_assert!(ti.validate(false).is_ok());
        Ok(ti)
    }

    /// Wire order (top to bottom) before each move, plus the final order.
    pub fn orders(&self) -> Vec<Vec<u32>> {
        let mut order: Vec<u32> = (1..=self.n).collect();
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(order.clone());
        for mv in &self.moves {
            order[(mv.pos - 1) as usize..mv.end() as usize].reverse();
            out.push(order.clone());
        }
        out
    }

    pub fn to_file(&self) -> WiringFile {
        WiringFile { kind: WiringKind::Wiring, n: self.n, moves: self.moves.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WiringKind {
    Wiring,
}

/// On-disk form: `{"kind":"wiring","n":..,"moves":[{"pos":..,"len":..},..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WiringFile {
    pub kind: WiringKind,
    pub n: u32,
    pub moves: Vec<Move>,
}

impl From<WiringFile> for AllowableSequence {
    fn from(file: WiringFile) -> Self {
        AllowableSequence::new(file.n, file.moves)
    }
}
