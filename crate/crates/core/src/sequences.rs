//! Interval blocks that supply labels to the builders.
//!
//! An interval family splits `[offset+1, offset+mt]` into `t` runs of
//! length `m`. The interleaved family used for diagonals alternates odd and
//! even members of `[offset+1, offset+2m*ceil(t/2)]`, so blocks `2a-1` and
//! `2a` together cover a run of length `2m`.

use serde::{Deserialize, Serialize};

use crate::error::SequenceError;

/// Ascending (`Up`, the `+` sequence) or descending (`Down`, the `-` one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn from_sign(sign: i64) -> Direction {
        if sign > 0 {
            Direction::Up
        } else {
            Direction::Down
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// `S(a) = [offset + m(a-1) + 1, offset + ma]`.
    Interval,
    /// `T(j)`: for `j = 2a-1` the values `offset + 2l - 1 + 2m(a-1)`, for
    /// `j = 2a` the values `offset + 2l + 2m(a-1)`, `l` in `1..=m`.
    Interleaved,
}

/// Blocks are computed on demand, nothing is materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockFamily {
    pub m: usize,
    pub t: usize,
    pub offset: u64,
    pub kind: BlockKind,
}

impl BlockFamily {
    pub fn interval(m: usize, t: usize, offset: u64) -> Self {
        BlockFamily { m, t, offset, kind: BlockKind::Interval }
    }

    pub fn interleaved(m: usize, t: usize, offset: u64) -> Self {
        BlockFamily { m, t, offset, kind: BlockKind::Interleaved }
    }

    /// Element `l` (1-based) of block `a` in ascending order.
    fn element(&self, a: usize, l: usize) -> u64 {
        let (m, l) = (self.m as u64, l as u64);
        match self.kind {
            BlockKind::Interval => self.offset + m * (a as u64 - 1) + l,
            BlockKind::Interleaved => {
                let pair = ((a as u64) - 1) / 2;
                let odd = a % 2 == 1;
                self.offset + 2 * l - u64::from(odd) + 2 * m * pair
            }
        }
    }

    /// The `i`-th term of block `a` read in direction `dir`.
    pub fn pick(&self, a: usize, dir: Direction, i: usize) -> Result<u64, SequenceError> {
        if a == 0 || a > self.t {
            return Err(SequenceError::BlockOutOfRange { block: a, blocks: self.t });
        }
        if i == 0 || i > self.m {
            return Err(SequenceError::PositionOutOfRange { pos: i, len: self.m });
        }
        let l = match dir {
            Direction::Up => i,
            Direction::Down => self.m + 1 - i,
        };
        Ok(self.element(a, l))
    }

    /// Block `a` in ascending order.
    pub fn block(&self, a: usize) -> Result<Vec<u64>, SequenceError> {
        (1..=self.m).map(|i| self.pick(a, Direction::Up, i)).collect()
    }
}

/// `t_pick` of the diagonal stage: an interleaved family over `offset`.
pub fn t_pick(m: usize, offset: u64, t: usize, j: usize, dir: Direction, i: usize) -> Result<u64, SequenceError> {
    BlockFamily::interleaved(m, t, offset).pick(j, dir, i)
}

/// Corner labels for the `4k+3` bound: odd offsets from `base` first, then
/// even ones. Consecutive copies differ by 2 except across the seam.
pub fn u_compound_4k3(m: usize, base: u64) -> Result<Vec<u64>, SequenceError> {
    if m < 2 {
        return Err(SequenceError::TooShort(m));
    }
    let odd = m.div_ceil(2) as u64;
    let even = (m / 2) as u64;
    let mut out: Vec<u64> = (1..=odd).map(|l| base + 2 * l - 1).collect();
    out.extend((1..=even).map(|l| base + 2 * l));
    Ok(out)
}

/// Corner labels for the `4k+1` bound. Up to four copies take consecutive
/// labels; beyond that, `m = 4s + m0` and the residues mod 4 are listed
/// class by class.
pub fn u_compound_4k1(m: usize, base: u64) -> Result<Vec<u64>, SequenceError> {
    if m < 2 {
        return Err(SequenceError::TooShort(m));
    }
    if m <= 4 {
        return Ok((1..=m as u64).map(|i| base + i).collect());
    }
    let (s, m0) = (m / 4, m % 4);
    let mut out = Vec::with_capacity(m);
    for a in 1..=4usize {
        let count = if a <= m0 { s + 1 } else { s };
        out.extend((0..count as u64).map(|l| base + a as u64 + 4 * l));
    }
    Ok(out)
}
