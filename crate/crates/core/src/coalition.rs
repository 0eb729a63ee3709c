//! Coalitions as incidence vectors over a ground set `{n, ..., 1}`.
//!
//! Player `a` occupies bit `a - 1`, so player `n` is the most significant
//! position and the textual form prints player `n` in the leftmost column.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ground set a [`Coalition`] can describe.
pub const MAX_PLAYERS: usize = 64;

/// A subset of the players `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition {
    bits: u64,
    n: usize,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Coalition {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_PLAYERS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_PLAYERS,
            });
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::PlayerOutOfRange { bits, n });
        }
        Ok(Self { bits, n })
    }

    /// Callers guarantee `bits` fits in `n` players.
    #[inline]
    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!(n <= MAX_PLAYERS && bits & !full_mask(n) == 0);
        Self { bits, n }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_bits_unchecked(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::from_bits_unchecked(n, full_mask(n))
    }

    /// Builds a coalition from 1-based player labels.
    pub fn from_players(n: usize, players: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &a in players {
            if a == 0 || a > n || a > MAX_PLAYERS {
                return Err(Error::PlayerOutOfRange {
                    bits: if (1..=64).contains(&a) { 1 << (a - 1) } else { 0 },
                    n,
                });
            }
            bits |= 1 << (a - 1);
        }
        Self::new(n, bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Size of the ground set.
    #[inline]
    pub fn n(self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, player: usize) -> bool {
        player >= 1 && player <= self.n && self.bits >> (player - 1) & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: Coalition) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(self, other: Coalition) -> bool {
        self.bits & other.bits != 0
    }

    /// `A \ self`.
    #[inline]
    pub fn complement(self) -> Self {
        Self::from_bits_unchecked(self.n, !self.bits & full_mask(self.n))
    }

    pub fn with(self, player: usize) -> Self {
        assert!(player >= 1 && player <= self.n, "player {player} out of range");
        Self::from_bits_unchecked(self.n, self.bits | 1 << (player - 1))
    }

    pub fn without(self, player: usize) -> Self {
        assert!(player >= 1 && player <= self.n, "player {player} out of range");
        Self::from_bits_unchecked(self.n, self.bits & !(1 << (player - 1)))
    }

    /// Members in increasing label order.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let low = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(low + 1)
        })
    }

    /// Every subset of an `n`-player ground set, in increasing bit order.
    ///
    /// Panics for `n >= 64`; callers gate this behind an oracle limit.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        assert!(n < 64, "cannot enumerate 2^{n} coalitions");
        (0..1u64 << n).map(move |bits| Coalition::from_bits_unchecked(n, bits))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in (1..=self.n).rev() {
            f.write_str(if self.contains(a) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coalition({self})")
    }
}

impl FromStr for Coalition {
    type Err = Error;

    /// Parses a 0/1 row, leftmost character = player `n`.
    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().count();
        if n > MAX_PLAYERS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_PLAYERS,
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("invalid character {other:?} in row {s:?}"),
                    })
                }
            };
            bits |= bit << (n - 1 - i);
        }
        Ok(Self::from_bits_unchecked(n, bits))
    }
}
