//! Regular games: the shift order, regularity and linearity recognition,
//! shift-minimal kernels, and polynomial dualization.
//!
//! Players are ranked by label: player `n` is the most powerful. A game is
//! regular when swapping any member of a winning coalition for a more
//! powerful outsider keeps it winning.

pub(crate) mod dual;
mod ordering;
pub mod shift_oracle;

use std::fmt;

pub use dual::{
    linear_transversal_kernel, regular_is_decisive, regular_is_strong, regular_transversal_kernel,
};
pub use ordering::{find_regular_order, PlayerOrdering};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// `X ⊆' Z`: every top-suffix `{a, ..., n}` holds at least as many members
/// of `Z` as of `X`.
#[inline]
pub fn shift_leq(x: Coalition, z: Coalition) -> bool {
    debug_assert_eq!(x.n(), z.n());
    shift_leq_bits(x.bits(), z.bits(), x.n())
}

#[inline]
pub(crate) fn shift_leq_bits(x: u64, z: u64, n: usize) -> bool {
    if x & !z == 0 {
        return true;
    }
    if x.count_ones() > z.count_ones() {
        return false;
    }
    let (mut cx, mut cz) = (0u32, 0u32);
    for a in (0..n).rev() {
        cx += (x >> a & 1) as u32;
        cz += (z >> a & 1) as u32;
        if cx > cz {
            return false;
        }
    }
    true
}

/// An increasing shift `edge \ {removed} ∪ {added}` that leaves the game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftViolation {
    pub edge: Coalition,
    pub added: usize,
    pub removed: usize,
}

impl ShiftViolation {
    pub fn shifted(&self) -> Coalition {
        self.edge.without(self.removed).with(self.added)
    }
}

impl fmt::Display for ShiftViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} with {} replaced by {} gives losing {}",
            self.edge,
            self.removed,
            self.added,
            self.shifted()
        )
    }
}

impl From<ShiftViolation> for Error {
    fn from(v: ShiftViolation) -> Self {
        Error::NotRegular {
            edge: v.edge.to_string(),
            added: v.added,
            removed: v.removed,
        }
    }
}

/// Which increasing shifts [`regularity_violation_with`] inspects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShiftScan {
    /// Only swaps between neighbouring ranks `b -> b + 1`; these generate
    /// every increasing shift.
    #[default]
    Adjacent,
    /// Every pair `a > b`.
    AllPairs,
}

pub fn regularity_violation(h: &Hypergraph) -> Result<Option<ShiftViolation>> {
    regularity_violation_with(h, ShiftScan::Adjacent)
}

/// First losing increasing shift of a kernel edge, scanning edges in input
/// order and `(added, removed)` lexicographically.
pub fn regularity_violation_with(h: &Hypergraph, scan: ShiftScan) -> Result<Option<ShiftViolation>> {
    h.require_antichain()?;
    Ok(first_violation(h, scan))
}

pub(crate) fn first_violation(h: &Hypergraph, scan: ShiftScan) -> Option<ShiftViolation> {
    let n = h.n();
    for &x in h {
        match scan {
            ShiftScan::Adjacent => {
                for b in 1..n {
                    let a = b + 1;
                    if x.contains(b) && !x.contains(a) && !h.responds(x.without(b).with(a)) {
                        return Some(ShiftViolation {
                            edge: x,
                            added: a,
                            removed: b,
                        });
                    }
                }
            }
            ShiftScan::AllPairs => {
                for a in 2..=n {
                    if x.contains(a) {
                        continue;
                    }
                    for b in 1..a {
                        if x.contains(b) && !h.responds(x.without(b).with(a)) {
                            return Some(ShiftViolation {
                                edge: x,
                                added: a,
                                removed: b,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_regular(h: &Hypergraph) -> Result<bool> {
    Ok(regularity_violation(h)?.is_none())
}

pub(crate) fn require_regular(h: &Hypergraph) -> Result<()> {
    match regularity_violation(h)? {
        None => Ok(()),
        Some(v) => Err(v.into()),
    }
}

/// A family of shift-incomparable coalitions, read as the shift-minimal
/// winning coalitions `mu'(W)` of the regular game `W = nu'(H')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularKernel {
    edges: Hypergraph,
}

impl RegularKernel {
    pub fn new(edges: Hypergraph) -> Result<Self> {
        for x in &edges {
            for z in &edges {
                if z != x && shift_leq(*z, *x) {
                    return Err(Error::NotShiftAntichain {
                        outer: x.to_string(),
                        inner: z.to_string(),
                    });
                }
            }
        }
        Ok(Self { edges })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.edges
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.edges
    }

    pub fn n(&self) -> usize {
        self.edges.n()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `|A| * |mu'(W)|`.
    pub fn size(&self) -> usize {
        self.edges.size()
    }

    pub fn shift_responds(&self, z: Coalition) -> bool {
        shift_responds(&self.edges, z)
    }
}

/// Membership in `nu'(H)`: some edge precedes `z` in the shift order.
pub fn shift_responds(h: &Hypergraph, z: Coalition) -> bool {
    let n = h.n();
    h.iter().any(|x| shift_leq_bits(x.bits(), z.bits(), n))
}

/// Shift-minimal edges of a regular kernel, in input order.
pub fn shift_minimize(h: &Hypergraph) -> Result<RegularKernel> {
    require_regular(h)?;
    Ok(RegularKernel {
        edges: shift_minimal_edges(h),
    })
}

/// Shift-minimal edges of any family; no regularity requirement.
pub fn shift_minimal_edges(h: &Hypergraph) -> Hypergraph {
    let n = h.n();
    let bits = h.bit_vec();
    let kept = h.iter().copied().filter(|x| {
        let xb = x.bits();
        !bits.iter().any(|&z| z != xb && shift_leq_bits(z, xb, n))
    });
    Hypergraph::new(n, kept).expect("subset of a valid hypergraph")
}
