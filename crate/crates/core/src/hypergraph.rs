//! Families of coalitions and the basic operator algebra on them:
//! complementation, minimization, response and transversality.

use std::collections::HashSet;
use std::fmt;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};

/// A family of distinct coalitions over a common ground set.
///
/// Edge order is kept for I/O fidelity; equality between hypergraphs is
/// positional, use [`Hypergraph::same_edges`] for set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Coalition>,
}

impl Hypergraph {
    /// Builds a hypergraph, silently dropping repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Coalition>) -> Result<Self> {
        if n > MAX_PLAYERS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_PLAYERS,
            });
        }
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for e in edges {
            if e.n() != n {
                return Err(Error::GroundSetMismatch {
                    left: n,
                    right: e.n(),
                });
            }
            if seen.insert(e.bits()) {
                kept.push(e);
            }
        }
        Ok(Self { n, edges: kept })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_PLAYERS);
        Self {
            n,
            edges: Vec::new(),
        }
    }

    /// Parses rows such as `"011"` (leftmost character = player `n`).
    pub fn from_rows<S: AsRef<str>>(n: usize, rows: &[S]) -> Result<Self> {
        let edges = rows
            .iter()
            .map(|r| r.as_ref().parse::<Coalition>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    /// Builds from raw bitmasks, deduplicating. Bits must fit in `n`.
    pub(crate) fn from_bits(n: usize, bits: impl IntoIterator<Item = u64>) -> Self {
        let mut seen = HashSet::new();
        let edges = bits
            .into_iter()
            .filter(|b| seen.insert(*b))
            .map(|b| Coalition::from_bits_unchecked(n, b))
            .collect();
        Self { n, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[Coalition] {
        &self.edges
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coalition> {
        self.edges.iter()
    }

    pub(crate) fn bit_vec(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.bits()).collect()
    }

    /// `|A| * |H|`, the number of bits in the incidence matrix.
    pub fn size(&self) -> usize {
        self.n * self.edges.len()
    }

    pub fn contains_edge(&self, x: Coalition) -> bool {
        self.edges.contains(&x)
    }

    /// Set equality, ignoring edge order.
    pub fn same_edges(&self, other: &Hypergraph) -> bool {
        if self.n != other.n || self.len() != other.len() {
            return false;
        }
        let mine: HashSet<u64> = self.edges.iter().map(|e| e.bits()).collect();
        other.edges.iter().all(|e| mine.contains(&e.bits()))
    }

    /// Edges sorted by bit pattern; handy for golden comparisons.
    pub fn sorted(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| e.bits());
        Hypergraph { n: self.n, edges }
    }

    pub(crate) fn check_same_ground(&self, other: &Hypergraph) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `{A \ X : X in H}`.
    pub fn complement_family(&self) -> Hypergraph {
        Hypergraph::from_bits(self.n, self.edges.iter().map(|e| e.complement().bits()))
    }

    /// The inclusion-minimal edges, in input order.
    pub fn minimize(&self) -> Hypergraph {
        let bits = self.bit_vec();
        Hypergraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|x| {
                    let xb = x.bits();
                    !bits.iter().any(|&z| z != xb && z & !xb == 0)
                })
                .collect(),
        }
    }

    /// First pair `(outer, inner)` with `inner` strictly inside `outer`.
    pub fn antichain_violation(&self) -> Option<(Coalition, Coalition)> {
        for x in &self.edges {
            for z in &self.edges {
                if z != x && z.is_subset(*x) {
                    return Some((*x, *z));
                }
            }
        }
        None
    }

    pub fn is_antichain(&self) -> bool {
        self.antichain_violation().is_none()
    }

    pub(crate) fn require_antichain(&self) -> Result<()> {
        match self.antichain_violation() {
            None => Ok(()),
            Some((outer, inner)) => Err(Error::NotAntichain {
                outer: outer.to_string(),
                inner: inner.to_string(),
            }),
        }
    }

    /// Does `z` contain some edge? Membership in `nu(H)`.
    #[inline]
    pub fn responds(&self, z: Coalition) -> bool {
        debug_assert_eq!(z.n(), self.n);
        let zb = z.bits();
        self.edges.iter().any(|x| x.bits() & !zb == 0)
    }

    /// Does `z` meet every edge? Membership in `tau(H)`.
    #[inline]
    pub fn transversal(&self, z: Coalition) -> bool {
        debug_assert_eq!(z.n(), self.n);
        let zb = z.bits();
        self.edges.iter().all(|x| x.bits() & zb != 0)
    }

    /// Relabels every edge through `f`, keeping order.
    pub fn map_edges(&self, n: usize, f: impl Fn(Coalition) -> Coalition) -> Hypergraph {
        let mapped: Vec<Coalition> = self.edges.iter().map(|e| f(*e)).collect();
        Hypergraph::new(n, mapped).expect("mapped edges stay within the target ground set")
    }

    /// Appends the edges of `other` not already present.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        self.check_same_ground(other)?;
        Hypergraph::new(
            self.n,
            self.edges.iter().chain(other.edges.iter()).copied(),
        )
    }
}

impl<'a> IntoIterator for &'a Hypergraph {
    type Item = &'a Coalition;
    type IntoIter = std::slice::Iter<'a, Coalition>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}
