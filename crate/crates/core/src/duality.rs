//! Coherence, completeness and duality of hypergraph pairs, and the
//! game-level properness, strongness and decisiveness tests built on them.
//!
//! A pair `(H, K)` over one ground set is *coherent* when every edge of `H`
//! meets every edge of `K`, and *complete* when every coalition `Z` either
//! responds to `H` or has a complement responding to `K`. Completeness is
//! the hard half: it is decided by a branching recursion that splits on the
//! most frequent player and falls back to an exhaustive scan on small
//! subproblems.

use std::collections::HashSet;

use crate::coalition::{full_mask, Coalition};
use crate::error::Result;
use crate::game::SimpleGame;
use crate::hypergraph::Hypergraph;

/// Outcome of [`is_dual_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualityVerdict {
    pub coherent: bool,
    pub complete: bool,
    /// For an incoherent pair, a `Z` in `nu(H)` with `A \ Z` in `nu(K)`.
    /// For a coherent but incomplete pair, a `Z` outside `nu(H)` with
    /// `A \ Z` outside `nu(K)`.
    pub witness: Option<Coalition>,
}

impl DualityVerdict {
    pub fn is_dual(&self) -> bool {
        self.coherent && self.complete
    }
}

/// Two disjoint edges `(X, Y)` with `X` in `H` and `Y` in `K`, if any.
pub fn find_disjoint_pair(h: &Hypergraph, k: &Hypergraph) -> Result<Option<(Coalition, Coalition)>> {
    h.check_same_ground(k)?;
    for x in h {
        for y in k {
            if !x.intersects(*y) {
                return Ok(Some((*x, *y)));
            }
        }
    }
    Ok(None)
}

pub fn is_coherent(h: &Hypergraph, k: &Hypergraph) -> Result<bool> {
    Ok(find_disjoint_pair(h, k)?.is_none())
}

/// A coalition `Z` with `Z` not in `nu(H)` and `A \ Z` not in `nu(K)`.
pub fn completeness_witness(h: &Hypergraph, k: &Hypergraph) -> Result<Option<Coalition>> {
    h.check_same_ground(k)?;
    let n = h.n();
    let witness = incomplete_point(h.bit_vec(), k.bit_vec(), full_mask(n))
        .map(|z| Coalition::from_bits_unchecked(n, z));
    if let Some(z) = witness {
        debug_assert!(!h.responds(z) && !k.responds(z.complement()));
    }
    Ok(witness)
}

pub fn is_complete(h: &Hypergraph, k: &Hypergraph) -> Result<bool> {
    Ok(completeness_witness(h, k)?.is_none())
}

pub fn is_dual_pair(h: &Hypergraph, k: &Hypergraph) -> Result<DualityVerdict> {
    if let Some((x, _)) = find_disjoint_pair(h, k)? {
        // X responds to H and its complement contains Y.
        return Ok(DualityVerdict {
            coherent: false,
            complete: is_complete(h, k)?,
            witness: Some(x),
        });
    }
    let witness = completeness_witness(h, k)?;
    Ok(DualityVerdict {
        coherent: true,
        complete: witness.is_none(),
        witness,
    })
}

pub fn game_is_proper(g: &SimpleGame) -> bool {
    find_disjoint_pair(g.kernel(), g.kernel())
        .expect("same ground set")
        .is_none()
}

/// `None` when strong, otherwise a losing coalition with a losing complement.
pub fn game_strongness_witness(g: &SimpleGame) -> Option<Coalition> {
    completeness_witness(g.kernel(), g.kernel()).expect("same ground set")
}

pub fn game_is_strong(g: &SimpleGame) -> bool {
    game_strongness_witness(g).is_none()
}

pub fn game_is_decisive(g: &SimpleGame) -> bool {
    game_is_proper(g) && game_is_strong(g)
}

const SCAN_EDGE_PRODUCT: usize = 16;
const SCAN_PLAYERS: u32 = 8;

fn minimal_bits(edges: &mut Vec<u64>) {
    edges.sort_unstable_by_key(|e| e.count_ones());
    edges.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(edges.len());
    for &e in edges.iter() {
        if !kept.iter().any(|&k| k & !e == 0) {
            kept.push(e);
        }
    }
    *edges = kept;
}

#[inline]
fn responds_bits(edges: &[u64], z: u64) -> bool {
    edges.iter().any(|&x| x & !z == 0)
}

/// Searches `Z` within `vars` with `Z` outside `nu(h)` and `vars \ Z`
/// outside `nu(k)`. All edges are subsets of `vars`.
fn incomplete_point(mut h: Vec<u64>, mut k: Vec<u64>, vars: u64) -> Option<u64> {
    minimal_bits(&mut h);
    minimal_bits(&mut k);
    if h.first() == Some(&0) || k.first() == Some(&0) {
        return None;
    }
    if h.is_empty() {
        return Some(vars);
    }
    if k.is_empty() {
        return Some(0);
    }
    if h.len() * k.len() <= SCAN_EDGE_PRODUCT || vars.count_ones() <= SCAN_PLAYERS {
        return scan(&h, &k, vars);
    }

    // most frequent player, lowest label on ties
    let mut best = (0usize, u32::MAX);
    let mut rest = vars;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        let bit = 1u64 << v;
        let freq = h.iter().chain(k.iter()).filter(|&&e| e & bit != 0).count();
        if freq > best.0 {
            best = (freq, v);
        }
    }
    let bit = 1u64 << best.1;
    let sub = vars & !bit;

    // v in Z: v no longer constrains H, and K may only use edges avoiding v
    let h1 = h.iter().map(|&x| x & !bit).collect();
    let k1 = k.iter().copied().filter(|&y| y & bit == 0).collect();
    if let Some(z) = incomplete_point(h1, k1, sub) {
        return Some(z | bit);
    }
    // v outside Z: symmetric
    let h0 = h.iter().copied().filter(|&x| x & bit == 0).collect();
    let k0 = k.iter().map(|&y| y & !bit).collect();
    incomplete_point(h0, k0, sub)
}

fn scan(h: &[u64], k: &[u64], vars: u64) -> Option<u64> {
    // walk every submask of vars, starting from the empty set
    let mut z = 0u64;
    loop {
        if !responds_bits(h, z) && !responds_bits(k, vars & !z) {
            return Some(z);
        }
        if z == vars {
            return None;
        }
        z = (z.wrapping_sub(vars)) & vars;
    }
}

/// `lambda(H)` for an arbitrary hypergraph, built edge by edge.
///
/// Each step keeps the transversals that already meet the new edge and
/// extends the others by one of its players, discarding extensions that
/// lose minimality. Not output-polynomial in general.
pub fn transversal_kernel(h: &Hypergraph) -> Hypergraph {
    let n = h.n();
    let mut edges = h.bit_vec();
    minimal_bits(&mut edges);
    let mut current: Vec<u64> = vec![0];
    let mut seen_edges: Vec<u64> = Vec::new();
    for &e in &edges {
        seen_edges.push(e);
        let mut next: Vec<u64> = Vec::new();
        let mut seen = HashSet::new();
        for &t in &current {
            if t & e != 0 {
                if seen.insert(t) {
                    next.push(t);
                }
                continue;
            }
            let mut rest = e;
            while rest != 0 {
                let v = 1u64 << rest.trailing_zeros();
                rest &= rest - 1;
                let cand = t | v;
                if !seen.contains(&cand) && is_minimal_transversal(cand, &seen_edges) {
                    seen.insert(cand);
                    next.push(cand);
                }
            }
        }
        current = next;
    }
    Hypergraph::from_bits(n, current)
}

/// Every member of `t` has a private edge meeting `t` only there.
fn is_minimal_transversal(t: u64, edges: &[u64]) -> bool {
    let mut unprivileged = t;
    for &e in edges {
        let hit = e & t;
        if hit == 0 {
            return false;
        }
        if hit.count_ones() == 1 {
            unprivileged &= !hit;
        }
    }
    unprivileged == 0
}
