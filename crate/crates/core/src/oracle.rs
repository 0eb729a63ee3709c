//! Exhaustive oracles over all `2^n` coalitions.
//!
//! These are the reference answers the structural algorithms are checked
//! against; they are only usable for small ground sets.

use crate::coalition::{full_mask, Coalition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Default cap on `n` for exhaustive scans.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit(pub usize);

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit(DEFAULT_ORACLE_LIMIT)
    }
}

impl OracleLimit {
    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 || n >= 63 {
            Err(Error::GroundSetTooLarge { n, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Dense membership table of `nu(H)`: `table[z]` iff `z` contains an edge.
pub fn winning_table(h: &Hypergraph, limit: OracleLimit) -> Result<Vec<bool>> {
    limit.check(h.n())?;
    let n = h.n();
    let mut table = vec![false; 1 << n];
    for e in h {
        table[e.bits() as usize] = true;
    }
    // upward closure, one player at a time
    for a in 0..n {
        let bit = 1usize << a;
        for z in 0..table.len() {
            if z & bit != 0 && table[z ^ bit] {
                table[z] = true;
            }
        }
    }
    Ok(table)
}

/// `lambda(H) = mu(tau(H))` by scanning every coalition.
pub fn brute_transversal_kernel(h: &Hypergraph, limit: OracleLimit) -> Result<Hypergraph> {
    let n = h.n();
    let win = winning_table(h, limit)?;
    let full = full_mask(n) as usize;
    // Z is transversal iff its complement does not respond.
    let transversal = |z: usize| !win[full ^ z];
    let minimal = (0..=full).filter(|&z| {
        transversal(z) && (0..n).all(|a| z >> a & 1 == 0 || !transversal(z & !(1 << a)))
    });
    Ok(Hypergraph::from_bits(n, minimal.map(|z| z as u64)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleProperties {
    pub proper: bool,
    pub strong: bool,
    pub decisive: bool,
}

/// Properness and strongness of `nu(H)` by checking every `S` against `A \ S`.
pub fn oracle_properties(h: &Hypergraph, limit: OracleLimit) -> Result<OracleProperties> {
    let win = winning_table(h, limit)?;
    let full = full_mask(h.n()) as usize;
    let mut proper = true;
    let mut strong = true;
    for s in 0..=full {
        let (ws, wc) = (win[s], win[full ^ s]);
        proper &= !(ws && wc);
        strong &= ws || wc;
    }
    Ok(OracleProperties {
        proper,
        strong,
        decisive: proper && strong,
    })
}

/// Minimal members of an upward-closed table, in increasing bit order.
pub fn table_kernel(n: usize, table: &[bool]) -> Hypergraph {
    let minimal = (0..table.len()).filter(|&z| table[z] && (0..n).all(|a| z >> a & 1 == 0 || !table[z & !(1 << a)]));
    Hypergraph::from_bits(n, minimal.map(|z| z as u64))
}

/// All coalitions in increasing bit order whose membership in `table` is set.
pub fn table_members(n: usize, table: &[bool]) -> Vec<Coalition> {
    table
        .iter()
        .enumerate()
        .filter(|(_, &w)| w)
        .map(|(z, _)| Coalition::from_bits_unchecked(n, z as u64))
        .collect()
}
