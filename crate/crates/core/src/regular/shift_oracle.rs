//! Exhaustive oracles for the shift-order operators `nu'`, `tau'`, `lambda'`
//! and for shift-coherence and shift-completeness of pairs.
//!
//! `lambda'` can be exponentially larger than the shift kernel it comes
//! from, so only this scanning version is provided.

use crate::coalition::full_mask;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::oracle::OracleLimit;

use super::shift_leq_bits;

/// Immediate shift predecessors of `z`, all numerically smaller than `z`.
fn predecessors(z: u64, n: usize) -> impl Iterator<Item = u64> {
    let drop_first = (z & 1 == 1).then_some(z & !1);
    let moves = (1..n).filter_map(move |i| {
        let (hi, lo) = (1u64 << i, 1u64 << (i - 1));
        (z & hi != 0 && z & lo == 0).then_some(z & !hi | lo)
    });
    drop_first.into_iter().chain(moves)
}

/// Dense membership table of `nu'(H)`.
pub fn shift_winning_table(h: &Hypergraph, limit: OracleLimit) -> Result<Vec<bool>> {
    limit.check(h.n())?;
    let n = h.n();
    let mut table = vec![false; 1 << n];
    for e in h {
        table[e.bits() as usize] = true;
    }
    for z in 0..table.len() {
        if !table[z] && predecessors(z as u64, n).any(|p| table[p as usize]) {
            table[z] = true;
        }
    }
    Ok(table)
}

/// Dense membership table of `tau'(H)`: `A \ Z` lies outside `nu'(H)`.
pub fn shift_transversal_table(h: &Hypergraph, limit: OracleLimit) -> Result<Vec<bool>> {
    let win = shift_winning_table(h, limit)?;
    let full = full_mask(h.n()) as usize;
    Ok((0..=full).map(|z| !win[full ^ z]).collect())
}

/// `lambda'(H)`: shift-minimal elements of `tau'(H)`, in increasing bit order.
pub fn shift_transversal_kernel_oracle(h: &Hypergraph, limit: OracleLimit) -> Result<Hypergraph> {
    let n = h.n();
    let tau = shift_transversal_table(h, limit)?;
    let minimal = (0..tau.len() as u64)
        .filter(|&z| tau[z as usize] && !predecessors(z, n).any(|p| tau[p as usize]));
    Ok(Hypergraph::from_bits(n, minimal))
}

/// `nu'(H) ⊆ tau'(K)`, decided edge pair by edge pair.
pub fn shift_is_coherent(h: &Hypergraph, k: &Hypergraph) -> Result<bool> {
    h.check_same_ground(k)?;
    let n = h.n();
    let full = full_mask(n);
    Ok(h
        .iter()
        .all(|x| k.iter().all(|y| !shift_leq_bits(x.bits(), full & !y.bits(), n))))
}

/// `nu'(H) ⊆ tau'(K)` by scanning every coalition.
pub fn shift_is_coherent_oracle(h: &Hypergraph, k: &Hypergraph, limit: OracleLimit) -> Result<bool> {
    h.check_same_ground(k)?;
    let wh = shift_winning_table(h, limit)?;
    let tk = shift_transversal_table(k, limit)?;
    Ok(wh.iter().zip(&tk).all(|(&w, &t)| !w || t))
}

/// `nu'(H) ⊇ tau'(K)` by scanning every coalition; returns a coalition
/// outside `nu'(H)` whose complement lies outside `nu'(K)`, if any.
pub fn shift_completeness_witness(
    h: &Hypergraph,
    k: &Hypergraph,
    limit: OracleLimit,
) -> Result<Option<u64>> {
    h.check_same_ground(k)?;
    let wh = shift_winning_table(h, limit)?;
    let wk = shift_winning_table(k, limit)?;
    let full = full_mask(h.n()) as usize;
    Ok((0..=full)
        .find(|&z| !wh[z] && !wk[full ^ z])
        .map(|z| z as u64))
}

pub fn shift_is_complete_oracle(h: &Hypergraph, k: &Hypergraph, limit: OracleLimit) -> Result<bool> {
    Ok(shift_completeness_witness(h, k, limit)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::Coalition;
    use crate::regular::{shift_leq, shift_responds};

    #[test]
    fn table_matches_pairwise_response() {
        let h = Hypergraph::from_rows(5, &["00110", "10001"]).unwrap();
        let t = shift_winning_table(&h, OracleLimit::default()).unwrap();
        for z in Coalition::all(5) {
            assert_eq!(t[z.bits() as usize], shift_responds(&h, z), "{z}");
        }
    }

    #[test]
    fn single_top_player() {
        let h = Hypergraph::from_rows(3, &["100"]).unwrap();
        let l = shift_transversal_kernel_oracle(&h, OracleLimit::default()).unwrap();
        assert_eq!(l, Hypergraph::from_rows(3, &["100"]).unwrap());
    }

    #[test]
    fn top_pair_kernel() {
        // nu and nu' coincide here, so lambda' is the shift-least set meeting {8, 7}
        let h = Hypergraph::from_rows(8, &["11000000"]).unwrap();
        let l = shift_transversal_kernel_oracle(&h, OracleLimit::default()).unwrap();
        let lim = OracleLimit::default();
        let tau = shift_transversal_table(&h, lim).unwrap();
        for z in Coalition::all(8) {
            let brute_min = tau[z.bits() as usize]
                && Coalition::all(8)
                    .all(|w| w == z || !tau[w.bits() as usize] || !shift_leq(w, z));
            assert_eq!(l.contains_edge(z), brute_min, "{z}");
        }
        assert_eq!(l.len(), 1);
        assert_eq!(l.edges()[0].to_string(), "01000000");
    }

    #[test]
    fn pairwise_and_scanned_coherence_agree() {
        let h = Hypergraph::from_rows(4, &["0110", "1001"]).unwrap();
        let k = Hypergraph::from_rows(4, &["0011", "1100"]).unwrap();
        let lim = OracleLimit::default();
        assert_eq!(
            shift_is_coherent(&h, &k).unwrap(),
            shift_is_coherent_oracle(&h, &k, lim).unwrap()
        );
        assert_eq!(
            shift_is_coherent(&h, &h).unwrap(),
            shift_is_coherent_oracle(&h, &h, lim).unwrap()
        );
    }
}
