use std::collections::HashSet;

use crate::coalition::full_mask;
use crate::error::Result;
use crate::hypergraph::Hypergraph;

use super::{require_regular, PlayerOrdering};

/// `lambda(H)` of a regular kernel, via its maximal losing coalitions.
///
/// In a regular game every maximal loser has the form
/// `(X \ {j}) ∪ {1, ..., j-1}` for some minimal winner `X` and member `j`
/// (or is the whole ground set when nothing wins). Testing those
/// `|A| * |H| + 1` candidates yields all of them, and their complements are
/// the minimal transversals.
pub fn regular_transversal_kernel(h: &Hypergraph) -> Result<Hypergraph> {
    require_regular(h)?;
    Ok(maximal_losers(h).complement_family())
}

pub(crate) fn maximal_losers(h: &Hypergraph) -> Hypergraph {
    let n = h.n();
    let full = full_mask(n);
    let edges = h.bit_vec();
    let wins = |z: u64| edges.iter().any(|&x| x & !z == 0);

    let mut seen = HashSet::new();
    let mut losers = Vec::new();
    let candidates = edges
        .iter()
        .flat_map(|&x| {
            let mut rest = x;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                let below = (1u64 << j) - 1;
                Some((x & !(1u64 << j)) | below)
            })
        })
        .chain(std::iter::once(full));
    for y in candidates {
        if !seen.insert(y) || wins(y) {
            continue;
        }
        let mut outside = full & !y;
        let mut maximal = true;
        while outside != 0 {
            let a = outside & outside.wrapping_neg();
            outside &= outside - 1;
            if !wins(y | a) {
                maximal = false;
                break;
            }
        }
        if maximal {
            losers.push(y);
        }
    }
    debug_assert!(losers.len() <= n * h.len() + 1);
    Hypergraph::from_bits(n, losers)
}

/// `lambda(H)` of a linear kernel, given an ordering making it regular.
pub fn linear_transversal_kernel(h: &Hypergraph, order: &PlayerOrdering) -> Result<Hypergraph> {
    let relabelled = order.relabel_all(h);
    let dual = regular_transversal_kernel(&relabelled)?;
    Ok(order.restore_all(&dual))
}

/// Self-duality of a regular game: `lambda(H) = H`.
pub fn regular_is_decisive(h: &Hypergraph) -> Result<bool> {
    Ok(regular_transversal_kernel(h)?.same_edges(h))
}

/// Strongness of a regular game: every minimal transversal wins.
pub fn regular_is_strong(h: &Hypergraph) -> Result<bool> {
    Ok(regular_transversal_kernel(h)?.iter().all(|t| h.responds(*t)))
}
