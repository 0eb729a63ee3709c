use std::collections::HashSet;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use super::{first_violation, ShiftScan};

/// A relabelling of players by power rank: `rank_of(a)` is the position of
/// original player `a`, with rank `n` the most powerful.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlayerOrdering {
    rank: Vec<usize>,
    player: Vec<usize>,
}

impl PlayerOrdering {
    pub fn identity(n: usize) -> Self {
        let rank: Vec<usize> = (1..=n).collect();
        Self {
            player: rank.clone(),
            rank,
        }
    }

    /// `ranks[a - 1]` is the rank of player `a`; must be a permutation of `1..=n`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut player = vec![0; n];
        for (i, &r) in ranks.iter().enumerate() {
            if r == 0 || r > n || player[r - 1] != 0 {
                return Err(Error::InvalidOrdering(format!(
                    "ranks {ranks:?} are not a permutation of 1..={n}"
                )));
            }
            player[r - 1] = i + 1;
        }
        Ok(Self {
            rank: ranks,
            player,
        })
    }

    pub fn n(&self) -> usize {
        self.rank.len()
    }

    pub fn rank_of(&self, player: usize) -> usize {
        self.rank[player - 1]
    }

    pub fn player_at(&self, rank: usize) -> usize {
        self.player[rank - 1]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.rank.iter().enumerate().all(|(i, &r)| r == i + 1)
    }

    /// Original labels to rank labels.
    pub fn relabel(&self, x: Coalition) -> Coalition {
        let bits = x.players().fold(0u64, |acc, a| acc | 1 << (self.rank_of(a) - 1));
        Coalition::new(x.n(), bits).expect("ranks stay within the ground set")
    }

    /// Rank labels back to original labels.
    pub fn restore(&self, x: Coalition) -> Coalition {
        let bits = x.players().fold(0u64, |acc, r| acc | 1 << (self.player_at(r) - 1));
        Coalition::new(x.n(), bits).expect("players stay within the ground set")
    }

    pub fn relabel_all(&self, h: &Hypergraph) -> Hypergraph {
        h.map_edges(h.n(), |x| self.relabel(x))
    }

    pub fn restore_all(&self, h: &Hypergraph) -> Hypergraph {
        h.map_edges(h.n(), |x| self.restore(x))
    }
}

/// Searches for a player ordering under which the kernel is regular.
///
/// Each losing increasing shift proves that the removed player must rank
/// above the added one. Such facts are fixed permanently; the order is
/// rebuilt to respect all of them, keeping the previous order wherever it
/// is unconstrained. Two opposite facts, or a cyclic set of them, prove the
/// game is not linear. At most `n(n-1)/2` facts can be collected.
///
/// Returns `Ok(None)` when the game is not linear.
pub fn find_regular_order(h: &Hypergraph) -> Result<Option<PlayerOrdering>> {
    h.require_antichain()?;
    let n = h.n();
    let cap = n * n.saturating_sub(1) / 2;
    let mut order = PlayerOrdering::identity(n);
    let mut fixed: HashSet<(usize, usize)> = HashSet::new();
    loop {
        let relabelled = order.relabel_all(h);
        let Some(v) = first_violation(&relabelled, ShiftScan::Adjacent) else {
            return Ok(Some(order));
        };
        let above = order.player_at(v.removed);
        let below = order.player_at(v.added);
        if fixed.contains(&(below, above)) || fixed.len() >= cap {
            return Ok(None);
        }
        fixed.insert((above, below));
        match rebuild(n, &fixed, &order) {
            Some(next) => order = next,
            None => return Ok(None),
        }
    }
}

/// Topological order from the top rank down; ties keep the previous rank.
fn rebuild(n: usize, fixed: &HashSet<(usize, usize)>, previous: &PlayerOrdering) -> Option<PlayerOrdering> {
    let mut placed = vec![false; n + 1];
    let mut ranks = vec![0; n];
    for rank in (1..=n).rev() {
        let next = (1..=n)
            .filter(|&p| !placed[p])
            .filter(|&p| !fixed.iter().any(|&(hi, lo)| lo == p && !placed[hi]))
            .max_by_key(|&p| previous.rank_of(p))?;
        placed[next] = true;
        ranks[next - 1] = rank;
    }
    PlayerOrdering::from_ranks(ranks).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::regular::is_regular;

    #[test]
    fn identity_is_kept_for_regular_games() {
        let o = find_regular_order(&families::example4()).unwrap().unwrap();
        assert!(o.is_identity());
    }

    #[test]
    fn fano_is_not_linear() {
        assert_eq!(find_regular_order(&families::fano()).unwrap(), None);
        assert_eq!(find_regular_order(&families::example3(2)).unwrap(), None);
    }

    #[test]
    fn dictator_moves_to_the_top() {
        let h = Hypergraph::from_rows(3, &["010"]).unwrap();
        let o = find_regular_order(&h).unwrap().unwrap();
        assert_eq!(o.rank_of(2), 3);
        assert!(is_regular(&o.relabel_all(&h)).unwrap());
    }

    #[test]
    fn reversed_weights_are_reordered() {
        // weights 3,2,1 on players 1,2,3 with quota 4
        let h = Hypergraph::from_rows(3, &["011", "101"]).unwrap();
        let o = find_regular_order(&h).unwrap().unwrap();
        let r = o.relabel_all(&h);
        assert!(is_regular(&r).unwrap());
        assert_eq!(o.restore_all(&r), h);
    }

    #[test]
    fn ranks_must_be_a_permutation() {
        assert!(PlayerOrdering::from_ranks(vec![1, 1, 3]).is_err());
        assert!(PlayerOrdering::from_ranks(vec![1, 4, 2]).is_err());
        let o = PlayerOrdering::from_ranks(vec![3, 1, 2]).unwrap();
        assert_eq!(o.player_at(3), 1);
        let x: Coalition = "001".parse().unwrap();
        assert_eq!(o.relabel(x).to_string(), "100");
        assert_eq!(o.restore(o.relabel(x)), x);
    }
}
