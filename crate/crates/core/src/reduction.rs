//! Doubling embedding of a simple game into a regular one.
//!
//! Player `a` of `A` becomes the adjacent pair `2a` ("in") and `2a - 1`
//! ("out") of `A' = {1..2n}`, so inclusion between coalitions turns into the
//! shift order between their images. The gadget edges `Z^a` make the images
//! of complementary coalitions behave like transversals.

use crate::coalition::Coalition;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::regular::{shift_minimal_edges, RegularKernel};

/// `T(X)`: bit `2a` when `a ∈ X`, bit `2a - 1` otherwise.
pub fn embed_t(x: Coalition, n: usize) -> Coalition {
    assert_eq!(x.n(), n, "coalition over a different ground set");
    let bits = (1..=n).fold(0u64, |acc, a| {
        let idx = if x.contains(a) { 2 * a - 1 } else { 2 * a - 2 };
        acc | 1 << idx
    });
    Coalition::from_bits_unchecked(2 * n, bits)
}

/// Inverse of [`embed_t`] on its image; `None` for coalitions outside it.
pub fn pull_back(z: Coalition) -> Option<Coalition> {
    let n2 = z.n();
    if !n2.is_multiple_of(2) {
        return None;
    }
    let n = n2 / 2;
    let mut x = Coalition::empty(n);
    for a in 1..=n {
        match (z.contains(2 * a), z.contains(2 * a - 1)) {
            (true, false) => x = x.with(a),
            (false, true) => {}
            _ => return None,
        }
    }
    Some(x)
}

/// `Z^a = {2a} ∪ {2b - 1 : b >= a}`.
pub fn gadget_edge(a: usize, n: usize) -> Coalition {
    assert!((1..=n).contains(&a), "player {a} outside 1..={n}");
    let odd = (a..=n).fold(0u64, |acc, b| acc | 1 << (2 * b - 2));
    Coalition::from_bits_unchecked(2 * n, odd | 1 << (2 * a - 1))
}

/// `G' = {Z^n, ..., Z^1}`.
pub fn gadget(n: usize) -> Hypergraph {
    Hypergraph::new(2 * n, (1..=n).rev().map(|a| gadget_edge(a, n))).expect("gadget edges are distinct")
}

/// Both sides of a pair pushed through `T`, each extended by the gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedPair {
    pub n: usize,
    pub hp: Hypergraph,
    pub kp: Hypergraph,
}

fn embed_with_gadget(h: &Hypergraph) -> Hypergraph {
    let n = h.n();
    let images = h.map_edges(2 * n, |x| embed_t(x, n));
    images.union(&gadget(n)).expect("same doubled ground set")
}

/// `(T(H) ∪ G', T(K) ∪ G')`.
pub fn reduce_pair(h: &Hypergraph, k: &Hypergraph) -> Result<EmbeddedPair> {
    h.check_same_ground(k)?;
    Ok(EmbeddedPair {
        n: h.n(),
        hp: embed_with_gadget(h),
        kp: embed_with_gadget(k),
    })
}

/// `T(H) ∪ G'` as constructed, to be read under the shift order.
pub fn reduce_game(h: &Hypergraph) -> Hypergraph {
    embed_with_gadget(h)
}

/// [`reduce_game`] followed by removal of shift-dominated edges.
pub fn reduce_game_minimized(h: &Hypergraph) -> RegularKernel {
    RegularKernel::new(shift_minimal_edges(&reduce_game(h))).expect("shift-minimal edges are shift-incomparable")
}

/// `lambda(H)` read off a shift-transversal kernel of `T(H) ∪ G'`: the edges
/// lying in the image of `T`, pulled back.
pub fn decode_transversal_kernel(lambda_prime: &Hypergraph) -> Hypergraph {
    let n = lambda_prime.n() / 2;
    let kept = lambda_prime.iter().filter_map(|z| pull_back(*z));
    Hypergraph::new(n, kept).expect("pull-backs live on the original ground set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::oracle::OracleLimit;
    use crate::regular::shift_leq;
    use crate::regular::shift_oracle::{
        shift_completeness_witness, shift_transversal_table, shift_winning_table,
    };

    fn c(s: &str) -> Coalition {
        s.parse().unwrap()
    }

    fn rows(h: &Hypergraph) -> Vec<String> {
        h.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(embed_t(c("1100"), 4).to_string(), "10100101");
        assert_eq!(embed_t(c("0011"), 4).to_string(), "01011010");
        assert_eq!(embed_t(c("00"), 2).to_string(), "0101");
        assert_eq!(pull_back(c("10100101")), Some(c("1100")));
        assert_eq!(pull_back(c("11000000")), None);
    }

    #[test]
    fn gadget_rows() {
        assert_eq!(rows(&gadget(4)), ["11000000", "01110000", "01011100", "01010111"]);
        assert_eq!(rows(&gadget(1)), ["11"]);
        assert_eq!(rows(&gadget(2)), ["1100", "0111"]);
    }

    #[test]
    fn example_six_table() {
        let h = families::example3(2);
        let k = families::example3_dual(2);
        let pair = reduce_pair(&h, &k).unwrap();
        let g = ["11000000", "01110000", "01011100", "01010111"];
        let mut hp = vec!["10100101", "01011010"];
        hp.extend(g);
        let mut kp = vec!["10011001", "10010110", "01101001", "01100110"];
        kp.extend(g);
        assert_eq!(rows(&pair.hp), hp);
        assert_eq!(rows(&pair.kp), kp);
        assert_eq!(families::matching_embedded(2), pair.hp);
    }

    #[test]
    fn empty_pair() {
        let e = Hypergraph::empty(1);
        let pair = reduce_pair(&e, &e).unwrap();
        assert_eq!(rows(&pair.hp), ["11"]);
        assert_eq!(pair.hp, pair.kp);
    }

    #[test]
    fn monomorphism_small() {
        for n in 1..=4 {
            for x in Coalition::all(n) {
                assert_eq!(embed_t(x, n).complement(), embed_t(x.complement(), n));
                for z in Coalition::all(n) {
                    assert_eq!(x.is_subset(z), shift_leq(embed_t(x, n), embed_t(z, n)), "{x} {z}");
                }
            }
        }
    }

    #[test]
    fn gadget_transversals_small() {
        let lim = OracleLimit::default();
        for n in 1..=3 {
            let g = gadget(n);
            let tau = shift_transversal_table(&g, lim).unwrap();
            let nu = shift_winning_table(&g, lim).unwrap();
            for z in Coalition::all(2 * n) {
                let i = z.bits() as usize;
                assert_eq!(tau[i], nu[i] || pull_back(z).is_some(), "{z}");
            }
        }
    }

    #[test]
    fn small_games_keep_strongness() {
        let lim = OracleLimit::default();
        let strong = |h: &Hypergraph| {
            let hp = reduce_game(h);
            shift_completeness_witness(&hp, &hp, lim).unwrap().is_none()
        };
        let dictator = Hypergraph::from_rows(3, &["100"]).unwrap();
        assert_eq!(reduce_game(&dictator).len(), 4);
        assert!(strong(&dictator));
        let split = Hypergraph::from_rows(4, &["1100", "0011"]).unwrap();
        assert_eq!(reduce_game(&split).len(), 6);
        assert!(!strong(&split));
    }

    #[test]
    fn minimized_reduction_keeps_the_game() {
        let h = families::example3(2);
        let full = reduce_game(&h);
        let min = reduce_game_minimized(&h);
        let lim = OracleLimit::default();
        assert_eq!(
            shift_winning_table(&full, lim).unwrap(),
            shift_winning_table(min.hypergraph(), lim).unwrap()
        );
    }
}
