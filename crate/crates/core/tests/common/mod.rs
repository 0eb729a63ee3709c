//! Generators and brute-force reference answers shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use simplegames::oracle::{self, OracleLimit};
use simplegames::regular::shift_oracle::shift_winning_table;
use simplegames::weighted::{linear_feasibility, Feasibility, LinearConstraint, LinearSystem, Relation};
use simplegames::{Coalition, Hypergraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A coalition where each player joins with probability `p`.
pub fn random_coalition(rng: &mut impl Rng, n: usize, p: f64) -> Coalition {
    let bits = (0..n).filter(|_| rng.gen_bool(p)).fold(0u64, |acc, i| acc | 1 << i);
    Coalition::new(n, bits).unwrap()
}

/// Up to `max_edges` random coalitions of varying density, minimized.
pub fn random_antichain(rng: &mut impl Rng, n: usize, max_edges: usize) -> Hypergraph {
    let k = rng.gen_range(0..=max_edges);
    let p = rng.gen_range(0.15..0.85);
    let edges: Vec<Coalition> = (0..k).map(|_| random_coalition(rng, n, p)).collect();
    Hypergraph::new(n, edges).unwrap().minimize()
}

/// Inclusion kernel of the regular game generated by a few random
/// coalitions under the shift order.
pub fn random_regular_kernel(rng: &mut impl Rng, n: usize) -> Hypergraph {
    let k = rng.gen_range(1..=4);
    let p = rng.gen_range(0.2..0.8);
    let gens: Vec<Coalition> = (0..k).map(|_| random_coalition(rng, n, p)).collect();
    let gens = Hypergraph::new(n, gens).unwrap();
    let table = shift_winning_table(&gens, OracleLimit(n.max(1))).unwrap();
    oracle::table_kernel(n, &table)
}

/// A weighted game from random integer weights and quota, as
/// `(weights, quota, kernel)`; the kernel is read off the full table.
pub fn random_weighted(rng: &mut impl Rng, n: usize) -> (Vec<u64>, u64, Hypergraph) {
    let top = rng.gen_range(1..=20);
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=top)).collect();
    let total: u64 = weights.iter().sum();
    let quota = rng.gen_range(0..=total + 1);
    let table: Vec<bool> = (0..1u64 << n)
        .map(|z| (0..n).filter(|i| z >> i & 1 == 1).map(|i| weights[i]).sum::<u64>() >= quota)
        .collect();
    (weights, quota, oracle::table_kernel(n, &table))
}

/// Antichains over `1..=max_n` players built from up to `max_edges` raw bit
/// patterns; shrinks towards fewer, smaller edges.
pub fn antichain_strategy(max_n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(any::<u64>(), 0..=max_edges).prop_map(move |raw| {
            let edges = raw.into_iter().map(|b| Coalition::new(n, b & mask(n)).unwrap());
            Hypergraph::new(n, edges).unwrap().minimize()
        })
    })
}

/// Pairs of antichains over the same ground set.
pub fn antichain_pair_strategy(max_n: usize, max_edges: usize) -> impl Strategy<Value = (Hypergraph, Hypergraph)> {
    (1..=max_n).prop_flat_map(move |n| {
        let side = move || {
            prop::collection::vec(any::<u64>(), 0..=max_edges).prop_map(move |raw| {
                let edges = raw.into_iter().map(|b| Coalition::new(n, b & mask(n)).unwrap());
                Hypergraph::new(n, edges).unwrap().minimize()
            })
        };
        (side(), side())
    })
}

/// Regular kernels over `1..=max_n` players.
pub fn regular_strategy(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_regular_kernel(&mut rng(seed), n))
}

/// Every antichain over `n` players, in DFS order.
pub fn all_antichains(n: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    simplegames::census::for_each_antichain(n, |h| out.push(h.clone())).unwrap();
    out
}

pub fn table(h: &Hypergraph) -> Vec<bool> {
    oracle::winning_table(h, OracleLimit(h.n().max(1))).unwrap()
}

/// Maximal members of the complement of an upward-closed table.
pub fn table_maximal_losers(n: usize, table: &[bool]) -> Vec<Coalition> {
    (0..table.len())
        .filter(|&z| !table[z] && (0..n).all(|a| z >> a & 1 == 1 || table[z | 1 << a]))
        .map(|z| Coalition::new(n, z as u64).unwrap())
        .collect()
}

/// Brute completeness: every `Z` has `Z` winning in `H` or `A \ Z` winning in `K`.
pub fn brute_complete(h: &Hypergraph, k: &Hypergraph) -> bool {
    let (th, tk) = (table(h), table(k));
    let full = tk.len() - 1;
    (0..=full).all(|z| th[z] || tk[full ^ z])
}

/// Brute coherence: no winner of `H` is disjoint from a winner of `K`.
pub fn brute_coherent(h: &Hypergraph, k: &Hypergraph) -> bool {
    let (th, tk) = (table(h), table(k));
    let full = tk.len() - 1;
    (0..=full).all(|z| !(th[z] && tk[full ^ z]))
}

/// Every increasing shift of a winner wins: drop `b`, add a higher `a`.
pub fn brute_regular(n: usize, table: &[bool]) -> bool {
    (0..table.len()).all(|z| {
        !table[z]
            || (0..n).all(|b| {
                z >> b & 1 == 0 || (b + 1..n).all(|a| z >> a & 1 == 1 || table[z ^ 1 << b | 1 << a])
            })
    })
}

/// Desirability: `i` at least as strong as `j` when swapping `j` for `i`
/// never turns a winner into a loser. Linear iff this is total.
pub fn brute_linear(n: usize, table: &[bool]) -> bool {
    let at_least = |i: usize, j: usize| {
        (0..table.len()).all(|z| {
            let (bi, bj) = (1 << i, 1 << j);
            // Z contains j but not i: Z - j + i must win whenever Z wins
            z & bj == 0 || z & bi != 0 || !table[z] || table[z ^ bj ^ bi]
        })
    };
    (0..n).all(|i| (i + 1..n).all(|j| at_least(i, j) || at_least(j, i)))
}

/// Weightedness from the full table: threshold inequalities on every minimal
/// winner and maximal loser, decided by the exact LP.
pub fn brute_weighted(n: usize, table: &[bool]) -> bool {
    if !brute_linear(n, table) {
        return false;
    }
    let winners = oracle::table_kernel(n, table);
    let losers = table_maximal_losers(n, table);
    // variables p_1..p_n, q
    let mut sys = LinearSystem::new(n + 1);
    let row = |z: Coalition, q: i64| -> Vec<i64> {
        let mut c: Vec<i64> = (1..=n).map(|a| z.contains(a) as i64).collect();
        c.push(q);
        c
    };
    for x in &winners {
        sys.push(LinearConstraint::from_ints(&row(*x, -1), Relation::Ge, 0));
    }
    for y in &losers {
        sys.push(LinearConstraint::from_ints(&row(*y, -1), Relation::Le, -1));
    }
    for a in 0..=n {
        let mut c = vec![0i64; n + 1];
        c[a] = 1;
        sys.push(LinearConstraint::from_ints(&c, Relation::Ge, 0));
    }
    matches!(linear_feasibility(&sys), Feasibility::Feasible(_))
}
