//! Named instances: fixed tables and parametric families.

use crate::coalition::{full_mask, Coalition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::reduction;

fn table(n: usize, rows: &[&str]) -> Hypergraph {
    Hypergraph::from_rows(n, rows).expect("well-formed fixture")
}

/// Lines of the Fano plane as a 7-player kernel.
pub fn fano() -> Hypergraph {
    table(
        7,
        &["0000111", "0011010", "0101100", "0110001", "1001001", "1010100", "1100010"],
    )
}

/// A non-minimal three-edge family over three players.
pub fn example1() -> Hypergraph {
    table(3, &["011", "100", "111"])
}

/// Disjoint pairs `{2i, 2i-1}` for `i = m..1`; the dual has `2^m` edges.
pub fn example3(m: usize) -> Hypergraph {
    let edges = (1..=m)
        .rev()
        .map(|i| Coalition::from_bits_unchecked(2 * m, 0b11 << (2 * i - 2)));
    Hypergraph::new(2 * m, edges).expect("pairs over 2m players")
}

/// The dual of [`example3`]: one player from each pair.
pub fn example3_dual(m: usize) -> Hypergraph {
    let n = 2 * m;
    let edges = (0..1u64 << m).rev().map(|choice| {
        let bits = (0..m).fold(0u64, |acc, i| {
            let low = if choice >> i & 1 == 1 { 2 * i + 1 } else { 2 * i };
            acc | 1 << low
        });
        Coalition::from_bits_unchecked(n, bits)
    });
    Hypergraph::new(n, edges).expect("choices over 2m players")
}

/// A regular, decisive, non-weighted nine-player game.
pub fn example4() -> Hypergraph {
    table(
        9,
        &[
            "011011011",
            "011011101",
            "011011110",
            "011100100",
            "011101000",
            "011110000",
            "100011100",
            "100100011",
            "100100101",
            "100100110",
            "100101000",
            "100110000",
            "101000000",
            "110000000",
        ],
    )
}

/// Shift-minimal winning coalitions of [`example4`].
pub fn example5() -> Hypergraph {
    table(
        9,
        &["011011011", "011100100", "100011100", "100100011", "100101000", "101000000"],
    )
}

/// All `m`-subsets of `2m` players, in increasing bit order.
///
/// Every one is minimal winning, but only the bottom `m` players form a
/// shift-minimal one.
pub fn gamma(m: usize) -> Hypergraph {
    let n = 2 * m;
    let edges = (0..=full_mask(n))
        .filter(|b| b.count_ones() as usize == m)
        .map(|b| Coalition::from_bits_unchecked(n, b));
    Hypergraph::new(n, edges).expect("subsets over 2m players")
}

/// [`example3`] pushed through the doubling embedding, gadget included.
pub fn matching_embedded(m: usize) -> Hypergraph {
    reduction::reduce_game(&example3(m))
}

pub const FAMILY_NAMES: &[&str] = &[
    "fano",
    "example1",
    "example3",
    "example4",
    "example5",
    "gamma",
    "matching-embedded",
];

/// Looks up a family by name; `m` is ignored by the fixed tables.
pub fn family(name: &str, m: usize) -> Result<Hypergraph> {
    Ok(match name {
        "fano" => fano(),
        "example1" => example1(),
        "example3" => example3(m),
        "example4" => example4(),
        "example5" => example5(),
        "gamma" => gamma(m),
        "matching-embedded" => matching_embedded(m),
        _ => return Err(Error::UnknownFamily(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example3_rows() {
        let h = example3(2);
        let rows: Vec<String> = h.iter().map(|x| x.to_string()).collect();
        assert_eq!(rows, ["1100", "0011"]);
        let k = example3_dual(2);
        let rows: Vec<String> = k.iter().map(|x| x.to_string()).collect();
        assert_eq!(rows, ["1010", "1001", "0110", "0101"]);
    }

    #[test]
    fn gamma_sizes() {
        assert_eq!(gamma(3).len(), 20);
        assert_eq!(gamma(1).len(), 2);
        assert!(gamma(4).iter().all(|x| x.len() == 4));
    }

    #[test]
    fn fixtures_are_antichains() {
        for h in [fano(), example4(), example5(), example3(4), gamma(3)] {
            assert!(h.is_antichain());
        }
        assert!(!example1().is_antichain());
    }

    #[test]
    fn lookup() {
        assert_eq!(family("fano", 0).unwrap(), fano());
        assert_eq!(family("matching-embedded", 2).unwrap().len(), 6);
        assert!(matches!(family("petersen", 1), Err(Error::UnknownFamily(_))));
    }
}
