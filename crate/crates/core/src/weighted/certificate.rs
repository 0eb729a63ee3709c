use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Multiplicities `u` over kernel edges and `u'` over their complements.
///
/// With equal totals, the `u`-weighted winners use each player at most as
/// often as the `u'`-weighted complements do. When those complements all
/// lose, no weights can separate the two sides, so the game is not
/// weighted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonWeightedCertificate {
    pub u: Vec<u64>,
    pub u_prime: Vec<u64>,
}

impl NonWeightedCertificate {
    pub fn total(&self) -> u64 {
        self.u.iter().sum()
    }

    /// Per-player use counts `u · H` (index `a - 1`).
    pub fn winner_columns(&self, h: &Hypergraph) -> Vec<u64> {
        column_sums(h, &self.u, false)
    }

    /// Per-player use counts `u' · ¬(H)` (index `a - 1`).
    pub fn complement_columns(&self, h: &Hypergraph) -> Vec<u64> {
        column_sums(h, &self.u_prime, true)
    }
}

fn column_sums(h: &Hypergraph, mult: &[u64], complemented: bool) -> Vec<u64> {
    let mut sums = vec![0; h.n()];
    for (x, &m) in h.iter().zip(mult) {
        if m == 0 {
            continue;
        }
        for (a, s) in sums.iter_mut().enumerate() {
            if x.contains(a + 1) != complemented {
                *s += m;
            }
        }
    }
    sums
}

impl fmt::Display for NonWeightedCertificate {
    /// Two whitespace-separated rows aligned with the kernel edges.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "{}", row(&self.u))?;
        writeln!(f, "{}", row(&self.u_prime))
    }
}

impl FromStr for NonWeightedCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<(usize, &str)> = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if rows.len() != 2 {
            return Err(Error::Parse {
                line: rows.get(2).map_or(0, |r| r.0),
                message: format!("expected two multiplicity rows, found {}", rows.len()),
            });
        }
        let parse_row = |(line, text): (usize, &str)| {
            text.split_whitespace()
                .map(|t| {
                    t.parse::<u64>().map_err(|_| Error::Parse {
                        line,
                        message: format!("invalid multiplicity {t:?}"),
                    })
                })
                .collect::<Result<Vec<u64>>>()
        };
        Ok(Self {
            u: parse_row(rows[0])?,
            u_prime: parse_row(rows[1])?,
        })
    }
}

/// Checks that `c` witnesses non-weightedness of `nu(H)`.
///
/// Requires equal totals, `u · H <= u' · ¬(H)` componentwise, and that every
/// complement used by `u'` is losing. The last condition holds automatically
/// in proper games; without it, non-proper weighted games such as
/// `{{1}, {2}}` would admit certificates.
pub fn verify_nonweighted_certificate(h: &Hypergraph, c: &NonWeightedCertificate) -> Result<bool> {
    for v in [&c.u, &c.u_prime] {
        if v.len() != h.len() {
            return Err(Error::DimensionMismatch {
                expected: h.len(),
                got: v.len(),
            });
        }
    }
    let total = c.total();
    let total_prime: u64 = c.u_prime.iter().sum();
    if total == 0 && total_prime == 0 {
        return Err(Error::EmptyCertificate);
    }
    if total != total_prime {
        return Ok(false);
    }
    let complements_lose = h
        .iter()
        .zip(&c.u_prime)
        .all(|(x, &m)| m == 0 || !h.responds(x.complement()));
    if !complements_lose {
        return Ok(false);
    }
    let lhs = c.winner_columns(h);
    let rhs = c.complement_columns(h);
    Ok(lhs.iter().zip(&rhs).all(|(l, r)| l <= r))
}

/// All multiplicity vectors over `k` slots with the given total, first slot
/// heaviest first.
fn compositions(k: usize, total: u64) -> Vec<Vec<u64>> {
    fn go(k: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for take in (0..=left).rev() {
            cur.push(take);
            go(k, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(k, total, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Exhaustive search over certificates of total at most `max_total`, in
/// order of increasing total; returns the first verified one.
pub fn search_nonweighted_certificate(h: &Hypergraph, max_total: u64) -> Option<NonWeightedCertificate> {
    let k = h.len();
    if k == 0 {
        return None;
    }
    let losing: Vec<bool> = h.iter().map(|x| !h.responds(x.complement())).collect();
    for total in 1..=max_total {
        let sides: Vec<(Vec<u64>, Vec<u64>)> = compositions(k, total)
            .into_iter()
            .filter(|u| u.iter().zip(&losing).all(|(&m, &l)| m == 0 || l))
            .map(|u| {
                let cols = column_sums(h, &u, true);
                (u, cols)
            })
            .collect();
        if sides.is_empty() {
            continue;
        }
        for u in compositions(k, total) {
            let cols = column_sums(h, &u, false);
            if let Some((u_prime, _)) = sides
                .iter()
                .find(|(_, rhs)| cols.iter().zip(rhs).all(|(l, r)| l <= r))
            {
                let c = NonWeightedCertificate {
                    u,
                    u_prime: u_prime.clone(),
                };
                debug_assert_eq!(verify_nonweighted_certificate(h, &c), Ok(true));
                return Some(c);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn four_row_u() -> Vec<u64> {
        vec![1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0]
    }

    #[test]
    fn example_four_certificate() {
        let h = families::example4();
        let c = NonWeightedCertificate {
            u: four_row_u(),
            u_prime: four_row_u(),
        };
        assert_eq!(verify_nonweighted_certificate(&h, &c), Ok(true));
        assert_eq!(c.winner_columns(&h), vec![2; 9]);
        assert_eq!(c.total(), 4);
    }

    #[test]
    fn malformed_certificates() {
        let h = families::example4();
        let short = NonWeightedCertificate {
            u: vec![1],
            u_prime: vec![1],
        };
        assert!(matches!(
            verify_nonweighted_certificate(&h, &short),
            Err(Error::DimensionMismatch { expected: 14, got: 1 })
        ));
        let zero = NonWeightedCertificate {
            u: vec![0; 14],
            u_prime: vec![0; 14],
        };
        assert_eq!(verify_nonweighted_certificate(&h, &zero), Err(Error::EmptyCertificate));
        let mut uneven = NonWeightedCertificate {
            u: four_row_u(),
            u_prime: four_row_u(),
        };
        uneven.u_prime[0] = 2;
        assert_eq!(verify_nonweighted_certificate(&h, &uneven), Ok(false));
    }

    #[test]
    fn weighted_games_have_no_certificate() {
        let dictator = Hypergraph::from_rows(3, &["100"]).unwrap();
        assert_eq!(search_nonweighted_certificate(&dictator, 6), None);
        let c = NonWeightedCertificate {
            u: vec![1],
            u_prime: vec![1],
        };
        assert_eq!(verify_nonweighted_certificate(&dictator, &c), Ok(false));
        let h = Hypergraph::from_rows(3, &["110", "101"]).unwrap();
        assert_eq!(search_nonweighted_certificate(&h, 6), None);
        // not proper, weighted: complements of winners win
        let either = Hypergraph::from_rows(2, &["10", "01"]).unwrap();
        assert_eq!(search_nonweighted_certificate(&either, 6), None);
    }

    #[test]
    fn search_finds_example_four_witness() {
        let h = families::example4();
        let c = search_nonweighted_certificate(&h, 4).expect("certificate of total 4 exists");
        assert_eq!(verify_nonweighted_certificate(&h, &c), Ok(true));
        assert_eq!(c.total(), 2);
        // rows 1 + 4 against the complements of rows 7 + 8: half of the
        // four-row witness where all four rows sum to 2 on every player
        assert_eq!(
            c.to_string(),
            "1 0 0 1 0 0 0 0 0 0 0 0 0 0\n0 0 0 0 0 0 1 1 0 0 0 0 0 0\n"
        );
    }

    #[test]
    fn text_round_trip() {
        let c = NonWeightedCertificate {
            u: four_row_u(),
            u_prime: four_row_u(),
        };
        let text = c.to_string();
        assert_eq!(text.lines().next().unwrap(), "1 0 0 1 0 0 1 1 0 0 0 0 0 0");
        assert_eq!(text.parse::<NonWeightedCertificate>().unwrap(), c);
        assert!("1 2\n".parse::<NonWeightedCertificate>().is_err());
        assert!("1 x\n1 0\n".parse::<NonWeightedCertificate>().is_err());
    }
}
