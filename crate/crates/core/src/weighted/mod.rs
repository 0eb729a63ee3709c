//! Weighted, homogeneous and majority games: threshold-criterion synthesis
//! over the regular dual, non-weightedness certificates, and strongness of
//! games with power-of-two weights.

mod certificate;
pub mod lp;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use certificate::{search_nonweighted_certificate, verify_nonweighted_certificate, NonWeightedCertificate};
pub use lp::{linear_feasibility, Feasibility, LinearConstraint, LinearSystem, Relation};

use crate::coalition::Coalition;
use crate::duality;
use crate::error::Result;
use crate::game::SimpleGame;
use crate::hypergraph::Hypergraph;
use crate::regular::{self, find_regular_order, PlayerOrdering};

/// Weights `p` and quota `q`: `Z` wins iff `p(Z) >= q`.
///
/// Criteria produced here are scaled to coprime integers, so every losing
/// coalition satisfies `p(Z) <= q - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCriterion {
    pub quota: BigRational,
    /// `weights[a - 1]` is the weight of player `a`.
    pub weights: Vec<BigRational>,
}

impl ThresholdCriterion {
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, z: Coalition) -> BigRational {
        z.players()
            .map(|a| &self.weights[a - 1])
            .fold(BigRational::zero(), |acc, w| acc + w)
    }

    pub fn is_winning(&self, z: Coalition) -> bool {
        self.weight(z) >= self.quota
    }

    /// Non-negative weights and quota; `p(X) >= q` on `winners`;
    /// `p(Y) <= q - 1` on `losers`.
    pub fn satisfies(&self, winners: &Hypergraph, losers: &Hypergraph) -> bool {
        let limit = &self.quota - BigRational::one();
        !self.quota.is_negative()
            && self.weights.iter().all(|w| !w.is_negative())
            && winners.iter().all(|x| self.weight(*x) >= self.quota)
            && losers.iter().all(|y| self.weight(*y) <= limit)
    }

    /// Checks the criterion against a kernel and its maximal losers.
    pub fn realizes(&self, kernel: &Hypergraph) -> bool {
        self.n() == kernel.n() && self.satisfies(kernel, &maximal_losing_coalitions(kernel))
    }

    /// Multiplies through by the common denominator and divides by the gcd.
    fn normalized(self) -> Self {
        let all = || self.weights.iter().chain(std::iter::once(&self.quota));
        let lcm = all().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = all().map(|v| (v * &lcm).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let scale = if gcd.is_zero() { BigInt::one() } else { gcd };
        let mut vals: Vec<BigRational> = ints
            .into_iter()
            .map(|v| BigRational::from_integer(v / &scale))
            .collect();
        let quota = vals.pop().expect("quota present");
        Self {
            quota,
            weights: vals,
        }
    }
}

impl fmt::Display for ThresholdCriterion {
    /// `q=<quota> p=<p_n>,...,<p_1>`, weights in table column order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} p=", self.quota)?;
        for (i, w) in self.weights.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Maximal losing coalitions `¬(lambda(H))`, via the regular dual when the
/// kernel is linear and by sequential dualization otherwise.
pub fn maximal_losing_coalitions(h: &Hypergraph) -> Hypergraph {
    match find_regular_order(h) {
        Ok(Some(order)) => {
            let relabelled = order.relabel_all(h);
            order.restore_all(&regular::dual::maximal_losers(&relabelled))
        }
        _ => duality::transversal_kernel(&h.minimize()).complement_family(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdFailure {
    /// No player ordering makes the game regular.
    NotLinear,
    /// The threshold inequalities have no solution.
    Infeasible,
}

impl fmt::Display for ThresholdFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThresholdFailure::NotLinear => "not linear",
            ThresholdFailure::Infeasible => "threshold system infeasible",
        })
    }
}

/// Decides weightedness; on success the criterion uses the original labels.
pub fn is_weighted(g: &SimpleGame) -> std::result::Result<ThresholdCriterion, ThresholdFailure> {
    synthesize(g.kernel(), false)
}

/// As [`is_weighted`], additionally requiring `p(X) = q` on every minimal winner.
pub fn is_homogeneous(g: &SimpleGame) -> std::result::Result<ThresholdCriterion, ThresholdFailure> {
    synthesize(g.kernel(), true)
}

fn synthesize(h: &Hypergraph, homogeneous: bool) -> std::result::Result<ThresholdCriterion, ThresholdFailure> {
    let order = find_regular_order(h)
        .expect("kernel of a simple game")
        .ok_or(ThresholdFailure::NotLinear)?;
    let relabelled = order.relabel_all(h);
    let losers = regular::regular_transversal_kernel(&relabelled)
        .expect("ordering makes the kernel regular")
        .complement_family();
    let criterion = solve_threshold(&relabelled, &losers, homogeneous)
        .ok_or(ThresholdFailure::Infeasible)?;
    let criterion = restore_labels(criterion, &order);
    debug_assert!(criterion.satisfies(h, &order.restore_all(&losers)));
    Ok(criterion)
}

fn restore_labels(c: ThresholdCriterion, order: &PlayerOrdering) -> ThresholdCriterion {
    let weights = (1..=c.n())
        .map(|a| c.weights[order.rank_of(a) - 1].clone())
        .collect();
    ThresholdCriterion {
        quota: c.quota,
        weights,
    }
}

/// Variables `p_1..p_n, q`:
/// `p >= 0`, `q >= 0`, `p(X) >= q` (or `= q`) on winners, `p(Y) <= q - 1` on losers.
pub(crate) fn solve_threshold(
    winners: &Hypergraph,
    losers: &Hypergraph,
    homogeneous: bool,
) -> Option<ThresholdCriterion> {
    let n = winners.n();
    let row = |z: Coalition, quota: i64| {
        let mut c: Vec<i64> = (1..=n).map(|a| z.contains(a) as i64).collect();
        c.push(quota);
        c
    };
    let mut system = LinearSystem::new(n + 1);
    for a in 0..=n {
        let mut c = vec![0; n + 1];
        c[a] = 1;
        system.push(LinearConstraint::from_ints(&c, Relation::Ge, 0));
    }
    let rel = if homogeneous { Relation::Eq } else { Relation::Ge };
    for x in winners {
        system.push(LinearConstraint::from_ints(&row(*x, -1), rel, 0));
    }
    for y in losers {
        system.push(LinearConstraint::from_ints(&row(*y, -1), Relation::Le, -1));
    }
    match linear_feasibility(&system) {
        Feasibility::Infeasible => None,
        Feasibility::Feasible(mut x) => {
            let quota = x.pop().expect("quota variable");
            let c = ThresholdCriterion { quota, weights: x }.normalized();
            debug_assert!(c.satisfies(winners, losers));
            Some(c)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajorityClass {
    /// Weighted and decisive.
    Majority,
    /// Weighted and strong but not proper.
    SubMajority,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajorityFailure {
    NotLinear,
    NotStrong,
    Infeasible,
}

impl fmt::Display for MajorityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MajorityFailure::NotLinear => "not linear",
            MajorityFailure::NotStrong => "not strong",
            MajorityFailure::Infeasible => "threshold system infeasible",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityVerdict {
    pub class: MajorityClass,
    pub criterion: Option<ThresholdCriterion>,
    pub failure: Option<MajorityFailure>,
}

impl MajorityVerdict {
    fn neither(failure: MajorityFailure) -> Self {
        Self {
            class: MajorityClass::Neither,
            criterion: None,
            failure: Some(failure),
        }
    }

    pub fn is_majority(&self) -> bool {
        self.class == MajorityClass::Majority
    }

    /// Majority games are sub-majority games too.
    pub fn is_submajority(&self) -> bool {
        self.class != MajorityClass::Neither
    }
}

/// Linearity, regular dual, self-duality (or strongness), then the same
/// threshold system as [`is_weighted`] with losers `¬(lambda(H))`.
pub fn is_majority(g: &SimpleGame) -> MajorityVerdict {
    let h = g.kernel();
    let Some(order) = find_regular_order(h).expect("kernel of a simple game") else {
        return MajorityVerdict::neither(MajorityFailure::NotLinear);
    };
    let relabelled = order.relabel_all(h);
    let dual = regular::regular_transversal_kernel(&relabelled).expect("regular after reordering");
    let class = if dual.same_edges(&relabelled) {
        MajorityClass::Majority
    } else if dual.iter().all(|t| relabelled.responds(*t)) {
        MajorityClass::SubMajority
    } else {
        return MajorityVerdict::neither(MajorityFailure::NotStrong);
    };
    match solve_threshold(&relabelled, &dual.complement_family(), false) {
        Some(c) => MajorityVerdict {
            class,
            criterion: Some(restore_labels(c, &order)),
            failure: None,
        },
        None => MajorityVerdict::neither(MajorityFailure::Infeasible),
    }
}

/// Strongness of the game with weights `p(a) = 2^a` and quota `p(x)`.
///
/// Subset weights are distinct even numbers, so the unique maximal loser is
/// the coalition weighing `p(x) - 2`; the game is strong iff its complement
/// wins. With no players in `x` everything wins.
pub fn power_of_two_strongness(n: usize, x: Coalition) -> bool {
    assert_eq!(x.n(), n, "coalition over a different ground set");
    let weight = |z: Coalition| -> BigUint { z.players().map(|a| BigUint::one() << a).sum() };
    let quota = weight(x);
    if quota.is_zero() {
        return true;
    }
    let loser_value: BigUint = &quota - 2u32;
    let loser_bits = (1..=n).filter(|&a| loser_value.bit(a as u64));
    let loser = loser_bits.fold(Coalition::empty(n), |z, a| z.with(a));
    debug_assert_eq!(weight(loser), loser_value);
    weight(loser.complement()) >= quota
}

/// Convenience: weightedness verdict for a raw kernel.
pub fn kernel_is_weighted(h: &Hypergraph) -> Result<bool> {
    Ok(is_weighted(&SimpleGame::new(h.clone())?).is_ok())
}
