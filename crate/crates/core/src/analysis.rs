//! One-shot analysis of a game file: every verdict, its witnesses, and a
//! re-check of everything reported.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::census::Property;
use crate::coalition::{full_mask, Coalition};
use crate::duality::{self, find_disjoint_pair, is_dual_pair};
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::hypergraph::Hypergraph;
use crate::io;
use crate::oracle::{self, OracleLimit};
use crate::regular::{
    self, find_regular_order, regularity_violation, shift_minimal_edges, shift_oracle, PlayerOrdering,
    RegularKernel, ShiftViolation,
};
use crate::weighted::{
    self, search_nonweighted_certificate, verify_nonweighted_certificate, NonWeightedCertificate,
    ThresholdCriterion, ThresholdFailure,
};

/// How input rows are read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Rows are the minimal winning coalitions.
    #[default]
    Simple,
    /// Rows are the shift-minimal winning coalitions.
    Regular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub mode: Mode,
    /// Search for a non-weightedness certificate when the game is not weighted.
    pub certify: bool,
    pub emit_dual: bool,
    pub emit_shift_kernel: bool,
    /// Accept rows that are not an antichain and minimize them first.
    pub raw: bool,
    pub oracle_limit: OracleLimit,
    /// Cap on multiplicity vectors tried per side during certificate search.
    pub certificate_budget: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Simple,
            certify: false,
            emit_dual: false,
            emit_shift_kernel: false,
            raw: false,
            oracle_limit: OracleLimit::default(),
            certificate_budget: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub mode: Mode,
    pub n: usize,
    /// Minimal winning coalitions the verdicts refer to.
    pub kernel: Hypergraph,
    pub proper: bool,
    pub strong: bool,
    pub decisive: bool,
    pub regular: bool,
    pub linear: bool,
    pub weighted: bool,
    pub homogeneous: bool,
    pub majority: bool,
    pub submajority: bool,
    /// Two disjoint minimal winners.
    pub properness_witness: Option<(Coalition, Coalition)>,
    /// A losing coalition whose complement also loses.
    pub strongness_witness: Option<Coalition>,
    pub regularity_witness: Option<ShiftViolation>,
    /// A player order under which the game is regular.
    pub ordering: Option<PlayerOrdering>,
    pub criterion: Option<ThresholdCriterion>,
    pub weighted_failure: Option<ThresholdFailure>,
    pub homogeneous_criterion: Option<ThresholdCriterion>,
    pub certificate: Option<NonWeightedCertificate>,
    /// `|A| * |mu(W)|`.
    pub kappa: usize,
    /// `|A| * |mu'(W)|`, for regular games.
    pub kappa_prime: Option<usize>,
    pub dual: Option<Hypergraph>,
    pub shift_kernel: Option<Hypergraph>,
    pub timings: Vec<(&'static str, Duration)>,
}

struct Clock(Vec<(&'static str, Duration)>);

impl Clock {
    fn time<T>(&mut self, label: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push((label, start.elapsed()));
        out
    }
}

const MAX_CERTIFICATE_TOTAL: u64 = 32;

/// Largest total whose composition count stays within `budget`.
fn certificate_total(k: usize, budget: u64) -> u64 {
    let mut total = 0u64;
    let mut count = 1u128;
    while total < MAX_CERTIFICATE_TOTAL {
        // C(k + t - 1, t) from C(k + t - 2, t - 1)
        let t = total as u128 + 1;
        count = count * (k as u128 + t - 1) / t;
        if count > budget as u128 {
            return total;
        }
        total += 1;
    }
    total
}

/// The kernel a file describes under the given options.
pub fn interpret(rows: &Hypergraph, opts: &AnalyzeOptions) -> Result<(Hypergraph, Option<Hypergraph>)> {
    match opts.mode {
        Mode::Simple => {
            if opts.raw {
                Ok((rows.minimize(), None))
            } else {
                rows.require_antichain()?;
                Ok((rows.clone(), None))
            }
        }
        Mode::Regular => {
            let shift_kernel = if opts.raw {
                shift_minimal_edges(rows)
            } else {
                RegularKernel::new(rows.clone())?.into_hypergraph()
            };
            let table = shift_oracle::shift_winning_table(&shift_kernel, opts.oracle_limit)?;
            Ok((oracle::table_kernel(rows.n(), &table), Some(shift_kernel)))
        }
    }
}

pub fn analyze(rows: &Hypergraph, opts: &AnalyzeOptions) -> Result<Report> {
    let mut clock = Clock(Vec::new());
    let (kernel, given_shift_kernel) = clock.time("interpret", || interpret(rows, opts))?;
    let n = kernel.n();
    let game = SimpleGame::new(kernel.clone())?;

    let properness_witness = clock.time("proper", || find_disjoint_pair(&kernel, &kernel))?;
    let strongness_witness = clock.time("strong", || duality::game_strongness_witness(&game));
    let proper = properness_witness.is_none();
    let strong = strongness_witness.is_none();

    let regularity_witness = clock.time("regular", || regularity_violation(&kernel))?;
    let regular = regularity_witness.is_none();
    let ordering = clock.time("linear", || find_regular_order(&kernel))?;
    let linear = ordering.is_some();

    let weighted_verdict = clock.time("weighted", || weighted::is_weighted(&game));
    let (criterion, weighted_failure) = match weighted_verdict {
        Ok(c) => (Some(c), None),
        Err(f) => (None, Some(f)),
    };
    let homogeneous_criterion = if criterion.is_some() {
        clock.time("homogeneous", || weighted::is_homogeneous(&game)).ok()
    } else {
        None
    };
    let majority = clock.time("majority", || weighted::is_majority(&game));

    let certificate = if opts.certify && criterion.is_none() {
        clock.time("certificate", || {
            let max_total = certificate_total(kernel.len(), opts.certificate_budget);
            search_nonweighted_certificate(&kernel, max_total)
        })
    } else {
        None
    };

    let dual = if opts.emit_dual {
        Some(clock.time("dual", || match &ordering {
            Some(order) => regular::linear_transversal_kernel(&kernel, order).expect("order makes the kernel regular"),
            None => duality::transversal_kernel(&kernel),
        }))
    } else {
        None
    };

    let shift_kernel = match given_shift_kernel {
        Some(hp) => Some(hp),
        None if regular => Some(clock.time("shift kernel", || shift_minimal_edges(&kernel))),
        None => None,
    };
    let kappa_prime = shift_kernel.as_ref().map(Hypergraph::size);

    let report = Report {
        mode: opts.mode,
        n,
        kappa: kernel.size(),
        kappa_prime,
        proper,
        strong,
        decisive: proper && strong,
        regular,
        linear,
        weighted: criterion.is_some(),
        homogeneous: homogeneous_criterion.is_some(),
        majority: majority.is_majority(),
        submajority: majority.is_submajority(),
        properness_witness,
        strongness_witness,
        regularity_witness,
        ordering,
        criterion,
        weighted_failure,
        homogeneous_criterion,
        certificate,
        dual,
        shift_kernel: if opts.emit_shift_kernel || opts.mode == Mode::Regular {
            shift_kernel
        } else {
            None
        },
        kernel,
        timings: Vec::new(),
    };
    clock.time("verify", || report.verify())?;
    Ok(Report {
        timings: clock.0,
        ..report
    })
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistent(what.to_string()))
    }
}

impl Report {
    /// Verdict implications and independent re-checks of every witness,
    /// criterion, certificate and emitted kernel.
    pub fn verify(&self) -> Result<()> {
        let h = &self.kernel;
        check(self.decisive == (self.proper && self.strong), "decisive <=> proper and strong")?;
        check(!self.majority || (self.weighted && self.decisive), "majority => weighted and decisive")?;
        check(!self.submajority || (self.weighted && self.strong), "submajority => weighted and strong")?;
        check(!self.weighted || self.linear, "weighted => linear")?;
        check(!self.regular || self.linear, "regular => linear")?;
        check(!self.homogeneous || self.weighted, "homogeneous => weighted")?;

        if let Some((x, y)) = self.properness_witness {
            check(h.contains_edge(x) && h.contains_edge(y) && !x.intersects(y), "properness witness")?;
        }
        if let Some(z) = self.strongness_witness {
            check(!h.responds(z) && !h.responds(z.complement()), "strongness witness")?;
        }
        if let Some(v) = self.regularity_witness {
            check(h.contains_edge(v.edge) && v.added > v.removed && !h.responds(v.shifted()), "regularity witness")?;
        }
        if let Some(order) = &self.ordering {
            check(regular::is_regular(&order.relabel_all(h))?, "regularizing order")?;
        }
        for c in self.criterion.iter().chain(&self.homogeneous_criterion) {
            check(c.realizes(h), "threshold criterion")?;
        }
        if let Some(c) = &self.homogeneous_criterion {
            check(h.iter().all(|x| c.weight(*x) == c.quota), "homogeneous criterion")?;
        }
        if let Some(c) = &self.certificate {
            check(!self.weighted && verify_nonweighted_certificate(h, c)?, "non-weightedness certificate")?;
        }
        if let Some(d) = &self.dual {
            check(is_dual_pair(h, d)?.is_dual() && d.is_antichain(), "dual kernel")?;
        }
        if let Some(hp) = &self.shift_kernel {
            let within = hp.iter().all(|x| h.contains_edge(*x));
            let covers = h.iter().all(|x| regular::shift_responds(hp, *x));
            check(within && covers, "shift kernel")?;
        }
        Ok(())
    }

    pub fn verdict(&self, p: Property) -> bool {
        match p {
            Property::Proper => self.proper,
            Property::Strong => self.strong,
            Property::Decisive => self.decisive,
            Property::Regular => self.regular,
            Property::Linear => self.linear,
            Property::Weighted => self.weighted,
            Property::Homogeneous => self.homogeneous,
            Property::Majority => self.majority,
            Property::Submajority => self.submajority,
        }
    }

    fn verdicts(&self) -> [(&'static str, bool); 9] {
        [
            ("proper", self.proper),
            ("strong", self.strong),
            ("decisive", self.decisive),
            ("regular", self.regular),
            ("linear", self.linear),
            ("weighted", self.weighted),
            ("homogeneous", self.homogeneous),
            ("majority", self.majority),
            ("submajority", self.submajority),
        ]
    }

    fn details(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        if let Some((x, y)) = self.properness_witness {
            out.push(("disjoint_winners", format!("{x},{y}")));
        }
        if let Some(z) = self.strongness_witness {
            out.push(("complementary_losers", format!("{z},{}", z.complement())));
        }
        if let Some(v) = self.regularity_witness {
            out.push(("losing_shift", format!("{},{},{}", v.edge, v.removed, v.added)));
        }
        if let Some(o) = &self.ordering {
            if !o.is_identity() {
                let ranks: Vec<String> = (1..=self.n).rev().map(|a| o.rank_of(a).to_string()).collect();
                out.push(("ranks", ranks.join(",")));
            }
        }
        if let Some(c) = &self.criterion {
            out.push(("criterion", c.to_string()));
        }
        if let Some(f) = self.weighted_failure {
            out.push(("weighted_failure", f.to_string()));
        }
        if let Some(c) = &self.homogeneous_criterion {
            out.push(("homogeneous_criterion", c.to_string()));
        }
        if let Some(c) = &self.certificate {
            let u: Vec<String> = c.u.iter().map(u64::to_string).collect();
            let up: Vec<String> = c.u_prime.iter().map(u64::to_string).collect();
            out.push(("certificate_u", u.join(",")));
            out.push(("certificate_u_prime", up.join(",")));
            let cols: Vec<String> = c.winner_columns(&self.kernel).iter().rev().map(u64::to_string).collect();
            out.push(("certificate_columns", cols.join(",")));
            out.push(("certificate_total", c.total().to_string()));
        }
        out
    }

    /// Line-oriented `key=value` output with stable field names.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let mode = match self.mode {
            Mode::Simple => "simple",
            Mode::Regular => "regular",
        };
        let _ = writeln!(s, "mode={mode}");
        let _ = writeln!(s, "players={}", self.n);
        let _ = writeln!(s, "minimal_winning={}", self.kernel.len());
        let _ = writeln!(s, "kappa={}", self.kappa);
        if let Some(k) = self.kappa_prime {
            let _ = writeln!(s, "kappa_prime={k}");
        }
        for (k, v) in self.verdicts() {
            let _ = writeln!(s, "{k}={v}");
        }
        for (k, v) in self.details() {
            let _ = writeln!(s, "{k}={v}");
        }
        let rows = |h: &Hypergraph| h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if let Some(d) = &self.dual {
            let _ = writeln!(s, "dual={}", rows(d));
        }
        if let Some(hp) = &self.shift_kernel {
            let _ = writeln!(s, "shift_kernel={}", rows(hp));
        }
        for (label, t) in &self.timings {
            let _ = writeln!(s, "time.{}={:.6}", label.replace(' ', "_"), t.as_secs_f64());
        }
        s
    }

    /// Aligned human-readable table; emitted kernels follow as game files.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let mut row = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(s, "{k:<24}{v}");
        };
        row("players", &self.n);
        row("minimal winning", &self.kernel.len());
        row("kappa", &self.kappa);
        if let Some(k) = self.kappa_prime {
            row("kappa'", &k);
        }
        for (k, v) in self.verdicts() {
            row(k, &v);
        }
        for (k, v) in self.details() {
            row(&k.replace('_', " "), &v);
        }
        let total: Duration = self.timings.iter().map(|(_, t)| *t).sum();
        row("time", &format!("{:.3} ms", total.as_secs_f64() * 1e3));
        if let Some(d) = &self.dual {
            s.push_str(&io::serialize_with_comments(d, &["dual kernel"]));
        }
        if let Some(hp) = &self.shift_kernel {
            s.push_str(&io::serialize_with_comments(hp, &["shift kernel"]));
        }
        s
    }
}

/// One property checked both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub property: &'static str,
    pub fast: bool,
    pub brute: bool,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.fast == self.brute
    }
}

/// Compares properness, strongness, decisiveness and the dual kernel with
/// exhaustive scans over all `2^n` coalitions.
pub fn oracle_cross_check(kernel: &Hypergraph, limit: OracleLimit) -> Result<Vec<CrossCheck>> {
    let game = SimpleGame::new(kernel.clone())?;
    let brute = oracle::oracle_properties(kernel, limit)?;
    let fast_dual = duality::transversal_kernel(kernel);
    let brute_dual = oracle::brute_transversal_kernel(kernel, limit)?;
    let win = oracle::winning_table(kernel, limit)?;
    let full = full_mask(kernel.n()) as usize;
    let brute_regular = (0..=full).all(|z| {
        !win[z] || (1..kernel.n()).all(|b| z >> (b - 1) & 1 == 0 || z >> b & 1 == 1 || win[z ^ (0b11 << (b - 1))])
    });
    Ok(vec![
        CrossCheck {
            property: "proper",
            fast: duality::game_is_proper(&game),
            brute: brute.proper,
        },
        CrossCheck {
            property: "strong",
            fast: duality::game_is_strong(&game),
            brute: brute.strong,
        },
        CrossCheck {
            property: "decisive",
            fast: duality::game_is_decisive(&game),
            brute: brute.decisive,
        },
        CrossCheck {
            property: "regular",
            fast: regular::is_regular(kernel)?,
            brute: brute_regular,
        },
        CrossCheck {
            property: "dual",
            fast: true,
            brute: fast_dual.same_edges(&brute_dual),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn fano_report() {
        let r = analyze(&families::fano(), &AnalyzeOptions::default()).unwrap();
        assert!(r.proper && r.strong && r.decisive);
        assert!(!r.regular && !r.linear && !r.weighted && !r.majority);
        assert_eq!(r.kappa, 49);
        assert_eq!(r.kappa_prime, None);
    }

    #[test]
    fn example_four_report() {
        let opts = AnalyzeOptions {
            certify: true,
            emit_dual: true,
            emit_shift_kernel: true,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&families::example4(), &opts).unwrap();
        assert!(r.regular && r.decisive && !r.weighted && !r.majority);
        assert_eq!(r.shift_kernel.as_ref().unwrap(), &families::example5());
        assert!(r.dual.as_ref().unwrap().same_edges(&families::example4()));
        let c = r.certificate.as_ref().unwrap();
        assert!(c.total() <= 4);
        assert!(r.to_kv().contains(&format!("certificate_total={}", c.total())));
        assert_eq!(r.kappa_prime, Some(54));
        assert!(r.to_kv().contains("\nweighted=false\n"));
    }

    #[test]
    fn regular_mode_expands_the_shift_kernel() {
        let opts = AnalyzeOptions {
            mode: Mode::Regular,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&families::example5(), &opts).unwrap();
        assert!(r.kernel.same_edges(&families::example4()));
        assert!(r.regular && r.decisive);
        let g = Hypergraph::from_rows(6, &["000111"]).unwrap();
        let r = analyze(&g, &opts).unwrap();
        assert_eq!(r.kernel.len(), 20);
        assert_eq!((r.kappa, r.kappa_prime), (120, Some(6)));
    }

    #[test]
    fn raw_rows_are_minimized() {
        let h = families::example1();
        assert!(matches!(analyze(&h, &AnalyzeOptions::default()), Err(Error::NotAntichain { .. })));
        let opts = AnalyzeOptions {
            raw: true,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&h, &opts).unwrap();
        assert_eq!(r.kernel.len(), 2);
        assert!(r.weighted);
    }

    #[test]
    fn tampered_reports_are_rejected() {
        let mut r = analyze(&families::fano(), &AnalyzeOptions::default()).unwrap();
        r.majority = true;
        assert!(matches!(r.verify(), Err(Error::Inconsistent(_))));
        let mut r = analyze(&families::example3(2), &AnalyzeOptions::default()).unwrap();
        r.strongness_witness = Some(Coalition::full(4));
        assert!(r.verify().is_err());
    }

    #[test]
    fn cross_check_agrees() {
        for h in [families::fano(), families::example4(), families::example3(3)] {
            for c in oracle_cross_check(&h, OracleLimit::default()).unwrap() {
                assert!(c.agrees(), "{:?}", c);
            }
        }
    }

    #[test]
    fn certificate_budget() {
        assert_eq!(certificate_total(14, 2380), 4);
        assert_eq!(certificate_total(14, 2379), 3);
        assert_eq!(certificate_total(1, 5), MAX_CERTIFICATE_TOTAL);
    }
}
