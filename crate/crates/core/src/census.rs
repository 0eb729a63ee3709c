//! Exhaustive censuses of small games.
//!
//! Up to six players every antichain of coalitions is enumerated; a game's
//! winning family then fits in one `u64` indexed by coalition bits. Larger
//! ground sets are only reachable for regular decisive games, which are
//! enumerated directly as self-dual up-sets of the shift order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;

use crate::coalition::Coalition;
use crate::duality;
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::hypergraph::Hypergraph;
use crate::regular::find_regular_order;
use crate::weighted;

/// Largest ground set for the all-antichain census.
pub const MAX_CENSUS_PLAYERS: usize = 6;

/// Largest ground set for the regular decisive census.
pub const MAX_LONG_CENSUS_PLAYERS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Proper,
    Strong,
    Decisive,
    Regular,
    Linear,
    Weighted,
    Homogeneous,
    Majority,
    Submajority,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Proper,
        Property::Strong,
        Property::Decisive,
        Property::Regular,
        Property::Linear,
        Property::Weighted,
        Property::Homogeneous,
        Property::Majority,
        Property::Submajority,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Proper => "proper",
            Property::Strong => "strong",
            Property::Decisive => "decisive",
            Property::Regular => "regular",
            Property::Linear => "linear",
            Property::Weighted => "weighted",
            Property::Homogeneous => "homogeneous",
            Property::Majority => "majority",
            Property::Submajority => "submajority",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Filter(format!("unknown property `{s}`")))
    }
}

/// Boolean combination of properties: `!`, `&`, `|` and parentheses,
/// with `!` binding tightest and `&` before `|`. `all` matches everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    Is(Property),
    Not(Box<Filter>),
    And(Box<Filter>, Box<Filter>),
    Or(Box<Filter>, Box<Filter>),
}

impl Filter {
    /// Evaluates left to right, short-circuiting, so expensive properties
    /// are only asked for when needed.
    pub fn eval(&self, ask: &mut impl FnMut(Property) -> bool) -> bool {
        match self {
            Filter::All => true,
            Filter::Is(p) => ask(*p),
            Filter::Not(f) => !f.eval(ask),
            Filter::And(a, b) => a.eval(ask) && b.eval(ask),
            Filter::Or(a, b) => a.eval(ask) || b.eval(ask),
        }
    }

    pub fn properties(&self) -> BTreeSet<Property> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Filter::All => {}
                Filter::Is(p) => {
                    out.insert(*p);
                }
                Filter::Not(a) => stack.push(a),
                Filter::And(a, b) | Filter::Or(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Word(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '!' => {
                chars.next();
                out.push(Token::Not);
            }
            '&' => {
                chars.next();
                out.push(Token::And);
            }
            '|' => {
                chars.next();
                out.push(Token::Or);
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            c if c.is_ascii_alphabetic() => {
                let mut w = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                        w.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Word(w.to_ascii_lowercase()));
            }
            c => return Err(Error::Filter(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn or(&mut self) -> Result<Filter> {
        let mut left = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            left = Filter::Or(Box::new(left), Box::new(self.and()?));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Filter> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            left = Filter::And(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Filter> {
        match self.next() {
            Some(Token::Not) => Ok(Filter::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let inner = self.or()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::Filter("missing `)`".into())),
                }
            }
            Some(Token::Word(w)) if w == "all" => Ok(Filter::All),
            Some(Token::Word(w)) => Ok(Filter::Is(w.parse()?)),
            Some(t) => Err(Error::Filter(format!("unexpected {t:?}"))),
            None => Err(Error::Filter("unexpected end of expression".into())),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Ok(Filter::All);
        }
        let mut p = Parser { tokens, pos: 0 };
        let f = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Filter(format!("trailing input after token {}", p.pos)));
        }
        Ok(f)
    }
}

/// Coalition-indexed masks for one ground set of at most six players.
struct Lattice {
    n: usize,
    size: usize,
    all: u64,
    /// Coalitions comparable with `s` under inclusion.
    comparable: Vec<u64>,
    /// Supersets of `s`.
    up: Vec<u64>,
    /// For player `b`: coalitions holding `b` but not `b + 1`.
    shiftable: Vec<u64>,
}

impl Lattice {
    fn new(n: usize) -> Self {
        assert!(n <= MAX_CENSUS_PLAYERS);
        let size = 1usize << n;
        let all = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        let mut up = vec![0u64; size];
        let mut down = vec![0u64; size];
        #[allow(clippy::needless_range_loop)]
        for s in 0..size {
            for t in 0..size {
                if s & t == s {
                    up[s] |= 1 << t;
                    down[t] |= 1 << s;
                }
            }
        }
        let comparable = (0..size).map(|s| up[s] | down[s]).collect();
        let shiftable = (1..n)
            .map(|b| {
                (0..size)
                    .filter(|s| s >> (b - 1) & 1 == 1 && s >> b & 1 == 0)
                    .fold(0u64, |m, s| m | 1 << s)
            })
            .collect();
        Self {
            n,
            size,
            all,
            comparable,
            up,
            shiftable,
        }
    }

    /// Winning mask with coalition `s` moved to position `A \ s`.
    fn complement_mask(&self, w: u64) -> u64 {
        w.reverse_bits() >> (64 - self.size)
    }

    fn proper(&self, w: u64) -> bool {
        w & self.complement_mask(w) == 0
    }

    fn strong(&self, w: u64) -> bool {
        (w | self.complement_mask(w)) & self.all == self.all
    }

    /// Closed under every shift `b -> b + 1`.
    fn regular(&self, w: u64) -> bool {
        self.shiftable
            .iter()
            .enumerate()
            .all(|(i, m)| ((w & m) << (1u32 << i)) & !w == 0)
    }

    fn kernel(&self, chosen: u64) -> Hypergraph {
        let n = self.n;
        let edges = (0..self.size)
            .filter(|s| chosen >> s & 1 == 1)
            .map(|s| Coalition::from_bits_unchecked(n, s as u64));
        Hypergraph::new(n, edges).expect("coalitions over n players")
    }
}

/// Calls `f(chosen, winning)` for every antichain, as coalition-indexed
/// masks, in depth-first order over increasing coalition bits.
fn for_each_antichain_mask(lat: &Lattice, f: &mut impl FnMut(u64, u64)) {
    fn go(lat: &Lattice, start: usize, chosen: u64, blocked: u64, win: u64, f: &mut impl FnMut(u64, u64)) {
        f(chosen, win);
        for s in start..lat.size {
            if blocked >> s & 1 == 0 {
                go(lat, s + 1, chosen | 1 << s, blocked | lat.comparable[s], win | lat.up[s], f);
            }
        }
    }
    go(lat, 0, 0, 0, 0, f);
}

/// Every antichain over `n <= 6` players, each exactly once, in a fixed order.
pub fn for_each_antichain(n: usize, mut f: impl FnMut(&Hypergraph)) -> Result<()> {
    if n > MAX_CENSUS_PLAYERS {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: MAX_CENSUS_PLAYERS,
        });
    }
    let lat = Lattice::new(n);
    for_each_antichain_mask(&lat, &mut |chosen, _| f(&lat.kernel(chosen)));
    Ok(())
}

/// Number of antichains; `Some` for `n <= 6`.
pub fn count_antichains(n: usize) -> Option<u64> {
    if n > MAX_CENSUS_PLAYERS {
        return None;
    }
    let lat = Lattice::new(n);
    let mut count = 0;
    for_each_antichain_mask(&lat, &mut |_, _| count += 1);
    Some(count)
}

/// Lazily computed verdicts for one kernel.
pub struct Verdicts<'a> {
    kernel: &'a Hypergraph,
    cheap: Option<[bool; 3]>,
    cache: BTreeMap<Property, bool>,
}

impl<'a> Verdicts<'a> {
    pub fn new(kernel: &'a Hypergraph) -> Self {
        Self {
            kernel,
            cheap: None,
            cache: BTreeMap::new(),
        }
    }

    fn with_masks(kernel: &'a Hypergraph, proper: bool, strong: bool, regular: bool) -> Self {
        Self {
            kernel,
            cheap: Some([proper, strong, regular]),
            cache: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, p: Property) -> bool {
        if let Some(&v) = self.cache.get(&p) {
            return v;
        }
        let v = self.compute(p);
        self.cache.insert(p, v);
        v
    }

    fn compute(&mut self, p: Property) -> bool {
        let h = self.kernel;
        let game = || SimpleGame::new(h.clone()).expect("antichain");
        match (p, self.cheap) {
            (Property::Proper, Some(c)) => c[0],
            (Property::Strong, Some(c)) => c[1],
            (Property::Regular, Some(c)) => c[2],
            (Property::Proper, None) => duality::game_is_proper(&game()),
            (Property::Strong, None) => duality::game_is_strong(&game()),
            (Property::Regular, None) => crate::regular::is_regular(h).expect("antichain"),
            (Property::Decisive, _) => self.get(Property::Proper) && self.get(Property::Strong),
            (Property::Linear, _) => self.get(Property::Regular) || find_regular_order(h).expect("antichain").is_some(),
            (Property::Weighted, _) => self.get(Property::Linear) && weighted::is_weighted(&game()).is_ok(),
            (Property::Homogeneous, _) => self.get(Property::Weighted) && weighted::is_homogeneous(&game()).is_ok(),
            (Property::Majority, _) => self.get(Property::Decisive) && self.get(Property::Submajority),
            (Property::Submajority, _) => self.get(Property::Strong) && self.get(Property::Weighted),
        }
    }
}

/// Counts from one census run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub n: usize,
    pub antichains: u64,
    pub matching: u64,
    /// Matching kernels keyed by which of proper, strong, regular hold.
    pub by_class: BTreeMap<(bool, bool, bool), u64>,
}

impl CensusCounts {
    pub fn to_kv(&self) -> String {
        let mut s = format!("n={}\nantichains={}\nmatching={}\n", self.n, self.antichains, self.matching);
        for ((p, st, r), c) in &self.by_class {
            s += &format!("class.proper={p}.strong={st}.regular={r}={c}\n");
        }
        s
    }
}

/// Runs `filter` over every antichain on `n <= 6` players, passing matching
/// kernels to `sink` in enumeration order.
pub fn census(n: usize, filter: &Filter, mut sink: impl FnMut(&Hypergraph)) -> Result<CensusCounts> {
    if n > MAX_CENSUS_PLAYERS {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: MAX_CENSUS_PLAYERS,
        });
    }
    let lat = Lattice::new(n);
    let mut counts = CensusCounts {
        n,
        ..CensusCounts::default()
    };
    for_each_antichain_mask(&lat, &mut |chosen, win| {
        counts.antichains += 1;
        let cheap = (lat.proper(win), lat.strong(win), lat.regular(win));
        let kernel = lat.kernel(chosen);
        let mut v = Verdicts::with_masks(&kernel, cheap.0, cheap.1, cheap.2);
        if filter.eval(&mut |p| v.get(p)) {
            counts.matching += 1;
            *counts.by_class.entry(cheap).or_default() += 1;
            sink(&kernel);
        }
    });
    Ok(counts)
}

/// Regular decisive games on a fixed player order, counted three ways.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SelfDualCounts {
    /// Games regular in the given order; each linear game up to relabelling
    /// appears exactly once.
    pub fixed_order: u64,
    /// Distinct labelled games over `A` that are linear and decisive.
    pub labeled: u128,
    /// The weighted ones among `fixed_order` (majority games).
    pub majority_fixed_order: u64,
    pub majority_labeled: u128,
}

impl SelfDualCounts {
    fn add(&mut self, o: &SelfDualCounts) {
        self.fixed_order += o.fixed_order;
        self.labeled += o.labeled;
        self.majority_fixed_order += o.majority_fixed_order;
        self.majority_labeled += o.majority_labeled;
    }

    pub fn to_kv(&self, n: usize) -> String {
        format!(
            "n={n}\nregular_decisive.fixed_order={}\nregular_decisive.up_to_reordering={}\nregular_decisive.labeled={}\n\
             majority.fixed_order={}\nmajority.up_to_reordering={}\nmajority.labeled={}\n",
            self.fixed_order,
            self.fixed_order,
            self.labeled,
            self.majority_fixed_order,
            self.majority_fixed_order,
            self.majority_labeled
        )
    }
}

const UNSET: u8 = 0;
const WIN: u8 = 1;
const LOSE: u8 = 2;

/// Partial self-dual assignment closed under the shift order.
#[derive(Clone)]
struct ShiftState {
    n: usize,
    full: usize,
    state: Vec<u8>,
    trail: Vec<usize>,
}

impl ShiftState {
    fn new(n: usize) -> Self {
        Self {
            n,
            full: (1 << n) - 1,
            state: vec![UNSET; 1 << n],
            trail: Vec::new(),
        }
    }

    /// Immediate shift successors: add player 1, or move a member up by one.
    fn successors(&self, z: usize) -> impl Iterator<Item = usize> + '_ {
        let add = (z & 1 == 0).then_some(z | 1);
        let moves = (1..self.n).filter_map(move |i| {
            let (lo, hi) = (1usize << (i - 1), 1usize << i);
            (z & lo != 0 && z & hi == 0).then_some(z & !lo | hi)
        });
        add.into_iter().chain(moves)
    }

    /// Makes `z` and everything above it win, their complements lose.
    /// Returns `false` on conflict; the trail records every change.
    fn make_winning(&mut self, z: usize) -> bool {
        let mut stack = vec![z];
        while let Some(s) = stack.pop() {
            match self.state[s] {
                WIN => continue,
                LOSE => return false,
                _ => {}
            }
            let c = self.full ^ s;
            if self.state[c] == WIN {
                return false;
            }
            self.state[s] = WIN;
            self.state[c] = LOSE;
            self.trail.push(s);
            stack.extend(self.successors(s));
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let s = self.trail.pop().expect("trail above mark");
            self.state[s] = UNSET;
            self.state[self.full ^ s] = UNSET;
        }
    }

    fn winning(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.full).filter(|&s| self.state[s] == WIN)
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Tallies one complete assignment.
fn tally(st: &ShiftState, with_majority: bool) -> SelfDualCounts {
    let n = st.n;
    let win = |s: usize| st.state[s] == WIN;
    // players b and b + 1 are interchangeable when swapping them never
    // turns a loser into a winner (the other direction is regularity)
    let mut classes = Vec::new();
    let mut run = 1;
    for b in 1..n {
        let (lo, hi) = (1usize << (b - 1), 1usize << b);
        let symmetric = (0..=st.full).all(|s| s & hi == 0 || s & lo != 0 || !win(s) || win(s & !hi | lo));
        if symmetric {
            run += 1;
        } else {
            classes.push(run);
            run = 1;
        }
    }
    classes.push(run);
    let labeled = factorial(n) / classes.iter().map(|&c| factorial(c)).product::<u128>();
    let mut out = SelfDualCounts {
        fixed_order: 1,
        labeled,
        ..SelfDualCounts::default()
    };
    if with_majority {
        let minimal = st
            .winning()
            .filter(|&s| (0..n).all(|a| s >> a & 1 == 0 || !win(s & !(1 << a))))
            .map(|s| Coalition::from_bits_unchecked(n, s as u64));
        let kernel = Hypergraph::new(n, minimal).expect("coalitions over n players");
        let game = SimpleGame::new(kernel).expect("minimal winners form an antichain");
        if weighted::is_weighted(&game).is_ok() {
            out.majority_fixed_order = 1;
            out.majority_labeled = labeled;
        }
    }
    out
}

/// Coalitions `z < A \ z` in the order pairs are decided: balanced sizes
/// first, where propagation prunes most.
fn pair_order(n: usize) -> Vec<usize> {
    let full = (1usize << n) - 1;
    let mut reps: Vec<usize> = (0..=full).filter(|&z| z < full ^ z).collect();
    reps.sort_by_key(|&z| {
        let k = z.count_ones() as i64;
        ((2 * k - n as i64).abs(), z)
    });
    reps
}

fn search(st: &mut ShiftState, order: &[usize], i: usize, with_majority: bool, acc: &mut SelfDualCounts) {
    let Some(pos) = (i..order.len()).find(|&j| st.state[order[j]] == UNSET) else {
        acc.add(&tally(st, with_majority));
        return;
    };
    let z = order[pos];
    for pick in [z, st.full ^ z] {
        let mark = st.trail.len();
        if st.make_winning(pick) {
            search(st, order, pos + 1, with_majority, acc);
        }
        st.undo_to(mark);
    }
}

/// A subtree of the search: the picks made for the first `depth` pairs.
#[derive(Clone, Debug)]
struct Shard {
    picks: Vec<usize>,
    next: usize,
}

fn shards(n: usize, order: &[usize], depth: usize) -> Vec<Shard> {
    fn go(st: &mut ShiftState, order: &[usize], i: usize, depth: usize, picks: &mut Vec<usize>, out: &mut Vec<Shard>) {
        let next = (i..order.len()).find(|&j| st.state[order[j]] == UNSET);
        match next {
            Some(pos) if picks.len() < depth => {
                let z = order[pos];
                for pick in [z, st.full ^ z] {
                    let mark = st.trail.len();
                    if st.make_winning(pick) {
                        picks.push(pick);
                        go(st, order, pos + 1, depth, picks, out);
                        picks.pop();
                    }
                    st.undo_to(mark);
                }
            }
            _ => out.push(Shard {
                picks: picks.clone(),
                next: i,
            }),
        }
    }
    let mut out = Vec::new();
    go(&mut ShiftState::new(n), order, 0, depth, &mut Vec::new(), &mut out);
    out
}

fn run_shard(n: usize, order: &[usize], shard: &Shard, with_majority: bool) -> SelfDualCounts {
    let mut st = ShiftState::new(n);
    for &p in &shard.picks {
        assert!(st.make_winning(p), "shard prefix replays without conflict");
    }
    let mut acc = SelfDualCounts::default();
    search(&mut st, order, shard.next, with_majority, &mut acc);
    acc
}

#[derive(Clone, Debug)]
pub struct LongCensusOptions {
    /// Test each game for weightedness (one exact LP per game).
    pub with_majority: bool,
    /// Resume from and append to this file.
    pub checkpoint: Option<std::path::PathBuf>,
    pub threads: usize,
}

impl Default for LongCensusOptions {
    fn default() -> Self {
        Self {
            with_majority: true,
            checkpoint: None,
            threads: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

fn read_checkpoint(path: &Path, n: usize, with_majority: bool) -> Result<BTreeMap<usize, SelfDualCounts>> {
    let mut done = BTreeMap::new();
    let Ok(file) = File::open(path) else {
        return Ok(done);
    };
    let bad = |line: usize, m: &str| Error::Parse {
        line,
        message: format!("checkpoint: {m}"),
    };
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| bad(i + 1, &e.to_string()))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["census", nn, mj] => {
                if *nn != n.to_string() || *mj != with_majority.to_string() {
                    return Err(bad(i + 1, "written for a different run"));
                }
            }
            ["shard", id, a, b, c, d] => {
                let p = |s: &str| s.parse::<u128>().map_err(|_| bad(i + 1, "bad number"));
                let counts = SelfDualCounts {
                    fixed_order: p(a)? as u64,
                    labeled: p(b)?,
                    majority_fixed_order: p(c)? as u64,
                    majority_labeled: p(d)?,
                };
                done.insert(p(id)? as usize, counts);
            }
            [] => {}
            _ => return Err(bad(i + 1, "unrecognised line")),
        }
    }
    Ok(done)
}

/// Regular decisive games over `n` players in the fixed order `n > ... > 1`.
///
/// Enumerates self-dual up-sets of the shift order by deciding one
/// complementary pair at a time. Work is split into shards that run on
/// worker threads; with a checkpoint, finished shards are appended to the
/// file and skipped on the next run. Results do not depend on scheduling.
pub fn regular_decisive_census(n: usize, opts: &LongCensusOptions) -> Result<SelfDualCounts> {
    if n == 0 || n > MAX_LONG_CENSUS_PLAYERS {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: MAX_LONG_CENSUS_PLAYERS,
        });
    }
    let order = pair_order(n);
    let shard_list = shards(n, &order, if n <= 5 { 0 } else { n + 3 });
    let mut done = match &opts.checkpoint {
        Some(p) => read_checkpoint(p, n, opts.with_majority)?,
        None => BTreeMap::new(),
    };
    let writer = match &opts.checkpoint {
        Some(p) => {
            let fresh = !p.exists();
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .map_err(|e| Error::Parse {
                    line: 0,
                    message: format!("checkpoint: {e}"),
                })?;
            if fresh {
                writeln!(f, "census {n} {}", opts.with_majority).ok();
            }
            Some(Mutex::new(f))
        }
        None => None,
    };
    let todo: Vec<usize> = (0..shard_list.len()).filter(|i| !done.contains_key(i)).collect();
    let next = Mutex::new(0usize);
    let results = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..opts.threads.max(1) {
            scope.spawn(|| loop {
                let idx = {
                    let mut g = next.lock().expect("queue lock");
                    let Some(&i) = todo.get(*g) else { break };
                    *g += 1;
                    i
                };
                let c = run_shard(n, &order, &shard_list[idx], opts.with_majority);
                if let Some(w) = &writer {
                    let mut f = w.lock().expect("checkpoint lock");
                    writeln!(
                        f,
                        "shard {idx} {} {} {} {}",
                        c.fixed_order, c.labeled, c.majority_fixed_order, c.majority_labeled
                    )
                    .ok();
                    f.flush().ok();
                }
                results.lock().expect("results lock").push((idx, c));
            });
        }
    });
    done.extend(results.into_inner().expect("results lock"));
    let mut total = SelfDualCounts::default();
    for c in done.values() {
        total.add(c);
    }
    Ok(total)
}
