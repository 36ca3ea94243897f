//! Finite-domain constraint search over SCF tables.
//!
//! One variable per profile (or per vector of tops in the tops-only
//! restricted mode), each with a bitmask of candidate outcomes. Unanimity is
//! a unary restriction. Each pair of profiles that differ in one voter's
//! report, adjacent reports only for local strategy-proofness, carries a
//! binary relation that rules out a gain by either truthful side. Arc
//! consistency runs to a fixpoint at every node; variables are chosen by
//! fewest remaining values, ties to the lowest index, and values are tried
//! in ascending order. Exhaustion is only reported after the whole tree has
//! been refuted; running out of budget is reported as a timeout.
//!
//! Non-dictatorship is a global propagator: for every voter, some profile
//! must still be able to miss that voter's top. When only one profile can,
//! the top is removed from it.
//!
//! Non-tops-onlyness splits the search. Profiles with the same tops are
//! chained in index order; branch `k` forces chain links `0..k` equal and
//! link `k` different, so the branches are disjoint and cover every
//! non-tops-only table.

use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::domains::{self, Domain, DomainVerdict};
use crate::error::{Error, Result};
use crate::scf::{self, profile_count, ScfTable};
use crate::verdict::Verdict;

/// Largest voter count accepted by the engine.
pub const MAX_SEARCH_VOTERS: usize = 3;

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

/// Branching and value ordering, recorded in every certificate.
pub const ORDERING_ID: &str = "mrv-lowest-index/values-ascending";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Incentive {
    #[default]
    None,
    LocalSp,
    Sp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AxiomBundle {
    pub require_unanimity: bool,
    pub incentive: Incentive,
    pub require_tops_only: bool,
    pub forbid_tops_only: bool,
    pub forbid_dictatorship: bool,
    /// Search over functions of the top vector only; the found rule is
    /// expanded to full profiles.
    pub restrict_search_to_tops_only: bool,
}

impl AxiomBundle {
    /// Unanimous, strategy-proof and not dictatorial.
    pub fn non_dictatorial_sp() -> Self {
        Self {
            require_unanimity: true,
            incentive: Incentive::Sp,
            forbid_dictatorship: true,
            ..Self::default()
        }
    }

    /// Unanimous, locally strategy-proof and not dictatorial.
    pub fn non_dictatorial_lsp() -> Self {
        Self {
            incentive: Incentive::LocalSp,
            ..Self::non_dictatorial_sp()
        }
    }

    /// Unanimous, locally strategy-proof and not tops-only.
    pub fn non_tops_only_lsp() -> Self {
        Self {
            require_unanimity: true,
            incentive: Incentive::LocalSp,
            forbid_tops_only: true,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.require_tops_only && self.forbid_tops_only {
            return Err(Error::Argument("tops-onlyness cannot be both required and forbidden".into()));
        }
        if self.restrict_search_to_tops_only && self.forbid_tops_only {
            return Err(Error::Argument("a tops-only restricted search cannot forbid tops-onlyness".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_MAX_NODES,
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Value assignments tried.
    pub nodes: u64,
    /// Arc revisions performed.
    pub propagations: u64,
    /// Top-level branches entered (one unless tops-onlyness is forbidden).
    pub branches: u64,
    pub ordering: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(ScfTable),
    Exhausted,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub certificate: Certificate,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&ScfTable> {
        match &self.result {
            SearchResult::Found(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.result == SearchResult::Exhausted
    }

    pub fn is_timeout(&self) -> bool {
        self.result == SearchResult::Timeout
    }
}

struct Problem {
    n: usize,
    radix: usize,
    nvars: usize,
    strides: Vec<usize>,
    /// Per symbol: the deviations `(symbol, relation offset)`.
    dev: Vec<Vec<(usize, usize)>>,
    /// Relation rows: `rel[off + x]` is the mask of outcomes allowed at the
    /// deviation when the current profile gets `x`.
    rel: Vec<u32>,
    initial: Vec<u32>,
    /// `tops[var * n + v]`: voter `v`'s top at `var`.
    tops: Vec<u8>,
    forbid_dictatorship: bool,
}

impl Problem {
    fn build(d: &Domain, n: usize, bundle: &AxiomBundle) -> Result<Self> {
        let m = d.m();
        let full_mask = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        // symbols are preferences, or distinct tops in restricted mode
        let symbol_tops: Vec<usize> = if bundle.restrict_search_to_tops_only {
            (0..m).filter(|&a| d.top_mask() & (1 << a) != 0).collect()
        } else {
            (0..d.len()).map(|i| d.top(i)).collect()
        };
        let radix = symbol_tops.len();
        let nvars = profile_count(radix, n)?;
        let strides: Vec<usize> = (0..n).map(|v| radix.pow((n - 1 - v) as u32)).collect();

        let pair_rel = |p: usize, q: usize| -> Vec<u32> {
            let (pp, pq) = (d.pref(p), d.pref(q));
            (0..m)
                .map(|x| {
                    (0..m)
                        .filter(|&y| !(y != x && pp.beats(y, x)) && !(y != x && pq.beats(x, y)))
                        .fold(0u32, |acc, y| acc | (1 << y))
                })
                .collect()
        };
        let related = |p: usize, q: usize| match bundle.incentive {
            Incentive::None => false,
            Incentive::LocalSp => d.adjacent(p, q),
            Incentive::Sp => p != q,
        };

        let mut rel = Vec::new();
        let mut dev = vec![Vec::new(); radix];
        if bundle.incentive != Incentive::None {
            if bundle.restrict_search_to_tops_only {
                let mut by_top: HashMap<usize, Vec<usize>> = HashMap::new();
                for i in 0..d.len() {
                    by_top.entry(d.top(i)).or_default().push(i);
                }
                for (s, &a) in symbol_tops.iter().enumerate() {
                    for (t, &b) in symbol_tops.iter().enumerate() {
                        if s == t {
                            continue;
                        }
                        let mut rows = vec![full_mask; m];
                        let mut any = false;
                        for &p in &by_top[&a] {
                            for &q in &by_top[&b] {
                                if related(p, q) {
                                    any = true;
                                    for (row, r) in rows.iter_mut().zip(pair_rel(p, q)) {
                                        *row &= r;
                                    }
                                }
                            }
                        }
                        if any {
                            dev[s].push((t, rel.len()));
                            rel.extend(rows);
                        }
                    }
                }
            } else {
                for (p, out) in dev.iter_mut().enumerate() {
                    for q in 0..d.len() {
                        if related(p, q) {
                            out.push((q, rel.len()));
                            rel.extend(pair_rel(p, q));
                        }
                    }
                }
            }
        }

        let mut initial = vec![full_mask; nvars];
        let mut tops = vec![0u8; nvars * n];
        let mut digits = vec![0; n];
        for (var, dom) in initial.iter_mut().enumerate() {
            scf::decode_into(var, radix, &mut digits);
            for v in 0..n {
                tops[var * n + v] = symbol_tops[digits[v]] as u8;
            }
            let first = tops[var * n];
            if bundle.require_unanimity && tops[var * n..(var + 1) * n].iter().all(|&t| t == first) {
                *dom = 1 << first;
            }
        }
        Ok(Self {
            n,
            radix,
            nvars,
            strides,
            dev,
            rel,
            initial,
            tops,
            forbid_dictatorship: bundle.forbid_dictatorship,
        })
    }

    /// Consecutive variables with equal top vectors, in index order.
    fn chain_links(&self) -> Vec<(usize, usize)> {
        let mut last: HashMap<&[u8], usize> = HashMap::new();
        let mut links = Vec::new();
        for var in 0..self.nvars {
            let key = &self.tops[var * self.n..(var + 1) * self.n];
            if let Some(prev) = last.insert(key, var) {
                links.push((prev, var));
            }
        }
        links
    }
}

#[derive(Clone, Copy)]
enum Link {
    Eq,
    Neq,
}

struct Stats {
    nodes: u64,
    propagations: u64,
    branches: u64,
    start: Instant,
}

enum Run {
    Found(Vec<u32>),
    Exhausted,
    Timeout,
}

struct Solver<'a> {
    pb: &'a Problem,
    budget: Budget,
    dom: Vec<u32>,
    trail: Vec<(usize, u32)>,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
    links: Vec<Vec<(usize, Link)>>,
}

struct Frame {
    var: usize,
    remaining: u32,
    mark: usize,
}

impl<'a> Solver<'a> {
    fn new(pb: &'a Problem, budget: Budget, links: &[(usize, usize, Link)]) -> Self {
        let mut adj = vec![Vec::new(); pb.nvars];
        for &(x, y, kind) in links {
            adj[x].push((y, kind));
            adj[y].push((x, kind));
        }
        Self {
            pb,
            budget,
            dom: pb.initial.clone(),
            trail: Vec::new(),
            queue: VecDeque::new(),
            queued: vec![false; pb.nvars],
            links: adj,
        }
    }

    fn enqueue(&mut self, var: usize) {
        if !self.queued[var] {
            self.queued[var] = true;
            self.queue.push_back(var);
        }
    }

    /// Narrows `var` to `mask`; false on a wipe-out.
    fn narrow(&mut self, var: usize, mask: u32) -> bool {
        let new = self.dom[var] & mask;
        if new == self.dom[var] {
            return true;
        }
        if new == 0 {
            return false;
        }
        self.trail.push((var, self.dom[var]));
        self.dom[var] = new;
        self.enqueue(var);
        true
    }

    fn clear_queue(&mut self) {
        for var in self.queue.drain(..) {
            self.queued[var] = false;
        }
    }

    fn restore(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (var, old) = self.trail.pop().unwrap();
            self.dom[var] = old;
        }
    }

    fn propagate(&mut self, stats: &mut Stats) -> bool {
        let ok = self.propagate_inner(stats);
        if !ok {
            self.clear_queue();
        }
        ok
    }

    fn propagate_inner(&mut self, stats: &mut Stats) -> bool {
        let pb = self.pb;
        loop {
            while let Some(x) = self.queue.pop_front() {
                self.queued[x] = false;
                let dx = self.dom[x];
                for v in 0..pb.n {
                    let stride = pb.strides[v];
                    let s = (x / stride) % pb.radix;
                    let base = x - s * stride;
                    for &(t, off) in &pb.dev[s] {
                        let mut support = 0u32;
                        let mut bits = dx;
                        while bits != 0 {
                            support |= pb.rel[off + bits.trailing_zeros() as usize];
                            bits &= bits - 1;
                        }
                        stats.propagations += 1;
                        if !self.narrow(base + t * stride, support) {
                            return false;
                        }
                    }
                }
                for k in 0..self.links[x].len() {
                    let (y, kind) = self.links[x][k];
                    let ok = match kind {
                        Link::Eq => self.narrow(y, dx),
                        Link::Neq if dx.is_power_of_two() => self.narrow(y, !dx),
                        Link::Neq => true,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
            if !pb.forbid_dictatorship {
                return true;
            }
            let mut changed = false;
            for v in 0..pb.n {
                let mut escapes = 0;
                let mut last = 0;
                for var in 0..pb.nvars {
                    let top = 1u32 << pb.tops[var * pb.n + v];
                    if self.dom[var] & !top != 0 {
                        escapes += 1;
                        last = var;
                        if escapes > 1 {
                            break;
                        }
                    }
                }
                match escapes {
                    0 => return false,
                    1 => {
                        let top = 1u32 << pb.tops[last * pb.n + v];
                        if self.dom[last] & top != 0 {
                            self.narrow(last, !top);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (var, &d) in self.dom.iter().enumerate() {
            let size = d.count_ones();
            if size > 1 && best.map_or(true, |(b, _)| size < b) {
                best = Some((size, var));
                if size == 2 {
                    break;
                }
            }
        }
        best.map(|(_, var)| var)
    }

    fn out_of_budget(&self, stats: &Stats) -> bool {
        if stats.nodes > self.budget.max_nodes {
            return true;
        }
        match self.budget.time_limit {
            Some(limit) if stats.nodes % 1024 == 0 => stats.start.elapsed() > limit,
            _ => false,
        }
    }

    fn run(&mut self, stats: &mut Stats) -> Run {
        for var in 0..self.pb.nvars {
            self.enqueue(var);
        }
        if !self.propagate(stats) {
            return Run::Exhausted;
        }
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            match self.select() {
                None => return Run::Found(self.dom.clone()),
                Some(var) => stack.push(Frame {
                    var,
                    remaining: self.dom[var],
                    mark: self.trail.len(),
                }),
            }
            // try values until one survives propagation
            loop {
                let Some(frame) = stack.last_mut() else {
                    return Run::Exhausted;
                };
                let (var, mark) = (frame.var, frame.mark);
                if frame.remaining == 0 {
                    stack.pop();
                    self.restore(mark);
                    continue;
                }
                let bit = frame.remaining & frame.remaining.wrapping_neg();
                frame.remaining &= !bit;
                self.restore(mark);
                stats.nodes += 1;
                if self.out_of_budget(stats) {
                    return Run::Timeout;
                }
                self.narrow(var, bit);
                if self.propagate(stats) {
                    break;
                }
            }
        }
    }
}

fn check_args(d: &Domain, n: usize, bundle: &AxiomBundle, budget: &Budget) -> Result<()> {
    bundle.validate()?;
    if !(2..=MAX_SEARCH_VOTERS).contains(&n) {
        return Err(Error::Argument(format!("search supports 2 to {MAX_SEARCH_VOTERS} voters, got {n}")));
    }
    if budget.max_nodes == 0 {
        return Err(Error::Argument("node budget must be positive".into()));
    }
    profile_count(d.len(), n)?;
    Ok(())
}

fn expand(d: &Domain, n: usize, pb: &Problem, restricted: bool, dom: &[u32]) -> Result<ScfTable> {
    let value = |var: usize| dom[var].trailing_zeros() as usize;
    if !restricted {
        return ScfTable::new(d.clone(), n, (0..pb.nvars).map(value).collect());
    }
    let mut symbol_of = vec![usize::MAX; d.m()];
    let mut s = 0;
    for (a, slot) in symbol_of.iter_mut().enumerate() {
        if d.top_mask() & (1 << a) != 0 {
            *slot = s;
            s += 1;
        }
    }
    ScfTable::from_fn(d, n, |p| {
        let var = p.iter().fold(0, |acc, &i| acc * pb.radix + symbol_of[d.top(i)]);
        value(var)
    })
}

/// Checks a found table against every axiom of the bundle with the
/// table checkers.
pub fn verify_table(f: &ScfTable, bundle: &AxiomBundle) -> Result<()> {
    let mut failed = Vec::new();
    if bundle.require_unanimity && !scf::check_unanimity(f).holds() {
        failed.push("unanimity");
    }
    match bundle.incentive {
        Incentive::None => {}
        Incentive::LocalSp => {
            if !scf::check_local_sp(f).holds() {
                failed.push("local strategy-proofness");
            }
        }
        Incentive::Sp => {
            if !scf::check_sp(f).holds() {
                failed.push("strategy-proofness");
            }
        }
    }
    let tops_only = scf::check_tops_only(f).holds();
    if (bundle.require_tops_only || bundle.restrict_search_to_tops_only) && !tops_only {
        failed.push("tops-onlyness");
    }
    if bundle.forbid_tops_only && tops_only {
        failed.push("non-tops-onlyness");
    }
    if bundle.forbid_dictatorship && scf::check_dictatorship(f).is_some() {
        failed.push("non-dictatorship");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(format!("search returned a table violating {}", failed.join(", "))))
    }
}

pub fn search_scf(d: &Domain, n: usize, bundle: &AxiomBundle, budget: Budget) -> Result<SearchOutcome> {
    check_args(d, n, bundle, &budget)?;
    let pb = Problem::build(d, n, bundle)?;
    let mut stats = Stats {
        nodes: 0,
        propagations: 0,
        branches: 0,
        start: Instant::now(),
    };

    let chains = if bundle.forbid_tops_only || bundle.require_tops_only {
        pb.chain_links()
    } else {
        Vec::new()
    };
    let branch_links: Vec<Vec<(usize, usize, Link)>> = if bundle.forbid_tops_only {
        (0..chains.len())
            .map(|k| {
                let mut links: Vec<_> = chains[..k].iter().map(|&(x, y)| (x, y, Link::Eq)).collect();
                links.push((chains[k].0, chains[k].1, Link::Neq));
                links
            })
            .collect()
    } else {
        vec![chains.iter().map(|&(x, y)| (x, y, Link::Eq)).collect()]
    };

    let mut result = SearchResult::Exhausted;
    for links in &branch_links {
        stats.branches += 1;
        let mut solver = Solver::new(&pb, budget, links);
        match solver.run(&mut stats) {
            Run::Exhausted => continue,
            Run::Timeout => {
                result = SearchResult::Timeout;
                break;
            }
            Run::Found(dom) => {
                let f = expand(d, n, &pb, bundle.restrict_search_to_tops_only, &dom)?;
                verify_table(&f, bundle)?;
                result = SearchResult::Found(f);
                break;
            }
        }
    }
    Ok(SearchOutcome {
        result,
        certificate: Certificate {
            nodes: stats.nodes,
            propagations: stats.propagations,
            branches: stats.branches,
            ordering: ORDERING_ID.to_string(),
        },
    })
}

/// Three-valued membership: a search that runs out of budget decides
/// nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Holds,
    Fails,
    Undecided,
}

impl Membership {
    fn from_bool(b: bool) -> Self {
        if b {
            Membership::Holds
        } else {
            Membership::Fails
        }
    }

    fn and(self, other: Membership) -> Membership {
        use Membership::*;
        match (self, other) {
            (Fails, _) | (_, Fails) => Fails,
            (Holds, Holds) => Holds,
            _ => Undecided,
        }
    }
}

/// A property decided by searching for a counterexample: exhaustion means
/// the property holds, a found table refutes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchDecision {
    pub status: Membership,
    pub counterexample: Option<ScfTable>,
    pub bundle: AxiomBundle,
    pub certificate: Certificate,
}

fn decide(d: &Domain, n: usize, bundle: AxiomBundle, budget: Budget) -> Result<SearchDecision> {
    let out = search_scf(d, n, &bundle, budget)?;
    let (status, counterexample) = match out.result {
        SearchResult::Exhausted => (Membership::Holds, None),
        SearchResult::Found(f) => (Membership::Fails, Some(f)),
        SearchResult::Timeout => (Membership::Undecided, None),
    };
    Ok(SearchDecision {
        status,
        counterexample,
        bundle,
        certificate: out.certificate,
    })
}

/// Every unanimous, locally strategy-proof rule on `d^n` is tops-only.
pub fn is_l_tops_only(d: &Domain, n: usize, budget: Budget) -> Result<SearchDecision> {
    decide(d, n, AxiomBundle::non_tops_only_lsp(), budget)
}

/// Every unanimous, locally strategy-proof rule on `d^n` is dictatorial.
pub fn is_locally_dictatorial(d: &Domain, n: usize, budget: Budget) -> Result<SearchDecision> {
    decide(d, n, AxiomBundle::non_dictatorial_lsp(), budget)
}

/// Every unanimous, strategy-proof rule on `d^n` is dictatorial.
pub fn is_dictatorial(d: &Domain, n: usize, budget: Budget) -> Result<SearchDecision> {
    decide(d, n, AxiomBundle::non_dictatorial_sp(), budget)
}

/// Region membership of a domain. The domain classes are taken over
/// minimally rich domains, so `cdn` and `l_tops_only` membership below
/// include minimal richness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    pub minimally_rich: DomainVerdict,
    pub connected: DomainVerdict,
    pub cdn: DomainVerdict,
    pub property_p: DomainVerdict,
    pub scd: DomainVerdict,
    pub disagreement: DomainVerdict,
    /// Search for a unanimous, locally strategy-proof, non-tops-only rule.
    pub l_tops_only: SearchDecision,
    /// Search for a unanimous, locally strategy-proof, non-dictatorial rule.
    pub ldict: SearchDecision,
    /// Search for a unanimous, strategy-proof, non-dictatorial rule.
    pub dict: SearchDecision,
    pub cdn_member: Membership,
    pub l_tops_only_member: Membership,
    pub ldict_member: Membership,
    pub dict_member: Membership,
    /// Local dictatorship read off as CDN and L-tops-only together.
    pub ldict_by_intersection: Membership,
    /// Whether the intersection agrees with the direct search; `None` when
    /// either side is undecided.
    pub intersection_agrees: Option<bool>,
    /// CDN domains whose L-tops-only status is open at this budget.
    pub conjecture_relevant: bool,
}

pub fn classify_domain(d: &Domain, n: usize, budget: Budget) -> Result<Classification> {
    domains::require_three(d)?;
    let minimally_rich = domains::is_minimally_rich(d);
    let rich = minimally_rich.holds();
    let cdn = domains::is_cdn(d)?;
    let l_tops_only = is_l_tops_only(d, n, budget)?;
    let ldict = is_locally_dictatorial(d, n, budget)?;
    let dict = is_dictatorial(d, n, budget)?;

    let rich_m = Membership::from_bool(rich);
    let cdn_member = rich_m.and(Membership::from_bool(cdn.holds()));
    let l_tops_only_member = rich_m.and(l_tops_only.status);
    let ldict_member = rich_m.and(ldict.status);
    let dict_member = rich_m.and(dict.status);
    let ldict_by_intersection = cdn_member.and(l_tops_only_member);
    let intersection_agrees = match (ldict_by_intersection, ldict_member) {
        (Membership::Undecided, _) | (_, Membership::Undecided) => None,
        (a, b) => Some(a == b),
    };
    Ok(Classification {
        n,
        connected: domains::is_connected(d),
        property_p: domains::satisfies_property_p(d),
        scd: domains::satisfies_scd(d),
        disagreement: domains::satisfies_disagreement(d),
        minimally_rich,
        conjecture_relevant: cdn_member == Membership::Holds && l_tops_only.status == Membership::Undecided,
        cdn,
        l_tops_only,
        ldict,
        dict,
        cdn_member,
        l_tops_only_member,
        ldict_member,
        dict_member,
        ldict_by_intersection,
        intersection_agrees,
    })
}

impl Classification {
    /// Verdicts that are plain domain properties, by report name.
    pub fn domain_verdicts(&self) -> [(&'static str, &DomainVerdict); 6] {
        [
            ("minimally_rich", &self.minimally_rich),
            ("connected", &self.connected),
            ("cdn", &self.cdn),
            ("property_p", &self.property_p),
            ("scd", &self.scd),
            ("disagreement", &self.disagreement),
        ]
    }
}

impl From<&DomainVerdict> for Membership {
    fn from(v: &DomainVerdict) -> Self {
        Membership::from_bool(matches!(v, Verdict::Holds))
    }
}
