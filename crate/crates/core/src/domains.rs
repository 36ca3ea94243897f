//! Preference domains and their structural properties.
//!
//! Every decider returns a [`DomainVerdict`]; a failure carries a
//! [`DomainWitness`] whose [`DomainWitness::confirms`] re-evaluates the
//! defining condition on the witness alone.
//!
//! Preference indices are 0-based throughout the library. Text output
//! elsewhere prints them 1-based as `P1, P2, ...`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::{Alt, AlternativeSet, LinearOrder};
use crate::verdict::Verdict;

/// Index of a preference inside a [`Domain`].
pub type PrefIdx = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    alts: AlternativeSet,
    prefs: Vec<LinearOrder>,
    adjacent: Vec<bool>,
    neighbours: Vec<Vec<PrefIdx>>,
}

impl Domain {
    /// Builds a domain; duplicate orders are rejected rather than merged.
    pub fn new(alts: AlternativeSet, orders: Vec<LinearOrder>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let m = alts.len();
        let mut seen: HashMap<&LinearOrder, PrefIdx> = HashMap::new();
        for (i, p) in orders.iter().enumerate() {
            if p.m() != m {
                return Err(Error::MismatchedAlternatives {
                    left: m,
                    right: p.m(),
                });
            }
            if let Some(&j) = seen.get(p) {
                return Err(Error::DuplicatePreference {
                    first: j + 1,
                    second: i + 1,
                });
            }
            seen.insert(p, i);
        }
        let len = orders.len();
        let mut adjacent = vec![false; len * len];
        let mut neighbours = vec![Vec::new(); len];
        for i in 0..len {
            for j in i + 1..len {
                if orders[i].swapped_position(&orders[j]).is_some() {
                    adjacent[i * len + j] = true;
                    adjacent[j * len + i] = true;
                    neighbours[i].push(j);
                    neighbours[j].push(i);
                }
            }
        }
        for list in &mut neighbours {
            list.sort_unstable();
        }
        Ok(Self {
            alts,
            prefs: orders,
            adjacent,
            neighbours,
        })
    }

    pub fn alts(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn m(&self) -> usize {
        self.alts.len()
    }

    /// Number of preferences.
    pub fn len(&self) -> usize {
        self.prefs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefs.is_empty()
    }

    pub fn prefs(&self) -> &[LinearOrder] {
        &self.prefs
    }

    pub fn pref(&self, i: PrefIdx) -> &LinearOrder {
        &self.prefs[i]
    }

    pub fn top(&self, i: PrefIdx) -> Alt {
        self.prefs[i].top()
    }

    #[inline]
    pub fn adjacent(&self, i: PrefIdx, j: PrefIdx) -> bool {
        self.adjacent[i * self.prefs.len() + j]
    }

    /// Preferences adjacent to `i`, ascending.
    pub fn adjacent_to(&self, i: PrefIdx) -> &[PrefIdx] {
        &self.neighbours[i]
    }

    /// All adjacent pairs `(i, j)` with `i < j`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (PrefIdx, PrefIdx)> + '_ {
        (0..self.len()).flat_map(move |i| {
            self.neighbours[i]
                .iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn index_of(&self, order: &LinearOrder) -> Option<PrefIdx> {
        self.prefs.iter().position(|p| p == order)
    }

    pub(crate) fn check_index(&self, i: PrefIdx) -> Result<()> {
        if i >= self.len() {
            return Err(Error::UnknownPreference {
                index: i,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_alt(&self, a: Alt) -> Result<()> {
        if a >= self.m() {
            return Err(Error::UnknownAlternative {
                index: a,
                m: self.m(),
            });
        }
        Ok(())
    }

    /// Alternatives that are top-ranked somewhere, as a bit mask.
    pub fn top_mask(&self) -> u32 {
        self.prefs.iter().fold(0, |acc, p| acc | (1 << p.top()))
    }

    /// The sub-domain on the given preference indices, in the given order.
    pub fn subdomain(&self, indices: &[PrefIdx]) -> Result<Domain> {
        let mut orders = Vec::with_capacity(indices.len());
        for &i in indices {
            self.check_index(i)?;
            orders.push(self.prefs[i].clone());
        }
        Domain::new(self.alts.clone(), orders)
    }
}

/// A sequence of distinct preferences, consecutive entries adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefPath(Vec<PrefIdx>);

impl PrefPath {
    pub fn new(d: &Domain, indices: Vec<PrefIdx>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Argument("a path needs at least one preference".into()));
        }
        let mut seen = vec![false; d.len()];
        for &i in &indices {
            d.check_index(i)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Argument(format!(
                    "path visits P{} twice",
                    i + 1
                )));
            }
        }
        for w in indices.windows(2) {
            if !d.adjacent(w[0], w[1]) {
                return Err(Error::Argument(format!(
                    "P{} and P{} are not adjacent",
                    w[0] + 1,
                    w[1] + 1
                )));
            }
        }
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[PrefIdx] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn start(&self) -> PrefIdx {
        self.0[0]
    }

    pub fn end(&self) -> PrefIdx {
        *self.0.last().expect("non-empty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DomainWitness {
    /// `alternative` is top-ranked by no preference.
    NeverTop { alternative: Alt },
    /// `first` and `second` lie in different components of the partition.
    Disconnected {
        first: PrefIdx,
        second: PrefIdx,
        components: Vec<Vec<PrefIdx>>,
    },
    /// The top-connected closure of `preference` has neighbours with fewer
    /// than two distinct tops.
    SingleTopNeighbours {
        preference: PrefIdx,
        closure: Vec<PrefIdx>,
        neighbour_tops: Vec<Alt>,
    },
    /// Every path from `from` to `to` restores the ranking of `a` and `b`.
    Restoration {
        from: PrefIdx,
        to: PrefIdx,
        a: Alt,
        b: Alt,
    },
    /// The adjacent pair `first ~ second` swaps tops `a` and `b`, and no
    /// preference with top outside `{a, b}` ranks `over` above `under`.
    Disagreement {
        first: PrefIdx,
        second: PrefIdx,
        over: Alt,
        under: Alt,
    },
}

pub type DomainVerdict = Verdict<DomainWitness>;

impl DomainWitness {
    /// Re-validates the failure using only the witness and the domain.
    pub fn confirms(&self, d: &Domain) -> bool {
        match self {
            DomainWitness::NeverTop { alternative } => {
                *alternative < d.m() && d.prefs().iter().all(|p| p.top() != *alternative)
            }
            DomainWitness::Disconnected {
                first,
                second,
                components,
            } => confirms_partition(d, *first, *second, components),
            DomainWitness::SingleTopNeighbours {
                preference,
                closure,
                neighbour_tops,
            } => confirms_single_top(d, *preference, closure, neighbour_tops),
            DomainWitness::Restoration { from, to, a, b } => {
                *from < d.len()
                    && *to < d.len()
                    && from != to
                    && a != b
                    && *a < d.m()
                    && *b < d.m()
                    && !exists_simple_restoration_free_path(d, *from, *to, *a, *b)
            }
            DomainWitness::Disagreement {
                first,
                second,
                over,
                under,
            } => {
                if *first >= d.len() || *second >= d.len() || !d.adjacent(*first, *second) {
                    return false;
                }
                let (a, b) = (d.top(*first), d.top(*second));
                if a == b || !((*over == a && *under == b) || (*over == b && *under == a)) {
                    return false;
                }
                !d.prefs()
                    .iter()
                    .any(|p| p.top() != a && p.top() != b && p.beats(*over, *under))
            }
        }
    }
}

fn confirms_partition(
    d: &Domain,
    first: PrefIdx,
    second: PrefIdx,
    components: &[Vec<PrefIdx>],
) -> bool {
    let mut label = vec![usize::MAX; d.len()];
    for (c, comp) in components.iter().enumerate() {
        for &i in comp {
            if i >= d.len() || label[i] != usize::MAX {
                return false;
            }
            label[i] = c;
        }
    }
    if label.contains(&usize::MAX) || first >= d.len() || second >= d.len() {
        return false;
    }
    let closed = d.adjacent_pairs().all(|(i, j)| label[i] == label[j]);
    closed && label[first] != label[second]
}

fn confirms_single_top(
    d: &Domain,
    preference: PrefIdx,
    closure: &[PrefIdx],
    neighbour_tops: &[Alt],
) -> bool {
    if preference >= d.len() || !closure.contains(&preference) {
        return false;
    }
    let top = d.top(preference);
    let mut inside = vec![false; d.len()];
    for &i in closure {
        if i >= d.len() || d.top(i) != top {
            return false;
        }
        inside[i] = true;
    }
    // The closure must be exactly the same-top component of `preference`.
    let mut seen = vec![false; d.len()];
    let mut stack = vec![preference];
    seen[preference] = true;
    while let Some(u) = stack.pop() {
        for &v in d.adjacent_to(u) {
            if !seen[v] && d.top(v) == top {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    if seen != inside {
        return false;
    }
    let mut tops: Vec<Alt> = d
        .adjacent_pairs()
        .filter_map(|(i, j)| match (inside[i], inside[j]) {
            (true, false) => Some(d.top(j)),
            (false, true) => Some(d.top(i)),
            _ => None,
        })
        .collect();
    tops.sort_unstable();
    tops.dedup();
    tops.len() < 2 && tops == neighbour_tops
}

pub fn is_minimally_rich(d: &Domain) -> DomainVerdict {
    let tops = d.top_mask();
    match (0..d.m()).find(|&a| tops & (1 << a) == 0) {
        None => Verdict::Holds,
        Some(alternative) => Verdict::Fails(DomainWitness::NeverTop { alternative }),
    }
}

/// Shortest path between two preferences (BFS, neighbours in index order).
pub fn find_path(d: &Domain, from: PrefIdx, to: PrefIdx) -> Result<Option<PrefPath>> {
    d.check_index(from)?;
    d.check_index(to)?;
    let pred = bfs(d, from, |_, _| true);
    Ok(unwind(&pred, from, to).map(PrefPath))
}

fn bfs(d: &Domain, from: PrefIdx, allow: impl Fn(PrefIdx, PrefIdx) -> bool) -> Vec<Option<PrefIdx>> {
    let mut pred = vec![None; d.len()];
    pred[from] = Some(from);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &v in d.adjacent_to(u) {
            if pred[v].is_none() && allow(u, v) {
                pred[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    pred
}

fn unwind(pred: &[Option<PrefIdx>], from: PrefIdx, to: PrefIdx) -> Option<Vec<PrefIdx>> {
    pred[to]?;
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = pred[cur].expect("reached vertices have predecessors");
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Connected components of the adjacency graph, each sorted, ordered by
/// smallest member.
pub fn components(d: &Domain) -> Vec<Vec<PrefIdx>> {
    let mut comp = vec![usize::MAX; d.len()];
    let mut out: Vec<Vec<PrefIdx>> = Vec::new();
    for s in 0..d.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        let pred = bfs(d, s, |_, _| true);
        let members: Vec<PrefIdx> = (0..d.len()).filter(|&i| pred[i].is_some()).collect();
        for &i in &members {
            comp[i] = out.len();
        }
        out.push(members);
    }
    out
}

pub fn is_connected(d: &Domain) -> DomainVerdict {
    let components = components(d);
    if components.len() <= 1 {
        return Verdict::Holds;
    }
    Verdict::Fails(DomainWitness::Disconnected {
        first: components[0][0],
        second: components[1][0],
        components,
    })
}

/// Top-connected closure of `i`: preferences reachable from `i` through
/// preferences that all share `i`'s top. Sorted ascending.
pub fn tcc(d: &Domain, i: PrefIdx) -> Result<Vec<PrefIdx>> {
    d.check_index(i)?;
    let top = d.top(i);
    let pred = bfs(d, i, |_, v| d.top(v) == top);
    Ok((0..d.len()).filter(|&j| pred[j].is_some()).collect())
}

/// Preferences outside `set` adjacent to some member of it. Sorted ascending.
pub fn neighbours(d: &Domain, set: &[PrefIdx]) -> Result<Vec<PrefIdx>> {
    let mut inside = vec![false; d.len()];
    for &i in set {
        d.check_index(i)?;
        inside[i] = true;
    }
    let mut out: Vec<PrefIdx> = (0..d.len())
        .filter(|&j| !inside[j] && set.iter().any(|&i| d.adjacent(i, j)))
        .collect();
    out.dedup();
    Ok(out)
}

pub fn has_two_distinct_neighbours(d: &Domain, i: PrefIdx) -> Result<DomainVerdict> {
    let closure = tcc(d, i)?;
    let mut tops: Vec<Alt> = neighbours(d, &closure)?
        .into_iter()
        .map(|j| d.top(j))
        .collect();
    tops.sort_unstable();
    tops.dedup();
    if tops.len() >= 2 {
        return Ok(Verdict::Holds);
    }
    Ok(Verdict::Fails(DomainWitness::SingleTopNeighbours {
        preference: i,
        closure,
        neighbour_tops: tops,
    }))
}

pub(crate) fn require_three(d: &Domain) -> Result<()> {
    if d.m() < 3 {
        return Err(Error::TooFewAlternatives {
            m: d.m(),
            required: 3,
        });
    }
    Ok(())
}

/// Connected with two distinct neighbours. Rejects `m < 3`.
pub fn is_cdn(d: &Domain) -> Result<DomainVerdict> {
    require_three(d)?;
    let connected = is_connected(d);
    if !connected.holds() {
        return Ok(connected);
    }
    for i in 0..d.len() {
        let v = has_two_distinct_neighbours(d, i)?;
        if !v.holds() {
            return Ok(v);
        }
    }
    Ok(Verdict::Holds)
}

/// The relative ranking of `a` and `b` changes at most once along `path`.
pub fn path_restoration_free(d: &Domain, path: &PrefPath, a: Alt, b: Alt) -> Result<bool> {
    d.check_alt(a)?;
    d.check_alt(b)?;
    if a == b {
        return Err(Error::Argument("restoration needs two distinct alternatives".into()));
    }
    let mut flips = 0;
    for w in path.indices().windows(2) {
        if d.pref(w[0]).beats(a, b) != d.pref(w[1]).beats(a, b) {
            flips += 1;
        }
    }
    Ok(flips <= 1)
}

/// Shortest `{a, b}`-restoration-free path from `from` to `to`, if any.
///
/// Searches the product of the adjacency graph with a flips-used flag in
/// `{0, 1}`. The flag at a preference equals "its `{a, b}` ranking differs
/// from the start", so a walk with at most one flip never revisits a
/// preference and the BFS path is simple.
pub fn find_restoration_free_path(
    d: &Domain,
    from: PrefIdx,
    to: PrefIdx,
    a: Alt,
    b: Alt,
) -> Result<Option<PrefPath>> {
    d.check_index(from)?;
    d.check_index(to)?;
    d.check_alt(a)?;
    d.check_alt(b)?;
    if a == b {
        return Err(Error::Argument("restoration needs two distinct alternatives".into()));
    }
    let pred = restoration_free_bfs(d, from, a, b);
    Ok(unwind(&pred, from, to).map(PrefPath))
}

fn restoration_free_bfs(d: &Domain, from: PrefIdx, a: Alt, b: Alt) -> Vec<Option<PrefIdx>> {
    let start = d.pref(from).beats(a, b);
    // Once the ranking has flipped, stepping back would be a second flip.
    bfs(d, from, |u, v| {
        let flipped_u = d.pref(u).beats(a, b) != start;
        let flipped_v = d.pref(v).beats(a, b) != start;
        !(flipped_u && !flipped_v)
    })
}

/// Independent check by DFS over simple paths, pruning once two flips occur.
fn exists_simple_restoration_free_path(d: &Domain, from: PrefIdx, to: PrefIdx, a: Alt, b: Alt) -> bool {
    fn go(d: &Domain, u: PrefIdx, to: PrefIdx, a: Alt, b: Alt, flips: u32, seen: &mut [bool]) -> bool {
        if u == to {
            return true;
        }
        for &v in d.adjacent_to(u) {
            if seen[v] {
                continue;
            }
            let f = flips + u32::from(d.pref(u).beats(a, b) != d.pref(v).beats(a, b));
            if f > 1 {
                continue;
            }
            seen[v] = true;
            if go(d, v, to, a, b, f, seen) {
                return true;
            }
            seen[v] = false;
        }
        false
    }
    let mut seen = vec![false; d.len()];
    seen[from] = true;
    go(d, from, to, a, b, 0, &mut seen)
}

fn no_restoration_property(d: &Domain, pair_filter: impl Fn(Alt, Alt) -> bool) -> DomainVerdict {
    for from in 0..d.len() {
        for a in 0..d.m() {
            for b in a + 1..d.m() {
                if !pair_filter(a, b) {
                    continue;
                }
                let pred = restoration_free_bfs(d, from, a, b);
                if let Some(to) = (0..d.len()).find(|&to| pred[to].is_none()) {
                    return Verdict::Fails(DomainWitness::Restoration { from, to, a, b });
                }
            }
        }
    }
    Verdict::Holds
}

/// Between every two preferences and for every pair of alternatives there
/// is a path without restoration of that pair.
pub fn satisfies_property_p(d: &Domain) -> DomainVerdict {
    no_restoration_property(d, |_, _| true)
}

/// Property P restricted to pairs where at least one alternative is
/// top-ranked by some preference of the domain.
///
/// This follows the short-form reading "paths without restoration for all
/// pairs of alternatives where at least one is first-ranked in some
/// preference"; the original definition in the literature may add
/// conditions not captured here.
pub fn satisfies_scd(d: &Domain) -> DomainVerdict {
    let tops = d.top_mask();
    no_restoration_property(d, |a, b| tops & ((1 << a) | (1 << b)) != 0)
}

/// For every adjacent pair with distinct tops `a` and `b`, some preference
/// topped outside `{a, b}` ranks `a` over `b`, and another ranks `b` over `a`.
pub fn satisfies_disagreement(d: &Domain) -> DomainVerdict {
    for (first, second) in d.adjacent_pairs() {
        let (a, b) = (d.top(first), d.top(second));
        if a == b {
            continue;
        }
        for (over, under) in [(a, b), (b, a)] {
            let covered = d
                .prefs()
                .iter()
                .any(|p| p.top() != a && p.top() != b && p.beats(over, under));
            if !covered {
                return Verdict::Fails(DomainWitness::Disagreement {
                    first,
                    second,
                    over,
                    under,
                });
            }
        }
    }
    Verdict::Holds
}
