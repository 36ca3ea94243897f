//! The graph on alternatives induced by a domain: `a` and `b` are joined
//! when two adjacent preferences swap `a` and `b` at the top.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::domains::{Domain, PrefIdx, PrefPath};
use crate::error::{Error, Result};
use crate::orders::{Alt, AlternativeSet};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedGraph {
    alts: AlternativeSet,
    adj: Vec<u32>,
    /// Edge `(a, b)` with `a < b` to the first adjacent pair realizing it.
    witnesses: BTreeMap<(Alt, Alt), (PrefIdx, PrefIdx)>,
}

pub fn induced_graph(d: &Domain) -> InducedGraph {
    let m = d.m();
    let mut adj = vec![0u32; m];
    let mut witnesses = BTreeMap::new();
    for (i, j) in d.adjacent_pairs() {
        let (a, b) = (d.top(i), d.top(j));
        if a == b {
            continue;
        }
        // adjacent orders with different tops differ exactly in the first two ranks
        debug_assert!(d.pref(i).second() == b && d.pref(j).second() == a);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
        witnesses.entry((a.min(b), a.max(b))).or_insert((i, j));
    }
    InducedGraph { alts: d.alts().clone(), adj, witnesses }
}

impl InducedGraph {
    /// Builds a graph directly from an edge list; used for tests and for
    /// replaying graph witnesses.
    pub fn from_edges(alts: AlternativeSet, edges: &[(Alt, Alt)]) -> Result<Self> {
        let m = alts.len();
        let mut adj = vec![0u32; m];
        for &(a, b) in edges {
            if a >= m || b >= m || a == b {
                return Err(Error::Argument(format!("bad edge ({a}, {b}) for m = {m}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self { alts, adj, witnesses: BTreeMap::new() })
    }

    pub fn alts(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn m(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: Alt, b: Alt) -> bool {
        a < self.m() && b < self.m() && self.adj[a] & (1 << b) != 0
    }

    /// Sorted edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(Alt, Alt)> {
        let mut out = Vec::new();
        for a in 0..self.m() {
            for b in a + 1..self.m() {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.count_ones() as usize).sum::<usize>() / 2
    }

    /// The adjacent preference pair that realizes an edge, for graphs built
    /// from a domain.
    pub fn witness(&self, a: Alt, b: Alt) -> Option<(PrefIdx, PrefIdx)> {
        self.witnesses.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn neighbours(&self, a: Alt) -> impl Iterator<Item = Alt> + '_ {
        let mask = self.adj[a];
        (0..self.m()).filter(move |&b| mask & (1 << b) != 0)
    }

    /// Panics if `a` is not an alternative.
    pub fn degree(&self, a: Alt) -> usize {
        self.adj[a].count_ones() as usize
    }

    /// Vertices reachable from `a` without entering `blocked`, as a mask.
    fn reach(&self, a: Alt, blocked: u32) -> u32 {
        let mut seen = 1u32 << a;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            let fresh = self.adj[x] & !seen & !blocked;
            seen |= fresh;
            stack.extend((0..self.m()).filter(|&y| fresh & (1 << y) != 0));
        }
        seen
    }

    fn components(&self) -> Vec<u32> {
        let mut covered = 0u32;
        let mut out = Vec::new();
        for a in 0..self.m() {
            if covered & (1 << a) == 0 {
                let c = self.reach(a, 0);
                covered |= c;
                out.push(c);
            }
        }
        out
    }

    /// Edges inside a vertex set.
    fn edges_within(&self, set: u32) -> usize {
        (0..self.m())
            .filter(|&a| set & (1 << a) != 0)
            .map(|a| (self.adj[a] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// One line per edge, `a b` by label, in index order.
    pub fn to_edge_list(&self) -> String {
        self.edges()
            .into_iter()
            .map(|(a, b)| format!("{} {}\n", self.alts.label(a), self.alts.label(b)))
            .collect()
    }
}

/// A shortest cycle through `a`, listed from `a`, without the closing vertex.
pub fn find_cycle_through(g: &InducedGraph, a: Alt) -> Option<Vec<Alt>> {
    let m = g.m();
    let mut best: Option<Vec<Alt>> = None;
    for start in g.neighbours(a) {
        // BFS from `start` to another neighbour of `a`, avoiding `a`
        let mut prev = vec![usize::MAX; m];
        prev[start] = start;
        let mut queue = VecDeque::from([start]);
        let mut end = None;
        while let Some(x) = queue.pop_front() {
            if x != start && g.has_edge(x, a) {
                end = Some(x);
                break;
            }
            for y in g.neighbours(x) {
                if y != a && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if let Some(mut x) = end {
            let mut tail = vec![x];
            while x != start {
                x = prev[x];
                tail.push(x);
            }
            tail.push(a);
            tail.reverse();
            if best.as_ref().map_or(true, |b| tail.len() < b.len()) {
                best = Some(tail);
            }
        }
    }
    best
}

pub fn on_cycle(g: &InducedGraph, a: Alt) -> bool {
    // `a` lies on a cycle iff two of its neighbours stay connected without it
    let nbrs: Vec<Alt> = g.neighbours(a).collect();
    nbrs.iter().any(|&x| {
        let r = g.reach(x, 1 << a);
        nbrs.iter().any(|&y| y != x && r & (1 << y) != 0)
    })
}

/// For a vertex on no cycle: two of its neighbours whose sides (after
/// removing the vertex) both contain a cycle. Every edge at such a vertex is
/// a bridge, so those two sides hold vertex-disjoint cycles and the path
/// cycle, side, vertex, side, cycle has the vertex strictly inside.
fn bridge_sides(g: &InducedGraph, a: Alt) -> Option<(Alt, Alt)> {
    let cyclic: Vec<Alt> = g
        .neighbours(a)
        .filter(|&x| {
            let side = g.reach(x, 1 << a);
            g.edges_within(side) >= side.count_ones() as usize
        })
        .collect();
    match cyclic.as_slice() {
        [x, y, ..] => Some((*x, *y)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphWitness {
    Disconnected { first: Alt, second: Alt },
    LowDegree { vertex: Alt, degree: usize },
    /// A forest: `edges = m - components`.
    Acyclic { edges: usize, components: usize },
    NoBridgePath { vertex: Alt },
}

pub type GraphVerdict = Verdict<GraphWitness>;

impl GraphWitness {
    pub fn confirms(&self, g: &InducedGraph) -> bool {
        let m = g.m();
        match *self {
            GraphWitness::Disconnected { first, second } => {
                first < m && second < m && g.reach(first, 0) & (1 << second) == 0
            }
            GraphWitness::LowDegree { vertex, degree } => vertex < m && degree < 2 && g.degree(vertex) == degree,
            GraphWitness::Acyclic { edges, components } => {
                g.edge_count() == edges && g.components().len() == components && edges + components == m
            }
            GraphWitness::NoBridgePath { vertex } => {
                vertex < m && !on_cycle(g, vertex) && bridge_sides(g, vertex).is_none()
            }
        }
    }
}

/// The four structural properties of the induced graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub connected: GraphVerdict,
    pub min_degree_ok: GraphVerdict,
    pub has_cycle: GraphVerdict,
    pub bridge_paths_ok: GraphVerdict,
}

impl Lemma1Report {
    pub fn all_hold(&self) -> bool {
        self.connected.holds() && self.min_degree_ok.holds() && self.has_cycle.holds() && self.bridge_paths_ok.holds()
    }

    pub fn verdicts(&self) -> [(&'static str, &GraphVerdict); 4] {
        [
            ("connected", &self.connected),
            ("min_degree", &self.min_degree_ok),
            ("has_cycle", &self.has_cycle),
            ("bridge_paths", &self.bridge_paths_ok),
        ]
    }
}

pub fn graph_report(g: &InducedGraph) -> Lemma1Report {
    let m = g.m();
    let comps = g.components();
    let connected = if comps.len() == 1 {
        Verdict::Holds
    } else {
        let second = (0..m).find(|&b| comps[0] & (1 << b) == 0).expect("second component");
        Verdict::Fails(GraphWitness::Disconnected { first: 0, second })
    };
    let min_degree_ok = match (0..m).find(|&a| g.degree(a) < 2) {
        None => Verdict::Holds,
        Some(a) => Verdict::Fails(GraphWitness::LowDegree { vertex: a, degree: g.degree(a) }),
    };
    let edges = g.edge_count();
    let has_cycle = if edges + comps.len() > m {
        Verdict::Holds
    } else {
        Verdict::Fails(GraphWitness::Acyclic { edges, components: comps.len() })
    };
    let bridge_paths_ok = match (0..m).find(|&a| !on_cycle(g, a) && bridge_sides(g, a).is_none()) {
        None => Verdict::Holds,
        Some(a) => Verdict::Fails(GraphWitness::NoBridgePath { vertex: a }),
    };
    Lemma1Report { connected, min_degree_ok, has_cycle, bridge_paths_ok }
}

pub fn lemma1_check(d: &Domain) -> Lemma1Report {
    graph_report(&induced_graph(d))
}

/// Turns a preference path from a top-`a` order to a top-`b` order into a
/// path from `a` to `b` in the induced graph: repeatedly jump to the last
/// preference on the path that shares the current top, then step across.
pub fn project_tops_path(d: &Domain, path: &PrefPath, a: Alt, b: Alt) -> Result<Vec<Alt>> {
    d.check_alt(a)?;
    d.check_alt(b)?;
    if a == b {
        return Err(Error::Argument("endpoints must be distinct alternatives".into()));
    }
    let tops: Vec<Alt> = path.indices().iter().map(|&i| d.top(i)).collect();
    if tops[0] != a || *tops.last().unwrap() != b {
        return Err(Error::Argument(format!(
            "path must run from a top-{} preference to a top-{} preference",
            d.alts().label(a),
            d.alts().label(b)
        )));
    }
    let mut out = vec![a];
    let mut from = 0;
    loop {
        let current = tops[from];
        let last = (from..tops.len()).rev().find(|&j| tops[j] == current).unwrap();
        if last + 1 == tops.len() {
            return Err(Error::Internal("projection ran off the end of the path".into()));
        }
        let next = tops[last + 1];
        out.push(next);
        if next == b {
            return Ok(out);
        }
        from = last + 1;
    }
}
