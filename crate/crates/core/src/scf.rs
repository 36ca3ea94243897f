//! Social choice functions as dense profile tables.
//!
//! A table over `n` voters stores one outcome per profile in row-major
//! order: voter 0 is the most significant digit, each digit a preference
//! index. Every checker is an exhaustive scan in that order and reports the
//! first failure it meets. Voters are 0-based in the library.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::domains::{self, Domain, PrefIdx};
use crate::error::{Error, Result};
use crate::orders::Alt;
use crate::verdict::Verdict;

/// Upper bound on `|D|^n` for any table; keeps file parsing and search
/// allocations bounded.
pub const MAX_PROFILES: usize = 1 << 22;

/// One preference index per voter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile(pub Vec<PrefIdx>);

impl Profile {
    pub fn voters(&self) -> usize {
        self.0.len()
    }

    pub fn prefs(&self) -> &[PrefIdx] {
        &self.0
    }

    /// The same profile with voter `v` reporting `q` instead.
    pub fn with(&self, v: usize, q: PrefIdx) -> Profile {
        let mut p = self.0.clone();
        p[v] = q;
        Profile(p)
    }
}

/// `len^n`, or an error when it exceeds [`MAX_PROFILES`].
pub fn profile_count(len: usize, n: usize) -> Result<usize> {
    let mut total: usize = 1;
    for _ in 0..n {
        total = total
            .checked_mul(len)
            .filter(|&t| t <= MAX_PROFILES)
            .ok_or_else(|| {
                Error::Argument(format!(
                    "{len}^{n} profiles exceeds the table limit of {MAX_PROFILES}"
                ))
            })?;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScfTable {
    domain: Domain,
    n: usize,
    values: Vec<u8>,
}

impl ScfTable {
    /// `values` lists outcomes in row-major profile order.
    pub fn new(domain: Domain, n: usize, values: Vec<Alt>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument(format!("need at least 2 voters, got {n}")));
        }
        let count = profile_count(domain.len(), n)?;
        if values.len() != count {
            return Err(Error::Argument(format!(
                "table has {} entries, expected {count}",
                values.len()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&a| a >= domain.m()) {
            return Err(Error::UnknownAlternative {
                index: bad,
                m: domain.m(),
            });
        }
        Ok(Self {
            domain,
            n,
            values: values.into_iter().map(|a| a as u8).collect(),
        })
    }

    pub fn from_fn(domain: &Domain, n: usize, mut rule: impl FnMut(&[PrefIdx]) -> Alt) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument(format!("need at least 2 voters, got {n}")));
        }
        let count = profile_count(domain.len(), n)?;
        let mut prefs = vec![0; n];
        let mut values = Vec::with_capacity(count);
        for idx in 0..count {
            decode_into(idx, domain.len(), &mut prefs);
            values.push(rule(&prefs));
        }
        Self::new(domain.clone(), n, values)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of profiles.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> impl ExactSizeIterator<Item = Alt> + '_ {
        self.values.iter().map(|&a| a as Alt)
    }

    #[inline]
    pub fn at(&self, idx: usize) -> Alt {
        self.values[idx] as Alt
    }

    pub fn encode(&self, prefs: &[PrefIdx]) -> usize {
        encode(prefs, self.domain.len())
    }

    pub fn decode(&self, idx: usize) -> Vec<PrefIdx> {
        let mut prefs = vec![0; self.n];
        decode_into(idx, self.domain.len(), &mut prefs);
        prefs
    }

    /// Outcome at a profile; panics on malformed input.
    pub fn get(&self, prefs: &[PrefIdx]) -> Alt {
        assert_eq!(prefs.len(), self.n, "profile has wrong number of voters");
        self.at(self.encode(prefs))
    }

    pub fn outcome(&self, profile: &Profile) -> Result<Alt> {
        self.check_profile(profile.prefs())?;
        Ok(self.get(profile.prefs()))
    }

    fn check_profile(&self, prefs: &[PrefIdx]) -> Result<()> {
        if prefs.len() != self.n {
            return Err(Error::Argument(format!(
                "profile has {} voters, table has {}",
                prefs.len(),
                self.n
            )));
        }
        for &p in prefs {
            self.domain.check_index(p)?;
        }
        Ok(())
    }

    fn stride(&self, voter: usize) -> usize {
        self.domain.len().pow((self.n - 1 - voter) as u32)
    }
}

pub(crate) fn encode(prefs: &[PrefIdx], len: usize) -> usize {
    prefs.iter().fold(0, |acc, &p| acc * len + p)
}

pub(crate) fn decode_into(mut idx: usize, len: usize, out: &mut [PrefIdx]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % len;
        idx /= len;
    }
}

/// A profitable unilateral misreport.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManipulationWitness {
    pub voter: usize,
    pub profile: Vec<PrefIdx>,
    pub deviation: PrefIdx,
    pub local: bool,
}

impl ManipulationWitness {
    pub fn confirms(&self, f: &ScfTable) -> bool {
        if f.check_profile(&self.profile).is_err()
            || self.voter >= f.n()
            || self.deviation >= f.domain().len()
        {
            return false;
        }
        let truth = self.profile[self.voter];
        if truth == self.deviation || (self.local && !f.domain().adjacent(truth, self.deviation)) {
            return false;
        }
        let mut lie = self.profile.clone();
        lie[self.voter] = self.deviation;
        let (honest, gained) = (f.get(&self.profile), f.get(&lie));
        honest != gained && f.domain().pref(truth).beats(gained, honest)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScfWitness {
    Unanimity {
        profile: Vec<PrefIdx>,
        expected: Alt,
        outcome: Alt,
    },
    Manipulation(ManipulationWitness),
    TopsOnly {
        first: Vec<PrefIdx>,
        second: Vec<PrefIdx>,
    },
    /// `profiles[i]` is a profile where the outcome is not voter `i`'s top.
    NotDictatorial { profiles: Vec<Vec<PrefIdx>> },
    NotDecisive {
        voter: usize,
        alternative: Alt,
        profile: Vec<PrefIdx>,
    },
}

pub type ScfVerdict = Verdict<ScfWitness>;

impl ScfWitness {
    pub fn confirms(&self, f: &ScfTable) -> bool {
        let d = f.domain();
        match self {
            ScfWitness::Unanimity {
                profile,
                expected,
                outcome,
            } => {
                f.check_profile(profile).is_ok()
                    && profile.iter().all(|&p| d.top(p) == *expected)
                    && f.get(profile) == *outcome
                    && outcome != expected
            }
            ScfWitness::Manipulation(w) => w.confirms(f),
            ScfWitness::TopsOnly { first, second } => {
                f.check_profile(first).is_ok()
                    && f.check_profile(second).is_ok()
                    && first.iter().zip(second).all(|(&p, &q)| d.top(p) == d.top(q))
                    && f.get(first) != f.get(second)
            }
            ScfWitness::NotDictatorial { profiles } => {
                profiles.len() == f.n()
                    && profiles.iter().enumerate().all(|(i, prof)| {
                        f.check_profile(prof).is_ok() && f.get(prof) != d.top(prof[i])
                    })
            }
            ScfWitness::NotDecisive {
                voter,
                alternative,
                profile,
            } => {
                f.check_profile(profile).is_ok()
                    && *voter < f.n()
                    && d.top(profile[*voter]) == *alternative
                    && f.get(profile) != *alternative
            }
        }
    }
}

pub fn check_unanimity(f: &ScfTable) -> ScfVerdict {
    let d = f.domain();
    let mut prefs = vec![0; f.n()];
    for idx in 0..f.len() {
        decode_into(idx, d.len(), &mut prefs);
        let a = d.top(prefs[0]);
        if prefs.iter().all(|&p| d.top(p) == a) && f.at(idx) != a {
            return Verdict::Fails(ScfWitness::Unanimity {
                profile: prefs,
                expected: a,
                outcome: f.at(idx),
            });
        }
    }
    Verdict::Holds
}

fn check_incentive(f: &ScfTable, local: bool) -> ScfVerdict {
    let d = f.domain();
    let mut prefs = vec![0; f.n()];
    for idx in 0..f.len() {
        decode_into(idx, d.len(), &mut prefs);
        let honest = f.at(idx);
        for v in 0..f.n() {
            let truth = prefs[v];
            let stride = f.stride(v);
            let base = idx - truth * stride;
            let deviations: Box<dyn Iterator<Item = PrefIdx>> = if local {
                Box::new(d.adjacent_to(truth).iter().copied())
            } else {
                Box::new((0..d.len()).filter(|&q| q != truth))
            };
            for q in deviations {
                let gained = f.at(base + q * stride);
                if gained != honest && d.pref(truth).beats(gained, honest) {
                    return Verdict::Fails(ScfWitness::Manipulation(ManipulationWitness {
                        voter: v,
                        profile: prefs,
                        deviation: q,
                        local,
                    }));
                }
            }
        }
    }
    Verdict::Holds
}

/// No voter gains by switching to an adjacent preference of the domain.
pub fn check_local_sp(f: &ScfTable) -> ScfVerdict {
    check_incentive(f, true)
}

/// No voter gains by any unilateral misreport.
pub fn check_sp(f: &ScfTable) -> ScfVerdict {
    check_incentive(f, false)
}

pub fn check_tops_only(f: &ScfTable) -> ScfVerdict {
    let d = f.domain();
    let mut first_seen: HashMap<Vec<Alt>, usize> = HashMap::new();
    let mut prefs = vec![0; f.n()];
    for idx in 0..f.len() {
        decode_into(idx, d.len(), &mut prefs);
        let tops: Vec<Alt> = prefs.iter().map(|&p| d.top(p)).collect();
        match first_seen.get(&tops) {
            Some(&j) if f.at(j) != f.at(idx) => {
                return Verdict::Fails(ScfWitness::TopsOnly {
                    first: f.decode(j),
                    second: prefs,
                });
            }
            Some(_) => {}
            None => {
                first_seen.insert(tops, idx);
            }
        }
    }
    Verdict::Holds
}

/// The smallest voter whose top is always selected, if any.
pub fn check_dictatorship(f: &ScfTable) -> Option<usize> {
    (0..f.n()).find(|&v| is_dictator(f, v))
}

/// Voter `v`'s top is selected at every profile.
pub fn is_dictator(f: &ScfTable, v: usize) -> bool {
    if v >= f.n() {
        return false;
    }
    let d = f.domain();
    let stride = f.stride(v);
    (0..f.len()).all(|idx| f.at(idx) == d.top((idx / stride) % d.len()))
}

/// Holds iff some voter is a dictator; otherwise the witness names, for
/// every voter, the first profile where that voter's top is not chosen.
pub fn dictatorship_verdict(f: &ScfTable) -> ScfVerdict {
    let d = f.domain();
    let mut profiles = Vec::with_capacity(f.n());
    for v in 0..f.n() {
        let stride = f.stride(v);
        match (0..f.len()).find(|&idx| f.at(idx) != d.top((idx / stride) % d.len())) {
            Some(idx) => profiles.push(f.decode(idx)),
            None => return Verdict::Holds,
        }
    }
    Verdict::Fails(ScfWitness::NotDictatorial { profiles })
}

/// Every profile where `voter` tops `a` selects `a`.
pub fn check_decisive(f: &ScfTable, voter: usize, a: Alt) -> Result<ScfVerdict> {
    if voter >= f.n() {
        return Err(Error::Argument(format!("voter {voter} out of range for n = {}", f.n())));
    }
    f.domain().check_alt(a)?;
    let d = f.domain();
    let stride = f.stride(voter);
    let bad = (0..f.len()).find(|&idx| d.top((idx / stride) % d.len()) == a && f.at(idx) != a);
    Ok(match bad {
        None => Verdict::Holds,
        Some(idx) => Verdict::Fails(ScfWitness::NotDecisive {
            voter,
            alternative: a,
            profile: f.decode(idx),
        }),
    })
}

fn check_voters(n: usize, v1: usize, v2: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Argument(format!("need at least 2 voters, got {n}")));
    }
    if v1 >= n || v2 >= n || v1 == v2 {
        return Err(Error::Argument(format!(
            "voters {v1} and {v2} must be distinct and below n = {n}"
        )));
    }
    Ok(())
}

/// On a disconnected domain: voter `v1` dictates while reporting inside the
/// component of `base`, voter `v2` dictates otherwise.
pub fn construct_case1(d: &Domain, base: PrefIdx, n: usize, v1: usize, v2: usize) -> Result<ScfTable> {
    check_voters(n, v1, v2)?;
    d.check_index(base)?;
    if domains::is_connected(d).holds() {
        return Err(Error::Construction("domain is connected".into()));
    }
    let component = domains::components(d)
        .into_iter()
        .find(|c| c.contains(&base))
        .expect("every preference lies in a component");
    let mut inside = vec![false; d.len()];
    for i in component {
        inside[i] = true;
    }
    ScfTable::from_fn(d, n, |p| {
        if inside[p[v1]] {
            d.top(p[v1])
        } else {
            d.top(p[v2])
        }
    })
}

/// On a connected domain where the top-connected closure of `pstar` (top
/// `a`) has neighbours with a single top `b`: while voter `v1` reports in
/// the closure, voter `v2` picks between `a` and `b`; otherwise `v1`
/// dictates.
pub fn construct_case2(d: &Domain, pstar: PrefIdx, n: usize, v1: usize, v2: usize) -> Result<ScfTable> {
    check_voters(n, v1, v2)?;
    d.check_index(pstar)?;
    if !domains::is_connected(d).holds() {
        return Err(Error::Construction("domain is not connected".into()));
    }
    let closure = domains::tcc(d, pstar)?;
    let border = domains::neighbours(d, &closure)?;
    let mut tops: Vec<Alt> = border.iter().map(|&j| d.top(j)).collect();
    tops.sort_unstable();
    tops.dedup();
    let b = match tops.as_slice() {
        [] => {
            return Err(Error::Construction(format!(
                "the top-connected closure of P{} has no neighbours",
                pstar + 1
            )))
        }
        [b] => *b,
        _ => {
            return Err(Error::Construction(format!(
                "the top-connected closure of P{} has neighbours with distinct tops",
                pstar + 1
            )))
        }
    };
    let a = d.top(pstar);
    let mut inside = vec![false; d.len()];
    for i in closure {
        inside[i] = true;
    }
    ScfTable::from_fn(d, n, |p| {
        if inside[p[v1]] {
            if d.pref(p[v2]).beats(a, b) {
                a
            } else {
                b
            }
        } else {
            d.top(p[v1])
        }
    })
}

/// Merges voters 0 and 1 into one: `g(P1, P3, ..) = f(P1, P1, P3, ..)`.
pub fn clone_reduce(f: &ScfTable) -> Result<ScfTable> {
    if f.n() < 3 {
        return Err(Error::Argument("cloning needs at least 3 voters".into()));
    }
    let mut full = vec![0; f.n()];
    ScfTable::from_fn(f.domain(), f.n() - 1, |p| {
        full[0] = p[0];
        full[1..].copy_from_slice(p);
        f.get(&full)
    })
}

/// Fixes voters `2..n` at `others` and returns the two-voter rule left.
pub fn two_voter_slice(f: &ScfTable, others: &[PrefIdx]) -> Result<ScfTable> {
    if f.n() < 3 {
        return Err(Error::Argument("slicing needs at least 3 voters".into()));
    }
    if others.len() != f.n() - 2 {
        return Err(Error::Argument(format!(
            "expected {} fixed preferences, got {}",
            f.n() - 2,
            others.len()
        )));
    }
    for &p in others {
        f.domain().check_index(p)?;
    }
    let mut full = vec![0; f.n()];
    full[2..].copy_from_slice(others);
    ScfTable::from_fn(f.domain(), 2, |p| {
        full[0] = p[0];
        full[1] = p[1];
        f.get(&full)
    })
}

/// The restriction of `f` to profiles drawn from `sub`.
pub fn restrict(f: &ScfTable, sub: &Domain) -> Result<ScfTable> {
    if sub.alts() != f.domain().alts() {
        return Err(Error::Argument("sub-domain uses a different alternative set".into()));
    }
    let map = sub
        .prefs()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            f.domain().index_of(p).ok_or_else(|| {
                Error::Argument(format!("sub-domain preference P{} is not in the domain", i + 1))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut full = vec![0; f.n()];
    ScfTable::from_fn(sub, f.n(), |p| {
        for (slot, &q) in full.iter_mut().zip(p) {
            *slot = map[q];
        }
        f.get(&full)
    })
}
