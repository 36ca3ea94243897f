//! Strict linear orders over a finite, labelled set of alternatives.
//!
//! Alternatives are dense indices `0..m`; labels only live in
//! [`AlternativeSet`]. A [`LinearOrder`] keeps both the best-to-worst
//! sequence and its inverse so that `kth` and `rank_of` are O(1).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of an alternative inside an [`AlternativeSet`].
pub type Alt = usize;

/// Largest supported number of alternatives. Value sets are stored as
/// `u32` bit masks by the search engine.
pub const MAX_ALTERNATIVES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternativeSet {
    labels: Vec<String>,
}

impl AlternativeSet {
    /// Labels must be distinct, non-empty, and free of whitespace, `#` and `:`
    /// so that they survive the line-oriented file format.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::TooFewAlternatives {
                m: labels.len(),
                required: 2,
            });
        }
        if labels.len() > MAX_ALTERNATIVES {
            return Err(Error::InvalidAlternatives(format!(
                "{} alternatives exceeds the supported maximum of {MAX_ALTERNATIVES}",
                labels.len()
            )));
        }
        let mut seen = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidAlternatives(format!(
                    "label {} is empty",
                    i + 1
                )));
            }
            if label
                .chars()
                .any(|c| c.is_whitespace() || c == '#' || c == ':')
            {
                return Err(Error::InvalidAlternatives(format!(
                    "label `{label}` contains whitespace, `#` or `:`"
                )));
            }
            if let Some(prev) = seen.insert(label.as_str(), i) {
                return Err(Error::InvalidAlternatives(format!(
                    "label `{label}` appears at positions {} and {}",
                    prev + 1,
                    i + 1
                )));
            }
        }
        Ok(Self { labels })
    }

    /// The alternative set `a1, a2, ..., am`.
    pub fn indexed(m: usize) -> Result<Self> {
        Self::new((1..=m).map(|i| format!("a{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Alt) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<Alt> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parses a whitespace-separated best-to-worst label sequence.
    pub fn parse_order(&self, text: &str) -> Result<LinearOrder> {
        let ranking = text
            .split_whitespace()
            .map(|tok| {
                self.index_of(tok)
                    .ok_or_else(|| Error::UnknownLabel(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if ranking.len() != self.len() {
            return Err(Error::InvalidOrder(format!(
                "`{text}` ranks {} alternatives, expected {}",
                ranking.len(),
                self.len()
            )));
        }
        LinearOrder::new(ranking)
    }
}

/// A strict ranking of `m` alternatives, best first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    ranking: Vec<u8>,
    ranks: Vec<u8>,
}

impl LinearOrder {
    /// `ranking[k]` is the alternative in position `k` (0-based, best first).
    pub fn new(ranking: Vec<Alt>) -> Result<Self> {
        let m = ranking.len();
        if m == 0 || m > MAX_ALTERNATIVES {
            return Err(Error::InvalidOrder(format!("length {m} is not in 1..={MAX_ALTERNATIVES}")));
        }
        let mut ranks = vec![u8::MAX; m];
        for (pos, &a) in ranking.iter().enumerate() {
            if a >= m {
                return Err(Error::InvalidOrder(format!(
                    "alternative index {a} out of range for m = {m}"
                )));
            }
            if ranks[a] != u8::MAX {
                return Err(Error::InvalidOrder(format!(
                    "alternative index {a} appears twice"
                )));
            }
            ranks[a] = pos as u8;
        }
        Ok(Self {
            ranking: ranking.into_iter().map(|a| a as u8).collect(),
            ranks,
        })
    }

    pub fn m(&self) -> usize {
        self.ranking.len()
    }

    /// The alternative ranked `k`-th, with `k` counted from 1.
    pub fn kth(&self, k: usize) -> Result<Alt> {
        if k == 0 || k > self.m() {
            return Err(Error::RankOutOfRange { k, m: self.m() });
        }
        Ok(self.ranking[k - 1] as Alt)
    }

    /// Rank of `a`, counted from 1.
    pub fn rank_of(&self, a: Alt) -> Result<usize> {
        self.check_alt(a)?;
        Ok(self.ranks[a] as usize + 1)
    }

    /// `a` is ranked strictly above `b`.
    pub fn prefers(&self, a: Alt, b: Alt) -> Result<bool> {
        self.check_alt(a)?;
        self.check_alt(b)?;
        if a == b {
            return Err(Error::Argument(format!(
                "prefers needs two distinct alternatives, got {a} twice"
            )));
        }
        Ok(self.ranks[a] < self.ranks[b])
    }

    /// Unchecked strict preference; callers guarantee valid indices.
    #[inline]
    pub(crate) fn beats(&self, a: Alt, b: Alt) -> bool {
        self.ranks[a] < self.ranks[b]
    }

    /// 0-based position of `a`; panics on an invalid index.
    #[inline]
    pub fn position(&self, a: Alt) -> usize {
        self.ranks[a] as usize
    }

    #[inline]
    pub fn top(&self) -> Alt {
        self.ranking[0] as Alt
    }

    #[inline]
    pub fn second(&self) -> Alt {
        self.ranking[1] as Alt
    }

    pub fn ranking(&self) -> impl ExactSizeIterator<Item = Alt> + '_ {
        self.ranking.iter().map(|&a| a as Alt)
    }

    /// True iff the two orders differ by one swap of consecutively ranked
    /// alternatives.
    pub fn is_adjacent(&self, other: &LinearOrder) -> Result<bool> {
        if self.m() != other.m() {
            return Err(Error::MismatchedAlternatives {
                left: self.m(),
                right: other.m(),
            });
        }
        Ok(self.swapped_position(other).is_some())
    }

    /// If `other` is `self` with positions `k` and `k + 1` exchanged, returns `k`.
    pub fn swapped_position(&self, other: &LinearOrder) -> Option<usize> {
        if self.m() != other.m() {
            return None;
        }
        let k = self
            .ranking
            .iter()
            .zip(&other.ranking)
            .position(|(x, y)| x != y)?;
        if k + 1 >= self.m()
            || self.ranking[k] != other.ranking[k + 1]
            || self.ranking[k + 1] != other.ranking[k]
        {
            return None;
        }
        if self.ranking[k + 2..] != other.ranking[k + 2..] {
            return None;
        }
        Some(k)
    }

    /// The order obtained by exchanging positions `k` and `k + 1` (0-based).
    pub fn swap_at(&self, k: usize) -> Result<LinearOrder> {
        if k + 1 >= self.m() {
            return Err(Error::RankOutOfRange { k: k + 1, m: self.m() });
        }
        let mut ranking = self.ranking.clone();
        let mut ranks = self.ranks.clone();
        ranking.swap(k, k + 1);
        ranks[ranking[k] as usize] = k as u8;
        ranks[ranking[k + 1] as usize] = (k + 1) as u8;
        Ok(Self { ranking, ranks })
    }

    /// All `m - 1` orders adjacent to `self` in the unrestricted domain, in
    /// order of the swapped position.
    pub fn adjacent_swaps(&self) -> Vec<LinearOrder> {
        (0..self.m() - 1)
            .map(|k| self.swap_at(k).expect("k + 1 < m"))
            .collect()
    }

    pub fn display<'a>(&'a self, alts: &'a AlternativeSet) -> OrderDisplay<'a> {
        OrderDisplay { order: self, alts }
    }

    fn check_alt(&self, a: Alt) -> Result<()> {
        if a >= self.m() {
            return Err(Error::UnknownAlternative { index: a, m: self.m() });
        }
        Ok(())
    }
}

/// Canonical text form: labels best to worst, separated by single spaces.
pub struct OrderDisplay<'a> {
    order: &'a LinearOrder,
    alts: &'a AlternativeSet,
}

impl fmt::Display for OrderDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.order.ranking().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alts.label(a))?;
        }
        Ok(())
    }
}

/// All `m!` orders of `0..m` in lexicographic order of their rankings.
pub fn all_orders(m: usize) -> Vec<LinearOrder> {
    let mut current: Vec<Alt> = (0..m).collect();
    let mut out = Vec::new();
    loop {
        out.push(LinearOrder::new(current.clone()).expect("permutation"));
        // next lexicographic permutation
        let Some(i) = (1..m).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..m).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}
