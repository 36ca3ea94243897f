#![allow(dead_code)]

use prefdomain::fixtures::unrestricted;
use prefdomain::Domain;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Sub-domain of the unrestricted m = 4 domain on the given indices.
pub fn sub4(indices: &[usize]) -> Domain {
    unrestricted(4).unwrap().subdomain(indices).unwrap()
}

/// A connected sub-domain of `base`, grown one adjacent preference at a
/// time from a random start, with `size` preferences.
pub fn random_connected(base: &Domain, rng: &mut ChaCha8Rng, size: usize) -> Domain {
    let mut chosen = vec![rng.gen_range(0..base.len())];
    let mut inside = vec![false; base.len()];
    inside[chosen[0]] = true;
    while chosen.len() < size {
        let frontier: Vec<usize> = chosen
            .iter()
            .flat_map(|&i| base.adjacent_to(i).iter().copied())
            .filter(|&j| !inside[j])
            .collect();
        let Some(&next) = frontier.choose(rng) else { break };
        inside[next] = true;
        chosen.push(next);
    }
    chosen.sort_unstable();
    base.subdomain(&chosen).unwrap()
}

/// Preference indices numbered from 1.
pub fn p(k: usize) -> usize {
    k - 1
}

/// Alternative `a_k` as an index.
pub fn a(k: usize) -> usize {
    k - 1
}

/// All simple paths from `from` to `to`, by plain DFS.
pub fn simple_paths(d: &Domain, from: usize, to: usize) -> Vec<Vec<usize>> {
    fn go(d: &Domain, path: &mut Vec<usize>, to: usize, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == to {
            out.push(path.clone());
            return;
        }
        for v in 0..d.len() {
            if d.adjacent(u, v) && !path.contains(&v) {
                path.push(v);
                go(d, path, to, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, &mut vec![from], to, &mut out);
    out
}

/// Number of times the relative order of `a` and `b` changes along a path,
/// from the materialized sequence of comparisons.
pub fn flips(d: &Domain, path: &[usize], a: usize, b: usize) -> usize {
    let seq: Vec<bool> = path.iter().map(|&i| d.pref(i).prefers(a, b).unwrap()).collect();
    seq.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Which unilateral deviations the brute-force enumerator treats as
/// constraints.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Deviations {
    None,
    Adjacent,
    All,
}

/// Depth-first enumeration of every rule on `d^n` (profiles in row-major
/// order, values ascending) that is unanimous when asked and admits no
/// profitable deviation of the given kind. Each pair of profiles is checked
/// as soon as both are assigned. `visit` returns `true` to stop early;
/// the return value is the number of complete rules visited.
pub fn enumerate_rules(
    d: &Domain,
    n: usize,
    unanimity: bool,
    deviations: Deviations,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> u64 {
    let len = d.len();
    let total = len.pow(n as u32);
    let decode = |mut idx: usize| {
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = idx % len;
            idx /= len;
        }
        out
    };
    let profiles: Vec<Vec<usize>> = (0..total).map(decode).collect();
    // earlier profiles that differ from each profile in one voter's report
    let mut partners: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    if deviations != Deviations::None {
        for i in 0..total {
            for j in 0..i {
                let diff: Vec<usize> = (0..n).filter(|&v| profiles[i][v] != profiles[j][v]).collect();
                if let [v] = diff[..] {
                    let (p, q) = (profiles[i][v], profiles[j][v]);
                    if deviations == Deviations::All || d.adjacent(p, q) {
                        partners[i].push((j, v));
                    }
                }
            }
        }
    }
    let prefers = |p: usize, x: usize, y: usize| x != y && d.pref(p).prefers(x, y).unwrap();

    fn go(
        i: usize,
        values: &mut Vec<usize>,
        ctx: &dyn Fn(usize, usize, &[usize]) -> bool,
        total: usize,
        m: usize,
        count: &mut u64,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == total {
            *count += 1;
            return visit(values);
        }
        for x in 0..m {
            if ctx(i, x, values) {
                values.push(x);
                if go(i + 1, values, ctx, total, m, count, visit) {
                    return true;
                }
                values.pop();
            }
        }
        false
    }
    let ok = |i: usize, x: usize, values: &[usize]| {
        let prof = &profiles[i];
        if unanimity && prof.iter().all(|&p| d.top(p) == d.top(prof[0])) && x != d.top(prof[0]) {
            return false;
        }
        partners[i].iter().all(|&(j, v)| {
            let y = values[j];
            // truth at i, lie to j; truth at j, lie to i
            !prefers(profiles[i][v], y, x) && !prefers(profiles[j][v], x, y)
        })
    };
    let mut count = 0;
    let mut values = Vec::with_capacity(total);
    go(0, &mut values, &ok, total, d.m(), &mut count, visit);
    count
}

/// Outcome depends only on the tops, by comparing every pair of profiles.
pub fn tops_only_oracle(d: &Domain, n: usize, values: &[usize]) -> bool {
    let len = d.len();
    let tops = |mut idx: usize| {
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = d.top(idx % len);
            idx /= len;
        }
        out
    };
    (0..values.len()).all(|i| (0..i).all(|j| tops(i) != tops(j) || values[i] == values[j]))
}

/// Some voter's top is selected at every profile.
pub fn dictatorial_oracle(d: &Domain, n: usize, values: &[usize]) -> bool {
    let len = d.len();
    (0..n).any(|v| {
        let stride = len.pow((n - 1 - v) as u32);
        values.iter().enumerate().all(|(i, &x)| x == d.top((i / stride) % len))
    })
}
