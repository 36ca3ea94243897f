//! One-line human descriptions of witnesses, with 1-based numbering.

use prefdomain::graph::GraphWitness;
use prefdomain::scf::ScfWitness;
use prefdomain::{AlternativeSet, DomainWitness};

fn pref(i: usize) -> String {
    format!("P{}", i + 1)
}

fn prefs(list: &[usize]) -> String {
    list.iter().map(|&i| pref(i)).collect::<Vec<_>>().join(", ")
}

fn profile(list: &[usize]) -> String {
    format!("({})", prefs(list))
}

fn labels(alts: &AlternativeSet, list: &[usize]) -> String {
    list.iter().map(|&a| alts.label(a)).collect::<Vec<_>>().join(", ")
}

pub fn domain(alts: &AlternativeSet, w: &DomainWitness) -> String {
    let l = |a: usize| alts.label(a);
    match w {
        DomainWitness::NeverTop { alternative } => format!("no preference ranks {} first", l(*alternative)),
        DomainWitness::Disconnected { first, second, components } => format!(
            "{} and {} are not connected ({} components)",
            pref(*first),
            pref(*second),
            components.len()
        ),
        DomainWitness::SingleTopNeighbours { preference, closure, neighbour_tops } => format!(
            "closure of {} is {{{}}}, its neighbours have tops {{{}}}",
            pref(*preference),
            prefs(closure),
            labels(alts, neighbour_tops)
        ),
        DomainWitness::Restoration { from, to, a, b } => format!(
            "no path between {} and {} keeps {{{}, {}}} from being restored",
            pref(*from),
            pref(*to),
            l(*a),
            l(*b)
        ),
        DomainWitness::Disagreement { first, second, over, under } => format!(
            "{} ~ {} swap tops, but no preference topped outside {{{}, {}}} ranks {} over {}",
            pref(*first),
            pref(*second),
            l(*over),
            l(*under),
            l(*over),
            l(*under)
        ),
    }
}

pub fn graph(alts: &AlternativeSet, w: &GraphWitness) -> String {
    let l = |a: usize| alts.label(a);
    match w {
        GraphWitness::Disconnected { first, second } => format!("{} and {} are not joined", l(*first), l(*second)),
        GraphWitness::LowDegree { vertex, degree } => format!("{} has degree {}", l(*vertex), degree),
        GraphWitness::Acyclic { edges, components } => {
            format!("forest with {edges} edges and {components} components")
        }
        GraphWitness::NoBridgePath { vertex } => format!(
            "{} is on no cycle and on no path between disjoint cycles",
            l(*vertex)
        ),
    }
}

pub fn scf(alts: &AlternativeSet, w: &ScfWitness) -> String {
    let l = |a: usize| alts.label(a);
    match w {
        ScfWitness::Unanimity { profile: p, expected, outcome } => format!(
            "at {} every voter tops {}, outcome is {}",
            profile(p),
            l(*expected),
            l(*outcome)
        ),
        ScfWitness::Manipulation(m) => format!(
            "voter {} at {} gains by reporting {}{}",
            m.voter + 1,
            profile(&m.profile),
            pref(m.deviation),
            if m.local { " (adjacent)" } else { "" }
        ),
        ScfWitness::TopsOnly { first, second } => format!(
            "{} and {} have the same tops but different outcomes",
            profile(first),
            profile(second)
        ),
        ScfWitness::NotDictatorial { profiles } => profiles
            .iter()
            .enumerate()
            .map(|(v, p)| format!("voter {} overruled at {}", v + 1, profile(p)))
            .collect::<Vec<_>>()
            .join("; "),
        ScfWitness::NotDecisive { voter, alternative, profile: p } => format!(
            "voter {} tops {} at {} but it is not chosen",
            voter + 1,
            l(*alternative),
            profile(p)
        ),
    }
}
