//! The six bundled domains, plus generators for the unrestricted,
//! single-peaked and single-dipped domains.

use crate::domains::Domain;
use crate::error::{Error, Result};
use crate::format;
use crate::orders::{all_orders, AlternativeSet, LinearOrder};

const TABLES: [(&str, &str); 6] = [
    ("table1", include_str!("../fixtures/table1.dom")),
    ("table2", include_str!("../fixtures/table2.dom")),
    ("table3", include_str!("../fixtures/table3.dom")),
    ("table4", include_str!("../fixtures/table4.dom")),
    ("table5", include_str!("../fixtures/table5.dom")),
    ("table6", include_str!("../fixtures/table6.dom")),
];

pub const FIXTURE_NAMES: [&str; 6] = ["table1", "table2", "table3", "table4", "table5", "table6"];

pub const GENERATOR_NAMES: [&str; 3] = ["unrestricted", "single_peaked", "single_dipped"];

/// Largest m accepted by [`unrestricted`].
pub const MAX_UNRESTRICTED_M: usize = 6;
/// Largest m accepted by the single-peaked and single-dipped generators.
pub const MAX_SPECTRUM_M: usize = 8;

/// A one-line description per fixture, for listings.
pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "table1" => "circular domain",
        "table2" => "single-crossing domain",
        "table3" => "single-peaked domain",
        "table4" => "union of single-peaked and single-dipped preferences",
        "table5" => "table4 plus one preference, without Property P",
        "table6" => "connected domain with the disagreement property",
        "unrestricted" => "all m! orders (--m)",
        "single_peaked" => "orders single-peaked on a spectrum (--m or --spectrum)",
        "single_dipped" => "orders single-dipped on a spectrum (--m or --spectrum)",
        _ => return None,
    })
}

fn unknown(name: &str) -> Error {
    Error::UnknownFixture {
        name: name.to_string(),
        available: FIXTURE_NAMES
            .iter()
            .chain(GENERATOR_NAMES.iter())
            .copied()
            .collect::<Vec<_>>()
            .join(", "),
    }
}

/// The stored file text of a table fixture.
pub fn fixture_text(name: &str) -> Result<&'static str> {
    TABLES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| unknown(name))
}

pub fn fixture(name: &str) -> Result<Domain> {
    format::parse_domain(fixture_text(name)?)
}

/// All m! orders over `a1..am`, lexicographic.
pub fn unrestricted(m: usize) -> Result<Domain> {
    if !(2..=MAX_UNRESTRICTED_M).contains(&m) {
        return Err(Error::Argument(format!(
            "unrestricted domain needs 2 <= m <= {MAX_UNRESTRICTED_M}, got {m}"
        )));
    }
    Domain::new(AlternativeSet::indexed(m)?, all_orders(m))
}

fn spectrum_filter(
    alts: AlternativeSet,
    spectrum: &LinearOrder,
    keep: impl Fn(&LinearOrder, &LinearOrder) -> bool,
) -> Result<Domain> {
    let m = alts.len();
    if spectrum.m() != m {
        return Err(Error::MismatchedAlternatives {
            left: m,
            right: spectrum.m(),
        });
    }
    if m > MAX_SPECTRUM_M {
        return Err(Error::Argument(format!(
            "spectrum generators need m <= {MAX_SPECTRUM_M}, got {m}"
        )));
    }
    let orders = all_orders(m).into_iter().filter(|p| keep(p, spectrum)).collect();
    Domain::new(alts, orders)
}

/// Every prefix of `ranking` occupies a contiguous block of the spectrum.
fn prefixes_are_intervals(ranking: impl Iterator<Item = usize>, spectrum: &LinearOrder) -> bool {
    let (mut lo, mut hi) = (usize::MAX, 0);
    for (k, a) in ranking.enumerate() {
        let pos = spectrum.position(a);
        lo = lo.min(pos);
        hi = hi.max(pos);
        if hi - lo != k {
            return false;
        }
    }
    true
}

pub(crate) fn is_single_peaked(p: &LinearOrder, spectrum: &LinearOrder) -> bool {
    prefixes_are_intervals(p.ranking(), spectrum)
}

pub(crate) fn is_single_dipped(p: &LinearOrder, spectrum: &LinearOrder) -> bool {
    let worst_first: Vec<usize> = p.ranking().collect();
    prefixes_are_intervals(worst_first.into_iter().rev(), spectrum)
}

/// All orders single-peaked with respect to `spectrum` (left to right).
pub fn single_peaked(alts: AlternativeSet, spectrum: &LinearOrder) -> Result<Domain> {
    spectrum_filter(alts, spectrum, is_single_peaked)
}

/// All orders whose reverse is single-peaked with respect to `spectrum`.
pub fn single_dipped(alts: AlternativeSet, spectrum: &LinearOrder) -> Result<Domain> {
    spectrum_filter(alts, spectrum, is_single_dipped)
}

/// Natural spectrum `a1 < a2 < .. < am`.
pub fn natural_spectrum(m: usize) -> Result<(AlternativeSet, LinearOrder)> {
    let alts = AlternativeSet::indexed(m)?;
    let spectrum = LinearOrder::new((0..m).collect())?;
    Ok((alts, spectrum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn all_tables_load() {
        let sizes: Vec<usize> = FIXTURE_NAMES.iter().map(|n| fixture(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![8, 7, 8, 12, 13, 9]);
        for name in FIXTURE_NAMES {
            assert_eq!(fixture(name).unwrap().m(), 4);
        }
    }

    #[test]
    fn table2_tops() {
        let d = fixture("table2").unwrap();
        let tops: Vec<usize> = (0..d.len()).map(|i| d.top(i)).collect();
        assert_eq!(tops, vec![0, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn unknown_fixture_lists_names() {
        let err = fixture("table9").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("table1") && msg.contains("single_dipped"), "{msg}");
    }

    #[test]
    fn unrestricted_sizes() {
        assert_eq!(unrestricted(3).unwrap().len(), 6);
        assert_eq!(unrestricted(4).unwrap().len(), 24);
        assert!(unrestricted(1).is_err());
        assert!(unrestricted(7).is_err());
    }

    #[test]
    fn table3_is_single_peaked_domain() {
        let (alts, spectrum) = natural_spectrum(4).unwrap();
        let sp = single_peaked(alts, &spectrum).unwrap();
        let t3 = fixture("table3").unwrap();
        let a: BTreeSet<_> = sp.prefs().iter().cloned().collect();
        let b: BTreeSet<_> = t3.prefs().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn spectrum_counts() {
        // 2^(m-1) single-peaked orders, and as many single-dipped
        for m in 2..=6 {
            let (alts, spectrum) = natural_spectrum(m).unwrap();
            assert_eq!(single_peaked(alts.clone(), &spectrum).unwrap().len(), 1 << (m - 1));
            assert_eq!(single_dipped(alts, &spectrum).unwrap().len(), 1 << (m - 1));
        }
    }

    #[test]
    fn single_dipped_tops_are_extremes() {
        let (alts, spectrum) = natural_spectrum(5).unwrap();
        let d = single_dipped(alts, &spectrum).unwrap();
        for p in d.prefs() {
            assert!(p.top() == 0 || p.top() == 4);
        }
    }
}
