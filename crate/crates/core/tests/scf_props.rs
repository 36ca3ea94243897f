mod common;

use common::{dictatorial_oracle, enumerate_rules, p, sub4, tops_only_oracle, Deviations};
use prefdomain::domains;
use prefdomain::fixtures::{fixture, unrestricted};
use prefdomain::graph::induced_graph;
use prefdomain::scf::{
    check_decisive, check_dictatorship, check_local_sp, check_sp, check_tops_only, check_unanimity, clone_reduce,
    construct_case1, construct_case2, dictatorship_verdict, restrict, two_voter_slice, ScfVerdict,
};
use prefdomain::search::{search_scf, AxiomBundle, Budget, Incentive};
use prefdomain::{Domain, ScfTable};
use proptest::prelude::*;

fn confirm(f: &ScfTable, v: &ScfVerdict) {
    if let Some(w) = v.witness() {
        assert!(w.confirms(f), "{w:?}");
    }
}

/// The invariants every table must satisfy, plus witness replay.
fn table_invariants(f: &ScfTable) {
    let (u, l, s, t) = (check_unanimity(f), check_local_sp(f), check_sp(f), check_tops_only(f));
    for v in [&u, &l, &s, &t, &dictatorship_verdict(f)] {
        confirm(f, v);
    }
    if s.holds() {
        assert!(l.holds());
    }
    if let Some(i) = check_dictatorship(f) {
        assert!(u.holds() && s.holds() && t.holds());
        for a in 0..f.domain().m() {
            assert!(check_decisive(f, i, a).unwrap().holds());
        }
    }
    assert_eq!(check_dictatorship(f).is_some(), dictatorship_verdict(f).holds());
}

/// Axioms that hold on `f` also hold on `g`.
fn preserves(f: &ScfTable, g: &ScfTable, with_unanimity: bool) {
    if with_unanimity && check_unanimity(f).holds() {
        assert!(check_unanimity(g).holds());
    }
    if check_local_sp(f).holds() {
        assert!(check_local_sp(g).holds());
    }
    if check_sp(f).holds() {
        assert!(check_sp(g).holds());
    }
    if check_tops_only(f).holds() {
        assert!(check_tops_only(g).holds());
    }
}

fn derived_invariants(f: &ScfTable) {
    table_invariants(f);
    if f.n() >= 3 {
        let g = clone_reduce(f).unwrap();
        table_invariants(&g);
        preserves(f, &g, true);
        for tail in 0..f.domain().len() {
            let others = vec![tail; f.n() - 2];
            let h = two_voter_slice(f, &others).unwrap();
            table_invariants(&h);
            preserves(f, &h, false);
        }
    }
    let d = f.domain();
    for drop in 0..d.len().min(4) {
        let keep: Vec<usize> = (0..d.len()).filter(|&i| i != drop).collect();
        if keep.is_empty() {
            continue;
        }
        let sub = d.subdomain(&keep).unwrap();
        let r = restrict(f, &sub).unwrap();
        table_invariants(&r);
        preserves(f, &r, true);
        if let Some(i) = check_dictatorship(f) {
            assert!(prefdomain::scf::is_dictator(&r, i));
        }
    }
}

#[test]
fn gibbard_satterthwaite_count_on_three_alternatives() {
    let d = unrestricted(3).unwrap();
    let mut dictatorial = 0;
    let count = enumerate_rules(&d, 2, true, Deviations::All, &mut |v| {
        if dictatorial_oracle(&d, 2, v) {
            dictatorial += 1;
        }
        false
    });
    assert_eq!((count, dictatorial), (2, 2));
    let out = search_scf(&d, 2, &AxiomBundle::non_dictatorial_sp(), Budget::default()).unwrap();
    assert!(out.is_exhausted());
}

#[test]
fn constructions_on_fixtures() {
    let t1 = fixture("table1").unwrap();
    for base in 0..t1.len() {
        for n in 2..=3 {
            let f = construct_case1(&t1, base, n, 0, 1).unwrap();
            assert!(check_unanimity(&f).holds());
            assert!(check_local_sp(&f).holds());
            assert_eq!(check_dictatorship(&f), None);
            // a dictatorial domain admits no other unanimous SP rule
            assert!(!check_sp(&f).holds());
            derived_invariants(&f);
        }
    }
    for name in ["table2", "table3"] {
        let d = fixture(name).unwrap();
        let mut eligible = 0;
        for pstar in 0..d.len() {
            let Ok(f) = construct_case2(&d, pstar, 2, 0, 1) else { continue };
            eligible += 1;
            assert!(check_unanimity(&f).holds());
            assert!(check_local_sp(&f).holds());
            assert_eq!(check_dictatorship(&f), None);
            derived_invariants(&f);
            let g = construct_case2(&d, pstar, 3, 1, 2).unwrap();
            assert!(check_unanimity(&g).holds() && check_local_sp(&g).holds());
            assert_eq!(check_dictatorship(&g), None);
            derived_invariants(&g);
        }
        assert!(eligible >= 1, "{name}");
    }
}

#[test]
fn case2_rule_follows_its_branches() {
    let d = fixture("table3").unwrap();
    let f = construct_case2(&d, p(8), 2, 0, 1).unwrap();
    let closure = domains::tcc(&d, p(8)).unwrap();
    let (a, b) = (d.top(p(8)), 2);
    for p1 in 0..d.len() {
        for p2 in 0..d.len() {
            let expected = if closure.contains(&p1) {
                if d.pref(p2).prefers(a, b).unwrap() {
                    a
                } else {
                    b
                }
            } else {
                d.top(p1)
            };
            assert_eq!(f.get(&[p1, p2]), expected);
        }
    }
}

#[test]
fn clone_and_slice_bookkeeping() {
    let d = fixture("table2").unwrap();
    for v in 0..3 {
        let f = ScfTable::from_fn(&d, 3, |p| d.top(p[v])).unwrap();
        let g = clone_reduce(&f).unwrap();
        assert_eq!(check_dictatorship(&g), Some(v.saturating_sub(1)));
        for tail in 0..d.len() {
            let h = two_voter_slice(&f, &[tail]).unwrap();
            if v < 2 {
                assert_eq!(check_dictatorship(&h), Some(v));
            } else {
                assert!(h.values().all(|x| x == d.top(tail)));
            }
        }
    }
    assert!(clone_reduce(&ScfTable::from_fn(&d, 2, |p| d.top(p[0])).unwrap()).is_err());
}

#[test]
fn claim_c1_on_searched_tops_only_rules() {
    let bundle = AxiomBundle {
        require_unanimity: true,
        incentive: Incentive::LocalSp,
        require_tops_only: true,
        ..AxiomBundle::default()
    };
    let mut cases: Vec<Domain> = ["table4", "table5"].iter().map(|n| fixture(n).unwrap()).collect();
    cases.push(unrestricted(3).unwrap());
    for d in &cases {
        for restricted in [false, true] {
            let b = AxiomBundle { restrict_search_to_tops_only: restricted, ..bundle };
            let out = search_scf(d, 2, &b, Budget::default()).unwrap();
            let f = out.found().expect("a dictatorship always qualifies");
            derived_invariants(f);
            let g = induced_graph(d);
            for (a, bb) in g.edges() {
                for (x, y) in [(a, bb), (bb, a)] {
                    let outcomes: Vec<usize> = (0..d.len())
                        .filter(|&i| d.top(i) == x)
                        .flat_map(|i| (0..d.len()).filter(move |&j| d.top(j) == y).map(move |j| (i, j)))
                        .map(|(i, j)| f.get(&[i, j]))
                        .collect();
                    assert!(outcomes.windows(2).all(|w| w[0] == w[1]));
                    assert!(outcomes.iter().all(|&o| o == x || o == y));
                }
            }
        }
    }
}

fn bundle_strategy() -> impl Strategy<Value = AxiomBundle> {
    (
        any::<bool>(),
        prop_oneof![Just(Incentive::LocalSp), Just(Incentive::Sp)],
        0u8..4,
        any::<bool>(),
    )
        .prop_map(|(u, incentive, tops, forbid_dict)| AxiomBundle {
            require_unanimity: u,
            incentive,
            require_tops_only: tops == 1,
            forbid_tops_only: tops == 2,
            restrict_search_to_tops_only: tops == 3,
            forbid_dictatorship: forbid_dict,
        })
}

fn sub3() -> impl Strategy<Value = Domain> {
    prop::collection::btree_set(0usize..6, 1..=4).prop_map(|s| {
        let idx: Vec<usize> = s.into_iter().collect();
        unrestricted(3).unwrap().subdomain(&idx).unwrap()
    })
}

fn oracle_exists(d: &Domain, b: &AxiomBundle) -> bool {
    let dev = match b.incentive {
        Incentive::None => Deviations::None,
        Incentive::LocalSp => Deviations::Adjacent,
        Incentive::Sp => Deviations::All,
    };
    let mut found = false;
    enumerate_rules(d, 2, b.require_unanimity, dev, &mut |v| {
        let tops_only = tops_only_oracle(d, 2, v);
        let ok = (!(b.require_tops_only || b.restrict_search_to_tops_only) || tops_only)
            && (!b.forbid_tops_only || !tops_only)
            && (!b.forbid_dictatorship || !dictatorial_oracle(d, 2, v));
        found |= ok;
        ok
    });
    found
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn search_matches_brute_force(d in sub3(), b in bundle_strategy()) {
        let out = search_scf(&d, 2, &b, Budget::default()).unwrap();
        prop_assert!(!out.is_timeout());
        prop_assert_eq!(out.found().is_some(), oracle_exists(&d, &b));
        if let Some(f) = out.found() {
            table_invariants(f);
        }
    }

    #[test]
    fn random_tables_respect_implications(
        d in sub3(),
        seed in prop::collection::vec(0usize..3, 16),
    ) {
        let f = ScfTable::from_fn(&d, 2, |p| seed[p[0] * 4 + p[1]]).unwrap();
        table_invariants(&f);
        prop_assert_eq!(check_tops_only(&f).holds(), tops_only_oracle(&d, 2, &f.values().collect::<Vec<_>>()));
    }

    #[test]
    fn constructions_on_random_domains(s in prop::collection::btree_set(0usize..24, 2..=10), n in 2usize..=3) {
        let d = sub4(&s.into_iter().collect::<Vec<_>>());
        prop_assume!(domains::is_minimally_rich(&d).holds());
        let connected = domains::is_connected(&d).holds();
        let mut built = Vec::new();
        if connected {
            prop_assert!(construct_case1(&d, 0, n, 0, 1).is_err());
            for pstar in 0..d.len() {
                if let Ok(f) = construct_case2(&d, pstar, n, 0, 1) {
                    prop_assert!(!domains::has_two_distinct_neighbours(&d, pstar).unwrap().holds());
                    built.push(f);
                }
            }
            // a connected domain that is not CDN has an eligible closure
            if !domains::is_cdn(&d).unwrap().holds() {
                prop_assert!(!built.is_empty());
            }
        } else {
            prop_assert!(construct_case2(&d, 0, n, 0, 1).is_err());
            built.push(construct_case1(&d, 0, n, 0, 1).unwrap());
        }
        for f in &built {
            prop_assert!(check_unanimity(f).holds());
            prop_assert!(check_local_sp(f).holds());
            prop_assert_eq!(check_dictatorship(f), None);
        }
        if n == 2 {
            for f in &built {
                derived_invariants(f);
            }
        }
    }
}
