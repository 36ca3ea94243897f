use prefdomain::orders::all_orders;
use prefdomain::LinearOrder;
use proptest::prelude::*;

/// Number of discordant pairs, counted directly from ranks.
fn kendall_tau(p: &LinearOrder, q: &LinearOrder) -> usize {
    let m = p.m();
    let mut count = 0;
    for a in 0..m {
        for b in a + 1..m {
            let pa = p.rank_of(a).unwrap() < p.rank_of(b).unwrap();
            let qa = q.rank_of(a).unwrap() < q.rank_of(b).unwrap();
            if pa != qa {
                count += 1;
            }
        }
    }
    count
}

fn order(m: usize) -> impl Strategy<Value = LinearOrder> {
    Just((0..m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| LinearOrder::new(v).unwrap())
}

#[test]
fn kth_and_rank_of_are_inverse_exhaustively() {
    for m in 2..=5 {
        for p in all_orders(m) {
            for k in 1..=m {
                assert_eq!(p.rank_of(p.kth(k).unwrap()).unwrap(), k);
            }
            for a in 0..m {
                assert_eq!(p.kth(p.rank_of(a).unwrap()).unwrap(), a);
            }
        }
    }
}

#[test]
fn adjacent_swaps_match_brute_force() {
    for m in 2..=4 {
        let all = all_orders(m);
        for p in &all {
            let mut fast = p.adjacent_swaps();
            fast.sort();
            let mut slow: Vec<LinearOrder> = all.iter().filter(|q| p.is_adjacent(q).unwrap()).cloned().collect();
            slow.sort();
            assert_eq!(fast, slow);
            assert_eq!(fast.len(), m - 1);
        }
    }
}

#[test]
fn adjacency_is_kendall_distance_one_exhaustively() {
    let all = all_orders(4);
    for p in &all {
        for q in &all {
            assert_eq!(p.is_adjacent(q).unwrap(), kendall_tau(p, q) == 1);
        }
    }
}

proptest! {
    #[test]
    fn adjacency_symmetric_and_irreflexive((p, q) in (2usize..8).prop_flat_map(|m| (order(m), order(m)))) {
        prop_assert!(!p.is_adjacent(&p).unwrap());
        prop_assert_eq!(p.is_adjacent(&q).unwrap(), q.is_adjacent(&p).unwrap());
        if p.is_adjacent(&q).unwrap() {
            prop_assert_eq!(kendall_tau(&p, &q), 1);
        }
    }

    #[test]
    fn swaps_are_adjacent_and_distinct(p in (2usize..9).prop_flat_map(order)) {
        let swaps = p.adjacent_swaps();
        prop_assert_eq!(swaps.len(), p.m() - 1);
        for (i, q) in swaps.iter().enumerate() {
            prop_assert!(p.is_adjacent(q).unwrap());
            prop_assert_eq!(kendall_tau(&p, q), 1);
            prop_assert!(swaps[i + 1..].iter().all(|r| r != q));
        }
    }

    #[test]
    fn prefers_is_a_tournament(p in (2usize..9).prop_flat_map(order), a in 0usize..8, b in 0usize..8) {
        let m = p.m();
        prop_assume!(a < m && b < m);
        if a == b {
            prop_assert!(p.prefers(a, b).is_err());
        } else {
            let ab = p.prefers(a, b).unwrap();
            prop_assert_ne!(ab, p.prefers(b, a).unwrap());
            prop_assert_eq!(ab, p.rank_of(a).unwrap() < p.rank_of(b).unwrap());
        }
    }

    #[test]
    fn top_beats_everything(p in (2usize..9).prop_flat_map(order)) {
        let top = p.kth(1).unwrap();
        prop_assert_eq!(top, p.top());
        for x in (0..p.m()).filter(|&x| x != top) {
            prop_assert!(p.prefers(top, x).unwrap());
        }
    }
}
