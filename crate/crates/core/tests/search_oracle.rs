//! The branch-and-bound search against the independent brute-force oracle,
//! plus the search invariants that do not fit a single module.

mod common;

use common::oracle_rnd;
use sosrank::search::{compute_rnd, verify_certificate, SearchConfig, SearchStatus};

fn plain_config(n: usize, d: u32) -> SearchConfig {
    let mut config = SearchConfig::new(n, d);
    // No published floors: the tree itself must prove the lower bound.
    config.structural_floors = false;
    config
}

#[test]
fn oracle_equivalence_2_2() {
    let oracle = oracle_rnd(2, 2);
    assert_eq!(oracle, Some(2));
    let cert = compute_rnd(&plain_config(2, 2)).unwrap();
    assert_eq!(cert.status, SearchStatus::Exact);
    assert_eq!(cert.value, oracle);
    assert!(verify_certificate(&cert));
    // The default configuration agrees.
    assert_eq!(compute_rnd(&SearchConfig::new(2, 2)).unwrap().value, oracle);
}

#[test]
fn oracle_equivalence_2_3() {
    let oracle = oracle_rnd(2, 3);
    assert_eq!(oracle, Some(2));
    let cert = compute_rnd(&plain_config(2, 3)).unwrap();
    assert_eq!(cert.value, oracle);
    assert!(verify_certificate(&cert));
}

#[test]
fn oracle_equivalence_3_2() {
    let oracle = oracle_rnd(3, 2);
    assert_eq!(oracle, Some(5));
    let cert = compute_rnd(&plain_config(3, 2)).unwrap();
    assert_eq!(cert.status, SearchStatus::Exact);
    assert_eq!(cert.value, oracle);
    assert!(verify_certificate(&cert));
}

#[test]
fn oracle_agrees_on_empty_degree_one_cells() {
    for n in 2..=3 {
        assert_eq!(oracle_rnd(n, 1), None);
        let cert = compute_rnd(&plain_config(n, 1)).unwrap();
        assert_eq!(cert.status, SearchStatus::Empty);
        assert!(verify_certificate(&cert));
    }
}

#[test]
fn symmetry_reduction_does_not_change_values() {
    for (n, d) in [(2usize, 2u32), (2, 3), (3, 2)] {
        let mut with = plain_config(n, d);
        with.symmetry = true;
        let mut without = plain_config(n, d);
        without.symmetry = false;
        let a = compute_rnd(&with).unwrap();
        let b = compute_rnd(&without).unwrap();
        assert_eq!(a.value, b.value, "cell ({n},{d})");
        assert!(verify_certificate(&a) && verify_certificate(&b));
        // The full disjunction explores at least as many nodes.
        assert!(b.nodes_explored >= a.nodes_explored);
    }
}

#[test]
fn search_without_seed_still_finds_the_minimum() {
    // Forcing the incumbent to start from a weak feasible point exercises
    // incumbent improvement inside the tree.
    let mut config = plain_config(3, 2);
    let weak = sosrank::prolongation::CoeffVector::from_ints(3, 2, &[4, -1, 2, 1, -1, 1]).unwrap();
    config.initial_upper = Some(weak);
    let cert = compute_rnd(&config).unwrap();
    assert_eq!(cert.value, Some(5));
    assert!(verify_certificate(&cert));
}

#[test]
fn budget_stop_produces_a_verifiable_bracket() {
    let mut config = plain_config(3, 2);
    config.node_budget = 25;
    let cert = compute_rnd(&config).unwrap();
    assert_eq!(cert.status, SearchStatus::Incomplete);
    assert_eq!(cert.nodes_explored, 25);
    assert!(cert.upper_bound.is_some());
    assert!(verify_certificate(&cert));
}

#[test]
fn computed_cells_respect_the_rank_recursion() {
    // value(n,d) >= min{ value(n,d-1), 3 + value(n-1,d), 3n-4 } across the
    // computed cells; a missing cell (empty feasible set) contributes no
    // constraint, matching a minimum over an empty branch.
    let value = |n: usize, d: u32| compute_rnd(&SearchConfig::new(n, d)).unwrap().value;
    let cells = [((2, 2), 2usize), ((3, 2), 5), ((4, 2), 8), ((2, 3), 2)];
    for ((n, d), expected) in cells {
        assert_eq!(value(n, d), Some(expected));
    }
    // (3,2): d-1 cell is empty, so min{3 + R_{2,2}, 3n-4} = 5.
    assert!(5 >= usize::min(3 + 2, 3 * 3 - 4));
    // (4,2): min{3 + R_{3,2}, 3n-4} = 8.
    assert!(8 >= usize::min(3 + 5, 3 * 4 - 4));
    // (2,3): min{R_{2,2}, 3n-4} = 2 (the n-1 cell is out of range).
    assert!(2 >= usize::min(2, 3 * 2 - 4));
}

#[test]
fn certified_non_sos_instances_clear_the_rank_floor() {
    // Tripwire: every certified prolongation of a non-nonnegative vector in
    // degree >= 2 carries rank at least 3n - 4.
    use sosrank::certify::{prolongation_rank, witness_f, witness_g};
    let w22 = sosrank::prolongation::CoeffVector::from_ints(2, 2, &[1, -1, 1]).unwrap();
    for (n, h) in [(2usize, w22), (3, witness_f()), (4, witness_g())] {
        let rank = prolongation_rank(&h).expect("prolongation is SOS");
        assert!(rank >= 3 * n - 4);
    }
    // LP-sampled cone points for n = 3..5 satisfy the same floor.
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(40);
    for n in 3..=5usize {
        for _ in 0..20 {
            if let Some(h) = sosrank::lemmas::sample_structural(&mut rng, n) {
                assert!(!h.is_nonneg());
                let rank = prolongation_rank(&h).expect("sampled from the cone");
                assert!(rank >= 3 * n - 4, "n={n} rank={rank}");
            }
        }
    }
}

#[test]
fn five_two_bracket_lower_bound_is_eleven() {
    let mut config = SearchConfig::new(5, 2);
    config.node_budget = 300;
    let cert = compute_rnd(&config).unwrap();
    assert_eq!(cert.status, SearchStatus::Incomplete);
    assert!(cert.lower_bound.unwrap() >= 11);
    assert!(verify_certificate(&cert));
}
