//! Shared test helpers: the brute-force zero-pattern oracle for the minimal
//! prolongation rank, and dense integer matrix arithmetic for block-identity
//! checks.
//!
//! The oracle shares the exact LP solver with the implementation but nothing
//! else: it enumerates every subset of rows outright, largest first, with a
//! test-local Gaussian elimination to discard subsets that force `h = 0`.
#![allow(dead_code)] // each integration test pulls in the helpers it needs

use num_traits::Zero;
use sosrank::prolongation::{build_direct, CoeffVector, ProlongMatrix};
use sosrank::ratlp::{solve_feasibility, FeasResult, LinearSystem};
use sosrank::rational::{rat, Rat};

/// Exact rank of a dense rational matrix by Gaussian elimination.
fn gauss_rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut pivot_col = 0;
    while rank < rows && pivot_col < cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][pivot_col].is_zero()) else {
            pivot_col += 1;
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = m[rank][pivot_col].clone();
        for c in pivot_col..cols {
            let v = m[rank][c].clone() / &inv;
            m[rank][c] = v;
        }
        for r in 0..rows {
            if r != rank && !m[r][pivot_col].is_zero() {
                let f = m[r][pivot_col].clone();
                for c in pivot_col..cols {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        pivot_col += 1;
    }
    rank
}

fn dense_rows(j: &ProlongMatrix) -> Vec<Vec<Rat>> {
    let mut rows = vec![vec![Rat::zero(); j.cols()]; j.rows()];
    for &(r, c) in j.entries() {
        rows[r][c] = rat(1);
    }
    rows
}

/// Brute-force minimal prolongation rank: enumerate every zero-subset of
/// rows from largest to smallest and test each with an LP per negativity
/// column. `None` when no qualifying vector exists at all.
pub fn oracle_rnd(n: usize, d: u32) -> Option<usize> {
    let j = build_direct(n, d);
    let rows = j.rows();
    assert!(rows <= 16, "oracle is exponential in the row count");
    let dense = dense_rows(&j);

    for zeros in (0..=rows).rev() {
        for mask in 0u32..(1u32 << rows) {
            if mask.count_ones() as usize != zeros {
                continue;
            }
            let selected: Vec<usize> = (0..rows).filter(|r| mask >> r & 1 == 1).collect();
            // Forced-zero rows that only admit h = 0 cannot host a
            // qualifying vector; skip the LP.
            if zeros > 0 {
                let sub: Vec<Vec<Rat>> = selected.iter().map(|&r| dense[r].clone()).collect();
                if gauss_rank(sub) == j.cols() {
                    continue;
                }
            }
            for col in 0..j.cols() {
                let mut sys = LinearSystem::new(j.cols());
                for (r, coeffs) in dense.iter().enumerate() {
                    if mask >> r & 1 == 1 {
                        sys.push_eq(coeffs.clone(), rat(0), format!("zero:{r}"));
                    } else {
                        sys.push_ge(coeffs.clone(), rat(0), format!("free:{r}"));
                    }
                }
                let mut neg = vec![Rat::zero(); j.cols()];
                neg[col] = rat(-1);
                sys.push_ge(neg, rat(1), format!("neg:{col}"));
                if let FeasResult::Feasible { witness } = solve_feasibility(&sys) {
                    let h = CoeffVector::from_rats(n, d, witness).expect("LP width matches");
                    let jh = j.apply(&h).expect("dims");
                    assert!(!h.is_nonneg() && jh.is_nonneg(), "oracle witness re-check");
                    // The witness cannot carry more zeros than the mask:
                    // its full zero set was enumerated earlier.
                    assert_eq!(jh.rank(), rows - zeros, "oracle rank re-check");
                    return Some(rows - zeros);
                }
            }
        }
    }
    None
}

/// Dense integer product of two 0/1 prolongation matrices.
pub fn dense_product(a: &ProlongMatrix, b: &ProlongMatrix) -> Vec<Vec<i64>> {
    assert_eq!(a.cols(), b.rows());
    let mut out = vec![vec![0i64; b.cols()]; a.rows()];
    let b_dense = {
        let mut m = vec![vec![0i64; b.cols()]; b.rows()];
        for &(r, c) in b.entries() {
            m[r][c] = 1;
        }
        m
    };
    for &(r, k) in a.entries() {
        for c in 0..b.cols() {
            out[r][c] += b_dense[k][c];
        }
    }
    out
}
