//! The prolongation matrix `J_{n,d}`, exact coefficient vectors, and the
//! block decomposition by maximal `x_1`-power.
//!
//! `J_{n,d}` maps degree-`d` coefficient vectors to degree-`(d+1)` ones:
//! applying it to the coefficients of `A(x)` yields the coefficients of
//! `A(x) * (x_1 + ... + x_n)`. It is a `C(n+d, d+1) x C(n+d-1, d)` matrix of
//! zeros and ones, with entry `(beta, alpha) = 1` exactly when `beta - alpha`
//! is a unit index. Two constructions are kept deliberately separate: the
//! direct one from that entry rule, and the block-recursive one assembling
//! `J_{n,d}` from `J_{n,d-1}`, `J_{n-1,d}` and an identity block; tests hold
//! them bit-identical.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::counting::{profile, CountingProfile};
use crate::monomials::{basis_size, index_of, lex_basis, MonomialSpace, MultiIndex};
use crate::rational::{all_nonneg, Rat};
use crate::Error;

/// Sparse 0/1 prolongation matrix in triplet form, entries sorted by
/// `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProlongMatrix {
    n: usize,
    d: u32,
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize)>,
}

impl ProlongMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Nonzero positions, sorted by `(row, col)`.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Number of nonzero entries in each column; always exactly `n`.
    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0usize; self.cols];
        for &(_, c) in &self.entries {
            sums[c] += 1;
        }
        sums
    }

    /// Number of nonzero entries in each row; always within `1..=n`.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.rows];
        for &(r, _) in &self.entries {
            counts[r] += 1;
        }
        counts
    }

    /// Matrix-vector product `J h`, the coefficient vector of
    /// `A(x) * (x_1 + ... + x_n)`.
    pub fn apply(&self, h: &CoeffVector) -> Result<CoeffVector, Error> {
        if h.n != self.n || h.d != self.d {
            return Err(Error::DimensionMismatch { expected: self.cols, got: h.len() });
        }
        let mut out = vec![Rat::zero(); self.rows];
        for &(r, c) in &self.entries {
            if !h.entries[c].is_zero() {
                out[r] += &h.entries[c];
            }
        }
        Ok(CoeffVector { n: self.n, d: self.d + 1, entries: out })
    }

    /// Rows of the dense 0/1 matrix; only sensible at small sizes.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut dense = vec![vec![0u8; self.cols]; self.rows];
        for &(r, c) in &self.entries {
            dense[r][c] = 1;
        }
        dense
    }
}

/// Build `J_{n,d}` from the entry rule: `(beta, alpha)` is nonzero iff
/// `beta = alpha + e_j` for some variable `j`.
pub fn build_direct(n: usize, d: u32) -> ProlongMatrix {
    assert!(n >= 1);
    let cols_basis = lex_basis(n, d);
    let rows = basis_size(n, d + 1);
    let mut entries = Vec::with_capacity(cols_basis.len() * n);
    for (c, alpha) in cols_basis.iter().enumerate() {
        for j in 0..n {
            entries.push((index_of(&alpha.times_var(j)), c));
        }
    }
    entries.sort_unstable();
    entries.dedup();
    ProlongMatrix { n, d, rows, cols: cols_basis.len(), entries }
}

/// Build `J_{n,d}` by the block recursion
/// `J_{n,d} = [[J_{n,d-1}, 0], [., I], [0, J_{n-1,d}]]`,
/// splitting columns by whether `x_1` divides the monomial and rows likewise.
///
/// Bit-identical to [`build_direct`]; kept as an independent construction so
/// the recursion itself stays under test.
pub fn build_recursive(n: usize, d: u32) -> ProlongMatrix {
    let mut memo = HashMap::new();
    build_recursive_memo(n, d, &mut memo)
}

fn build_recursive_memo(
    n: usize,
    d: u32,
    memo: &mut HashMap<(usize, u32), ProlongMatrix>,
) -> ProlongMatrix {
    if let Some(m) = memo.get(&(n, d)) {
        return m.clone();
    }
    let result = if n == 1 {
        ProlongMatrix { n, d, rows: 1, cols: 1, entries: vec![(0, 0)] }
    } else if d == 0 {
        // A constant times S_1: the all-ones column.
        ProlongMatrix { n, d, rows: n, cols: 1, entries: (0..n).map(|r| (r, 0)).collect() }
    } else {
        let top = build_recursive_memo(n, d - 1, memo);
        let bottom = build_recursive_memo(n - 1, d, memo);
        let cols_with_x1 = basis_size(n, d - 1);
        let cols_without = basis_size(n - 1, d);
        let rows_with_x1 = basis_size(n, d);
        let rows_without = basis_size(n - 1, d + 1);
        debug_assert_eq!(top.rows, rows_with_x1);
        debug_assert_eq!(top.cols, cols_with_x1);
        debug_assert_eq!(bottom.rows, rows_without);
        debug_assert_eq!(bottom.cols, cols_without);

        let mut entries = Vec::with_capacity(top.nnz() + cols_without + bottom.nnz());
        entries.extend_from_slice(&top.entries);
        // x_1 times the x_1-free part lands on the tail of the x_1-divisible
        // rows: an identity block of size C(n+d-2, d).
        for k in 0..cols_without {
            entries.push((rows_with_x1 - cols_without + k, cols_with_x1 + k));
        }
        for &(r, c) in &bottom.entries {
            entries.push((rows_with_x1 + r, cols_with_x1 + c));
        }
        entries.sort_unstable();
        ProlongMatrix {
            n,
            d,
            rows: rows_with_x1 + rows_without,
            cols: cols_with_x1 + cols_without,
            entries,
        }
    };
    memo.insert((n, d), result.clone());
    result
}

/// Exact-rational coefficient vector of a diagonal form in the
/// left-lexicographic degree-`d` basis over `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffVector {
    n: usize,
    d: u32,
    #[serde(with = "crate::rational::serde_vec")]
    entries: Vec<Rat>,
}

impl CoeffVector {
    pub fn zeros(n: usize, d: u32) -> Self {
        CoeffVector { n, d, entries: vec![Rat::zero(); basis_size(n, d)] }
    }

    pub fn from_rats(n: usize, d: u32, entries: Vec<Rat>) -> Result<Self, Error> {
        let expected = basis_size(n, d);
        if entries.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: entries.len() });
        }
        Ok(CoeffVector { n, d, entries })
    }

    pub fn from_ints(n: usize, d: u32, entries: &[i64]) -> Result<Self, Error> {
        Self::from_rats(n, d, entries.iter().map(|&v| crate::rational::rat(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Rat {
        &self.entries[i]
    }

    pub fn set_entry(&mut self, i: usize, v: Rat) {
        self.entries[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        all_nonneg(&self.entries)
    }

    pub fn profile(&self) -> CountingProfile {
        profile(&self.entries)
    }

    /// Number of nonzero coefficients.
    pub fn rank(&self) -> usize {
        self.profile().rank
    }

    pub fn add(&self, other: &CoeffVector) -> Result<CoeffVector, Error> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::DimensionMismatch { expected: self.len(), got: other.len() });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(CoeffVector { n: self.n, d: self.d, entries })
    }

    pub fn scale(&self, c: &Rat) -> CoeffVector {
        let entries = self.entries.iter().map(|x| x * c).collect();
        CoeffVector { n: self.n, d: self.d, entries }
    }

    pub fn neg(&self) -> CoeffVector {
        let entries = self.entries.iter().map(|x| -x).collect();
        CoeffVector { n: self.n, d: self.d, entries }
    }

    /// Coefficient vector of the product with a fixed monomial: the entry at
    /// `alpha` moves to `alpha + m`.
    pub fn mul_monomial(&self, m: &MultiIndex) -> Result<CoeffVector, Error> {
        if m.n() != self.n {
            return Err(Error::MixedVariableCount);
        }
        let mut out = CoeffVector::zeros(self.n, self.d + m.degree());
        for (i, v) in self.entries.iter().enumerate() {
            if !v.is_zero() {
                let alpha = crate::monomials::monomial_at(self.n, self.d, i)?;
                out.entries[index_of(&alpha.times(m))] = v.clone();
            }
        }
        Ok(out)
    }

    /// The monomial space spanned by the support.
    pub fn support_space(&self) -> MonomialSpace {
        let indices = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i);
        MonomialSpace::from_indices(self.n, self.d, indices).expect("indices in range")
    }

    /// Apply the variable permutation `sigma` (as images of `x_1..x_n`).
    pub fn permute_variables(&self, sigma: &[usize]) -> Result<CoeffVector, Error> {
        if sigma.len() != self.n {
            return Err(Error::MixedVariableCount);
        }
        let mut out = CoeffVector::zeros(self.n, self.d);
        for (i, v) in self.entries.iter().enumerate() {
            if !v.is_zero() {
                let alpha = crate::monomials::monomial_at(self.n, self.d, i)?;
                let mut exps = vec![0u32; self.n];
                for (j, &e) in alpha.exps().iter().enumerate() {
                    exps[sigma[j]] = e;
                }
                out.entries[index_of(&MultiIndex::new(exps))] = v.clone();
            }
        }
        Ok(out)
    }
}

/// Apply `J_{n,d_to-1} ... J_{n,d_from}` to `h`: the coefficients of
/// `A(x) * S_1(x)^(d_to - d_from)`.
pub fn iterated_apply(h: &CoeffVector, d_to: u32) -> Result<CoeffVector, Error> {
    if d_to < h.d {
        return Err(Error::Precondition(format!("d_to {} below vector degree {}", d_to, h.d)));
    }
    let mut v = h.clone();
    for d in h.d..d_to {
        v = build_direct(h.n, d).apply(&v)?;
    }
    Ok(v)
}

/// The block decomposition of a coefficient vector by maximal `x_1`-power,
/// with its slack vectors.
///
/// Writing `A(x) = sum_j x_1^(d-j) A_j(x_2..x_n)`, the blocks are the
/// coefficient vectors `h_j` of the `A_j`, and the slacks are
/// `gamma_0 = h_0`, `gamma_i = J_{n-1,i-1} h_{i-1} + h_i`. The prolonged
/// vector `J_{n,d} h` is exactly the concatenation of the slacks and the
/// tail `J_{n-1,d} h_d`, which is what makes the nonnegativity criterion and
/// the rank identity block-local.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaDecomp {
    n: usize,
    d: u32,
    blocks: Vec<CoeffVector>,
    slacks: Vec<CoeffVector>,
    tail: CoeffVector,
}

impl GammaDecomp {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Block `h_j`, a degree-`j` vector over `n - 1` variables.
    pub fn block(&self, j: usize) -> &CoeffVector {
        &self.blocks[j]
    }

    pub fn blocks(&self) -> &[CoeffVector] {
        &self.blocks
    }

    /// Slack `gamma_i`.
    pub fn slack(&self, i: usize) -> &CoeffVector {
        &self.slacks[i]
    }

    pub fn slacks(&self) -> &[CoeffVector] {
        &self.slacks
    }

    /// The tail `J_{n-1,d} h_d`.
    pub fn tail(&self) -> &CoeffVector {
        &self.tail
    }

    /// Concatenation of the blocks: the original vector.
    pub fn reassemble(&self) -> CoeffVector {
        let entries: Vec<Rat> = self
            .blocks
            .iter()
            .flat_map(|b| b.entries.iter().cloned())
            .collect();
        CoeffVector::from_rats(self.n, self.d, entries).expect("block sizes sum to dimension")
    }

    /// Concatenation of slacks and tail: equals `J_{n,d} h`.
    pub fn prolonged(&self) -> CoeffVector {
        let entries: Vec<Rat> = self
            .slacks
            .iter()
            .chain(std::iter::once(&self.tail))
            .flat_map(|b| b.entries.iter().cloned())
            .collect();
        CoeffVector::from_rats(self.n, self.d + 1, entries)
            .expect("slack and tail sizes sum to prolonged dimension")
    }

    /// The nonnegativity criterion: `J_{n,d} h >= 0` iff every slack and the
    /// tail are nonnegative.
    pub fn prolongation_nonneg(&self) -> bool {
        self.slacks.iter().all(CoeffVector::is_nonneg) && self.tail.is_nonneg()
    }

    /// Rank of the prolonged vector as the sum of block ranks.
    pub fn rank_sum(&self) -> usize {
        self.slacks.iter().map(CoeffVector::rank).sum::<usize>() + self.tail.rank()
    }
}

/// Assemble a vector over `n` variables from its `x_1`-power blocks: block
/// `j` holds the coefficients of `x_1^(d-j) A_j(x_2..x_n)`.
pub fn from_blocks(n: usize, d: u32, blocks: &[CoeffVector]) -> Result<CoeffVector, Error> {
    if n < 2 {
        return Err(Error::TooFewVariables);
    }
    if blocks.len() != d as usize + 1 {
        return Err(Error::DimensionMismatch { expected: d as usize + 1, got: blocks.len() });
    }
    let mut entries = Vec::with_capacity(basis_size(n, d));
    for (j, block) in blocks.iter().enumerate() {
        if block.n != n - 1 || block.d != j as u32 {
            return Err(Error::DimensionMismatch {
                expected: basis_size(n - 1, j as u32),
                got: block.len(),
            });
        }
        entries.extend(block.entries.iter().cloned());
    }
    CoeffVector::from_rats(n, d, entries)
}

/// Split `h` by maximal `x_1`-power and form the slack vectors.
pub fn decompose(h: &CoeffVector) -> Result<GammaDecomp, Error> {
    if h.n < 2 {
        return Err(Error::TooFewVariables);
    }
    let (n, d) = (h.n, h.d);
    let mut blocks = Vec::with_capacity(d as usize + 1);
    let mut offset = 0usize;
    for j in 0..=d {
        let len = basis_size(n - 1, j);
        let entries = h.entries[offset..offset + len].to_vec();
        blocks.push(CoeffVector { n: n - 1, d: j, entries });
        offset += len;
    }
    debug_assert_eq!(offset, h.len());

    let mut slacks = Vec::with_capacity(d as usize + 1);
    slacks.push(blocks[0].clone());
    for i in 1..=d as usize {
        let carried = build_direct(n - 1, i as u32 - 1).apply(&blocks[i - 1])?;
        slacks.push(carried.add(&blocks[i])?);
    }
    let tail = build_direct(n - 1, d).apply(&blocks[d as usize])?;
    Ok(GammaDecomp { n, d, blocks, slacks, tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn witness_f_vec() -> CoeffVector {
        CoeffVector::from_ints(3, 2, &[1, -1, 2, 1, -1, 1]).unwrap()
    }

    #[test]
    fn direct_two_vars_degree_one() {
        let j = build_direct(2, 1);
        assert_eq!((j.rows(), j.cols()), (3, 2));
        // Rows x1^2, x1x2, x2^2 against columns x1, x2.
        assert_eq!(j.entries(), &[(0, 0), (1, 0), (1, 1), (2, 1)]);
    }

    #[test]
    fn one_variable_matrix_is_identity_of_size_one() {
        for d in 0..6 {
            let j = build_direct(1, d);
            assert_eq!((j.rows(), j.cols()), (1, 1));
            assert_eq!(j.entries(), &[(0, 0)]);
        }
    }

    #[test]
    fn three_vars_degree_two_shape() {
        let j = build_direct(3, 2);
        assert_eq!((j.rows(), j.cols()), (10, 6));
        assert!(j.column_sums().iter().all(|&s| s == 3));
        assert!(j.row_counts().iter().all(|&c| (1..=3).contains(&c)));
    }

    #[test]
    fn recursive_equals_direct_small() {
        for n in 1..=5 {
            for d in 0..=5 {
                assert_eq!(build_recursive(n, d), build_direct(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn identity_block_sizes_follow_macaulay_terms() {
        // The diagonal identity blocks of the fully unrolled recursion have
        // sizes C(n-1, 1), ..., C(n+d-2, d): the terms of the Macaulay
        // representation of C(n+d-1, d) - 1, plus the leading 1.
        let (n, d) = (4usize, 3u32);
        let sizes: Vec<usize> = (1..=d).map(|j| basis_size(n - 1, j)).collect();
        let total: usize = 1 + sizes.iter().sum::<usize>();
        assert_eq!(total, basis_size(n, d));
        let rep = crate::combinatorics::macaulay_rep(basis_size(n, d) as u64 - 1, d);
        let rep_sizes: Vec<usize> = rep
            .terms
            .iter()
            .rev()
            .map(|&(k, i)| crate::combinatorics::binomial(k, i as u64).try_into().unwrap())
            .collect();
        assert_eq!(sizes, rep_sizes);
    }

    #[test]
    fn apply_witness_f() {
        let jh = build_direct(3, 2).apply(&witness_f_vec()).unwrap();
        let expected = CoeffVector::from_ints(3, 3, &[1, 0, 3, 0, 0, 3, 1, 0, 0, 1]).unwrap();
        assert_eq!(jh, expected);
        assert_eq!(jh.rank(), 5);
    }

    #[test]
    fn apply_zero_and_small() {
        let zero = CoeffVector::zeros(3, 2);
        assert!(build_direct(3, 2).apply(&zero).unwrap().is_zero());

        // (x1^2 - x1x2 + x2^2)(x1 + x2) = x1^3 + x2^3
        let h = CoeffVector::from_ints(2, 2, &[1, -1, 1]).unwrap();
        let jh = build_direct(2, 2).apply(&h).unwrap();
        assert_eq!(jh, CoeffVector::from_ints(2, 3, &[1, 0, 0, 1]).unwrap());
    }

    #[test]
    fn apply_rejects_dimension_mismatch() {
        let h = CoeffVector::from_ints(2, 2, &[1, -1, 1]).unwrap();
        assert!(build_direct(3, 2).apply(&h).is_err());
        assert!(build_direct(2, 1).apply(&h).is_err());
    }

    #[test]
    fn iterated_apply_examples() {
        // (-x1 - x2)(x1 + x2)^2 = -(x1 + x2)^3: every coefficient negative.
        let h = CoeffVector::from_ints(2, 1, &[-1, -1]).unwrap();
        let v = iterated_apply(&h, 3).unwrap();
        assert_eq!(v, CoeffVector::from_ints(2, 3, &[-1, -3, -3, -1]).unwrap());
        assert_eq!(v.profile().zero, 0);

        // One step equals apply.
        let f = witness_f_vec();
        assert_eq!(iterated_apply(&f, 3).unwrap(), build_direct(3, 2).apply(&f).unwrap());

        // (x1 - x2 - x3)(x1 + x2 + x3)^2 has full support.
        let h = CoeffVector::from_ints(3, 1, &[1, -1, -1]).unwrap();
        let v = iterated_apply(&h, 3).unwrap();
        assert_eq!(
            v,
            CoeffVector::from_ints(3, 3, &[1, 1, 1, -1, -2, -1, -1, -3, -3, -1]).unwrap()
        );
        assert_eq!(v.profile().zero, 0);
    }

    #[test]
    fn decompose_witness_f() {
        let dec = decompose(&witness_f_vec()).unwrap();
        assert_eq!(dec.block(0), &CoeffVector::from_ints(2, 0, &[1]).unwrap());
        assert_eq!(dec.block(1), &CoeffVector::from_ints(2, 1, &[-1, 2]).unwrap());
        assert_eq!(dec.block(2), &CoeffVector::from_ints(2, 2, &[1, -1, 1]).unwrap());
        assert_eq!(dec.slack(0), &CoeffVector::from_ints(2, 0, &[1]).unwrap());
        assert_eq!(dec.slack(1), &CoeffVector::from_ints(2, 1, &[0, 3]).unwrap());
        assert_eq!(dec.slack(2), &CoeffVector::from_ints(2, 2, &[0, 0, 3]).unwrap());
        assert_eq!(dec.tail(), &CoeffVector::from_ints(2, 3, &[1, 0, 0, 1]).unwrap());
        assert_eq!(dec.reassemble(), witness_f_vec());
        // Rank identity: R(Jh) = R(gamma) + R(tail) = 3 + 2.
        assert_eq!(dec.rank_sum(), 5);
        let slack_rank: usize = dec.slacks().iter().map(CoeffVector::rank).sum();
        assert_eq!((slack_rank, dec.tail().rank()), (3, 2));
    }

    #[test]
    fn from_blocks_inverts_decompose() {
        let f = witness_f_vec();
        let dec = decompose(&f).unwrap();
        assert_eq!(from_blocks(3, 2, dec.blocks()).unwrap(), f);
        // Wrong block shape is rejected.
        assert!(from_blocks(3, 2, &[CoeffVector::zeros(2, 0)]).is_err());
    }

    #[test]
    fn decompose_rejects_single_variable() {
        let h = CoeffVector::from_ints(1, 3, &[2]).unwrap();
        assert!(matches!(decompose(&h), Err(Error::TooFewVariables)));
    }

    #[test]
    fn nonneg_vector_has_nonneg_slacks() {
        let h = CoeffVector::from_ints(3, 2, &[1, 0, 2, 0, 1, 3]).unwrap();
        let dec = decompose(&h).unwrap();
        assert!(dec.prolongation_nonneg());
    }

    #[test]
    fn support_of_nonneg_prolongation_is_shadow() {
        let h = CoeffVector::from_ints(3, 2, &[1, 0, 2, 0, 0, 3]).unwrap();
        let jh = build_direct(3, 2).apply(&h).unwrap();
        assert_eq!(jh.support_space(), h.support_space().shadow());
    }

    #[test]
    fn mul_monomial_lifts_degree() {
        let h = CoeffVector::from_ints(2, 2, &[1, -1, 1]).unwrap();
        let x1 = MultiIndex::new(vec![1, 0]);
        let lifted = h.mul_monomial(&x1).unwrap();
        assert_eq!(lifted, CoeffVector::from_ints(2, 3, &[1, -1, 1, 0]).unwrap());
        // Prolongation commutes with multiplication by a monomial, so the
        // rank is preserved.
        let j = build_direct(2, 3).apply(&lifted).unwrap();
        assert_eq!(j.rank(), 2);
    }

    fn arb_coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, len)
    }

    proptest! {
        // The prolonged vector is exactly the concatenation of slacks and
        // tail, for every h; nonnegativity equivalence follows entrywise.
        #[test]
        fn decomposition_reproduces_prolongation(vals in arb_coeffs(15)) {
            let h = CoeffVector::from_ints(4, 2, &vals[..10].to_vec().as_slice()).unwrap();
            let dec = decompose(&h).unwrap();
            let jh = build_direct(4, 2).apply(&h).unwrap();
            prop_assert_eq!(dec.prolonged(), jh.clone());
            prop_assert_eq!(dec.reassemble(), h);
            prop_assert_eq!(dec.prolongation_nonneg(), jh.is_nonneg());
            prop_assert_eq!(dec.rank_sum(), jh.rank());
        }

        // For nonnegative coefficients nothing cancels: the support of the
        // prolongation is exactly the shadow of the support.
        #[test]
        fn nonneg_prolongation_support_is_shadow(vals in arb_coeffs(10), d in 1u32..4) {
            let len = basis_size(3, d);
            let entries: Vec<i64> = vals.iter().cycle().take(len).map(|v| v.abs()).collect();
            let h = CoeffVector::from_ints(3, d, &entries).unwrap();
            let jh = build_direct(3, d).apply(&h).unwrap();
            prop_assert_eq!(jh.support_space(), h.support_space().shadow());
        }

        // Permuting variables commutes with prolongation.
        #[test]
        fn permutation_equivariance(vals in arb_coeffs(6), swap in 0usize..3) {
            let h = CoeffVector::from_ints(3, 2, &vals).unwrap();
            let mut sigma = vec![0usize, 1, 2];
            sigma.swap(swap, (swap + 1) % 3);
            let j = build_direct(3, 2);
            let lhs = j.apply(&h.permute_variables(&sigma).unwrap()).unwrap();
            let rhs = j.apply(&h).unwrap().permute_variables(&sigma).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
