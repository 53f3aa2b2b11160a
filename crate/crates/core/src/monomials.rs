//! Multi-indices, left-lexicographic monomial bases, monomial spaces and
//! their shadows.
//!
//! The left-lexicographic order on degree-`d` monomials in `x_1..x_n` puts
//! `x_1^d` first and `x_n^d` last: a monomial precedes another when its
//! exponent vector is larger at the first position where they differ. Every
//! module in the crate indexes coefficient vectors by this one order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binom_u128;
use crate::Error;

/// Exponent vector of a monomial; the atom of all bases and supports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex {
    exps: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex { exps }
    }

    /// Number of ambient variables.
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Multiply by the variable `x_{j+1}` (0-indexed `j`).
    pub fn times_var(&self, j: usize) -> MultiIndex {
        let mut exps = self.exps.clone();
        exps[j] += 1;
        MultiIndex { exps }
    }

    /// Divide by `x_{j+1}` if it divides this monomial.
    pub fn div_var(&self, j: usize) -> Option<MultiIndex> {
        if self.exps[j] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[j] -= 1;
        Some(MultiIndex { exps })
    }

    /// Componentwise product with another monomial of the same arity.
    pub fn times(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.n(), other.n());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        MultiIndex { exps }
    }

    /// Exponent multiset sorted descending: the canonical representative of
    /// the orbit under variable permutations.
    pub fn sorted_desc(&self) -> MultiIndex {
        let mut exps = self.exps.clone();
        exps.sort_unstable_by(|a, b| b.cmp(a));
        MultiIndex { exps }
    }

    /// Whether this monomial is its own orbit representative.
    pub fn is_orbit_representative(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] >= w[1])
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Number of degree-`d` monomials in `n` variables, `C(n+d-1, d)`.
pub fn basis_size(n: usize, d: u32) -> usize {
    binom_u128(n as u64 + d as u64 - 1, d as u64)
        .try_into()
        .expect("basis size exceeds usize")
}

/// All degree-`d` monomials in `n` variables in left-lexicographic order.
pub fn lex_basis(n: usize, d: u32) -> Vec<MultiIndex> {
    assert!(n >= 1, "lex_basis requires at least one variable");
    let mut out = Vec::with_capacity(basis_size(n, d));
    let mut current = vec![0u32; n];
    current[0] = d;
    loop {
        out.push(MultiIndex { exps: current.clone() });
        // Successor: move one unit from the rightmost positive entry left of
        // the end onto its right neighbour, sweeping the tail onto it.
        let last = current[n - 1];
        let Some(j) = (0..n - 1).rev().find(|&j| current[j] > 0) else {
            break;
        };
        current[j] -= 1;
        current[j + 1] = last + 1;
        for e in current[j + 2..].iter_mut() {
            *e = 0;
        }
    }
    out
}

/// Position of a monomial within `lex_basis(n, degree)`.
pub fn index_of(mi: &MultiIndex) -> usize {
    let n = mi.n() as u64;
    let mut remaining = mi.degree() as u64;
    let mut index: u128 = 0;
    for (j, &e) in mi.exps.iter().enumerate().take(mi.n() - 1) {
        let j = j as u64;
        let e = e as u64;
        // Monomials sharing the prefix but with a larger exponent here come
        // earlier; the hockey-stick identity collapses their count.
        if remaining > e {
            index += binom_u128(n - j + remaining - e - 2, remaining - e - 1);
        }
        remaining -= e;
    }
    index.try_into().expect("monomial index exceeds usize")
}

/// Inverse of [`index_of`]: the `i`-th monomial of `lex_basis(n, d)`.
pub fn monomial_at(n: usize, d: u32, i: usize) -> Result<MultiIndex, Error> {
    let size = basis_size(n, d);
    if i >= size {
        return Err(Error::IndexOutOfRange { index: i, size });
    }
    let mut exps = vec![0u32; n];
    let mut rest = i as u128;
    let mut remaining = d as u64;
    for j in 0..n - 1 {
        let vars_left = (n - j - 1) as u64;
        // Exponents descend from the remaining degree; skip whole blocks.
        let mut e = remaining;
        loop {
            let block = binom_u128(vars_left + remaining - e - 1, remaining - e);
            if rest < block {
                break;
            }
            rest -= block;
            e -= 1;
        }
        exps[j] = e as u32;
        remaining -= e;
    }
    exps[n - 1] = remaining as u32;
    Ok(MultiIndex { exps })
}

/// A set of degree-`d` monomials in `n` variables, stored by lex position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialSpace {
    pub n: usize,
    pub d: u32,
    members: BTreeSet<usize>,
}

impl MonomialSpace {
    pub fn empty(n: usize, d: u32) -> Self {
        MonomialSpace { n, d, members: BTreeSet::new() }
    }

    /// Build from explicit monomials, which must share arity and degree.
    pub fn from_monomials(n: usize, d: u32, monos: &[MultiIndex]) -> Result<Self, Error> {
        let mut members = BTreeSet::new();
        for m in monos {
            if m.n() != n {
                return Err(Error::MixedVariableCount);
            }
            if m.degree() != d {
                return Err(Error::DimensionMismatch { expected: d as usize, got: m.degree() as usize });
            }
            members.insert(index_of(m));
        }
        Ok(MonomialSpace { n, d, members })
    }

    pub fn from_indices(n: usize, d: u32, indices: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let size = basis_size(n, d);
        let mut members = BTreeSet::new();
        for i in indices {
            if i >= size {
                return Err(Error::IndexOutOfRange { index: i, size });
            }
            members.insert(i);
        }
        Ok(MonomialSpace { n, d, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn monomials(&self) -> Vec<MultiIndex> {
        self.members
            .iter()
            .map(|&i| monomial_at(self.n, self.d, i).expect("member index in range"))
            .collect()
    }

    pub fn is_subspace_of(&self, other: &MonomialSpace) -> bool {
        self.n == other.n && self.d == other.d && self.members.is_subset(&other.members)
    }

    /// Degree-`(d+1)` part of the monomial ideal this space generates:
    /// every member multiplied by every variable.
    pub fn shadow(&self) -> MonomialSpace {
        let mut members = BTreeSet::new();
        for m in self.monomials() {
            for j in 0..self.n {
                members.insert(index_of(&m.times_var(j)));
            }
        }
        MonomialSpace { n: self.n, d: self.d + 1, members }
    }

    /// Codimension inside the full degree-`d` space.
    pub fn codim(&self) -> usize {
        basis_size(self.n, self.d) - self.members.len()
    }

    /// Whether the members form an initial segment of the lex order.
    pub fn is_lex_segment(&self) -> bool {
        self.members.iter().enumerate().all(|(pos, &i)| pos == i)
    }

    /// Serialize as a JSON array of exponent vectors.
    pub fn to_exponent_lists(&self) -> Vec<Vec<u32>> {
        self.monomials().iter().map(|m| m.exps.clone()).collect()
    }
}

/// The first `size` monomials of `lex_basis(n, d)`.
pub fn lex_segment(n: usize, d: u32, size: usize) -> Result<MonomialSpace, Error> {
    let max = basis_size(n, d);
    if size > max {
        return Err(Error::SegmentTooLarge { size, max });
    }
    MonomialSpace::from_indices(n, d, 0..size)
}
