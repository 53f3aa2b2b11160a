//! SOS certification of diagonal Hermitian forms and of their first
//! prolongation.
//!
//! For a diagonal form the whole question is componentwise: the form is a sum
//! of squares iff its coefficient vector is nonnegative, and its first
//! prolongation is iff `J_{n,d} h >= 0`. An inhomogeneous diagonal polynomial
//! splits into bihomogeneous pieces that never interact, so certification and
//! rank are additive over degrees.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{conjecture_bands, BandClass};
use crate::prolongation::{build_direct, CoeffVector};
use crate::Error;

/// A diagonal form is SOS iff every coefficient is nonnegative.
pub fn is_sos_diagonal(h: &CoeffVector) -> bool {
    h.is_nonneg()
}

/// Rank of the first prolongation when it is SOS, else `None`.
///
/// The rank of `A(z,zbar)||z||^2` equals the number of nonzero entries of
/// `J_{n,d} h`, which for an SOS is the number of squares in a minimal
/// representation.
pub fn prolongation_rank(h: &CoeffVector) -> Option<usize> {
    let jh = build_direct(h.n(), h.d()).apply(h).expect("dimensions match by construction");
    if jh.is_nonneg() {
        Some(jh.rank())
    } else {
        None
    }
}

/// Certification of one bihomogeneous piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCert {
    pub degree: u32,
    pub is_sos: bool,
    pub prolong_sos: bool,
    pub rank: Option<usize>,
    /// Degree 0 and 1 pieces with a negative coefficient can never become
    /// SOS after a single prolongation.
    pub low_degree_obstruction: bool,
}

/// Certification report for a diagonal polynomial given degree by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub n: usize,
    pub degrees: Vec<DegreeCert>,
    pub is_sos: bool,
    pub prolong_sos: bool,
    /// Sum of the per-degree prolongation ranks; present iff every piece
    /// prolongs to an SOS.
    pub total_rank: Option<usize>,
    /// Where the total rank sits relative to the conjectured bands.
    pub band: Option<BandClass>,
}

/// Certify a diagonal polynomial from its bihomogeneous pieces.
///
/// All parts must share the variable count and have distinct degrees. The
/// zero polynomial (or an empty list) is the trivial SOS of rank zero.
pub fn certify_polynomial(parts: &[CoeffVector]) -> Result<CertReport, Error> {
    let n = match parts.first() {
        Some(p) => p.n(),
        None => {
            return Ok(CertReport {
                n: 0,
                degrees: Vec::new(),
                is_sos: true,
                prolong_sos: true,
                total_rank: Some(0),
                band: Some(BandClass::Zero),
            })
        }
    };
    let mut seen = std::collections::BTreeSet::new();
    for p in parts {
        if p.n() != n {
            return Err(Error::MixedVariableCount);
        }
        if !seen.insert(p.d()) {
            return Err(Error::DuplicateDegree(p.d()));
        }
    }

    let mut degrees = Vec::with_capacity(parts.len());
    for p in parts {
        let is_sos = is_sos_diagonal(p);
        let rank = prolongation_rank(p);
        degrees.push(DegreeCert {
            degree: p.d(),
            is_sos,
            prolong_sos: rank.is_some(),
            rank,
            low_degree_obstruction: p.d() <= 1 && !is_sos,
        });
    }
    let is_sos = degrees.iter().all(|c| c.is_sos);
    let prolong_sos = degrees.iter().all(|c| c.prolong_sos);
    let total_rank = if prolong_sos {
        Some(degrees.iter().map(|c| c.rank.unwrap_or(0)).sum())
    } else {
        None
    };
    let band = total_rank
        .filter(|_| n >= 2)
        .map(|r| conjecture_bands(n as u64).classify(r as u64));
    Ok(CertReport { n, degrees, is_sos, prolong_sos, total_rank, band })
}

/// Coefficient vector of the cubic `f`, the extremal witness in three
/// variables: not SOS, prolongation SOS of rank 5.
pub fn witness_f() -> CoeffVector {
    CoeffVector::from_ints(3, 2, &[1, -1, 2, 1, -1, 1]).expect("fixed dimensions")
}

/// Coefficient vector of the extremal witness `g` in four variables:
/// not SOS, prolongation SOS of rank 8.
pub fn witness_g() -> CoeffVector {
    CoeffVector::from_ints(4, 2, &[1, -1, -1, 2, 1, 2, -1, 1, -1, 1]).expect("fixed dimensions")
}
