//! Exact rational linear feasibility with Farkas-style infeasibility
//! certificates.
//!
//! The solver core is a dense phase-1 simplex over arbitrary-precision
//! rationals with Bland's rule, so it is deterministic and cannot cycle.
//! Free variables are split into differences of nonnegative ones. Every
//! answer is checked before it is returned: a witness must satisfy every row
//! exactly, and infeasibility multipliers must reproduce the contradiction
//! `0 >= positive` exactly.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{rat, Rat};
use crate::Error;

/// Relation of a single row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// `a . x = rhs`
    Eq,
    /// `a . x >= rhs`
    Ge,
    /// `a . x > rhs`; only rhs 0 is meaningful, and such rows must be passed
    /// through [`homogenize_strict`] before solving.
    Gt,
}

/// One linear constraint with a provenance label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    #[serde(with = "crate::rational::serde_vec")]
    pub coeffs: Vec<Rat>,
    #[serde(with = "crate::rational::serde_one")]
    pub rhs: Rat,
    pub kind: RowKind,
    pub label: String,
}

/// A system of equality and inequality rows over `num_vars` free variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem { num_vars, rows: Vec::new() }
    }

    fn push(&mut self, coeffs: Vec<Rat>, rhs: Rat, kind: RowKind, label: impl Into<String>) {
        assert_eq!(coeffs.len(), self.num_vars, "row width must match variable count");
        self.rows.push(Row { coeffs, rhs, kind, label: label.into() });
    }

    pub fn push_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat, label: impl Into<String>) {
        self.push(coeffs, rhs, RowKind::Eq, label);
    }

    pub fn push_ge(&mut self, coeffs: Vec<Rat>, rhs: Rat, label: impl Into<String>) {
        self.push(coeffs, rhs, RowKind::Ge, label);
    }

    pub fn push_gt(&mut self, coeffs: Vec<Rat>, rhs: Rat, label: impl Into<String>) {
        self.push(coeffs, rhs, RowKind::Gt, label);
    }

    /// Debug dump for reproduction.
    pub fn dump_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("system serializes")
    }
}

fn dot(coeffs: &[Rat], x: &[Rat]) -> Rat {
    coeffs
        .iter()
        .zip(x)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, v)| c * v)
        .sum()
}

/// Outcome of a feasibility solve: a witness point or nonnegative multipliers
/// proving infeasibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FeasResult {
    Feasible {
        #[serde(with = "crate::rational::serde_vec")]
        witness: Vec<Rat>,
    },
    Infeasible {
        /// One multiplier per row: free sign on `Eq` rows, nonnegative on
        /// `Ge` rows. The combination of rows is the zero functional with a
        /// positive right-hand side.
        #[serde(with = "crate::rational::serde_vec")]
        multipliers: Vec<Rat>,
    },
}

/// Replace every strict row `a . x > 0` by `a . x >= 1`.
///
/// Valid for positively homogeneous systems only (every rhs zero): the
/// feasible set is a cone, so a strictly positive value can be scaled to 1.
pub fn homogenize_strict(sys: &LinearSystem) -> Result<LinearSystem, Error> {
    for (i, row) in sys.rows.iter().enumerate() {
        if !row.rhs.is_zero() {
            return Err(Error::NotHomogeneous(i));
        }
    }
    let rows = sys
        .rows
        .iter()
        .map(|row| match row.kind {
            RowKind::Gt => Row { kind: RowKind::Ge, rhs: rat(1), ..row.clone() },
            _ => row.clone(),
        })
        .collect();
    Ok(LinearSystem { num_vars: sys.num_vars, rows })
}

/// Check a witness against every row of the original system.
pub fn check_witness(sys: &LinearSystem, x: &[Rat]) -> bool {
    if x.len() != sys.num_vars {
        return false;
    }
    sys.rows.iter().all(|row| {
        let v = dot(&row.coeffs, x);
        match row.kind {
            RowKind::Eq => v == row.rhs,
            RowKind::Ge => v >= row.rhs,
            RowKind::Gt => v > row.rhs,
        }
    })
}

/// Check infeasibility multipliers: nonnegative on `Ge` rows, combining the
/// rows to the zero functional with positive combined rhs.
pub fn check_infeasibility_multipliers(sys: &LinearSystem, multipliers: &[Rat]) -> bool {
    if multipliers.len() != sys.rows.len() {
        return false;
    }
    let mut combined = vec![Rat::zero(); sys.num_vars];
    let mut combined_rhs = Rat::zero();
    for (row, m) in sys.rows.iter().zip(multipliers) {
        match row.kind {
            RowKind::Eq => {}
            RowKind::Ge => {
                if m.is_negative() {
                    return false;
                }
            }
            RowKind::Gt => return false,
        }
        if m.is_zero() {
            continue;
        }
        for (acc, c) in combined.iter_mut().zip(&row.coeffs) {
            *acc += m * c;
        }
        combined_rhs += m * &row.rhs;
    }
    combined.iter().all(Rat::is_zero) && combined_rhs.is_positive()
}

/// Decide feasibility of an `{=, >=}` system.
///
/// Deterministic for a fixed system; the result is verified internally and a
/// failure of that self-check is a bug, not a caller error. Panics if a
/// strict row reaches the core (route strict rows through
/// [`homogenize_strict`] first).
pub fn solve_feasibility(sys: &LinearSystem) -> FeasResult {
    assert!(
        sys.rows.iter().all(|r| r.kind != RowKind::Gt),
        "strict rows must be homogenized before solving"
    );
    let result = phase_one(sys);
    match &result {
        FeasResult::Feasible { witness } => {
            assert!(check_witness(sys, witness), "simplex produced an invalid witness");
        }
        FeasResult::Infeasible { multipliers } => {
            assert!(
                check_infeasibility_multipliers(sys, multipliers),
                "simplex produced an invalid infeasibility certificate"
            );
        }
    }
    result
}

/// Phase-1 simplex: minimize the sum of artificial variables.
fn phase_one(sys: &LinearSystem) -> FeasResult {
    let m = sys.num_vars;
    let n_rows = sys.rows.len();
    if n_rows == 0 {
        return FeasResult::Feasible { witness: vec![Rat::zero(); m] };
    }
    let n_slack = sys.rows.iter().filter(|r| r.kind == RowKind::Ge).count();

    // Columns: x+ (m) | x- (m) | slacks (n_slack) | artificials (n_rows).
    let n_cols = 2 * m + n_slack + n_rows;
    let art_base = 2 * m + n_slack;

    // Row sign flips making every rhs nonnegative.
    let flip: Vec<bool> = sys.rows.iter().map(|r| r.rhs.is_negative()).collect();

    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(n_rows + 1);
    let mut slack_idx = 0usize;
    for (i, row) in sys.rows.iter().enumerate() {
        let sign = if flip[i] { -Rat::one() } else { Rat::one() };
        let mut t = vec![Rat::zero(); n_cols + 1];
        for (j, c) in row.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let v = &sign * c;
                t[j] = v.clone();
                t[m + j] = -v;
            }
        }
        if row.kind == RowKind::Ge {
            t[2 * m + slack_idx] = -sign.clone();
            slack_idx += 1;
        }
        t[art_base + i] = Rat::one();
        t[n_cols] = &sign * &row.rhs;
        tab.push(t);
    }

    // Objective row: reduced costs for minimizing the artificial sum, with
    // the artificial basis already priced out. Last entry holds -z.
    let mut obj = vec![Rat::zero(); n_cols + 1];
    for t in &tab {
        for (o, v) in obj.iter_mut().zip(t.iter()) {
            *o -= v;
        }
    }
    for j in art_base..n_cols {
        obj[j] += Rat::one(); // cost 1 on artificials
    }

    let mut basis: Vec<usize> = (art_base..n_cols).collect();

    loop {
        // Bland: entering column = smallest index with negative reduced cost.
        let Some(pivot_col) = (0..n_cols).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Leaving row: minimal ratio; ties broken by smallest basic variable.
        let mut choice: Option<(usize, Rat)> = None;
        for (i, t) in tab.iter().enumerate() {
            if !t[pivot_col].is_positive() {
                continue;
            }
            let ratio = &t[n_cols] / &t[pivot_col];
            let better = match &choice {
                None => true,
                Some((best_i, best)) => {
                    ratio < *best || (ratio == *best && basis[i] < basis[*best_i])
                }
            };
            if better {
                choice = Some((i, ratio));
            }
        }
        let (pivot_row, _) = choice.expect("phase-1 objective is bounded below by zero");

        // Pivot.
        let p = tab[pivot_row][pivot_col].clone();
        for v in tab[pivot_row].iter_mut() {
            *v /= &p;
        }
        let prow = tab[pivot_row].clone();
        for (i, t) in tab.iter_mut().enumerate() {
            if i == pivot_row || t[pivot_col].is_zero() {
                continue;
            }
            let f = t[pivot_col].clone();
            for (v, pv) in t.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        if !obj[pivot_col].is_zero() {
            let f = obj[pivot_col].clone();
            for (v, pv) in obj.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        basis[pivot_row] = pivot_col;
    }

    // obj[n_cols] holds -z at optimum.
    let z = -obj[n_cols].clone();
    if z.is_zero() {
        let mut witness = vec![Rat::zero(); m];
        for (i, &b) in basis.iter().enumerate() {
            if b < m {
                witness[b] += &tab[i][n_cols];
            } else if b < 2 * m {
                witness[b - m] -= &tab[i][n_cols];
            }
        }
        FeasResult::Feasible { witness }
    } else {
        // Duals from artificial reduced costs: y_i = 1 - rc(a_i); map back
        // through the row flips.
        let multipliers = (0..n_rows)
            .map(|i| {
                let y = Rat::one() - &obj[art_base + i];
                if flip[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        FeasResult::Infeasible { multipliers }
    }
}
