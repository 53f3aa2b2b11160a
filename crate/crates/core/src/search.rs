//! Exact computation of the minimal prolongation rank `R_{n,d}`.
//!
//! `R_{n,d}` is the minimum of `R(J_{n,d} h)` over vectors `h` that are not
//! componentwise nonnegative but whose prolongation is. Since `J h >= 0`
//! forces the rank to equal the number of positive rows, the search maximizes
//! the number of zero rows instead: a branch tree assigns rows of `J h` to
//! forced-zero or free, checks each node by exact LP feasibility, and prunes
//! once the free rows already match the incumbent.
//!
//! The "not nonnegative" side enters as an outer disjunction: some coordinate
//! `h_j` is negative, normalized to `h_j <= -1` (the feasible set is a cone).
//! The permutation group of the variables acts on the basis and commutes with
//! `J`, so only one column per exponent-multiset orbit needs branching.
//!
//! Every run emits a [`RndCertificate`]: the best witness plus an event log
//! precise enough for [`verify_certificate`] to replay the traversal and
//! re-check each pruning step without solving any LP.

use std::time::{Duration, Instant};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::certify::{witness_f, witness_g};
use crate::monomials::{lex_basis, MultiIndex};
use crate::prolongation::{build_direct, CoeffVector, ProlongMatrix};
use crate::ratlp::{
    check_infeasibility_multipliers, solve_feasibility, FeasResult, LinearSystem,
};
use crate::rational::{rat, Rat};
use crate::Error;

/// Row branching order. A single policy is implemented: rows are decided in
/// lexicographic index order, forced-zero before free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchPolicy {
    #[default]
    LexZeroFirst,
}

/// Configuration of one `R_{n,d}` search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub d: u32,
    /// Optional starting incumbent; must be feasible for the cell.
    pub initial_upper: Option<CoeffVector>,
    /// Branch only on orbit representatives of the negativity column.
    pub symmetry: bool,
    /// Seed the lower bound with the published rank floors.
    pub structural_floors: bool,
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    pub branch_policy: BranchPolicy,
}

impl SearchConfig {
    pub fn new(n: usize, d: u32) -> Self {
        SearchConfig {
            n,
            d,
            initial_upper: None,
            symmetry: true,
            structural_floors: true,
            node_budget: 200_000,
            time_budget: None,
            branch_policy: BranchPolicy::default(),
        }
    }
}

/// Completion state of a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// The space was exhausted; `value` is exact.
    Exact,
    /// A budget stopped the search; only the bracket is known.
    Incomplete,
    /// The feasible set is empty (no `h` qualifies at all).
    Empty,
}

/// A rank floor taken from a published bound, usable as an admissible prune.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Floor {
    pub name: String,
    pub value: usize,
}

/// A strict improvement of the incumbent, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Improvement {
    pub rank: usize,
    pub witness: CoeffVector,
}

/// One traversal event; the replay re-derives everything else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum NodeEvent {
    /// Free rows already reach the incumbent: the subtree cannot improve.
    BoundPruned { row: usize, free: usize },
    /// The node's LP is infeasible; the multipliers certify it.
    Infeasible {
        row: usize,
        #[serde(with = "crate::rational::serde_vec")]
        multipliers: Vec<Rat>,
    },
    /// The node's LP is feasible; descent continues.
    Feasible { row: usize, improved: Option<Improvement> },
}

/// The branch tree under one negativity column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnBranch {
    pub column: usize,
    pub events: Vec<NodeEvent>,
    pub completed: bool,
}

/// Exhaustion record: floors, the seeding witness, and the branch trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundLog {
    pub floors: Vec<Floor>,
    pub seed: Option<Improvement>,
    pub branches: Vec<ColumnBranch>,
    /// Node count at which a budget stopped the search, if any.
    pub stopped_at_nodes: Option<u64>,
    /// True when the search space was provably exhausted.
    pub exhausted: bool,
}

/// Echo of the parameters that shaped a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub d: u32,
    pub symmetry: bool,
    pub structural_floors: bool,
    pub node_budget: u64,
    pub branch_policy: BranchPolicy,
    pub had_initial_upper: bool,
}

/// Wall-clock metadata; omitted from byte-stable outputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunMeta {
    pub created_unix: u64,
    pub elapsed_ms: u64,
}

/// The result of an `R_{n,d}` computation: exact value and witness when the
/// search completed, a bracket otherwise, plus a replayable exhaustion log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RndCertificate {
    pub schema_version: u32,
    pub n: usize,
    pub d: u32,
    pub status: SearchStatus,
    pub value: Option<usize>,
    pub lower_bound: Option<usize>,
    pub upper_bound: Option<usize>,
    pub witness: Option<CoeffVector>,
    pub nodes_explored: u64,
    pub config: ConfigEcho,
    pub log: LowerBoundLog,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<RunMeta>,
}

pub const CERT_SCHEMA_VERSION: u32 = 1;

/// Published floors for a cell, used to prune and to cross-check results.
pub fn structural_floors(n: usize, d: u32) -> Vec<Floor> {
    let mut floors = Vec::new();
    // Support of a nonzero form times S_1 has at least n monomials.
    floors.push(Floor { name: "support_at_least_n".into(), value: n });
    if d >= 2 {
        floors.push(Floor { name: "three_n_minus_four".into(), value: 3 * n - 4 });
    }
    if d == 2 && n >= 6 {
        floors.push(Floor {
            name: "quadratic_in_n_for_d2".into(),
            value: (n * n + n) / 2 - 6,
        });
    }
    floors
}

/// Best published witness for a cell: the base witnesses in 2..4 variables
/// at degree 2, lifted to higher degree by powers of `x_1` (which preserves
/// feasibility and rank).
pub fn known_seed(n: usize, d: u32) -> Option<CoeffVector> {
    if d < 2 {
        return None;
    }
    let base = match n {
        2 => CoeffVector::from_ints(2, 2, &[1, -1, 1]).expect("fixed dims"),
        3 => witness_f(),
        4 => witness_g(),
        _ => return None,
    };
    if d == 2 {
        return Some(base);
    }
    let mut lift = vec![0u32; n];
    lift[0] = d - 2;
    Some(base.mul_monomial(&MultiIndex::new(lift)).expect("same variable count"))
}

/// Columns to branch on: one per orbit of the variable-permutation action
/// when symmetry reduction is on, every column otherwise.
fn branch_columns(n: usize, d: u32, symmetry: bool) -> Vec<usize> {
    lex_basis(n, d)
        .iter()
        .enumerate()
        .filter(|(_, m)| !symmetry || m.is_orbit_representative())
        .map(|(i, _)| i)
        .collect()
}

/// Is `h` feasible for the cell: not componentwise nonnegative, prolongation
/// nonnegative?
pub fn is_feasible_point(j: &ProlongMatrix, h: &CoeffVector) -> bool {
    if h.n() != j.n() || h.d() != j.d() || h.is_nonneg() {
        return false;
    }
    j.apply(h).map(|jh| jh.is_nonneg()).unwrap_or(false)
}

/// The LP for a node: forced-zero rows as equalities, every other row
/// nonnegative, and the branch column at most -1.
fn node_system(j: &ProlongMatrix, zero_rows: &[bool], column: usize) -> LinearSystem {
    let mut coeffs = vec![vec![Rat::zero(); j.cols()]; j.rows()];
    for &(r, c) in j.entries() {
        coeffs[r][c] = rat(1);
    }
    let mut sys = LinearSystem::new(j.cols());
    for (r, row_coeffs) in coeffs.into_iter().enumerate() {
        if zero_rows[r] {
            sys.push_eq(row_coeffs, rat(0), format!("J_row:{r}"));
        } else {
            sys.push_ge(row_coeffs, rat(0), format!("J_row:{r}"));
        }
    }
    let mut neg = vec![Rat::zero(); j.cols()];
    neg[column] = rat(-1);
    // h_j <= -1, the homogenized form of h_j < 0.
    sys.push_ge(neg, rat(1), format!("branch:col{column}"));
    sys
}

struct SearchState<'a> {
    j: &'a ProlongMatrix,
    incumbent: usize,
    witness: Option<CoeffVector>,
    floor: usize,
    nodes: u64,
    node_budget: u64,
    deadline: Option<Instant>,
    stopped: bool,
    stopped_at_nodes: Option<u64>,
}

impl SearchState<'_> {
    fn floor_reached(&self) -> bool {
        self.witness.is_some() && self.incumbent <= self.floor
    }
}

/// Depth-first exploration under one negativity column. Returns false when a
/// budget stop or the floor ended the traversal early.
fn explore(
    state: &mut SearchState<'_>,
    column: usize,
    row: usize,
    zero_rows: &mut Vec<bool>,
    num_zero: usize,
    need_solve: bool,
    events: &mut Vec<NodeEvent>,
) -> bool {
    if state.stopped || state.floor_reached() {
        return false;
    }
    state.nodes += 1;
    let over_nodes = state.nodes > state.node_budget;
    let over_time = state.deadline.is_some_and(|t| Instant::now() > t);
    if over_nodes || over_time {
        state.stopped = true;
        state.nodes -= 1;
        state.stopped_at_nodes = Some(state.nodes);
        return false;
    }

    let free = row - num_zero;
    if free >= state.incumbent {
        events.push(NodeEvent::BoundPruned { row, free });
        return true;
    }
    if need_solve {
        let sys = node_system(state.j, zero_rows, column);
        match solve_feasibility(&sys) {
            FeasResult::Infeasible { multipliers } => {
                events.push(NodeEvent::Infeasible { row, multipliers });
                return true;
            }
            FeasResult::Feasible { witness } => {
                let h = CoeffVector::from_rats(state.j.n(), state.j.d(), witness)
                    .expect("LP witness has matching dimension");
                let rank = state.j.apply(&h).expect("dimensions match").rank();
                let improved = if rank < state.incumbent {
                    state.incumbent = rank;
                    state.witness = Some(h.clone());
                    Some(Improvement { rank, witness: h })
                } else {
                    None
                };
                events.push(NodeEvent::Feasible { row, improved });
            }
        }
    }
    if row == state.j.rows() {
        return true;
    }
    // Zero branch first: deep zero patterns surface good incumbents early.
    zero_rows[row] = true;
    let done_zero = explore(state, column, row + 1, zero_rows, num_zero + 1, true, events);
    zero_rows[row] = false;
    if !done_zero && (state.stopped || state.floor_reached()) {
        return false;
    }
    explore(state, column, row + 1, zero_rows, num_zero, false, events)
}

/// Compute `R_{n,d}` with a machine-checkable certificate.
pub fn compute_rnd(config: &SearchConfig) -> Result<RndCertificate, Error> {
    if config.n < 2 {
        return Err(Error::InvalidConfig("need n >= 2".into()));
    }
    if config.d < 1 {
        return Err(Error::InvalidConfig("need d >= 1".into()));
    }
    if config.node_budget == 0 {
        return Err(Error::InvalidConfig("node budget must be positive".into()));
    }
    let started = Instant::now();
    let j = build_direct(config.n, config.d);

    let floors = if config.structural_floors {
        structural_floors(config.n, config.d)
    } else {
        Vec::new()
    };
    let floor = floors.iter().map(|f| f.value).max().unwrap_or(0);

    // Seed the incumbent from the configured witness or the published ones.
    let seed_vec = match &config.initial_upper {
        Some(h) => {
            if !is_feasible_point(&j, h) {
                return Err(Error::InvalidConfig(
                    "initial upper bound witness is not feasible for this cell".into(),
                ));
            }
            Some(h.clone())
        }
        None => known_seed(config.n, config.d).filter(|h| is_feasible_point(&j, h)),
    };
    let seed = seed_vec.map(|h| {
        let rank = j.apply(&h).expect("dimensions match").rank();
        Improvement { rank, witness: h }
    });

    let mut state = SearchState {
        j: &j,
        incumbent: seed.as_ref().map_or(usize::MAX, |s| s.rank),
        witness: seed.as_ref().map(|s| s.witness.clone()),
        floor,
        nodes: 0,
        node_budget: config.node_budget,
        deadline: config.time_budget.map(|t| started + t),
        stopped: false,
        stopped_at_nodes: None,
    };

    let mut branches = Vec::new();
    for column in branch_columns(config.n, config.d, config.symmetry) {
        if state.stopped || state.floor_reached() {
            break;
        }
        let mut events = Vec::new();
        let mut zero_rows = vec![false; j.rows()];
        let completed = explore(&mut state, column, 0, &mut zero_rows, 0, true, &mut events);
        branches.push(ColumnBranch {
            column,
            events,
            completed: completed || state.floor_reached(),
        });
    }

    let exhausted = !state.stopped;
    let (status, value) = if exhausted {
        if state.witness.is_some() {
            (SearchStatus::Exact, Some(state.incumbent))
        } else {
            (SearchStatus::Empty, None)
        }
    } else {
        (SearchStatus::Incomplete, None)
    };
    let lower_bound = match status {
        SearchStatus::Exact => value,
        SearchStatus::Incomplete => Some(floor),
        SearchStatus::Empty => None,
    };
    let upper_bound = match status {
        SearchStatus::Empty => None,
        _ => state.witness.as_ref().map(|_| state.incumbent),
    };

    Ok(RndCertificate {
        schema_version: CERT_SCHEMA_VERSION,
        n: config.n,
        d: config.d,
        status,
        value,
        lower_bound,
        upper_bound,
        witness: state.witness,
        nodes_explored: state.nodes,
        config: ConfigEcho {
            n: config.n,
            d: config.d,
            symmetry: config.symmetry,
            structural_floors: config.structural_floors,
            node_budget: config.node_budget,
            branch_policy: config.branch_policy,
            had_initial_upper: config.initial_upper.is_some(),
        },
        log: LowerBoundLog {
            floors,
            seed,
            branches,
            stopped_at_nodes: state.stopped_at_nodes,
            exhausted,
        },
        meta: Some(RunMeta {
            created_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            elapsed_ms: started.elapsed().as_millis() as u64,
        }),
    })
}

/// Replay a certificate without solving any LP: re-derive the traversal,
/// check every infeasibility certificate and improvement witness, and
/// confirm the claimed value, bracket and status.
pub fn verify_certificate(cert: &RndCertificate) -> bool {
    verify_certificate_detailed(cert).is_ok()
}

/// Replay with a reason on failure.
pub fn verify_certificate_detailed(cert: &RndCertificate) -> Result<(), String> {
    let fail = |msg: &str| Err(msg.to_string());
    if cert.schema_version != CERT_SCHEMA_VERSION {
        return fail("unknown schema version");
    }
    if cert.n < 2 || cert.d < 1 || cert.config.n != cert.n || cert.config.d != cert.d {
        return fail("config echo does not match cell");
    }
    let j = build_direct(cert.n, cert.d);

    // Floors must be exactly the published ones for the cell.
    let expected_floors = if cert.config.structural_floors {
        structural_floors(cert.n, cert.d)
    } else {
        Vec::new()
    };
    if cert.log.floors != expected_floors {
        return fail("floor list does not match the published floors");
    }
    let floor = expected_floors.iter().map(|f| f.value).max().unwrap_or(0);

    // Seed witness must be genuinely feasible at its claimed rank.
    if let Some(seed) = &cert.log.seed {
        if !is_feasible_point(&j, &seed.witness) {
            return fail("seed witness is not feasible");
        }
        let rank = j.apply(&seed.witness).expect("dims").rank();
        if rank != seed.rank {
            return fail("seed witness rank mismatch");
        }
    }
    if !cert.config.had_initial_upper {
        let expected_seed = known_seed(cert.n, cert.d);
        if cert.log.seed.as_ref().map(|s| &s.witness) != expected_seed.as_ref() {
            return fail("seed does not match the published witness table");
        }
    }

    // Replay the traversal, consuming events.
    let mut incumbent = cert.log.seed.as_ref().map_or(usize::MAX, |s| s.rank);
    let mut witness = cert.log.seed.as_ref().map(|s| s.witness.clone());
    let stop_limit = cert.log.stopped_at_nodes.unwrap_or(cert.config.node_budget);
    let mut replay = Replay {
        j: &j,
        floor,
        incumbent: &mut incumbent,
        witness: &mut witness,
        nodes: 0,
        stop_limit,
        budget: cert.config.node_budget,
        stopped: false,
    };

    let expected_columns = branch_columns(cert.n, cert.d, cert.config.symmetry);
    let mut expected_iter = expected_columns.iter();
    for branch in &cert.log.branches {
        if replay.stopped || replay.floor_reached() {
            return fail("log contains branches after the search should have stopped");
        }
        match expected_iter.next() {
            Some(&col) if col == branch.column => {}
            _ => return fail("branch columns diverge from the branching rule"),
        }
        let mut zero_rows = vec![false; j.rows()];
        let mut cursor = 0usize;
        let done = replay.walk(branch.column, 0, &mut zero_rows, 0, true, &branch.events, &mut cursor)?;
        if cursor != branch.events.len() {
            return fail("unconsumed events in branch log");
        }
        if branch.completed != (done || replay.floor_reached()) {
            return fail("branch completion flag mismatch");
        }
    }
    // Any branch column not in the log must be explained by a stop.
    if expected_iter.next().is_some() && !replay.stopped && !replay.floor_reached() {
        return fail("log is missing branch columns");
    }

    let exhausted = !replay.stopped;
    if cert.log.exhausted != exhausted {
        return fail("exhaustion flag mismatch");
    }
    if cert.log.stopped_at_nodes.is_some() != replay.stopped {
        return fail("stop record mismatch");
    }
    if let Some(at) = cert.log.stopped_at_nodes {
        if at != replay.nodes {
            return fail("stopped_at_nodes does not match replayed node count");
        }
    }
    let nodes = replay.nodes;

    if cert.nodes_explored != nodes {
        return fail("node count mismatch");
    }

    // Final verdict must match the replayed state.
    let (status, value) = if exhausted {
        if witness.is_some() {
            (SearchStatus::Exact, Some(incumbent))
        } else {
            (SearchStatus::Empty, None)
        }
    } else {
        (SearchStatus::Incomplete, None)
    };
    if cert.status != status || cert.value != value {
        return fail("status or value does not match replay");
    }
    let lower = match status {
        SearchStatus::Exact => value,
        SearchStatus::Incomplete => Some(floor),
        SearchStatus::Empty => None,
    };
    if cert.lower_bound != lower {
        return fail("lower bound mismatch");
    }
    let upper = match status {
        SearchStatus::Empty => None,
        _ => witness.as_ref().map(|_| incumbent),
    };
    if cert.upper_bound != upper {
        return fail("upper bound mismatch");
    }
    match (&cert.witness, &witness) {
        (Some(a), Some(b)) if a == b => {}
        (None, None) => {}
        _ => return fail("witness does not match replayed incumbent"),
    }
    if let (SearchStatus::Exact, Some(v)) = (status, value) {
        // Published floors double as tripwires on completed values, whether
        // or not the search used them for pruning.
        for f in &structural_floors(cert.n, cert.d) {
            if v < f.value {
                return fail("exact value violates a published floor");
            }
        }
    }
    Ok(())
}

struct Replay<'a> {
    j: &'a ProlongMatrix,
    floor: usize,
    incumbent: &'a mut usize,
    witness: &'a mut Option<CoeffVector>,
    nodes: u64,
    stop_limit: u64,
    budget: u64,
    stopped: bool,
}

impl Replay<'_> {
    fn floor_reached(&self) -> bool {
        self.witness.is_some() && *self.incumbent <= self.floor
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &mut self,
        column: usize,
        row: usize,
        zero_rows: &mut Vec<bool>,
        num_zero: usize,
        need_solve: bool,
        events: &[NodeEvent],
        cursor: &mut usize,
    ) -> Result<bool, String> {
        if self.stopped || self.floor_reached() {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.stop_limit || self.nodes > self.budget {
            self.stopped = true;
            self.nodes -= 1;
            return Ok(false);
        }

        let free = row - num_zero;
        if free >= *self.incumbent {
            match events.get(*cursor) {
                Some(NodeEvent::BoundPruned { row: r, free: f }) if *r == row && *f == free => {
                    *cursor += 1;
                    return Ok(true);
                }
                _ => return Err("expected a bound-prune event".into()),
            }
        }
        if need_solve {
            match events.get(*cursor) {
                Some(NodeEvent::Infeasible { row: r, multipliers }) if *r == row => {
                    *cursor += 1;
                    let sys = node_system(self.j, zero_rows, column);
                    if !check_infeasibility_multipliers(&sys, multipliers) {
                        return Err("infeasibility certificate does not verify".into());
                    }
                    return Ok(true);
                }
                Some(NodeEvent::Feasible { row: r, improved }) if *r == row => {
                    *cursor += 1;
                    if let Some(imp) = improved {
                        if !is_feasible_point(self.j, &imp.witness) {
                            return Err("improvement witness is not feasible".into());
                        }
                        if imp.witness.entry(column) > &rat(-1) {
                            return Err("improvement witness misses the branch constraint".into());
                        }
                        let rank = self.j.apply(&imp.witness).expect("dims").rank();
                        if rank != imp.rank || rank >= *self.incumbent {
                            return Err("improvement rank is wrong or not an improvement".into());
                        }
                        *self.incumbent = rank;
                        *self.witness = Some(imp.witness.clone());
                    }
                }
                _ => return Err("expected a solve event".into()),
            }
        }
        if row == self.j.rows() {
            return Ok(true);
        }
        zero_rows[row] = true;
        let done_zero =
            self.walk(column, row + 1, zero_rows, num_zero + 1, true, events, cursor)?;
        zero_rows[row] = false;
        if !done_zero && (self.stopped || self.floor_reached()) {
            return Ok(false);
        }
        self.walk(column, row + 1, zero_rows, num_zero, false, events, cursor)
    }
}

/// A rank-1 patch for a nonnegative block `h_d`: a nonnegative `delta` of
/// rank at most 1 with `J delta >= h_d`, when one exists in the two
/// constructive cases.
///
/// For a single positive monomial, divide it by one of its variables and keep
/// the coefficient. For two positive monomials whose shadows overlap (rank of
/// the prolongation one below the generic `2(n-1)`), the overlap
/// `x_i x^alpha = x_j x^beta` yields the patch `(a+b) x^alpha / x_j`.
/// Otherwise no rank-1 patch exists and `None` is returned.
pub fn rank1_patch(h_d: &CoeffVector) -> Result<Option<CoeffVector>, Error> {
    if !h_d.is_nonneg() {
        return Err(Error::NegativeEntry);
    }
    if h_d.d() == 0 {
        return Err(Error::Precondition("patch needs degree >= 1".into()));
    }
    let support: Vec<(usize, MultiIndex)> = h_d
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| num_traits::Signed::is_positive(*v))
        .map(|(i, _)| (i, crate::monomials::monomial_at(h_d.n(), h_d.d(), i).expect("in range")))
        .collect();
    match support.len() {
        0 => Ok(Some(CoeffVector::zeros(h_d.n(), h_d.d() - 1))),
        1 => {
            let (idx, alpha) = &support[0];
            let v = alpha
                .exps()
                .iter()
                .position(|&e| e > 0)
                .expect("positive degree monomial has a variable");
            let mut delta = CoeffVector::zeros(h_d.n(), h_d.d() - 1);
            let target = alpha.div_var(v).expect("variable divides");
            delta.set_entry(crate::monomials::index_of(&target), h_d.entry(*idx).clone());
            Ok(Some(delta))
        }
        2 => {
            let (ia, alpha) = &support[0];
            let (ib, beta) = &support[1];
            for i in 0..h_d.n() {
                for jv in 0..h_d.n() {
                    if i != jv && alpha.times_var(i) == beta.times_var(jv) {
                        let mut delta = CoeffVector::zeros(h_d.n(), h_d.d() - 1);
                        let target = alpha.div_var(jv).expect("overlap forces divisibility");
                        let coeff = h_d.entry(*ia) + h_d.entry(*ib);
                        delta.set_entry(crate::monomials::index_of(&target), coeff);
                        return Ok(Some(delta));
                    }
                }
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}
