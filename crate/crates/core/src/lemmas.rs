//! Property-check harness for the counting inequalities and rank bounds.
//!
//! Each check takes a concrete instance, verifies the statement's
//! preconditions (an error, not a violation, when they fail), and reports
//! whether the bound holds together with the slack: how far the instance sits
//! from the bound, negative on a violation. The harness drives the checks
//! over exhaustive small grids and seeded random samplers; samplers are
//! constructive wherever the conforming set is thin, so conforming instances
//! are produced rather than fished for.

use num_traits::{Signed, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binom_u128;
use crate::counting::profile;
use crate::monomials::{basis_size, index_of, lex_basis, monomial_at, MonomialSpace};
use crate::prolongation::{
    build_direct, decompose, from_blocks, iterated_apply, CoeffVector,
};
use crate::ratlp::{solve_feasibility, FeasResult, LinearSystem};
use crate::rational::{rat, ratio, Rat};
use crate::Error;

/// Result of one instance check: whether the bound held and by how much.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    /// Minimal slack across the asserted inequalities; negative iff violated.
    pub slack: i64,
}

impl CheckOutcome {
    fn from_slacks(slacks: &[i64]) -> Self {
        let slack = slacks.iter().copied().min().unwrap_or(0);
        CheckOutcome { holds: slack >= 0, slack }
    }
}

/// The explicit sequence c(n) from the second-prolongation zero bound.
pub fn c_sequence(n: usize) -> i64 {
    assert!(n >= 2);
    match n {
        2 => 1,
        3 => 2,
        4 => 4,
        _ => 10 - n as i64,
    }
}

/// The linear part of the second-prolongation bound:
/// `L(n, N) = C(n+1, 3) - n N + n`.
pub fn second_prolongation_bound(n: usize, num_negative: usize) -> i64 {
    binom_u128(n as u64 + 1, 3) as i64 - (n * num_negative) as i64 + n as i64 + c_sequence(n)
}

/// First-prolongation counting inequalities, with equality when `P N = 0`.
pub fn check_first_prolongation(a: &[Rat]) -> CheckOutcome {
    let n = a.len();
    let prof = profile(a);
    let (p, nn, z) = (prof.positive as i64, prof.negative as i64, prof.zero as i64);
    let h = CoeffVector::from_rats(n, 1, a.to_vec()).expect("vector length is n");
    let jprof = build_direct(n, 1).apply(&h).expect("dims").profile();

    let s1 = jprof.positive as i64 - (p * (p + 1) / 2 + p * z);
    let s2 = jprof.negative as i64 - (nn * (nn + 1) / 2 + nn * z);
    let s3 = (z * (z + 1) / 2 + p * nn) - jprof.zero as i64;
    let mut outcome = CheckOutcome::from_slacks(&[s1, s2, s3]);
    if p * nn == 0 && (s1 != 0 || s2 != 0 || s3 != 0) {
        outcome.holds = false;
    }
    outcome
}

/// Second-prolongation zero bound `Z(J J a) <= L(n, N(a)) + c(n)`.
///
/// Requires `N(a) >= 2`.
pub fn check_second_prolongation(a: &[Rat]) -> Result<CheckOutcome, Error> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooFewVariables);
    }
    let prof = profile(a);
    if prof.negative < 2 {
        return Err(Error::Precondition("needs at least two negative entries".into()));
    }
    let h = CoeffVector::from_rats(n, 1, a.to_vec())?;
    let jja = iterated_apply(&h, 3)?;
    let bound = second_prolongation_bound(n, prof.negative);
    Ok(CheckOutcome::from_slacks(&[bound - jja.profile().zero as i64]))
}

/// Rank sandwich for nonnegative vectors: with `k = R(h)`,
/// `nk - k(k-1)/2 <= R(J h) <= nk` when `k <= n-1`, and
/// `R(J h) >= n(n+1)/2` when `k >= n`.
pub fn check_ghp(h: &CoeffVector) -> Result<CheckOutcome, Error> {
    if !h.is_nonneg() {
        return Err(Error::NegativeEntry);
    }
    let n = h.n() as i64;
    let k = h.rank() as i64;
    let r = build_direct(h.n(), h.d()).apply(h)?.rank() as i64;
    if k <= n - 1 {
        Ok(CheckOutcome::from_slacks(&[r - (n * k - k * (k - 1) / 2), n * k - r]))
    } else {
        Ok(CheckOutcome::from_slacks(&[r - n * (n + 1) / 2]))
    }
}

/// Support lower bound for the signed prolongation
/// `A(x) (x_1 + .. + x_r - x_{r+1} - .. - x_{r+s})`: at least `r + s`.
pub fn check_gao_ng(h: &CoeffVector, r: usize, s: usize) -> Result<CheckOutcome, Error> {
    if h.is_zero() {
        return Err(Error::ZeroVector);
    }
    if r + s == 0 || r + s > h.n() {
        return Err(Error::Precondition("need 1 <= r + s <= n".into()));
    }
    let v = prolong_signed(h, r, s);
    Ok(CheckOutcome::from_slacks(&[v.rank() as i64 - (r + s) as i64]))
}

/// Coefficients of `A(x) * (x_1 + .. + x_r - x_{r+1} - .. - x_{r+s})`.
fn prolong_signed(h: &CoeffVector, r: usize, s: usize) -> CoeffVector {
    let mut out = CoeffVector::zeros(h.n(), h.d() + 1);
    for (i, v) in h.entries().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let alpha = monomial_at(h.n(), h.d(), i).expect("in range");
        for k in 0..r + s {
            let target = index_of(&alpha.times_var(k));
            let cur = out.entry(target).clone();
            if k < r {
                out.set_entry(target, cur + v);
            } else {
                out.set_entry(target, cur - v);
            }
        }
    }
    out
}

/// Shadow growth bound `codim(shadow A) <= codim(A)^<d>`, with equality on
/// lex segments.
pub fn check_macaulay(space: &MonomialSpace) -> CheckOutcome {
    use num_traits::ToPrimitive;
    let bound = crate::combinatorics::macaulay_step(space.codim() as u64, space.d)
        .to_i64()
        .expect("desk-scale bound fits i64");
    let actual = space.shadow().codim() as i64;
    let mut outcome = CheckOutcome::from_slacks(&[bound - actual]);
    if space.is_lex_segment() && bound != actual {
        outcome.holds = false;
    }
    outcome
}

/// Published exact values of the minimal prolongation rank.
pub fn published_rnd(n: usize, d: u32) -> Option<usize> {
    match (n, d) {
        (2, 2) => Some(2),
        (3, 2) => Some(5),
        (4, 2) => Some(8),
        _ => None,
    }
}

/// Structural estimates for `d = 2` when the top block is not nonnegative:
/// `P(h_1) >= 1`, `R(gamma_1) >= 1`, `R(gamma_2) >= 1`, and
/// `R(J h) >= 3 + R_{n-1,2}` when that cell's value is known.
pub fn check_structural(h: &CoeffVector, sub_value: Option<usize>) -> Result<CheckOutcome, Error> {
    if h.n() < 3 {
        return Err(Error::Precondition("needs n >= 3".into()));
    }
    if h.d() != 2 {
        return Err(Error::Precondition("stated for d = 2".into()));
    }
    let dec = decompose(h)?;
    if !dec.prolongation_nonneg() {
        return Err(Error::Precondition("J h must be nonnegative".into()));
    }
    if dec.block(2).is_nonneg() {
        return Err(Error::Precondition("h_2 must have a negative entry".into()));
    }
    let mut slacks = vec![
        dec.block(1).profile().positive as i64 - 1,
        dec.slack(1).rank() as i64 - 1,
        dec.slack(2).rank() as i64 - 1,
    ];
    let sub = sub_value.or_else(|| published_rnd(h.n() - 1, 2));
    if let Some(sub) = sub {
        slacks.push(dec.rank_sum() as i64 - (3 + sub) as i64);
    }
    Ok(CheckOutcome::from_slacks(&slacks))
}

/// Rank floor when the slack vector has a single nonzero block:
/// `R(J h) >= C(n+1, 3) + 1`.
pub fn check_gamma_single(h: &CoeffVector) -> Result<CheckOutcome, Error> {
    let dec = decompose(h)?;
    if !dec.prolongation_nonneg() {
        return Err(Error::Precondition("J h must be nonnegative".into()));
    }
    if h.is_nonneg() {
        return Err(Error::Precondition("h must have a negative entry".into()));
    }
    let nonzero = dec.slacks().iter().filter(|g| g.rank() > 0).count();
    if nonzero != 1 {
        return Err(Error::Precondition("exactly one slack block must be nonzero".into()));
    }
    let bound = binom_u128(h.n() as u64 + 1, 3) as i64 + 1;
    Ok(CheckOutcome::from_slacks(&[dec.rank_sum() as i64 - bound]))
}

/// Rank floor for an alternating combination of two rank-1 nonnegative
/// blocks prolonged to a common degree: `R(v) >= C(n+2, 3) - 1` whenever the
/// combination is nonnegative.
pub fn check_alternating_pair(
    gamma_a: &CoeffVector,
    gamma_b: &CoeffVector,
    d: u32,
) -> Result<CheckOutcome, Error> {
    let n = gamma_a.n();
    if gamma_b.n() != n {
        return Err(Error::MixedVariableCount);
    }
    let (a, b) = (gamma_a.d(), gamma_b.d());
    if a >= b || b > d {
        return Err(Error::Precondition("need degrees a < b <= d".into()));
    }
    if !gamma_a.is_nonneg() || !gamma_b.is_nonneg() {
        return Err(Error::NegativeEntry);
    }
    if gamma_a.rank() != 1 || gamma_b.rank() != 1 {
        return Err(Error::Precondition("both blocks must have rank 1".into()));
    }
    let sign = |from: u32| if (d - from) % 2 == 0 { rat(1) } else { rat(-1) };
    let va = iterated_apply(gamma_a, d + 1)?.scale(&sign(a));
    let vb = iterated_apply(gamma_b, d + 1)?.scale(&sign(b));
    let v = va.add(&vb)?;
    if !v.is_nonneg() {
        return Err(Error::Precondition("the combination must be nonnegative".into()));
    }
    let bound = binom_u128(n as u64 + 2, 3) as i64 - 1;
    Ok(CheckOutcome::from_slacks(&[v.rank() as i64 - bound]))
}

/// Rank floor for a single negative coefficient: `N(h) = 1` and `J h >= 0`
/// force `R(J h) >= n(n+1)/2 - 1`.
pub fn check_single_negative(h: &CoeffVector) -> Result<CheckOutcome, Error> {
    if h.profile().negative != 1 {
        return Err(Error::Precondition("exactly one negative entry required".into()));
    }
    let jh = build_direct(h.n(), h.d()).apply(h)?;
    if !jh.is_nonneg() {
        return Err(Error::Precondition("J h must be nonnegative".into()));
    }
    let n = h.n() as i64;
    Ok(CheckOutcome::from_slacks(&[jh.rank() as i64 - (n * (n + 1) / 2 - 1)]))
}

/// Rank floor for the two-positive / two-negative block pattern:
/// `P(h_d) = N(h_{d-1}) = 2` with every other block nonnegative forces
/// `R(J h) >= 3n - 4`.
///
/// The hypotheses are unsatisfiable at `d = 2` (two negative coordinates of a
/// linear form spread at least three negatives into its prolongation), so the
/// check requires `d >= 3`; it also requires `n >= 4` as stated.
pub fn check_two_two_pattern(h: &CoeffVector) -> Result<CheckOutcome, Error> {
    let (n, d) = (h.n(), h.d());
    if n < 4 {
        return Err(Error::Precondition("needs n >= 4".into()));
    }
    if d < 3 {
        return Err(Error::Precondition("pattern requires d >= 3".into()));
    }
    let dec = decompose(h)?;
    if !dec.prolongation_nonneg() {
        return Err(Error::Precondition("J h must be nonnegative".into()));
    }
    let mid_negatives: usize = (1..=d as usize - 2)
        .map(|i| dec.block(i).profile().negative)
        .sum();
    let top = dec.block(d as usize).profile();
    let second = dec.block(d as usize - 1).profile();
    if mid_negatives + top.negative != 0 || top.positive != 2 || second.negative != 2 {
        return Err(Error::Precondition("sign pattern does not match".into()));
    }
    Ok(CheckOutcome::from_slacks(&[dec.rank_sum() as i64 - (3 * n as i64 - 4)]))
}

// ---------------------------------------------------------------------------
// Harness
// ---------------------------------------------------------------------------

/// Identifier of one checkable statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    FirstProlongation,
    SecondProlongation,
    Ghp,
    GaoNg,
    Macaulay,
    Structural,
    GammaSingle,
    GammaPair,
    SingleNegative,
    TwoTwoPattern,
}

impl LemmaId {
    pub fn all() -> &'static [LemmaId] {
        use LemmaId::*;
        &[
            FirstProlongation,
            SecondProlongation,
            Ghp,
            GaoNg,
            Macaulay,
            Structural,
            GammaSingle,
            GammaPair,
            SingleNegative,
            TwoTwoPattern,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::FirstProlongation => "first-prolongation",
            LemmaId::SecondProlongation => "second-prolongation",
            LemmaId::Ghp => "ghp",
            LemmaId::GaoNg => "gao-ng",
            LemmaId::Macaulay => "macaulay",
            LemmaId::Structural => "structural",
            LemmaId::GammaSingle => "gamma-single",
            LemmaId::GammaPair => "gamma-pair",
            LemmaId::SingleNegative => "single-negative",
            LemmaId::TwoTwoPattern => "two-two-pattern",
        }
    }
}

impl std::str::FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::all()
            .iter()
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Aggregated result of running one lemma's checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub params: String,
    pub seed: u64,
    pub trials: u64,
    /// Instances that satisfied the statement's preconditions.
    pub conforming: u64,
    pub violations: u64,
    /// Smallest slack among conforming instances.
    pub worst_slack: Option<i64>,
    /// Replay coordinates of the first violations: with the report's seed,
    /// `(cell, trial)` regenerates the offending instance exactly.
    pub counterexamples: Vec<String>,
}

impl LemmaReport {
    fn new(lemma: LemmaId, params: String, seed: u64) -> Self {
        LemmaReport {
            lemma: lemma.name().to_string(),
            params,
            seed,
            trials: 0,
            conforming: 0,
            violations: 0,
            worst_slack: None,
            counterexamples: Vec::new(),
        }
    }

    const MAX_COUNTEREXAMPLES: usize = 8;

    fn absorb(&mut self, outcome: Option<CheckOutcome>, replay: impl Fn() -> String) {
        self.trials += 1;
        if let Some(o) = outcome {
            self.conforming += 1;
            if !o.holds {
                self.violations += 1;
                if self.counterexamples.len() < Self::MAX_COUNTEREXAMPLES {
                    self.counterexamples.push(replay());
                }
            }
            self.worst_slack = Some(self.worst_slack.map_or(o.slack, |w| w.min(o.slack)));
        }
    }

    fn merge(&mut self, other: &LemmaReport) {
        self.trials += other.trials;
        self.conforming += other.conforming;
        self.violations += other.violations;
        self.worst_slack = match (self.worst_slack, other.worst_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        for c in &other.counterexamples {
            if self.counterexamples.len() < Self::MAX_COUNTEREXAMPLES {
                self.counterexamples.push(c.clone());
            }
        }
    }
}

/// Harness parameters.
#[derive(Debug, Clone)]
pub struct LemmaRunConfig {
    pub n_max: usize,
    pub trials: u64,
    pub seed: u64,
    pub threads: usize,
}

impl Default for LemmaRunConfig {
    fn default() -> Self {
        LemmaRunConfig { n_max: 5, trials: 1000, seed: 17, threads: 1 }
    }
}

fn trial_rng(seed: u64, lemma: LemmaId, cell: u64, trial: u64) -> ChaCha8Rng {
    // splitmix64-style mixing of (seed, lemma, cell, trial)
    let mut x = seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add((lemma as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9))
        .wrapping_add(cell.wrapping_mul(0x94d0_49bb_1331_11eb))
        .wrapping_add(trial);
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    ChaCha8Rng::seed_from_u64(x)
}

/// Run `trials` independent instances, optionally across threads; the merge
/// is a sum, so the thread count cannot change the report.
fn run_trials<F>(report: &mut LemmaReport, cell: u64, trials: u64, threads: usize, f: F)
where
    F: Fn(u64) -> Option<CheckOutcome> + Sync,
{
    let tag = |t: u64| move || format!("cell={cell} trial={t}");
    if threads <= 1 || trials < 64 {
        for t in 0..trials {
            report.absorb(f(t), tag(t));
        }
        return;
    }
    let chunk = trials.div_ceil(threads as u64);
    let mut partials: Vec<LemmaReport> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|w| {
                let f = &f;
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(trials);
                scope.spawn(move || {
                    let mut part =
                        LemmaReport::new(LemmaId::FirstProlongation, String::new(), 0);
                    for t in lo..hi {
                        part.absorb(f(t), tag(t));
                    }
                    part
                })
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("trial worker panicked"));
        }
    });
    for p in &partials {
        report.merge(p);
    }
}

fn sample_entry(rng: &mut ChaCha8Rng) -> Rat {
    // Small integers with occasional halves; zero kept likely so that Z > 0
    // cases stay represented.
    match rng.random_range(0..10u32) {
        0..=3 => rat(0),
        4..=7 => rat(rng.random_range(-3..=3)),
        8 => ratio(rng.random_range(-3..=3), 2),
        _ => rat(rng.random_range(-3..=3) * 2),
    }
}

fn sample_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| sample_entry(rng)).collect()
}

fn sample_nonneg_entry(rng: &mut ChaCha8Rng) -> Rat {
    match rng.random_range(0..8u32) {
        0..=3 => rat(0),
        4..=6 => rat(rng.random_range(1..=3)),
        _ => ratio(rng.random_range(1..=5), 2),
    }
}

/// Exhaustive sign-pattern sweep of the first-prolongation inequalities:
/// every vector over the magnitude grid `{0, ±1, ±1/2, ±2, ±3}`.
pub fn exhaustive_first_prolongation(n: usize) -> LemmaReport {
    let grid: Vec<Rat> = vec![
        rat(0),
        rat(1),
        rat(-1),
        ratio(1, 2),
        ratio(-1, 2),
        rat(2),
        rat(-2),
        rat(3),
        rat(-3),
    ];
    let mut report = LemmaReport::new(
        LemmaId::FirstProlongation,
        format!("exhaustive n={n} grid={{0,±1,±1/2,±2,±3}}"),
        0,
    );
    let total = grid.len().pow(n as u32);
    for code in 0..total {
        let mut rem = code;
        let a: Vec<Rat> = (0..n)
            .map(|_| {
                let v = grid[rem % grid.len()].clone();
                rem /= grid.len();
                v
            })
            .collect();
        report.absorb(Some(check_first_prolongation(&a)), || format!("grid code={code}"));
    }
    report
}

// --- constructive samplers -------------------------------------------------

/// Vector with at least two negative entries.
fn sample_two_negative(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    let mut a = sample_vec(rng, n);
    let i = rng.random_range(0..n);
    let mut j = rng.random_range(0..n);
    while j == i {
        j = rng.random_range(0..n);
    }
    a[i] = rat(-rng.random_range(1..=3));
    a[j] = ratio(-rng.random_range(1..=5), 2);
    a
}

/// Nonnegative coefficient vector; dense every few trials so the `k >= n`
/// branch of the sandwich stays exercised.
fn sample_nonneg_coeff(rng: &mut ChaCha8Rng, n: usize, d: u32, dense: bool) -> CoeffVector {
    let len = basis_size(n, d);
    let entries: Vec<Rat> = (0..len)
        .map(|_| {
            if dense {
                rat(rng.random_range(1..=3))
            } else {
                sample_nonneg_entry(rng)
            }
        })
        .collect();
    CoeffVector::from_rats(n, d, entries).expect("length matches")
}

fn sample_nonzero_coeff(rng: &mut ChaCha8Rng, n: usize, d: u32) -> CoeffVector {
    let len = basis_size(n, d);
    loop {
        let v = CoeffVector::from_rats(n, d, sample_vec(rng, len)).expect("length matches");
        if !v.is_zero() {
            return v;
        }
    }
}

/// Monomial space: uniform random subset, or a lex segment on request.
fn sample_space(rng: &mut ChaCha8Rng, n: usize, d: u32, segment: bool) -> MonomialSpace {
    let size = basis_size(n, d);
    if segment {
        return crate::monomials::lex_segment(n, d, rng.random_range(0..=size))
            .expect("segment size in range");
    }
    let indices = (0..size).filter(|_| rng.random_bool(0.5));
    MonomialSpace::from_indices(n, d, indices).expect("indices in range")
}

/// Instance for the single-nonzero-slack floor: pick the block degree `a`
/// with `d - a` even and at least 2, a nonnegative nonzero block there, and
/// propagate `h_{i+1} = -J h_i` so every other slack vanishes.
pub fn sample_gamma_single(rng: &mut ChaCha8Rng, n: usize, d: u32) -> CoeffVector {
    debug_assert!(n >= 2 && d >= 2);
    let choices: Vec<u32> = (0..=d.saturating_sub(2)).filter(|a| (d - a) % 2 == 0).collect();
    let a = choices[rng.random_range(0..choices.len())];
    let mut blocks: Vec<CoeffVector> = (0..=d).map(|j| CoeffVector::zeros(n - 1, j)).collect();
    let mut gamma = sample_nonneg_coeff(rng, n - 1, a, false);
    if gamma.is_zero() {
        let i = rng.random_range(0..gamma.len());
        gamma.set_entry(i, rat(rng.random_range(1..=3)));
    }
    blocks[a as usize] = gamma;
    for j in a as usize + 1..=d as usize {
        let carried = build_direct(n - 1, j as u32 - 1)
            .apply(&blocks[j - 1])
            .expect("dims");
        blocks[j] = carried.neg();
    }
    from_blocks(n, d, &blocks).expect("blocks assemble")
}

/// Instance pair for the alternating-sum floor. Either both prolongation
/// signs are positive (nonnegativity is automatic), or the degrees are
/// adjacent with `beta = alpha + e_k` and the second coefficient at most the
/// first, which forces nonnegativity coefficient by coefficient.
pub fn sample_gamma_pair(rng: &mut ChaCha8Rng, n: usize, d: u32) -> (CoeffVector, CoeffVector) {
    debug_assert!(d >= 2);
    let both_positive: Vec<(u32, u32)> = (0..=d)
        .flat_map(|a| (a + 1..=d).map(move |b| (a, b)))
        .filter(|&(a, b)| (d - a) % 2 == 0 && (d - b) % 2 == 0)
        .collect();
    let adjacent: Vec<(u32, u32)> = (0..=d.saturating_sub(1))
        .map(|a| (a, a + 1))
        .filter(|&(a, _)| (d - a) % 2 == 0)
        .collect();

    let use_adjacent = !adjacent.is_empty() && (both_positive.is_empty() || rng.random_bool(0.5));
    if use_adjacent {
        let (a, b) = adjacent[rng.random_range(0..adjacent.len())];
        let alpha = monomial_at(n, a, rng.random_range(0..basis_size(n, a))).expect("in range");
        let k = rng.random_range(0..n);
        let beta = alpha.times_var(k);
        let u = rng.random_range(1..=3);
        let denom = rng.random_range(1..=4);
        let lambda = ratio(u, 1) * ratio(rng.random_range(1..=denom), denom);
        let mut ga = CoeffVector::zeros(n, a);
        ga.set_entry(index_of(&alpha), rat(u));
        let mut gb = CoeffVector::zeros(n, b);
        gb.set_entry(index_of(&beta), lambda);
        (ga, gb)
    } else {
        let (a, b) = both_positive[rng.random_range(0..both_positive.len())];
        let mut ga = CoeffVector::zeros(n, a);
        ga.set_entry(rng.random_range(0..basis_size(n, a)), rat(rng.random_range(1..=3)));
        let mut gb = CoeffVector::zeros(n, b);
        gb.set_entry(rng.random_range(0..basis_size(n, b)), rat(rng.random_range(1..=3)));
        (ga, gb)
    }
}

/// Instance with exactly one negative coefficient and nonnegative
/// prolongation: put zero on a mixed monomial, positives elsewhere, and dip
/// the mixed coordinate by the smallest covering row value.
pub fn sample_single_negative(rng: &mut ChaCha8Rng, n: usize, d: u32) -> CoeffVector {
    debug_assert!(n >= 2 && d >= 2);
    let basis = lex_basis(n, d);
    let mixed: Vec<usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, m)| m.exps().iter().filter(|&&e| e > 0).count() >= 2)
        .map(|(i, _)| i)
        .collect();
    let j = mixed[rng.random_range(0..mixed.len())];
    let mut entries: Vec<Rat> = (0..basis.len()).map(|_| rat(rng.random_range(1..=3))).collect();
    entries[j] = rat(0);
    let e = CoeffVector::from_rats(n, d, entries).expect("length matches");
    let jm = build_direct(n, d);
    let je = jm.apply(&e).expect("dims");
    let mut unit = CoeffVector::zeros(n, d);
    unit.set_entry(j, rat(1));
    let cover = jm.apply(&unit).expect("dims");
    let t = cover
        .entries()
        .iter()
        .zip(je.entries())
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, v)| v.clone())
        .min()
        .expect("every column hits n rows");
    debug_assert!(t.is_positive());
    let mut h = e;
    h.set_entry(j, -t);
    h
}

/// Instance for the two-positive/two-negative pattern (`n` in {4, 5},
/// `d >= 3`): the second block is a lifted copy of the 3-variable witness
/// pattern, whose prolongation has at most two negative positions, and the
/// top block covers those with its two positive entries.
pub fn sample_two_two(rng: &mut ChaCha8Rng, n: usize, d: u32) -> CoeffVector {
    debug_assert!((4..=5).contains(&n) && d >= 3);
    let m = n - 1;
    let s = rng.random_range(1..=3);
    let f_pattern: [i64; 6] = [1, -1, 2, 1, -1, 1];

    // Block d-1 over m variables: x_last^(d-3) times the 3-variable pattern
    // scaled by s, embedded in the first three variables.
    let mut second = CoeffVector::zeros(m, d - 1);
    for (idx3, coeff) in f_pattern.iter().enumerate() {
        let mono3 = monomial_at(3, 2, idx3).expect("in range");
        let mut exps = vec![0u32; m];
        exps[..3].copy_from_slice(mono3.exps());
        exps[m - 1] += d - 3;
        second.set_entry(
            index_of(&crate::monomials::MultiIndex::new(exps)),
            rat(coeff * s),
        );
    }

    // Top block: two positive entries covering the negatives of J(second).
    let j_second = build_direct(m, d - 1).apply(&second).expect("dims");
    let neg_positions: Vec<usize> = j_second
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_negative())
        .map(|(i, _)| i)
        .collect();
    assert!(neg_positions.len() <= 2, "pattern prolongation spills negatives");
    let mut top = CoeffVector::zeros(m, d);
    let mut used: Vec<usize> = Vec::new();
    for &p in &neg_positions {
        top.set_entry(p, -j_second.entry(p) + rat(rng.random_range(0..=2)));
        used.push(p);
    }
    while used.len() < 2 {
        let p = rng.random_range(0..top.len());
        if !used.contains(&p) {
            top.set_entry(p, rat(rng.random_range(1..=3)));
            used.push(p);
        }
    }

    // Lower blocks: h_{d-2} dominates the negatives of the second block;
    // everything below is arbitrary nonnegative.
    let mut blocks: Vec<CoeffVector> = Vec::with_capacity(d as usize + 1);
    for jdx in 0..=d {
        blocks.push(match jdx {
            j if j == d => top.clone(),
            j if j == d - 1 => second.clone(),
            j if j == d - 2 => {
                let t = rng.random_range(s..=s + 2);
                let ones: Vec<Rat> = (0..basis_size(m, d - 2)).map(|_| rat(t)).collect();
                CoeffVector::from_rats(m, d - 2, ones).expect("length matches")
            }
            j => sample_nonneg_coeff(rng, m, j, false),
        });
    }
    from_blocks(n, d, &blocks).expect("blocks assemble")
}

/// LP-backed sampler for the structural estimates: `J h >= 0` with a pinned
/// negative coordinate inside the top block, diversified by random pins.
pub fn sample_structural(rng: &mut ChaCha8Rng, n: usize) -> Option<CoeffVector> {
    let d = 2u32;
    let j = build_direct(n, d);
    // Only mixed monomials of the top block can carry a negative: a negative
    // square coefficient h[x_k^2] shows up uncancelled in the x_k^3 row.
    let block2_start = 1 + (n - 1);
    let block2_len = basis_size(n - 1, 2);
    let mixed: Vec<usize> = (block2_start..block2_start + block2_len)
        .filter(|&i| {
            let m = monomial_at(n, d, i).expect("in range");
            m.exps().iter().filter(|&&e| e > 0).count() >= 2
        })
        .collect();
    let p = mixed[rng.random_range(0..mixed.len())];

    for attempt in (0..3u32).rev() {
        let mut coeffs = vec![vec![Rat::zero(); j.cols()]; j.rows()];
        for &(r, c) in j.entries() {
            coeffs[r][c] = rat(1);
        }
        let mut sys = LinearSystem::new(j.cols());
        for (r, row) in coeffs.into_iter().enumerate() {
            sys.push_ge(row, rat(0), format!("J_row:{r}"));
        }
        let mut neg = vec![Rat::zero(); j.cols()];
        neg[p] = rat(-1);
        sys.push_ge(neg, rat(1), format!("branch:col{p}"));
        for _ in 0..attempt {
            let c = rng.random_range(0..j.cols());
            if c == p {
                continue;
            }
            let mut pin = vec![Rat::zero(); j.cols()];
            pin[c] = rat(1);
            sys.push_eq(pin, rat(rng.random_range(0..=3)), format!("pin:{c}"));
        }
        if let FeasResult::Feasible { witness } = solve_feasibility(&sys) {
            return Some(CoeffVector::from_rats(n, d, witness).expect("length matches"));
        }
    }
    None
}

/// Run one lemma's randomized suite.
pub fn run_lemma(id: LemmaId, cfg: &LemmaRunConfig) -> LemmaReport {
    let n_max = cfg.n_max;
    let mut report = LemmaReport::new(id, String::new(), cfg.seed);
    let mut cells: Vec<(usize, u32)> = Vec::new();
    match id {
        LemmaId::FirstProlongation => {
            report.params = format!("n=2..{}", n_max.max(2));
            for n in 2..=n_max.max(2) {
                let cell = n as u64;
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, cell, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, cell, t);
                    Some(check_first_prolongation(&sample_vec(&mut rng, n)))
                });
                report.merge(&part);
            }
        }
        LemmaId::SecondProlongation => {
            let hi = n_max.clamp(2, 6);
            report.params = format!("n=2..{hi}, N(a)>=2");
            for n in 2..=hi {
                let cell = n as u64;
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, cell, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, cell, t);
                    let a = sample_two_negative(&mut rng, n);
                    Some(check_second_prolongation(&a).expect("sampler satisfies N >= 2"))
                });
                report.merge(&part);
            }
        }
        LemmaId::Ghp => {
            for n in 2..=n_max.clamp(2, 5) {
                for d in 2..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=2..5, d=2..4, h >= 0".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let dense = t % 10 == 9;
                    let h = sample_nonneg_coeff(&mut rng, n, d, dense);
                    Some(check_ghp(&h).expect("sampler output is nonnegative"))
                });
                report.merge(&part);
            }
        }
        LemmaId::GaoNg => {
            for n in 2..=n_max.clamp(2, 5) {
                for d in 1..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=2..5, d=1..4, 1<=r+s<=n".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let h = sample_nonzero_coeff(&mut rng, n, d);
                    let total = rng.random_range(1..=n);
                    let r = rng.random_range(0..=total);
                    let s = total - r;
                    Some(check_gao_ng(&h, r, s).expect("sampler output is nonzero"))
                });
                report.merge(&part);
            }
        }
        LemmaId::Macaulay => {
            for n in 2..=n_max.clamp(2, 5) {
                for d in 1..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=2..5, d=1..4, random spaces + segments".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let space = sample_space(&mut rng, n, d, t % 5 == 4);
                    Some(check_macaulay(&space))
                });
                report.merge(&part);
            }
        }
        LemmaId::Structural => {
            let hi = n_max.clamp(3, 5);
            report.params = format!("n=3..{hi}, d=2, LP-sampled cone points");
            for n in 3..=hi {
                let cell = n as u64;
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, cell, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, cell, t);
                    let h = sample_structural(&mut rng, n)?;
                    check_structural(&h, None).ok()
                });
                report.merge(&part);
            }
        }
        LemmaId::GammaSingle => {
            for n in 2..=n_max.clamp(2, 5) {
                for d in 2..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=2..5, d=2..4, single nonzero slack".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let h = sample_gamma_single(&mut rng, n, d);
                    Some(check_gamma_single(&h).expect("sampler satisfies preconditions"))
                });
                report.merge(&part);
            }
        }
        LemmaId::GammaPair => {
            for n in 2..=n_max.clamp(2, 5) {
                for d in 2..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=2..5, d=2..4, rank-1 block pairs".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let (ga, gb) = sample_gamma_pair(&mut rng, n, d);
                    Some(
                        check_alternating_pair(&ga, &gb, d)
                            .expect("sampler guarantees nonnegativity"),
                    )
                });
                report.merge(&part);
            }
        }
        LemmaId::SingleNegative => {
            for n in 2..=n_max.clamp(2, 5) {
                for d in 2..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=2..5, d=2..4, N(h)=1".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let h = sample_single_negative(&mut rng, n, d);
                    Some(check_single_negative(&h).expect("sampler satisfies preconditions"))
                });
                report.merge(&part);
            }
        }
        LemmaId::TwoTwoPattern => {
            for n in 4..=n_max.clamp(4, 5) {
                for d in 3..=4 {
                    cells.push((n, d));
                }
            }
            report.params = "n=4..5, d=3..4, P(h_d)=N(h_{d-1})=2".into();
            for (i, (n, d)) in cells.iter().copied().enumerate() {
                let mut part = LemmaReport::new(id, String::new(), cfg.seed);
                run_trials(&mut part, i as u64, cfg.trials, cfg.threads, |t| {
                    let mut rng = trial_rng(cfg.seed, id, i as u64, t);
                    let h = sample_two_two(&mut rng, n, d);
                    Some(check_two_two_pattern(&h).expect("sampler satisfies preconditions"))
                });
                report.merge(&part);
            }
        }
    }
    report
}

/// Run every lemma.
pub fn run_all(cfg: &LemmaRunConfig) -> Vec<LemmaReport> {
    LemmaId::all().iter().map(|&id| run_lemma(id, cfg)).collect()
}
