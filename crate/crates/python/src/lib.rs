//! Python bindings for the sosrank library.
//!
//! Rationals cross the boundary as strings ("p/q", integer literals, or
//! decimals); structured reports come back as JSON strings.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sosrank::certify;
use sosrank::combinatorics;
use sosrank::counting;
use sosrank::lemmas;
use sosrank::monomials::{self, MultiIndex};
use sosrank::prolongation::{self, CoeffVector};
use sosrank::rational::{parse_rat, rat_to_string, Rat};
use sosrank::search;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_coeffs(n: usize, d: u32, coeffs: Vec<String>) -> PyResult<CoeffVector> {
    let entries: Vec<Rat> = coeffs
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    CoeffVector::from_rats(n, d, entries).map_err(err)
}

fn to_strings(v: &CoeffVector) -> Vec<String> {
    v.entries().iter().map(rat_to_string).collect()
}

/// Binomial coefficient C(a, b); zero when b > a.
#[pyfunction]
fn binomial(a: u64, b: u64) -> BigUint {
    combinatorics::binomial(a, b)
}

/// Terms (k_i, i) of the d-Macaulay representation of N.
#[pyfunction]
fn macaulay_rep(n_value: u64, d: u32) -> Vec<(u64, u32)> {
    combinatorics::macaulay_rep(n_value, d).terms
}

/// The Macaulay growth operator N^<d>.
#[pyfunction]
fn macaulay_step(n_value: u64, d: u32) -> BigUint {
    combinatorics::macaulay_step(n_value, d)
}

/// Largest kappa with kappa(kappa+1)/2 < n.
#[pyfunction]
fn kappa0(n: u64) -> PyResult<u64> {
    if n < 2 {
        return Err(PyValueError::new_err("need n >= 2"));
    }
    Ok(combinatorics::kappa0(n))
}

/// Conjectured rank bands: (kappa0, threshold, [(lo, hi), ...]).
#[pyfunction]
fn conjecture_bands(n: u64) -> PyResult<(u64, u64, Vec<(u64, u64)>)> {
    if n < 2 {
        return Err(PyValueError::new_err("need n >= 2"));
    }
    let report = combinatorics::conjecture_bands(n);
    Ok((report.kappa0, report.threshold, report.bands))
}

/// Degree-d monomials in n variables, left-lexicographic order.
#[pyfunction]
fn lex_basis(n: usize, d: u32) -> PyResult<Vec<Vec<u32>>> {
    if n < 1 {
        return Err(PyValueError::new_err("need n >= 1"));
    }
    Ok(monomials::lex_basis(n, d).iter().map(|m| m.exps().to_vec()).collect())
}

/// Position of an exponent vector within its lex basis.
#[pyfunction]
fn index_of(exps: Vec<u32>) -> usize {
    monomials::index_of(&MultiIndex::new(exps))
}

/// The i-th monomial of the (n, d) lex basis.
#[pyfunction]
fn monomial_at(n: usize, d: u32, i: usize) -> PyResult<Vec<u32>> {
    Ok(monomials::monomial_at(n, d, i).map_err(err)?.exps().to_vec())
}

/// Shadow of a monomial space given as exponent vectors.
#[pyfunction]
#[pyo3(signature = (space, n=None, d=None))]
fn shadow(space: Vec<Vec<u32>>, n: Option<usize>, d: Option<u32>) -> PyResult<Vec<Vec<u32>>> {
    let (n, d) = match space.first() {
        Some(first) => (n.unwrap_or(first.len()), d.unwrap_or_else(|| first.iter().sum())),
        None => match (n, d) {
            (Some(n), Some(d)) => (n, d),
            _ => return Err(PyValueError::new_err("empty space needs explicit n and d")),
        },
    };
    let monos: Vec<MultiIndex> = space.into_iter().map(MultiIndex::new).collect();
    let space = monomials::MonomialSpace::from_monomials(n, d, &monos).map_err(err)?;
    Ok(space.shadow().to_exponent_lists())
}

/// The prolongation matrix as (rows, cols, [(row, col), ...]).
#[pyfunction]
#[pyo3(signature = (n, d, recursive=false))]
fn prolong_matrix(n: usize, d: u32, recursive: bool) -> PyResult<(usize, usize, Vec<(usize, usize)>)> {
    if n < 1 {
        return Err(PyValueError::new_err("need n >= 1"));
    }
    let j = if recursive {
        prolongation::build_recursive(n, d)
    } else {
        prolongation::build_direct(n, d)
    };
    Ok((j.rows(), j.cols(), j.entries().to_vec()))
}

/// Coefficients of A(x) * (x_1 + ... + x_n) from the coefficients of A.
#[pyfunction]
fn prolong(n: usize, d: u32, coeffs: Vec<String>) -> PyResult<Vec<String>> {
    let h = parse_coeffs(n, d, coeffs)?;
    let jh = prolongation::build_direct(n, d).apply(&h).map_err(err)?;
    Ok(to_strings(&jh))
}

/// Sign profile (P, N, Z, R) of a rational vector.
#[pyfunction]
fn profile(values: Vec<String>) -> PyResult<(usize, usize, usize, usize)> {
    let v: Vec<Rat> = values
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let p = counting::profile(&v);
    Ok((p.positive, p.negative, p.zero, p.rank))
}

/// Componentwise nonnegativity, the SOS test for diagonal forms.
#[pyfunction]
fn is_sos_diagonal(n: usize, d: u32, coeffs: Vec<String>) -> PyResult<bool> {
    Ok(certify::is_sos_diagonal(&parse_coeffs(n, d, coeffs)?))
}

/// Rank of the first prolongation when it is SOS, else None.
#[pyfunction]
fn prolongation_rank(n: usize, d: u32, coeffs: Vec<String>) -> PyResult<Option<usize>> {
    Ok(certify::prolongation_rank(&parse_coeffs(n, d, coeffs)?))
}

/// Certify a diagonal polynomial from (degree, coefficients) parts.
/// Returns the report as a JSON string.
#[pyfunction]
fn certify_polynomial(n: usize, parts: Vec<(u32, Vec<String>)>) -> PyResult<String> {
    let vectors: Vec<CoeffVector> = parts
        .into_iter()
        .map(|(d, coeffs)| parse_coeffs(n, d, coeffs))
        .collect::<PyResult<_>>()?;
    let report = certify::certify_polynomial(&vectors).map_err(err)?;
    serde_json::to_string(&report).map_err(err)
}

/// The published extremal witnesses as coefficient strings.
#[pyfunction]
fn witness(name: &str) -> PyResult<Vec<String>> {
    match name {
        "f" => Ok(to_strings(&certify::witness_f())),
        "g" => Ok(to_strings(&certify::witness_g())),
        other => Err(PyValueError::new_err(format!("unknown witness {other:?}"))),
    }
}

/// Compute R_{n,d}; returns the full certificate as a JSON string.
#[pyfunction]
#[pyo3(signature = (n, d, node_budget=200_000, time_budget_secs=None, symmetry=true))]
fn compute_rnd(
    n: usize,
    d: u32,
    node_budget: u64,
    time_budget_secs: Option<u64>,
    symmetry: bool,
) -> PyResult<String> {
    let mut config = search::SearchConfig::new(n, d);
    config.node_budget = node_budget;
    config.time_budget = time_budget_secs.map(std::time::Duration::from_secs);
    config.symmetry = symmetry;
    let mut cert = search::compute_rnd(&config).map_err(err)?;
    cert.meta = None;
    serde_json::to_string(&cert).map_err(err)
}

/// Replay a certificate JSON string; true iff every check passes.
#[pyfunction]
fn verify_certificate(cert_json: &str) -> PyResult<bool> {
    let cert: search::RndCertificate = serde_json::from_str(cert_json).map_err(err)?;
    Ok(search::verify_certificate(&cert))
}

/// Rank-1 patch for a nonnegative block, when one exists.
#[pyfunction]
fn rank1_patch(n: usize, d: u32, coeffs: Vec<String>) -> PyResult<Option<Vec<String>>> {
    let h = parse_coeffs(n, d, coeffs)?;
    Ok(search::rank1_patch(&h).map_err(err)?.map(|delta| to_strings(&delta)))
}

/// Run one lemma suite; returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (lemma, n_max=4, trials=200, seed=17))]
fn run_lemma(lemma: &str, n_max: usize, trials: u64, seed: u64) -> PyResult<String> {
    let id: lemmas::LemmaId = lemma.parse().map_err(err)?;
    let cfg = lemmas::LemmaRunConfig { n_max, trials, seed, threads: 1 };
    serde_json::to_string(&lemmas::run_lemma(id, &cfg)).map_err(err)
}

#[pymodule]
fn sosrank_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(macaulay_rep, m)?)?;
    m.add_function(wrap_pyfunction!(macaulay_step, m)?)?;
    m.add_function(wrap_pyfunction!(kappa0, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_bands, m)?)?;
    m.add_function(wrap_pyfunction!(lex_basis, m)?)?;
    m.add_function(wrap_pyfunction!(index_of, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_at, m)?)?;
    m.add_function(wrap_pyfunction!(shadow, m)?)?;
    m.add_function(wrap_pyfunction!(prolong_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(prolong, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(is_sos_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(prolongation_rank, m)?)?;
    m.add_function(wrap_pyfunction!(certify_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(compute_rnd, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(rank1_patch, m)?)?;
    m.add_function(wrap_pyfunction!(run_lemma, m)?)?;
    Ok(())
}
