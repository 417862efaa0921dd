//! Python bindings for the exact symplectic Dirac operator engine.
//!
//! Exposes the sparse polynomial type and the main operations: the Clifford
//! generators, `D_s`/`X_s`/Euler/Casimir, monogenic decomposition and both
//! projector families, truncated kernel bases with dimension tables,
//! coefficient formulas, weight checks, and the seeded verification suite.
//! Rationals cross the boundary as exact `p/q` strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use sympdirac::fischer;
use sympdirac::kernel;
use sympdirac::ops;
use sympdirac::textio;
use sympdirac::verify as verify_suite;
use sympdirac::weights;
use sympdirac::{Error, Parity, SPoly, ScalarMode, VarBank};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bank_of(name: &str) -> PyResult<VarBank> {
    match name {
        "base" | "x" => Ok(VarBank::Base),
        "spinor" | "q" => Ok(VarBank::Spinor),
        other => Err(PyValueError::new_err(format!(
            "unknown variable bank '{}' (expected 'base' or 'spinor')",
            other
        ))),
    }
}

fn parity_of(name: Option<&str>) -> PyResult<Option<Parity>> {
    match name {
        None => Ok(None),
        Some("even") => Ok(Some(Parity::Even)),
        Some("odd") => Ok(Some(Parity::Odd)),
        Some(other) => Err(PyValueError::new_err(format!(
            "unknown parity '{}' (expected 'even' or 'odd')",
            other
        ))),
    }
}

fn quad_word(shape: &str, i: usize, j: usize) -> PyResult<ops::QuadraticClifford> {
    match shape {
        "ee" => Ok(ops::QuadraticClifford::ee(i, j)),
        "ff" => Ok(ops::QuadraticClifford::ff(i, j)),
        "ef" => Ok(ops::QuadraticClifford::ef_sym(i, j)),
        other => Err(PyValueError::new_err(format!(
            "unknown quadratic shape '{}' (expected 'ee', 'ff' or 'ef')",
            other
        ))),
    }
}

/// A sparse spinor-valued polynomial with exact Gaussian rational
/// coefficients. Immutable; all operations return new values.
#[pyclass(name = "SPoly", frozen, from_py_object)]
#[derive(Clone)]
struct PySPoly {
    inner: SPoly,
}

impl From<SPoly> for PySPoly {
    fn from(inner: SPoly) -> Self {
        PySPoly { inner }
    }
}

#[pymethods]
impl PySPoly {
    /// Parse from the canonical text format, e.g. `"2x1 - x2 q1^2"`.
    #[staticmethod]
    fn parse(text: &str, n: usize) -> PyResult<Self> {
        textio::parse(text, n).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn zero(n: usize) -> Self {
        SPoly::zero(n).into()
    }

    #[staticmethod]
    fn one(n: usize) -> Self {
        SPoly::one(n).into()
    }

    /// The base variable `x{index}` (1-based).
    #[staticmethod]
    fn x(n: usize, index: usize) -> PyResult<Self> {
        SPoly::var_x(n, index).map(Into::into).map_err(err)
    }

    /// The spinor variable `q{index}` (1-based).
    #[staticmethod]
    fn q(n: usize, index: usize) -> PyResult<Self> {
        SPoly::var_q(n, index).map(Into::into).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn base_degree(&self) -> Option<u32> {
        self.inner.base_degree()
    }

    fn spinor_degree(&self) -> Option<u32> {
        self.inner.spinor_degree()
    }

    /// Spinor-degree parity shared by every term: 'even', 'odd' or None.
    fn spinor_parity(&self) -> Option<&'static str> {
        self.inner.spinor_parity().map(Parity::as_str)
    }

    /// Exact partial derivative; `bank` is 'base' or 'spinor'.
    fn diff(&self, bank: &str, index: usize) -> PyResult<Self> {
        self.inner
            .diff(bank_of(bank)?, index)
            .map(Into::into)
            .map_err(err)
    }

    fn graded_part(&self, basedeg: u32) -> Self {
        self.inner.graded_part(basedeg).into()
    }

    fn spinor_truncate(&self, dmax: u32) -> Self {
        self.inner.spinor_truncate(dmax).into()
    }

    fn bidegree_support(&self) -> Vec<(u32, u32)> {
        self.inner.bidegree_support().into_iter().collect()
    }

    /// JSON list of term objects with exact `p/q` coefficient strings.
    fn to_json(&self) -> String {
        textio::to_json(&self.inner).to_string()
    }

    fn __str__(&self) -> String {
        textio::serialize(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("SPoly(n={}, '{}')", self.inner.n(), textio::serialize(&self.inner))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner.try_add(&other.inner).map(Into::into).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner.try_sub(&other.inner).map(Into::into).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.inner.try_mul(&other.inner).map(Into::into).map_err(err)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }
}

/// The symplectic Dirac operator `D_s`.
#[pyfunction]
fn apply_ds(p: &PySPoly) -> PySPoly {
    ops::apply_ds(&p.inner).into()
}

/// The raising operator `X_s`.
#[pyfunction]
fn apply_xs(p: &PySPoly) -> PySPoly {
    ops::apply_xs(&p.inner).into()
}

/// The base Euler operator.
#[pyfunction]
fn apply_euler(p: &PySPoly) -> PySPoly {
    ops::apply_euler(&p.inner).into()
}

/// The sl2 Casimir `X_s D_s - E(2n-1+E)/2`.
#[pyfunction]
fn apply_gamma(p: &PySPoly) -> PySPoly {
    ops::apply_gamma(&p.inner).into()
}

/// Apply a Clifford generator: `gen` is 'e' or 'f', `j` is 1-based.
#[pyfunction]
fn clifford_apply(gen: &str, j: usize, p: &PySPoly) -> PyResult<PySPoly> {
    let g = match gen {
        "e" => ops::CliffordGen::E,
        "f" => ops::CliffordGen::F,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown generator '{}' (expected 'e' or 'f')",
                other
            )))
        }
    };
    ops::clifford_apply(g, j, &p.inner).map(Into::into).map_err(err)
}

/// Apply an sp(2n) vector field: `kind` is 'x', 'y' or 'z'.
#[pyfunction]
fn sp_vectorfield(kind: &str, i: usize, j: usize, p: &PySPoly) -> PyResult<PySPoly> {
    let k = match kind {
        "x" => ops::SpKind::X,
        "y" => ops::SpKind::Y,
        "z" => ops::SpKind::Z,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown vector field kind '{}' (expected 'x', 'y' or 'z')",
                other
            )))
        }
    };
    ops::sp_vectorfield(k, i, j, &p.inner).map(Into::into).map_err(err)
}

/// Apply the sp(2n) image of a quadratic Clifford element as a base vector
/// field; `shape` is 'ee', 'ff' or 'ef'.
#[pyfunction]
fn rho_star_apply(shape: &str, i: usize, j: usize, p: &PySPoly) -> PyResult<PySPoly> {
    let word = quad_word(shape, i, j)?;
    ops::rho_star(p.inner.n(), word)
        .and_then(|m| m.vectorfield_apply(&p.inner))
        .map(Into::into)
        .map_err(err)
}

/// Apply the metaplectic image of a quadratic Clifford element on the
/// spinor bank (Gaussian coefficients).
#[pyfunction]
fn l_star_apply(shape: &str, i: usize, j: usize, p: &PySPoly) -> PyResult<PySPoly> {
    let word = quad_word(shape, i, j)?;
    ops::l_star(p.inner.n(), word, ScalarMode::Gaussian)
        .and_then(|op| op.apply(&p.inner))
        .map(Into::into)
        .map_err(err)
}

/// Monogenic decomposition of a base-homogeneous polynomial: a list of
/// `(ell, m)` pairs with `D_s m = 0` and `p = sum X_s^(k-ell) m`.
#[pyfunction]
fn decompose(p: &PySPoly) -> PyResult<Vec<(usize, PySPoly)>> {
    let result = fischer::decompose(&p.inner).map_err(err)?;
    Ok(result
        .components
        .into_iter()
        .map(|c| (c.ell, c.m.into()))
        .collect())
}

/// Component of a degree-`k` polynomial with `i` raising factors.
#[pyfunction]
fn project_explicit(p: &PySPoly, k: usize, i: usize) -> PyResult<PySPoly> {
    fischer::project_explicit(&p.inner, k, i).map(Into::into).map_err(err)
}

/// Component of monogenic degree `ell`, via the Casimir spectral product.
#[pyfunction]
fn project_casimir(p: &PySPoly, k: usize, ell: usize) -> PyResult<PySPoly> {
    fischer::project_casimir(&p.inner, k, ell).map(Into::into).map_err(err)
}

/// `c_{j,k,l}` as an exact `p/q` string.
#[pyfunction]
fn coeff_c(j: usize, k: usize, l: usize, n: usize) -> String {
    fischer::coeff_c(j, k, l, n).to_string()
}

/// Projector coefficient `a^{i,k}_j` (proof recursion) as a `p/q` string.
#[pyfunction]
fn coeff_a(i: usize, k: usize, j: usize, n: usize) -> PyResult<String> {
    fischer::coeff_a(i, k, j, n).map(|v| v.to_string()).map_err(err)
}

/// The displayed closed form of `a^{i,k}_j`, kept for comparison.
#[pyfunction]
fn coeff_a_display(i: usize, k: usize, j: usize, n: usize) -> PyResult<String> {
    fischer::coeff_a_display(i, k, j, n).map(|v| v.to_string()).map_err(err)
}

/// Exact basis of degree-`k` monogenics with spinor degree <= `dmax`;
/// `parity` restricts to 'even' or 'odd'.
#[pyfunction]
#[pyo3(signature = (n, k, dmax, parity=None))]
fn monogenic_basis(n: usize, k: usize, dmax: usize, parity: Option<&str>) -> PyResult<Vec<PySPoly>> {
    let parity = parity_of(parity)?;
    Ok(kernel::monogenic_basis(n, k, dmax, parity)
        .vectors
        .into_iter()
        .map(Into::into)
        .collect())
}

/// One dimension-table row: `(n, k, d, parity, dim)`.
type DimRowTuple = (usize, usize, usize, String, usize);

/// Kernel dimension rows `(n, k, d, parity, dim)` for `k <= kmax`,
/// `d <= dmax`, with parity 'all'/'even'/'odd'.
#[pyfunction]
#[pyo3(signature = (n, kmax, dmax, size_cap=200_000))]
fn dimension_table(
    n: usize,
    kmax: usize,
    dmax: usize,
    size_cap: usize,
) -> PyResult<Vec<DimRowTuple>> {
    let rows = kernel::dimension_table(n, kmax, dmax, size_cap).map_err(err)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            (
                r.n,
                r.k,
                r.d,
                r.parity.map_or("all", Parity::as_str).to_string(),
                r.dim,
            )
        })
        .collect())
}

/// `(rank, cols)` of the raising operator on the truncated slice; the two
/// are equal exactly when the restriction is injective.
#[pyfunction]
#[pyo3(signature = (n, k, dmax, size_cap=200_000))]
fn xs_injectivity(n: usize, k: usize, dmax: usize, size_cap: usize) -> PyResult<(usize, usize)> {
    let check = kernel::xs_injectivity_check(n, k, dmax, size_cap).map_err(err)?;
    Ok((check.rank, check.cols))
}

/// Casimir eigenvalue `-(1/2) ell (2n-1+ell)` as a `p/q` string.
#[pyfunction]
fn casimir_eigenvalue(ell: usize, n: usize) -> String {
    weights::casimir_eigenvalue(ell, n).to_string()
}

/// Exhaustive shifted-norm sweep; true when norms agree only on the
/// diagonal of the label families.
#[pyfunction]
fn infinitesimal_character_check(n: usize, amax: usize, bmax: usize) -> bool {
    weights::infinitesimal_character_check(n, amax, bmax).ok
}

/// Run the exact identity suite; returns `(all_passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (nmax=2, samples=25, seed=7))]
fn verify(nmax: usize, samples: usize, seed: u64) -> (bool, String) {
    let cfg = verify_suite::VerifyConfig {
        ns: (1..=nmax.max(1)).collect(),
        samples,
        seed,
        ..verify_suite::VerifyConfig::default()
    };
    let report = verify_suite::run_verify(&cfg);
    (report.all_passed(), report.render_text())
}

#[pymodule]
fn sympdirac_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySPoly>()?;
    m.add_function(wrap_pyfunction!(apply_ds, m)?)?;
    m.add_function(wrap_pyfunction!(apply_xs, m)?)?;
    m.add_function(wrap_pyfunction!(apply_euler, m)?)?;
    m.add_function(wrap_pyfunction!(apply_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_apply, m)?)?;
    m.add_function(wrap_pyfunction!(sp_vectorfield, m)?)?;
    m.add_function(wrap_pyfunction!(rho_star_apply, m)?)?;
    m.add_function(wrap_pyfunction!(l_star_apply, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(project_explicit, m)?)?;
    m.add_function(wrap_pyfunction!(project_casimir, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_c, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_a, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_a_display, m)?)?;
    m.add_function(wrap_pyfunction!(monogenic_basis, m)?)?;
    m.add_function(wrap_pyfunction!(dimension_table, m)?)?;
    m.add_function(wrap_pyfunction!(xs_injectivity, m)?)?;
    m.add_function(wrap_pyfunction!(casimir_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(infinitesimal_character_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
