//! Python bindings: the twist-word pipeline, covering enumeration, and
//! cyclic presentations, exposed as `oneone_py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use oneone::catalog::{torus_alexander, torus_word_formula, BSign, TorusParams};
use oneone::cli::parse_mcg;
use oneone::covering::{covering_monodromies, cyclic_word, Monodromy};
use oneone::cyclicpres::{equivalent_up_to_shift, ShiftEquivOptions};
use oneone::knot::{analyze, complement_homology};
use oneone::words::render_pi1;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn torsion_i64(g: &oneone::AbelianGroup) -> Vec<i64> {
    g.torsion
        .iter()
        .map(|t| i64::try_from(t).expect("torsion fits in i64"))
        .collect()
}

/// A (1,1)-knot built from a twist word like `"a^-2 g^-2 a^-2"`.
#[pyclass(name = "Knot")]
struct PyKnot {
    inner: oneone::OneOneKnot,
}

#[pymethods]
impl PyKnot {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        let psi = parse_mcg(word).map_err(value_err)?;
        Ok(PyKnot { inner: analyze(&psi) })
    }

    #[getter]
    fn p(&self) -> i64 {
        self.inner.p
    }

    #[getter]
    fn q_prime(&self) -> i64 {
        self.inner.q_prime
    }

    #[getter]
    fn q_dblprime(&self) -> i64 {
        self.inner.q_dblprime
    }

    #[getter]
    fn ambient(&self) -> String {
        self.inner.ambient()
    }

    #[getter]
    fn relator(&self) -> String {
        render_pi1(&self.inner.relator)
    }

    #[getter]
    fn psi_beta(&self) -> String {
        render_pi1(&self.inner.psi_beta)
    }

    /// (rank, torsion) of H1 of the knot complement.
    fn complement_homology(&self) -> (usize, Vec<i64>) {
        let g = complement_homology(&self.inner);
        (g.rank, torsion_i64(&g))
    }

    /// Monodromy values omega_f(alpha) of the n-fold strongly-cyclic
    /// branched coverings; empty if none exist.
    fn monodromies(&self, n: i64) -> PyResult<Vec<i64>> {
        Ok(covering_monodromies(&self.inner, n)
            .map_err(value_err)?
            .iter()
            .map(|m| m.x)
            .collect())
    }

    /// The cyclic presentation G_n(w) of the covering with monodromy x.
    fn covering_presentation(&self, n: i64, x: i64) -> PyResult<PyCyclicPresentation> {
        let w = cyclic_word(&self.inner, Monodromy { n, x }).map_err(value_err)?;
        Ok(PyCyclicPresentation { inner: w })
    }

    fn __repr__(&self) -> String {
        format!("Knot('{}') in {}", self.inner.psi, self.inner.ambient())
    }
}

/// A cyclic presentation G_n(w).
#[pyclass(name = "CyclicPresentation")]
struct PyCyclicPresentation {
    inner: oneone::CyclicPresentation,
}

#[pymethods]
impl PyCyclicPresentation {
    #[new]
    fn new(n: usize, word: &str) -> PyResult<Self> {
        Ok(PyCyclicPresentation {
            inner: oneone::CyclicPresentation::parse(n, word).map_err(value_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn word(&self) -> String {
        self.inner.to_string()
    }

    /// Coefficients a_1..a_n of the associated polynomial f_w(t).
    fn polynomial(&self) -> Vec<i64> {
        self.inner.polynomial().coeffs
    }

    /// (rank, torsion) of the abelianization.
    fn homology(&self) -> (usize, Vec<i64>) {
        let g = self.inner.abelianization();
        (g.rank, torsion_i64(&g))
    }

    fn theta_shift(&self, s: i64) -> PyCyclicPresentation {
        PyCyclicPresentation { inner: self.inner.theta_shift(s) }
    }

    /// Witness shift s with theta^s(self) = other (as cyclic words), or None.
    fn shift_equivalent(&self, other: &PyCyclicPresentation) -> PyResult<Option<usize>> {
        equivalent_up_to_shift(&self.inner, &other.inner, ShiftEquivOptions::default())
            .map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("CyclicPresentation(n={}, w={})", self.inner.n(), self.inner)
    }
}

/// Closed-form cyclic word for the n-fold covering of t(k, hk+1) (sign "+")
/// or t(k, hk-1) (sign "-").
#[pyfunction]
fn torus_knot_word(k: i64, h: i64, sign: &str, n: i64) -> PyResult<PyCyclicPresentation> {
    let sign = match sign {
        "+" | "plus" => BSign::Plus,
        "-" | "minus" => BSign::Minus,
        other => return Err(PyValueError::new_err(format!("bad sign: {other}"))),
    };
    let tp = TorusParams::new(k, h, sign).map_err(value_err)?;
    Ok(PyCyclicPresentation {
        inner: torus_word_formula(tp, n).map_err(value_err)?,
    })
}

/// Alexander polynomial coefficients of the torus knot t(a, b).
#[pyfunction]
fn torus_alexander_poly(a: i64, b: i64) -> PyResult<Vec<i64>> {
    Ok(torus_alexander(a, b).map_err(value_err)?.coeffs)
}

#[pymodule]
fn oneone_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyKnot>()?;
    m.add_class::<PyCyclicPresentation>()?;
    m.add_function(wrap_pyfunction!(torus_knot_word, m)?)?;
    m.add_function(wrap_pyfunction!(torus_alexander_poly, m)?)?;
    Ok(())
}
