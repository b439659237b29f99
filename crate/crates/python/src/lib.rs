//! Python bindings for the `modtrace` crate.
//!
//! Rings, dimension characters and NIM-reps are wrapped as classes; the
//! reports come back as plain dictionaries (decoded from the crate's JSON
//! serialisation) so they can be inspected without further bindings.

use modtrace_core::catalog;
use modtrace_core::frobenius;
use modtrace_core::fusion;
use modtrace_core::nimrep;
use modtrace_core::pivotal;
use modtrace_core::trace;
use modtrace_core::C64;
use pyo3::exceptions::{PyArithmeticError, PyNotImplementedError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;

const DEFAULT_TOL: f64 = 1e-9;

fn to_py_err(e: modtrace_core::Error) -> PyErr {
    use modtrace_core::Error::*;
    match e {
        Numeric(_) => PyArithmeticError::new_err(e.to_string()),
        Unsupported(_) => PyNotImplementedError::new_err(e.to_string()),
        Structural(_) | Precondition(_) | Usage(_) | Json(_) => {
            PyValueError::new_err(e.to_string())
        }
        Io(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

trait IntoPyResult<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPyResult<T> for modtrace_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py_err)
    }
}

/// Converts a serialisable report into a Python dictionary.
fn to_dict<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A fusion ring `N[a][b][c] = dim Hom(a ⊗ b, c)` with unit and duality.
#[pyclass(name = "FusionRing", module = "modtrace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFusionRing(fusion::FusionRing);

#[pymethods]
impl PyFusionRing {
    #[new]
    #[pyo3(signature = (labels, unit, dual, n))]
    fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        n: Vec<Vec<Vec<i64>>>,
    ) -> PyResult<Self> {
        fusion::FusionRing::new(labels, unit, dual, n)
            .py()
            .map(Self)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn unit(&self) -> usize {
        self.0.unit()
    }

    #[getter]
    fn dual(&self) -> Vec<usize> {
        self.0.duals().to_vec()
    }

    #[getter(N)]
    fn structure_constants(&self) -> Vec<Vec<Vec<i64>>> {
        self.0.structure_constants().to_vec()
    }

    fn fingerprint(&self) -> String {
        self.0.fingerprint()
    }

    fn is_commutative(&self) -> bool {
        self.0.is_commutative()
    }

    /// Axiom check; returns `{"valid": bool, "violations": [...]}`.
    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &fusion::validate_fusion_ring(&self.0))
    }

    fn fusion_matrices(&self) -> Vec<Vec<Vec<i64>>> {
        fusion::fusion_matrices(&self.0)
    }

    fn fp_dimensions(&self) -> PyResult<Vec<f64>> {
        fusion::fp_dimensions(&self.0).py()
    }

    /// Dimension characters with no zero entries, in canonical order.
    fn characters(&self) -> PyResult<Vec<PyDimChar>> {
        let chars = pivotal::enumerate_characters(&self.0).py()?;
        Ok(chars.into_iter().map(PyDimChar).collect())
    }

    fn fp_character(&self) -> PyResult<PyDimChar> {
        let fp = fusion::fp_dimensions(&self.0).py()?;
        Ok(PyDimChar(pivotal::DimChar::from_real(&fp)))
    }

    fn regular_module(&self) -> PyNimRep {
        PyNimRep(nimrep::regular_module(&self.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "FusionRing(rank={}, labels={:?})",
            self.0.rank(),
            self.0.labels()
        )
    }
}

/// A candidate pivotal structure: one complex dimension per simple.
#[pyclass(name = "DimChar", module = "modtrace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDimChar(pivotal::DimChar);

#[pymethods]
impl PyDimChar {
    #[new]
    fn new(d: Vec<C64>) -> Self {
        Self(pivotal::DimChar::new(d))
    }

    #[getter]
    fn d(&self) -> Vec<C64> {
        self.0.d.clone()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    #[pyo3(signature = (ring, tol = DEFAULT_TOL))]
    fn validate<'py>(
        &self,
        py: Python<'py>,
        ring: &PyFusionRing,
        tol: f64,
    ) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &pivotal::validate_dim_char(&ring.0, &self.0, tol).py()?)
    }

    fn conjugate(&self) -> Self {
        Self(pivotal::conjugate_char(&self.0))
    }

    #[pyo3(signature = (ring, tol = DEFAULT_TOL))]
    fn is_spherical(&self, ring: &PyFusionRing, tol: f64) -> bool {
        pivotal::is_spherical(&ring.0, &self.0, tol)
    }

    /// `dim(C) = Σ |d_u|²`.
    fn global_dimension(&self) -> f64 {
        pivotal::global_dimension(&self.0)
    }

    /// `C = Σ d_u²`.
    fn c_invariant(&self) -> C64 {
        pivotal::c_invariant(&self.0)
    }

    #[pyo3(signature = (other, tol = 1e-12))]
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    fn __repr__(&self) -> String {
        let parts: Vec<String> = self
            .0
            .d
            .iter()
            .map(|z| format!("{}{:+}j", z.re, z.im))
            .collect();
        format!("DimChar([{}])", parts.join(", "))
    }
}

/// A NIM-rep: `M[u][j][i] = dim Hom(c_u ⊲ m_i, m_j)`.
#[pyclass(name = "NimRep", module = "modtrace", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyNimRep(nimrep::NimRep);

#[pymethods]
impl PyNimRep {
    #[new]
    fn new(module_rank: usize, matrices: Vec<Vec<Vec<i64>>>) -> PyResult<Self> {
        nimrep::NimRep::new(module_rank, matrices).py().map(Self)
    }

    #[getter]
    fn module_rank(&self) -> usize {
        self.0.module_rank()
    }

    #[getter]
    fn matrices(&self) -> Vec<Vec<Vec<i64>>> {
        self.0.matrices().to_vec()
    }

    fn validate<'py>(&self, py: Python<'py>, ring: &PyFusionRing) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &nimrep::validate_nimrep(&ring.0, &self.0).py()?)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        nimrep::components(&self.0)
    }

    fn is_indecomposable(&self) -> bool {
        nimrep::is_indecomposable(&self.0)
    }

    fn direct_sum(&self, other: &Self) -> PyResult<Self> {
        nimrep::direct_sum(&self.0, &other.0).py().map(Self)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "NimRep(module_rank={}, ring_rank={})",
            self.0.module_rank(),
            self.0.ring_rank()
        )
    }
}

/// The solver's verdict together with the dimension matrix and residuals.
#[pyclass(name = "TraceCertificate", module = "modtrace", frozen)]
struct PyTraceCertificate(trace::TraceCertificate);

#[pymethods]
impl PyTraceCertificate {
    #[getter]
    fn matched(&self) -> bool {
        self.0.matched
    }

    /// Trace dimensions of the module simples, or `None` when unmatched.
    #[getter]
    fn d(&self) -> Option<Vec<C64>> {
        self.0.dims().map(<[C64]>::to_vec)
    }

    #[getter]
    fn anchors(&self) -> Option<Vec<usize>> {
        self.0.trace.as_ref().map(|t| t.anchors.clone())
    }

    #[getter(Q)]
    fn q(&self) -> Vec<Vec<C64>> {
        self.0.q.q.clone()
    }

    #[getter]
    fn dim_c(&self) -> f64 {
        self.0.dim_c
    }

    #[getter]
    fn c(&self) -> C64 {
        self.0.c
    }

    #[getter]
    fn spherical_by_c(&self) -> bool {
        self.0.spherical_by_c
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.0.blocks.clone()
    }

    #[getter]
    fn right_eigen_residual(&self) -> Option<f64> {
        self.0.right_eigen_residual
    }

    #[getter]
    fn left_eigen_residual(&self) -> Option<f64> {
        self.0.left_eigen_residual
    }

    #[getter]
    fn diagnostics(&self) -> Vec<String> {
        self.0.diagnostics.clone()
    }

    /// Residuals and eigenvalues of `Q` as a dictionary.
    fn q_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &self.0.q_report)
    }

    /// Trace dimensions rescaled so that simple `index` has dimension 1.
    fn normalized_at(&self, index: usize) -> PyResult<Vec<C64>> {
        let t = self
            .0
            .trace
            .as_ref()
            .ok_or_else(|| PyValueError::new_err("no module trace exists"))?;
        if index >= t.d.len() {
            return Err(PyValueError::new_err(format!(
                "object {index} out of range"
            )));
        }
        Ok(t.normalized_at(index))
    }

    fn __repr__(&self) -> String {
        format!(
            "TraceCertificate(matched={}, dim_c={})",
            self.0.matched, self.0.dim_c
        )
    }
}

/// Builtin ring by name (`fibonacci`, `ising`, `rep_s3`, `zn:<n>`) with
/// its enumerated characters.
#[pyfunction]
fn builtin(name: &str) -> PyResult<(PyFusionRing, Vec<PyDimChar>)> {
    let (ring, chars) = catalog::builtin(name).py()?;
    Ok((
        PyFusionRing(ring),
        chars.into_iter().map(PyDimChar).collect(),
    ))
}

#[pyfunction]
#[pyo3(signature = (ring, ch, rep, tol = DEFAULT_TOL))]
fn solve_module_trace(
    ring: &PyFusionRing,
    ch: &PyDimChar,
    rep: &PyNimRep,
    tol: f64,
) -> PyResult<PyTraceCertificate> {
    trace::solve_module_trace(&ring.0, &ch.0, &rep.0, tol)
        .py()
        .map(PyTraceCertificate)
}

/// Perron–Frobenius trace of an indecomposable module, scaled so that
/// `Σ d_i²` equals the FP global dimension.
#[pyfunction]
fn fp_module_trace(ring: &PyFusionRing, rep: &PyNimRep) -> PyResult<Vec<f64>> {
    trace::fp_module_trace(&ring.0, &rep.0).py()
}

/// Certificates for every module plus the overall verdict.
#[pyfunction]
#[pyo3(signature = (ring, ch, reps, tol = DEFAULT_TOL))]
fn matched_report<'py>(
    py: Python<'py>,
    ring: &PyFusionRing,
    ch: &PyDimChar,
    reps: Vec<PyRef<'py, PyNimRep>>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let reps: Vec<nimrep::NimRep> = reps.iter().map(|r| r.0.clone()).collect();
    let report = trace::matched_report(&ring.0, &ch.0, &reps, tol).py()?;
    let dict = PyDict::new(py);
    dict.set_item("flexible", report.flexible)?;
    dict.set_item("note", report.note)?;
    let certs: Vec<PyTraceCertificate> = report
        .certificates
        .into_iter()
        .map(PyTraceCertificate)
        .collect();
    dict.set_item("certificates", certs)?;
    Ok(dict)
}

/// Inner-hom algebra data for simple `m`, with the Morita rescaling check
/// when the certificate is matched.
#[pyfunction]
#[pyo3(signature = (ring, rep, m, cert, tol = DEFAULT_TOL))]
fn frobenius_report<'py>(
    py: Python<'py>,
    ring: &PyFusionRing,
    rep: &PyNimRep,
    m: usize,
    cert: &PyTraceCertificate,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let report = frobenius::frobenius_report(&ring.0, &rep.0, m, &cert.0, tol).py()?;
    let out = to_dict(py, &report)?;
    if cert.0.matched {
        let morita = frobenius::morita_rescale_check(&cert.0, m, tol).py()?;
        out.set_item("morita", to_dict(py, &morita)?)?;
    }
    Ok(out)
}

/// Vect_G data for a builtin group name (`Z:<n>`, `Z2xZ2`, `S3`, ...):
/// the group ring, its characters as `(DimChar, phases)` pairs, and one
/// `(subgroup, module)` pair per subgroup.
/// Group ring, `(character, phases)` pairs and `(subgroup, module)` pairs.
type VectGData = (
    PyFusionRing,
    Vec<(PyDimChar, Vec<usize>)>,
    Vec<(Vec<usize>, PyNimRep)>,
);

#[pyfunction]
fn vect_g(name: &str) -> PyResult<VectGData> {
    let g = catalog::builtin_group(name).py()?;
    let ring = catalog::group_ring(&g).py()?;
    let chars = catalog::group_characters(&g)
        .py()?
        .into_iter()
        .map(|k| (PyDimChar(k.to_dim_char()), k.phases))
        .collect();
    let mut modules = Vec::new();
    for h in catalog::subgroups(&g, catalog::DEFAULT_SUBGROUP_BOUND).py()? {
        let rep = catalog::vect_g_module(&g, &h).py()?;
        modules.push((h, PyNimRep(rep)));
    }
    Ok((PyFusionRing(ring), chars, modules))
}

#[pymodule]
fn modtrace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFusionRing>()?;
    m.add_class::<PyDimChar>()?;
    m.add_class::<PyNimRep>()?;
    m.add_class::<PyTraceCertificate>()?;
    m.add_function(wrap_pyfunction!(builtin, m)?)?;
    m.add_function(wrap_pyfunction!(solve_module_trace, m)?)?;
    m.add_function(wrap_pyfunction!(fp_module_trace, m)?)?;
    m.add_function(wrap_pyfunction!(matched_report, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_report, m)?)?;
    m.add_function(wrap_pyfunction!(vect_g, m)?)?;
    Ok(())
}
