//! Python bindings. Exposed as the `tlimm` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyInt;

use tlimm::algebra::{self, GroupAlgebraElement as CoreGa, KauffmanDiagram as CoreDiagram, Permutation as CorePerm};
use tlimm::checks::{self, Params};
use tlimm::combinatorics::{self, IndexSet, SkewShape as CoreShape};
use tlimm::immanants::hadamard_tl_immanant;
use tlimm::poly::Coeff;
use tlimm::symfun::{expand_in_monomial, expand_in_schur};

fn err(e: tlimm::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn big<'py>(py: Python<'py>, c: &Coeff) -> PyResult<Bound<'py, PyAny>> {
    py.get_type::<PyInt>().call1((c.to_string(),))
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn index_set(items: Vec<usize>) -> IndexSet {
    items.into_iter().collect()
}

#[pyclass(name = "SkewShape", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct SkewShape(CoreShape);

#[pymethods]
impl SkewShape {
    /// Parses "4,2,1" or "4,2,1/1,1".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        combinatorics::parse_shape(text).map(SkewShape).map_err(err)
    }

    #[getter]
    fn outer(&self) -> Vec<usize> {
        self.0.outer().parts().to_vec()
    }

    #[getter]
    fn inner(&self) -> Vec<usize> {
        self.0.inner().parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn rows(&self) -> usize {
        self.0.rows()
    }

    fn is_ribbon(&self) -> bool {
        self.0.is_ribbon()
    }

    fn avoids_3x2(&self) -> bool {
        self.0.avoids_3x2()
    }

    fn conjugate(&self) -> Self {
        SkewShape(self.0.conjugate())
    }

    fn ribbon_descents(&self) -> PyResult<Vec<usize>> {
        Ok(self.0.ribbon_descents().map_err(err)?.into_iter().collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SkewShape('{}')", self.0)
    }
}

#[pyclass(name = "Permutation", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Permutation(CorePerm);

#[pymethods]
impl Permutation {
    /// One-line notation with values `1..=n`.
    #[new]
    fn new(one_line: Vec<usize>) -> PyResult<Self> {
        CorePerm::new(&one_line).map(Permutation).map_err(err)
    }

    #[staticmethod]
    fn simple(i: usize, n: usize) -> PyResult<Self> {
        CorePerm::simple(i, n).map(Permutation).map_err(err)
    }

    #[staticmethod]
    fn all(n: usize) -> Vec<Self> {
        CorePerm::all(n).into_iter().map(Permutation).collect()
    }

    fn one_line(&self) -> Vec<usize> {
        self.0.one_line()
    }

    fn sign(&self) -> i64 {
        self.0.sign()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.0.reduced_word()
    }

    fn inverse(&self) -> Self {
        Permutation(self.0.inverse())
    }

    /// Left-to-right product: `(u * v)(i) = v(u(i))`.
    fn __mul__(&self, other: &Permutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(Permutation).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.one_line())
    }
}

/// Element of the integral group algebra of `S_n`.
#[pyclass(name = "GroupAlgebraElement", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct GroupAlgebraElement(CoreGa);

#[pymethods]
impl GroupAlgebraElement {
    #[staticmethod]
    fn one(n: usize) -> Self {
        GroupAlgebraElement(CoreGa::one(n))
    }

    #[staticmethod]
    fn basis(w: &Permutation) -> Self {
        GroupAlgebraElement(CoreGa::basis(w.0.clone()))
    }

    /// `B(I) = Π_{i∈I} (1 + s_i)`.
    #[staticmethod]
    fn b_of(set: Vec<usize>, n: usize) -> PyResult<Self> {
        algebra::b_of(&index_set(set), n).map(GroupAlgebraElement).map_err(err)
    }

    fn terms(&self) -> Vec<(Permutation, i64)> {
        self.0.terms().iter().map(|(w, &c)| (Permutation(w.clone()), c)).collect()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(GroupAlgebraElement).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(GroupAlgebraElement).map_err(err)
    }

    /// Pointwise product on the permutation basis.
    fn star(&self, other: &Self) -> PyResult<Self> {
        self.0.star(&other.0).map(GroupAlgebraElement).map_err(err)
    }

    fn sign_functional(&self) -> i64 {
        self.0.sign_functional()
    }

    /// `θ` as a list of `(diagram, coefficient)` pairs.
    fn theta(&self) -> Vec<(KauffmanDiagram, i64)> {
        algebra::theta(&self.0).terms().iter().map(|(d, &c)| (KauffmanDiagram(d.clone()), c)).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "KauffmanDiagram", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct KauffmanDiagram(CoreDiagram);

#[pymethods]
impl KauffmanDiagram {
    /// Accepts "identity", "I=1,3" or a generator word such as "t1*t3".
    #[new]
    fn new(text: &str, n: usize) -> PyResult<Self> {
        algebra::parse_tau(text, n).map(KauffmanDiagram).map_err(err)
    }

    #[staticmethod]
    fn enumerate(n: usize) -> PyResult<Vec<Self>> {
        Ok(CoreDiagram::enumerate(n).map_err(err)?.into_iter().map(KauffmanDiagram).collect())
    }

    #[staticmethod]
    fn tau_of(set: Vec<usize>, n: usize) -> PyResult<Self> {
        algebra::tau_of(&index_set(set), n).map(KauffmanDiagram).map_err(err)
    }

    fn n(&self) -> usize {
        self.0.n()
    }

    fn generator_word(&self) -> Vec<usize> {
        self.0.generator_word()
    }

    /// Concatenation: returns the product diagram and the number of loops.
    fn __mul__(&self, other: &Self) -> PyResult<(Self, usize)> {
        let (d, loops) = self.0.concat(&other.0).map_err(err)?;
        Ok((KauffmanDiagram(d), loops))
    }

    /// `f_τ(w)`, the coefficient of this diagram in `θ(w)`.
    fn f_tau(&self, w: &Permutation) -> i64 {
        algebra::f_tau_perm(&self.0, &w.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("KauffmanDiagram('{}', {})", self.0, self.0.n())
    }
}

/// Expands `imm_τ` of the Hadamard product of dual Jacobi–Trudi matrices.
/// Returns `(partitions, coefficient)` pairs; `basis` is "s" or "m".
#[pyfunction]
#[pyo3(signature = (shapes, tau = "identity", basis = "s"))]
fn expand<'py>(py: Python<'py>, shapes: &str, tau: &str, basis: &str) -> PyResult<Vec<(Vec<Vec<usize>>, Bound<'py, PyAny>)>> {
    let imm = hadamard_tl_immanant(&combinatorics::parse_shapes(shapes).map_err(err)?, tau).map_err(err)?;
    let e = match basis {
        "s" => expand_in_schur(&imm),
        "m" => expand_in_monomial(&imm),
        other => return Err(PyValueError::new_err(format!("unknown basis {other:?}, expected \"s\" or \"m\""))),
    }
    .map_err(err)?;
    e.terms()
        .iter()
        .map(|(parts, c)| Ok((parts.iter().map(|p| p.parts().to_vec()).collect(), big(py, c)?)))
        .collect()
}

/// Runs a registered check; returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (check, max_size = None, k = None, n = None, m = None, shapes = None))]
fn run_check<'py>(
    py: Python<'py>,
    check: &str,
    max_size: Option<usize>,
    k: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
    shapes: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let shapes = shapes.map(combinatorics::parse_shapes).transpose().map_err(err)?;
    let params = Params { max_size, k, n, m, shapes };
    let report = py.detach(|| checks::run_check(check, &params)).map_err(err)?;
    json_to_py(py, &report.to_json())
}

/// `(id, anchor, accepted params)` for every registered check.
#[pyfunction]
fn list_checks() -> Vec<(String, String, Vec<String>)> {
    checks::registry()
        .iter()
        .map(|c| (c.id.to_string(), c.anchor.to_string(), c.params.iter().map(|p| p.to_string()).collect()))
        .collect()
}

#[pymodule]
#[pyo3(name = "tlimm")]
fn tlimm_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SkewShape>()?;
    m.add_class::<Permutation>()?;
    m.add_class::<GroupAlgebraElement>()?;
    m.add_class::<KauffmanDiagram>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(list_checks, m)?)?;
    Ok(())
}
