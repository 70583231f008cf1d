//! Python bindings. Scalars and levels cross the boundary as exact strings
//! (`"3"`, `"-1/2"`); vectors as lists of such strings.

use homlie_core as core;
use core::format;
use core::oracle::{self, Family, FindingKind, InstanceParams, SuiteConfig};
use core::{ClosureMode, FieldSpec, Level, Subspace, Vector};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field_arg(p: Option<u64>) -> PyResult<FieldSpec> {
    match p {
        None => Ok(FieldSpec::Rationals),
        Some(p) => FieldSpec::prime(p).map_err(err),
    }
}

fn vector_in(field: FieldSpec, coords: &[String]) -> PyResult<Vector> {
    let coords = coords
        .iter()
        .map(|s| field.parse_scalar(s))
        .collect::<core::Result<Vec<_>>>()
        .map_err(err)?;
    Vector::new(field, coords).map_err(err)
}

fn vector_out(v: &Vector) -> Vec<String> {
    v.coords().iter().map(ToString::to_string).collect()
}

fn basis_out(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(vector_out).collect()
}

fn mode_arg(mode: &str) -> PyResult<ClosureMode> {
    match mode {
        "sub" | "subalgebra" => Ok(ClosureMode::Subalgebra),
        "ideal" => Ok(ClosureMode::Ideal),
        other => Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    }
}

/// A finite-dimensional Hom-Lie algebra over Q or GF(p).
#[pyclass(name = "HomLieAlgebra", module = "fuzzy_homlie", frozen, from_py_object)]
#[derive(Clone)]
struct PyAlgebra(core::HomLieAlgebra);

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        format::parse_algebra(text).map(Self).map_err(err)
    }

    /// The three-dimensional example algebra, over Q or GF(p).
    #[staticmethod]
    #[pyo3(signature = (p=None))]
    fn example(p: Option<u64>) -> PyResult<Self> {
        Ok(Self(core::hom_lie::paper_example(field_arg(p)?)))
    }

    /// Direct sum with block-diagonal bracket and twist.
    #[staticmethod]
    fn direct_sum(parts: Vec<PyAlgebra>) -> PyResult<Self> {
        let refs: Vec<&core::HomLieAlgebra> = parts.iter().map(|a| &a.0).collect();
        core::HomLieAlgebra::direct_sum(&refs).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        format::serialize_algebra(&self.0)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    fn bracket(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let f = self.0.field();
        let v = self.0.bracket(&vector_in(f, &x)?, &vector_in(f, &y)?).map_err(err)?;
        Ok(vector_out(&v))
    }

    fn twist(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let v = self.0.twist(&vector_in(self.0.field(), &x)?).map_err(err)?;
        Ok(vector_out(&v))
    }

    /// True when skew-symmetry and the Hom-Jacobi identity hold.
    fn check_axioms(&self) -> bool {
        self.0.check_axioms().valid
    }

    fn is_subalgebra(&self, basis: Vec<Vec<String>>) -> PyResult<bool> {
        self.0.is_subalgebra(&self.subspace(&basis)?).map_err(err)
    }

    fn is_ideal(&self, basis: Vec<Vec<String>>) -> PyResult<bool> {
        self.0.is_ideal(&self.subspace(&basis)?).map_err(err)
    }

    /// Smallest subalgebra (or ideal) containing the seeds, as a basis.
    #[pyo3(signature = (seeds, mode="sub"))]
    fn closure(&self, seeds: Vec<Vec<String>>, mode: &str) -> PyResult<Vec<Vec<String>>> {
        let f = self.0.field();
        let seeds = seeds.iter().map(|s| vector_in(f, s)).collect::<PyResult<Vec<_>>>()?;
        let s = self.0.closure(seeds, mode_arg(mode)?).map_err(err)?;
        Ok(basis_out(&s))
    }

    fn __eq__(&self, other: &PyAlgebra) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("HomLieAlgebra(field={}, dim={})", self.0.field(), self.0.dim())
    }
}

impl PyAlgebra {
    fn subspace(&self, basis: &[Vec<String>]) -> PyResult<Subspace> {
        let f = self.0.field();
        let rows = basis.iter().map(|r| vector_in(f, r)).collect::<PyResult<Vec<_>>>()?;
        Subspace::span(f, self.0.dim(), rows).map_err(err)
    }
}

/// A certified morphism of Hom-Lie algebras.
#[pyclass(name = "Morphism", module = "fuzzy_homlie", frozen)]
struct PyMorphism(core::Morphism);

#[pymethods]
impl PyMorphism {
    /// Raises ValueError unless `matrix` commutes with bracket and twist.
    #[new]
    fn new(source: &PyAlgebra, target: &PyAlgebra, matrix: Vec<Vec<String>>) -> PyResult<Self> {
        let f = source.0.field();
        let rows = matrix.iter().map(|r| vector_in(f, r)).collect::<PyResult<Vec<_>>>()?;
        let m = core::Matrix::from_rows(f, source.0.dim(), rows).map_err(err)?;
        core::Morphism::certify(source.0.clone(), target.0.clone(), m)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn identity(a: &PyAlgebra) -> Self {
        Self(core::Morphism::identity(&a.0))
    }

    #[staticmethod]
    fn inclusion(parts: Vec<PyAlgebra>, index: usize) -> PyResult<Self> {
        let refs: Vec<&core::HomLieAlgebra> = parts.iter().map(|a| &a.0).collect();
        let sum = core::HomLieAlgebra::direct_sum(&refs).map_err(err)?;
        core::Morphism::inclusion(&refs, index, &sum).map(Self).map_err(err)
    }

    #[staticmethod]
    fn projection(parts: Vec<PyAlgebra>, index: usize) -> PyResult<Self> {
        let refs: Vec<&core::HomLieAlgebra> = parts.iter().map(|a| &a.0).collect();
        let sum = core::HomLieAlgebra::direct_sum(&refs).map_err(err)?;
        core::Morphism::projection(&refs, index, &sum).map(Self).map_err(err)
    }

    #[getter]
    fn source(&self) -> PyAlgebra {
        PyAlgebra(self.0.source().clone())
    }

    #[getter]
    fn target(&self) -> PyAlgebra {
        PyAlgebra(self.0.target().clone())
    }

    fn is_surjective(&self) -> bool {
        self.0.is_surjective()
    }
}

/// A fuzzy subset with subspace level sets, stored as a descending chain.
#[pyclass(name = "FuzzyFlag", module = "fuzzy_homlie", frozen, from_py_object)]
#[derive(Clone)]
struct PyFlag(core::FuzzyFlag);

#[pymethods]
impl PyFlag {
    /// Parses a flag document; `algebra` supplies field and dimension.
    #[staticmethod]
    #[pyo3(signature = (text, algebra=None))]
    fn from_json(text: &str, algebra: Option<&PyAlgebra>) -> PyResult<Self> {
        let context = algebra.map(|a| (a.0.field(), a.0.dim()));
        format::parse_flag(text, context).map(Self).map_err(err)
    }

    #[staticmethod]
    fn direct_sum(flags: Vec<PyFlag>) -> PyResult<Self> {
        let refs: Vec<&core::FuzzyFlag> = flags.iter().map(|f| &f.0).collect();
        core::FuzzyFlag::direct_sum(&refs).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        format::serialize_flag(&self.0)
    }

    fn evaluate(&self, x: Vec<String>) -> PyResult<String> {
        let v = vector_in(self.0.field(), &x)?;
        self.0.evaluate(&v).map(|t| t.to_string()).map_err(err)
    }

    /// Basis of U(μ, t), or of the strong level set; None when empty.
    #[pyo3(signature = (t, strict=false))]
    fn upper_level(&self, t: &str, strict: bool) -> PyResult<Option<Vec<Vec<String>>>> {
        let t: Level = t.parse().map_err(err)?;
        let cut = if strict {
            self.0.strong_upper_level(&t)
        } else {
            self.0.upper_level(&t)
        };
        Ok(cut.map(basis_out))
    }

    fn image_levels(&self) -> Vec<String> {
        self.0.image_levels().iter().map(ToString::to_string).collect()
    }

    fn is_fuzzy_subalgebra(&self, a: &PyAlgebra) -> PyResult<bool> {
        self.0.is_fuzzy_subalgebra(&a.0).map(|r| r.holds).map_err(err)
    }

    fn is_fuzzy_ideal(&self, a: &PyAlgebra) -> PyResult<bool> {
        self.0.is_fuzzy_ideal(&a.0).map(|r| r.holds).map_err(err)
    }

    /// Exhaustive check over every vector, pair and scalar (finite fields).
    #[pyo3(signature = (a, mode="sub", cap=1_000_000))]
    fn pointwise_check(&self, a: &PyAlgebra, mode: &str, cap: u128) -> PyResult<bool> {
        let table = oracle::table_from_flag(&self.0, cap).map_err(err)?;
        oracle::pointwise_check(&table, &a.0, mode_arg(mode)?, cap)
            .map(|r| r.holds)
            .map_err(err)
    }

    fn pullback(&self, f: &PyMorphism) -> PyResult<Self> {
        self.0.pullback(&f.0).map(Self).map_err(err)
    }

    fn pushforward(&self, f: &PyMorphism) -> PyResult<Self> {
        self.0.pushforward(&f.0).map(Self).map_err(err)
    }

    fn __eq__(&self, other: &PyFlag) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("FuzzyFlag(levels={:?})", self.image_levels())
    }
}

fn family_arg(name: &str) -> PyResult<Family> {
    Family::from_name(name).ok_or_else(|| PyValueError::new_err(format!("unknown family {name:?}")))
}

/// Runs the theorem suite; returns one dict per tallied statement.
#[pyfunction]
#[pyo3(signature = (seeds, p, dim, seed=0))]
fn run_suite<'py>(py: Python<'py>, seeds: usize, p: u32, dim: usize, seed: u64) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let batch = oracle::seeded_batch(seeds, &[p], dim, seed);
    for params in &batch {
        params.validate().map_err(err)?;
    }
    let report = py
        .detach(|| oracle::theorem_suite(&batch, &SuiteConfig::default()))
        .map_err(err)?;
    report
        .tallies
        .iter()
        .map(|t| {
            let d = PyDict::new(py);
            d.set_item("id", t.id)?;
            d.set_item("asserted", t.asserted)?;
            d.set_item("instances", t.instances)?;
            d.set_item("agreements", t.agreements)?;
            d.set_item("disagreements", t.disagreements)?;
            d.set_item("witnesses", t.witnesses.clone())?;
            Ok(d)
        })
        .collect()
}

/// Searches for fuzzy ideals (mode "ideal") or subalgebras (mode "sub")
/// whose direct sum fails; returns a dict describing the finding.
#[pyfunction]
#[pyo3(signature = (budget, seed, p=2, dim=2, family="rejection-sampled", mode="ideal"))]
fn search_sum<'py>(
    py: Python<'py>,
    budget: u64,
    seed: u64,
    p: u32,
    dim: usize,
    family: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let params = InstanceParams {
        p,
        dim,
        flag_depth: dim + 1,
        seed,
        family: family_arg(family)?,
    };
    let mode = mode_arg(mode)?;
    let finding = py
        .detach(|| oracle::search_sum_counterexample(&params, budget, mode, core::DEFAULT_ENUMERATION_CAP))
        .map_err(err)?;
    let d = PyDict::new(py);
    let kind = match finding.kind {
        FindingKind::Counterexample => "counterexample",
        FindingKind::Exhausted => "exhausted",
    };
    d.set_item("kind", kind)?;
    d.set_item("checked_count", finding.checked_count)?;
    d.set_item("instance", finding.instance)?;
    d.set_item("witness", finding.witness.map(|w| w.to_string()))?;
    Ok(d)
}

#[pymodule]
fn fuzzy_homlie(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyMorphism>()?;
    m.add_class::<PyFlag>()?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(search_sum, m)?)?;
    Ok(())
}
