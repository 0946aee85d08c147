//! Python bindings. Structured results cross the boundary as JSON strings.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use sfw_core::aut::automorphism_group;
use sfw_core::character::CharacterTable;
use sfw_core::corpus::named_group;
use sfw_core::extension::extension_from_out;
use sfw_core::group::parse_group_json;
use sfw_core::index::{jones_spectrum_query, jones_value, virtual_index, SpectrumKind, VirtualEmbeddingSpec, VirtualPart};
use sfw_core::subfactor::{brute_force_commutant_dim, dual_principal_graph, principal_graph, relative_commutant_dim, Side};
use sfw_core::verify::{run_suite, Suite};
use sfw_core::{Config, CosetData, DoubleCosetData, Error, PermGroup, Permutation};

create_exception!(sfw, SfwError, PyException, "Raised with (message, exit_code).");

fn err(e: Error) -> PyErr {
    SfwError::new_err((e.to_string(), e.exit_code()))
}

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// A finite permutation group, composed rightmost-first.
#[pyclass(name = "Group", module = "sfw", frozen)]
#[derive(Clone)]
struct PyGroup {
    inner: PermGroup,
}

#[pymethods]
impl PyGroup {
    #[new]
    fn new(degree: usize, generators: Vec<String>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let inner = PermGroup::generate(degree, gens, &Config::default()).map_err(err)?;
        Ok(PyGroup { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGroup {
            inner: parse_group_json(text, &Config::default()).map_err(err)?,
        })
    }

    /// One of S3, A3, S4, A4, D4, V4, Z2wrZ3, Z2^3.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        Ok(PyGroup {
            inner: named_group(name, &Config::default()).map_err(err)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn elements(&self) -> Vec<String> {
        self.inner.elements().iter().map(|p| p.to_string()).collect()
    }

    fn contains(&self, cycles: &str) -> PyResult<bool> {
        let p = Permutation::parse_cycles(cycles, self.inner.degree()).map_err(err)?;
        Ok(self.inner.contains(&p))
    }

    fn is_subgroup_of(&self, other: &PyGroup) -> bool {
        self.inner.is_subgroup_of(&other.inner)
    }

    fn to_json(&self) -> String {
        json(&self.inner.to_spec())
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group(degree={}, order={})", self.inner.degree(), self.inner.order())
    }
}

fn pair(g: &PyGroup, h: &PyGroup) -> PyResult<()> {
    h.inner.ensure_subgroup_of(&g.inner, "subgroup").map_err(err)
}

/// `[G:H]`.
#[pyfunction]
fn index(g: &PyGroup, h: &PyGroup) -> PyResult<usize> {
    Ok(CosetData::new(&g.inner, &h.inner).map_err(err)?.index())
}

#[pyfunction]
fn double_coset_count(g: &PyGroup, h: &PyGroup) -> PyResult<usize> {
    Ok(DoubleCosetData::new(&g.inner, &h.inner).map_err(err)?.count())
}

#[pyfunction]
fn character_table(g: &PyGroup) -> PyResult<String> {
    let t = CharacterTable::compute(&g.inner, &Config::default()).map_err(err)?;
    Ok(json(&t.to_json()))
}

/// Graph JSON; `dot=True` gives DOT instead.
#[pyfunction]
#[pyo3(signature = (g, h, dual = false, dot = false))]
fn graph(g: &PyGroup, h: &PyGroup, dual: bool, dot: bool) -> PyResult<String> {
    pair(g, h)?;
    let cfg = Config::default();
    let gr = if dual { dual_principal_graph(&g.inner, &h.inner, &cfg) } else { principal_graph(&g.inner, &h.inner, &cfg) }
        .map_err(err)?;
    if dot {
        Ok(gr.to_dot(if dual { "dual_principal" } else { "principal" }))
    } else {
        gr.to_json().map_err(err)
    }
}

fn side(s: &str) -> PyResult<Side> {
    s.parse().map_err(err)
}

/// Commutant dimension for `g0 ≤ h ≤ g` from characters; `side` is "in-g" or "in-h".
#[pyfunction]
#[pyo3(signature = (g, g0, h, k, side_name = "in-h", oracle = false))]
fn commutant_dim(g: &PyGroup, g0: &PyGroup, h: &PyGroup, k: usize, side_name: &str, oracle: bool) -> PyResult<usize> {
    let cfg = Config::default();
    let s = side(side_name)?;
    if oracle {
        brute_force_commutant_dim(&g.inner, &g0.inner, &h.inner, k, s, &cfg).map_err(err)
    } else {
        relative_commutant_dim(&g.inner, &g0.inner, &h.inner, k, s, &cfg).map_err(err)
    }
}

/// `(kind, n, residual)` with `n` set only for discrete points.
#[pyfunction]
#[pyo3(signature = (x, tol = 1e-9))]
fn spectrum(x: f64, tol: f64) -> PyResult<(String, Option<u64>, f64)> {
    let v = jones_spectrum_query(x, tol).map_err(err)?;
    Ok(match v.kind {
        SpectrumKind::Discrete { n } => ("discrete".into(), Some(n), v.residual),
        SpectrumKind::Continuous => ("continuous".into(), None, v.residual),
        SpectrumKind::NotInSpectrum => ("not-in-spectrum".into(), None, v.residual),
    })
}

#[pyfunction(name = "jones_value")]
fn py_jones_value(n: u64) -> f64 {
    jones_value(n)
}

/// `parts` are `(s, [G:K_i], [H:γ_i(K_i)])`.
#[pyfunction(name = "virtual_index")]
fn py_virtual_index(t: u64, parts: Vec<(u64, u64, u64)>) -> PyResult<u64> {
    let spec = VirtualEmbeddingSpec {
        t,
        parts: parts
            .into_iter()
            .map(|(s, index_g_k, index_h_gamma_k)| VirtualPart {
                s,
                index_g_k,
                index_h_gamma_k,
            })
            .collect(),
    };
    virtual_index(&spec).map_err(err)
}

/// `|Out(G)|`.
#[pyfunction]
fn out_order(g: &PyGroup) -> PyResult<usize> {
    Ok(automorphism_group(&g.inner, &Config::default()).map_err(err)?.out_order())
}

/// Extension JSON for the Out cosets given (all of Out when omitted).
#[pyfunction]
#[pyo3(signature = (g, out_generators = None))]
fn extension(g: &PyGroup, out_generators: Option<Vec<usize>>) -> PyResult<String> {
    let cfg = Config::default();
    let gens = match out_generators {
        Some(v) => v,
        None => (1..automorphism_group(&g.inner, &cfg).map_err(err)?.out_order()).collect(),
    };
    Ok(json(&extension_from_out(&g.inner, &gens, &cfg).map_err(err)?.to_json()))
}

/// Runs a suite on the default corpus and returns the report JSON.
#[pyfunction]
#[pyo3(signature = (suite = "all"))]
fn verify(suite: &str) -> PyResult<String> {
    let s: Suite = suite.parse().map_err(err)?;
    Ok(json(&run_suite(s, &Config::default()).map_err(err)?))
}

#[pymodule]
fn sfw(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SfwError", m.py().get_type::<SfwError>())?;
    m.add_class::<PyGroup>()?;
    m.add_function(wrap_pyfunction!(index, m)?)?;
    m.add_function(wrap_pyfunction!(double_coset_count, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    m.add_function(wrap_pyfunction!(graph, m)?)?;
    m.add_function(wrap_pyfunction!(commutant_dim, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(py_jones_value, m)?)?;
    m.add_function(wrap_pyfunction!(py_virtual_index, m)?)?;
    m.add_function(wrap_pyfunction!(out_order, m)?)?;
    m.add_function(wrap_pyfunction!(extension, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
