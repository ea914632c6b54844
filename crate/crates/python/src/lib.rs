//! Python bindings for the `immersion` crate.

use std::sync::Arc;

use ::immersion as core;
use core::cover::{classify_cover, complete_to_cover, missing_lifts, quotient_by_deck};
use core::deck::{deck_group, omega_coset_group};
use core::{parse_graph, write_graph, ImmersionPair, LabeledGraph, VertexId, Word};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_word(s: &str) -> PyResult<Word> {
    s.parse().map_err(err)
}

fn parse_pointed(text: &str, base: Option<&str>) -> PyResult<(Arc<LabeledGraph>, VertexId)> {
    let file = parse_graph(text).map_err(err)?;
    let base = match base {
        Some(name) => file
            .graph
            .vertex_by_name(name)
            .ok_or_else(|| err(format!("unknown vertex {name}")))?,
        None => file.base.unwrap_or(VertexId(0)),
    };
    if file.graph.vertex_count() == 0 {
        return Err(err("empty graph"));
    }
    Ok((Arc::new(file.graph), base))
}

/// An element of the free inverse monoid, stored as a Munn tree.
#[pyclass(name = "FimElement", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFim(core::MunnElement);

#[pymethods]
impl PyFim {
    #[new]
    fn new(w: &str) -> PyResult<Self> {
        Ok(PyFim(core::munn_element(&parse_word(w)?)))
    }

    #[getter]
    fn tree(&self) -> Vec<String> {
        self.0.tree().iter().map(|w| w.to_string()).collect()
    }

    #[getter]
    fn root(&self) -> String {
        self.0.root().to_string()
    }

    fn __mul__(&self, other: &PyFim) -> PyFim {
        PyFim(self.0.mul(&other.0))
    }

    fn inverse(&self) -> PyFim {
        PyFim(self.0.inverse())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    /// Natural partial order.
    fn leq(&self, other: &PyFim) -> bool {
        self.0.leq(&other.0)
    }

    fn word(&self) -> String {
        self.0.to_word().to_string()
    }

    fn __repr__(&self) -> String {
        format!("FimElement({})", self.0)
    }
}

#[pyfunction]
fn fim_equal(u: &str, v: &str) -> PyResult<bool> {
    Ok(core::fim_equal(&parse_word(u)?, &parse_word(v)?))
}

#[pyfunction]
fn nat_leq(u: &str, v: &str) -> PyResult<bool> {
    Ok(core::nat_leq(&parse_word(u)?, &parse_word(v)?))
}

/// A closed inverse submonoid given by its pointed coset graph.
#[pyclass(name = "CosetGraph", frozen)]
struct PyCosetGraph(core::CosetGraph);

impl PyCosetGraph {
    fn pair(&self) -> ImmersionPair {
        self.0.tautological_immersion()
    }

    fn name(&self, v: VertexId) -> String {
        self.0.graph().vertex_name(v).to_string()
    }
}

#[pymethods]
impl PyCosetGraph {
    #[staticmethod]
    fn from_generators(gens: Vec<String>) -> PyResult<Self> {
        let gens = gens.iter().map(|g| parse_word(g)).collect::<PyResult<Vec<_>>>()?;
        Ok(PyCosetGraph(core::CosetGraph::from_generators(&gens)))
    }

    #[staticmethod]
    #[pyo3(signature = (text, base=None))]
    fn from_text(text: &str, base: Option<&str>) -> PyResult<Self> {
        let (g, b) = parse_pointed(text, base)?;
        Ok(PyCosetGraph(core::CosetGraph::from_shared(g, b).map_err(err)?))
    }

    #[getter]
    fn base(&self) -> String {
        self.name(self.0.base())
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.0.graph().vertices().map(|v| self.name(v)).collect()
    }

    fn to_text(&self) -> String {
        write_graph(self.0.graph(), Some(self.0.base()), &[])
    }

    fn contains(&self, w: &str) -> PyResult<bool> {
        Ok(self.0.contains(&parse_word(w)?))
    }

    fn __contains__(&self, w: &str) -> PyResult<bool> {
        self.contains(w)
    }

    /// Vertex naming the ω-coset of `w`, or None.
    fn coset(&self, w: &str) -> PyResult<Option<String>> {
        Ok(self.0.omega_coset(&parse_word(w)?).map(|v| self.name(v)))
    }

    fn coset_equal(&self, m: &str, n: &str) -> PyResult<bool> {
        self.0.coset_equal(&parse_word(m)?, &parse_word(n)?).map_err(err)
    }

    fn normalizer_contains(&self, p: &str) -> PyResult<bool> {
        Ok(self.0.normalizer_contains(&parse_word(p)?))
    }

    fn conjugate_to(&self, other: &PyCosetGraph) -> bool {
        self.0.conjugate_to(&other.0)
    }

    /// `(elements, table)` with elements named by the image of the base.
    fn deck_group(&self) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
        let group = deck_group(&self.pair()).map_err(err)?;
        let names: Vec<String> = group.elements.iter().map(|&v| self.name(v)).collect();
        let table = group
            .table
            .iter()
            .map(|row| row.iter().map(|&k| names[k].clone()).collect())
            .collect();
        Ok((names, table))
    }

    /// Names of the ω-cosets forming `N(H)/H`.
    fn coset_group(&self) -> PyResult<Vec<String>> {
        Ok(omega_coset_group(&self.0).map_err(err)?.names())
    }

    /// Summary of the immersion over the bouquet.
    fn cover_class(&self) -> PyResult<String> {
        Ok(classify_cover(&self.pair()).map_err(err)?.summary().to_string())
    }

    /// Dyck words witnessing that the coset graph is not full.
    fn missing_lifts(&self) -> Vec<String> {
        missing_lifts(&self.pair()).iter().map(|m| m.idempotent.to_string()).collect()
    }

    fn complete(&self, depth: usize) -> PyResult<String> {
        let cc = complete_to_cover(&self.pair(), depth).map_err(err)?;
        let base = cc.graph.vertex_by_name(&self.base());
        Ok(write_graph(&cc.graph, base, &cc.frontier))
    }

    fn quotient(&self) -> PyResult<String> {
        let q = quotient_by_deck(&self.pair()).map_err(err)?;
        Ok(write_graph(&q.graph, Some(q.projection.base_up()), &[]))
    }

    fn __repr__(&self) -> String {
        format!(
            "CosetGraph(vertices={}, edges={}, base={})",
            self.0.graph().vertex_count(),
            self.0.graph().edge_count(),
            self.base()
        )
    }
}

#[pymodule]
fn pyimmersion(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFim>()?;
    m.add_class::<PyCosetGraph>()?;
    m.add_function(wrap_pyfunction!(fim_equal, m)?)?;
    m.add_function(wrap_pyfunction!(nat_leq, m)?)?;
    Ok(())
}
