//! Python bindings for dualtrace.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dualtrace::combinat::{self, Cobordism1, Function};
use dualtrace::exactalg::{format_scalar, parse_scalar, ExactMatrix, RingTag};
use dualtrace::laws::SuiteConfig;
use dualtrace::linear::{mat_dual_pair, MatCategory};
use dualtrace::smc;

fn err(e: dualtrace::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// `"Z"`, `"Q"` or `"Z/m"`.
pub fn parse_ring(s: &str) -> Result<RingTag, String> {
    match s {
        "Z" => Ok(RingTag::Integers),
        "Q" => Ok(RingTag::Rationals),
        _ => s
            .strip_prefix("Z/")
            .and_then(|m| m.parse::<u64>().ok())
            .and_then(|m| RingTag::integers_mod(m).ok())
            .ok_or_else(|| format!("unknown ring `{s}`, expected Z, Q or Z/m")),
    }
}

fn ring(s: &str) -> PyResult<RingTag> {
    parse_ring(s).map_err(PyValueError::new_err)
}

/// A matrix over Z, Q or Z/m with entries given as strings such as `"-3/4"`.
#[pyclass(name = "Matrix", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMatrix {
    inner: ExactMatrix,
}

#[pymethods]
impl PyMatrix {
    #[new]
    #[pyo3(signature = (rows, ring = "Q"))]
    fn new(rows: Vec<Vec<String>>, ring: &str) -> PyResult<Self> {
        let tag = self::ring(ring)?;
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PyValueError::new_err("ragged rows"));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|t| {
                parse_scalar(t).ok_or_else(|| PyValueError::new_err(format!("bad entry `{t}`")))
            })
            .collect::<PyResult<Vec<_>>>()?;
        let inner = ExactMatrix::new(tag, r, c, entries).map_err(err)?;
        Ok(PyMatrix { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (n, ring = "Q"))]
    fn identity(n: usize, ring: &str) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: ExactMatrix::identity(self::ring(ring)?, n),
        })
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.rows(), self.inner.cols())
    }

    #[getter]
    fn ring(&self) -> String {
        self.inner.ring().to_string()
    }

    fn entries(&self) -> Vec<Vec<String>> {
        (0..self.inner.rows())
            .map(|i| self.inner.row(i).iter().map(format_scalar).collect())
            .collect()
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn kronecker(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix {
            inner: self.inner.kronecker(&other.inner).map_err(err)?,
        })
    }

    /// The categorical trace in matrices, as a string scalar.
    fn trace(&self) -> PyResult<String> {
        let c = MatCategory::new(self.inner.ring());
        if !self.inner.is_square() {
            return Err(PyValueError::new_err("matrix is not square"));
        }
        let dp = mat_dual_pair(self.inner.ring(), self.inner.rows());
        let t = smc::trace(&c, &dp, &self.inner).map_err(err)?;
        Ok(format_scalar(&c.scalar(&t).map_err(err)?))
    }

    fn invariant_factors(&self) -> PyResult<Vec<String>> {
        let snf = self.inner.smith_normal_form().map_err(err)?;
        Ok(snf
            .invariant_factors()
            .iter()
            .map(ToString::to_string)
            .collect())
    }

    fn __eq__(&self, other: &PyMatrix) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// A finite preorder given by generating pairs `(i, j)` meaning `i ≤ j`.
#[pyclass(name = "Preorder", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPreorder {
    inner: combinat::Preorder,
}

#[pymethods]
impl PyPreorder {
    #[new]
    #[pyo3(signature = (points, relations = Vec::new()))]
    fn new(points: usize, relations: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyPreorder {
            inner: combinat::Preorder::new(points, &relations).map_err(err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPreorder {
            inner: combinat::Preorder::parse(text).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn leq(&self, i: usize, j: usize) -> PyResult<bool> {
        if i >= self.inner.len() || j >= self.inner.len() {
            return Err(PyValueError::new_err("point out of range"));
        }
        Ok(self.inner.leq(i, j))
    }

    /// Down-sets as sorted lists of points.
    fn down_sets(&self) -> Vec<Vec<usize>> {
        self.inner
            .down_sets()
            .iter()
            .map(|s| (0..s.len()).filter(|&i| s[i]).collect())
            .collect()
    }

    /// Trace of `U ↦ f⁻¹(U)` on down-sets for a monotone endomap.
    fn alexandrov_trace(&self, images: Vec<usize>) -> PyResult<bool> {
        combinat::alexandrov_trace(&self.inner, &images).map_err(err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }
}

/// An unoriented 1-cobordism: a matching of boundary points plus circles.
#[pyclass(name = "Cobordism", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCobordism {
    inner: Cobordism1,
}

#[pymethods]
impl PyCobordism {
    /// Evaluate a program of words such as `"perm 1 2 0; trace"`.
    #[staticmethod]
    fn program(text: &str) -> PyResult<Self> {
        Ok(PyCobordism {
            inner: combinat::run_program(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn permutation(perm: Vec<usize>) -> PyResult<Self> {
        Ok(PyCobordism {
            inner: Cobordism1::permutation(&perm).map_err(err)?,
        })
    }

    #[getter]
    fn inputs(&self) -> usize {
        self.inner.inputs()
    }

    #[getter]
    fn outputs(&self) -> usize {
        self.inner.outputs()
    }

    #[getter]
    fn circles(&self) -> usize {
        self.inner.circles()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.inner.pairs()
    }

    /// Number of circles in the closure.
    fn trace(&self) -> PyResult<usize> {
        combinat::cob1_trace(&self.inner).map_err(err)
    }

    /// Value under the `d`-dimensional field theory, as rows of integers.
    fn tft(&self, d: usize) -> PyResult<PyMatrix> {
        Ok(PyMatrix {
            inner: dualtrace::functors::tft_value(d, &self.inner).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }
}

/// `(index, fixed points, relational trace)` of an endofunction of `0..n`.
#[pyfunction]
fn fixed_points(images: Vec<usize>) -> PyResult<(usize, Vec<usize>, bool)> {
    let f = Function::endo(images).map_err(err)?;
    let fixed = f.fixed_points();
    let truth = combinat::rel_fixed_point_trace(&f).map_err(err)?;
    Ok((fixed.len(), fixed, truth))
}

/// The `lefschetz` report for a `.scx` complex and `.smap` self-map.
#[pyfunction]
#[pyo3(signature = (complex, map, coeff = "Q"))]
fn lefschetz(complex: &str, map: &str, coeff: &str) -> PyResult<String> {
    let coeff = coeff.parse().map_err(err)?;
    dualtrace::cli::cmd_lefschetz(complex, map, coeff).map_err(err)
}

/// Run the law suite; returns the report lines and whether all passed.
#[pyfunction]
#[pyo3(signature = (instance, seed = 0, cases = 200, exhaustive = false))]
fn run_laws(
    instance: &str,
    seed: u64,
    cases: usize,
    exhaustive: bool,
) -> PyResult<(Vec<String>, bool)> {
    let config = SuiteConfig {
        seed,
        cases,
        exhaustive,
        ..SuiteConfig::default()
    };
    let report = dualtrace::laws::run_suite(instance, &config).map_err(err)?;
    let lines = report.results.iter().map(|r| r.line()).collect();
    Ok((lines, report.all_passed()))
}

#[pymodule(name = "dualtrace")]
fn dualtrace_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyPreorder>()?;
    m.add_class::<PyCobordism>()?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(lefschetz, m)?)?;
    m.add_function(wrap_pyfunction!(run_laws, m)?)?;
    m.add("INSTANCES", dualtrace::laws::INSTANCES.to_vec())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_parse() {
        assert_eq!(parse_ring("Z"), Ok(RingTag::Integers));
        assert_eq!(parse_ring("Z/6"), Ok(RingTag::IntegersMod(6)));
        assert!(parse_ring("Z/0").is_err());
        assert!(parse_ring("R").is_err());
    }
}
