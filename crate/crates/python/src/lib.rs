//! Python bindings: permutations with their statistics and decompositions,
//! plus the exhaustive tables.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use coxdepth_core::bijections::{dyck_of_perm, steingrimsson_phi, steingrimsson_phi_inverse};
use coxdepth_core::decomp::{selection_factorization, shallow_decomp, Factorization};
use coxdepth_core::enumeration::{self, Class, JointPair};
use coxdepth_core::groups::dihedral_gf as core_dihedral_gf;
use coxdepth_core::verify::run_suite;
use coxdepth_core::{patterns, stats, BiPoly, GroupKind, Suite, Transposition};

fn value_error(e: coxdepth_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A permutation of `1..=n` in one-line notation.
#[pyclass(
    name = "Permutation",
    module = "coxdepth",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation {
    inner: coxdepth_core::Permutation,
}

impl From<coxdepth_core::Permutation> for PyPermutation {
    fn from(inner: coxdepth_core::Permutation) -> Self {
        Self { inner }
    }
}

/// `(u, v, weight)` with factors as `(i, j)` pairs.
type Decomposition = (Vec<(usize, usize)>, Vec<(usize, usize)>, usize);

fn pairs(word: &[Transposition]) -> Vec<(usize, usize)> {
    word.iter().map(|t| (t.i(), t.j())).collect()
}

fn decomposition(f: &Factorization) -> Decomposition {
    (pairs(f.left()), pairs(f.right()), f.total_weight())
}

#[pymethods]
impl PyPermutation {
    /// Accepts one-line text (`"3412"`, `"10,2,1,..."`) or a sequence of ints.
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = value.extract::<String>() {
            text.parse().map_err(value_error)?
        } else {
            let window: Vec<usize> = value.extract()?;
            coxdepth_core::Permutation::new(window).map_err(value_error)?
        };
        Ok(Self { inner })
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        coxdepth_core::Permutation::identity(n).into()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn window(&self) -> Vec<usize> {
        self.inner.window().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.inner)
    }

    /// `(self * other)(i) = self(other(i))`.
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(self
            .inner
            .compose(&other.inner)
            .map_err(value_error)?
            .into())
    }

    fn inverse(&self) -> Self {
        self.inner.inverse().into()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.inner.cycle_decomposition().cycles().to_vec()
    }

    fn depth(&self) -> usize {
        stats::depth(&self.inner)
    }

    fn length(&self) -> usize {
        stats::length(&self.inner)
    }

    fn reflection_length(&self) -> usize {
        stats::reflection_length(&self.inner)
    }

    fn drop(&self) -> usize {
        stats::descent_drop(&self.inner)
    }

    fn descents(&self) -> usize {
        stats::descents(&self.inner)
    }

    fn excedances(&self) -> usize {
        stats::excedances(&self.inner)
    }

    /// Depth of `self · t_ij` for an ascent pair `i < j`.
    fn depth_after_transposition(&self, i: usize, j: usize) -> PyResult<usize> {
        stats::depth_after_transposition(&self.inner, i, j).map_err(value_error)
    }

    fn is_fc(&self) -> bool {
        patterns::is_fc(&self.inner)
    }

    fn is_boolean(&self) -> bool {
        patterns::is_boolean(&self.inner)
    }

    fn is_free(&self) -> bool {
        patterns::is_free(&self.inner)
    }

    /// 1-based positions of the first occurrence of `pattern`, or `None`.
    fn contains_pattern(&self, pattern: &Self) -> Option<Vec<usize>> {
        patterns::contains_pattern(&self.inner, &pattern.inner)
    }

    /// Minimal-depth factorization as `(u, v, weight)`.
    fn shallow_decomp(&self) -> Decomposition {
        decomposition(&shallow_decomp(&self.inner))
    }

    /// Selection-sort factorization as `(u, v, weight)`; `u` is empty.
    fn selection_decomp(&self) -> Decomposition {
        decomposition(&selection_factorization(&self.inner))
    }

    fn phi(&self) -> Self {
        steingrimsson_phi(&self.inner).into()
    }

    fn phi_inverse(&self) -> Self {
        steingrimsson_phi_inverse(&self.inner).into()
    }

    /// Dyck path through the left-right maxima, as a string of `N`/`E`.
    fn dyck_path(&self) -> String {
        dyck_of_perm(&self.inner).to_string()
    }
}

fn group_kind(group: &str, n: usize) -> PyResult<GroupKind> {
    match group {
        "A" | "a" => Ok(GroupKind::A(n)),
        "B" | "b" => Ok(GroupKind::B(n)),
        "I2" | "i2" => Ok(GroupKind::I2(n)),
        other => Err(PyValueError::new_err(format!("unknown group `{other}`"))),
    }
}

fn poly_dict(p: &BiPoly) -> BTreeMap<(usize, usize), u64> {
    p.terms().map(|(q, t, c)| ((q, t), c)).collect()
}

/// `counts[k]` = number of elements of depth `k` in `group` (`"A"`, `"B"`,
/// `"I2"`) with parameter `n`.
#[pyfunction]
fn depth_distribution(group: &str, n: usize) -> PyResult<Vec<u64>> {
    let table = enumeration::depth_distribution(group_kind(group, n)?).map_err(value_error)?;
    Ok(table.counts)
}

/// `{(q_exp, t_exp): coeff}` for `pair` in `"drop_des"`, `"dep_exc"`.
#[pyfunction]
#[pyo3(signature = (n, pair = "dep_exc"))]
fn joint_distribution(n: usize, pair: &str) -> PyResult<BTreeMap<(usize, usize), u64>> {
    let pair = match pair {
        "drop_des" => JointPair::DropDes,
        "dep_exc" => JointPair::DepExc,
        other => return Err(PyValueError::new_err(format!("unknown pair `{other}`"))),
    };
    let table = enumeration::joint_distribution(n, pair).map_err(value_error)?;
    Ok(poly_dict(&table.poly))
}

/// `(exhaustive, closed_form)` for `class` in `"fc"`, `"boolean"`, `"free"`,
/// `"depth_eq"`, `"boolean_by_length"` (the last two take `k`).
#[pyfunction]
#[pyo3(signature = (n, class, k = None))]
fn count_class(n: usize, class: &str, k: Option<usize>) -> PyResult<(u64, Option<u64>)> {
    let need_k = || k.ok_or_else(|| PyValueError::new_err(format!("`{class}` needs k")));
    let class = match class {
        "fc" => Class::Fc,
        "boolean" => Class::Boolean,
        "free" => Class::Free,
        "depth_eq" => Class::DepthEq(need_k()?),
        "boolean_by_length" => Class::BooleanByLength(need_k()?),
        other => return Err(PyValueError::new_err(format!("unknown class `{other}`"))),
    };
    let count = enumeration::count_class(n, class).map_err(value_error)?;
    Ok((count.exhaustive, count.closed_form))
}

/// `{(length, depth): count}` over `I2(m)`.
#[pyfunction]
fn dihedral_gf(m: usize) -> PyResult<BTreeMap<(usize, usize), u64>> {
    Ok(poly_dict(&core_dihedral_gf(m).map_err(value_error)?))
}

/// `[(name, passed, detail)]` for one of the suites `"all"`, `"core"`,
/// `"bijection"`, `"oracle"`, `"patterns"`.
#[pyfunction]
#[pyo3(signature = (n, suite = "all"))]
fn verify(n: usize, suite: &str) -> PyResult<Vec<(String, bool, String)>> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let results = run_suite(n, suite).map_err(value_error)?;
    Ok(results
        .into_iter()
        .map(|r| (r.name, r.passed, r.detail))
        .collect())
}

#[pymodule]
fn coxdepth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_function(wrap_pyfunction!(depth_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(joint_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(count_class, m)?)?;
    m.add_function(wrap_pyfunction!(dihedral_gf, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
