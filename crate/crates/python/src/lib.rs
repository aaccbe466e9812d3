//! Python bindings: quaternions, polynomials and the interpolation solvers.
//!
//! Elements may be passed as `Quaternion` objects or as literals such as
//! `"1/2-i+3*k"`; rationals come back as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::skewlagrange::bounded::generalized_lagrange;
use ::skewlagrange::ideal::{is_p_independent, minimal_poly};
use ::skewlagrange::one_sided::{lagrange, OneSidedProblem};
use ::skewlagrange::problem::Problem;
use ::skewlagrange::sylvester::{canonical_solution, solve_sylvester, SylvesterStatus};
use ::skewlagrange::two_sided::{solve_two_sided, TwoSidedOutcome, TwoSidedProblem};
use ::skewlagrange::{DivisionRing, Side, SkewPoly};

type Q = ::skewlagrange::Quaternion;
type P = SkewPoly<Q>;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn side(text: &str) -> PyResult<Side> {
    match text {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(PyValueError::new_err(format!(
            "side must be 'left' or 'right', got {other:?}"
        ))),
    }
}

#[pyclass(name = "Quaternion", module = "skewlagrange", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyQuaternion(Q);

/// A quaternion argument: either an object or a literal.
#[derive(FromPyObject)]
enum QArg {
    Obj(PyQuaternion),
    Int(i64),
    Text(String),
}

impl QArg {
    fn get(self) -> PyResult<Q> {
        match self {
            QArg::Obj(q) => Ok(q.0),
            QArg::Int(n) => Ok(Q::from(n)),
            QArg::Text(s) => s.parse().map_err(err),
        }
    }
}

fn elements(args: Vec<QArg>) -> PyResult<Vec<Q>> {
    args.into_iter().map(QArg::get).collect()
}

fn conditions(args: Vec<(QArg, QArg)>) -> PyResult<Vec<(Q, Q)>> {
    args.into_iter().map(|(a, c)| Ok((a.get()?, c.get()?))).collect()
}

#[pymethods]
impl PyQuaternion {
    #[new]
    #[pyo3(signature = (value = None))]
    fn new(value: Option<QArg>) -> PyResult<Self> {
        Ok(PyQuaternion(value.map(QArg::get).transpose()?.unwrap_or_else(Q::zero)))
    }

    /// `[re, i, j, k]` as rational strings.
    fn coords(&self) -> Vec<String> {
        self.0.coords().iter().map(ToString::to_string).collect()
    }

    fn conj(&self) -> Self {
        PyQuaternion(self.0.conj())
    }

    fn norm(&self) -> String {
        self.0.norm().to_string()
    }

    fn trace(&self) -> String {
        self.0.trace().to_string()
    }

    fn inv(&self) -> PyResult<Self> {
        self.0.inv().map(PyQuaternion).map_err(err)
    }

    fn is_conjugate(&self, other: QArg) -> PyResult<bool> {
        Ok(self.0.is_conjugate(&other.get()?))
    }

    fn __add__(&self, other: QArg) -> PyResult<Self> {
        Ok(PyQuaternion(self.0.add(&other.get()?)))
    }

    fn __sub__(&self, other: QArg) -> PyResult<Self> {
        Ok(PyQuaternion(self.0.sub(&other.get()?)))
    }

    fn __mul__(&self, other: QArg) -> PyResult<Self> {
        Ok(PyQuaternion(self.0.mul(&other.get()?)))
    }

    fn __rmul__(&self, other: QArg) -> PyResult<Self> {
        Ok(PyQuaternion(other.get()?.mul(&self.0)))
    }

    fn __neg__(&self) -> Self {
        PyQuaternion(self.0.neg())
    }

    fn __bool__(&self) -> bool {
        !self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Quaternion('{}')", self.0)
    }
}

#[pyclass(name = "Poly", module = "skewlagrange", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPoly(P);

#[derive(FromPyObject)]
enum PolyArg {
    Obj(PyPoly),
    Text(String),
    Coeffs(Vec<QArg>),
}

impl PolyArg {
    fn get(self) -> PyResult<P> {
        match self {
            PolyArg::Obj(p) => Ok(p.0),
            PolyArg::Text(s) => s.parse().map_err(err),
            PolyArg::Coeffs(c) => Ok(P::new(elements(c)?)),
        }
    }
}

#[pymethods]
impl PyPoly {
    /// From a polynomial literal or a coefficient list, lowest degree first.
    #[new]
    fn new(value: PolyArg) -> PyResult<Self> {
        value.get().map(PyPoly)
    }

    fn coeffs(&self) -> Vec<PyQuaternion> {
        self.0.coeffs().iter().cloned().map(PyQuaternion).collect()
    }

    /// `None` for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn eval_left(&self, a: QArg) -> PyResult<PyQuaternion> {
        Ok(PyQuaternion(self.0.eval_left(&a.get()?)))
    }

    fn eval_right(&self, a: QArg) -> PyResult<PyQuaternion> {
        Ok(PyQuaternion(self.0.eval_right(&a.get()?)))
    }

    fn shift_left(&self, a: QArg) -> PyResult<Self> {
        Ok(PyPoly(self.0.shift_left(&a.get()?)))
    }

    fn shift_right(&self, a: QArg) -> PyResult<Self> {
        Ok(PyPoly(self.0.shift_right(&a.get()?)))
    }

    fn __add__(&self, other: PolyArg) -> PyResult<Self> {
        Ok(PyPoly(self.0.add(&other.get()?)))
    }

    fn __sub__(&self, other: PolyArg) -> PyResult<Self> {
        Ok(PyPoly(self.0.sub(&other.get()?)))
    }

    fn __mul__(&self, other: PolyArg) -> PyResult<Self> {
        Ok(PyPoly(self.0.mul(&other.get()?)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

/// Outcome of a two-sided solve. When `solved` is false, `witness` holds
/// the (left, right) indices of a pair with no solution.
#[pyclass(name = "Solution", module = "skewlagrange", frozen, get_all)]
pub struct PySolution {
    solved: bool,
    base: Option<PyPoly>,
    homogeneous_basis: Vec<PyPoly>,
    witness: Option<(usize, usize)>,
}

impl From<TwoSidedOutcome<Q>> for PySolution {
    fn from(o: TwoSidedOutcome<Q>) -> Self {
        match o {
            TwoSidedOutcome::Family(fam) => PySolution {
                solved: true,
                base: Some(PyPoly(fam.base)),
                homogeneous_basis: fam.homogeneous_basis.into_iter().map(PyPoly).collect(),
                witness: None,
            },
            TwoSidedOutcome::Inconsistent { left, right } => PySolution {
                solved: false,
                base: None,
                homogeneous_basis: Vec::new(),
                witness: Some((left, right)),
            },
        }
    }
}

#[pymethods]
impl PySolution {
    fn __repr__(&self) -> String {
        match (&self.base, self.witness) {
            (Some(f), _) => format!(
                "Solution(base='{}', homogeneous={})",
                f.0,
                self.homogeneous_basis.len()
            ),
            (None, Some((l, r))) => format!("Solution(inconsistent at left[{l}], right[{r}])"),
            _ => "Solution()".into(),
        }
    }
}

fn two_sided(left: Vec<(QArg, QArg)>, right: Vec<(QArg, QArg)>) -> PyResult<TwoSidedProblem<Q>> {
    TwoSidedProblem::new(conditions(left)?, conditions(right)?).map_err(err)
}

/// One-sided Lagrange interpolant through `(node, value)` pairs with
/// P-independent nodes.
#[pyfunction]
#[pyo3(name = "lagrange", signature = (conditions, side = "left"))]
fn py_lagrange(conditions: Vec<(QArg, QArg)>, side: &str) -> PyResult<PyPoly> {
    let p = OneSidedProblem::new(self::side(side)?, self::conditions(conditions)?).map_err(err)?;
    lagrange(&p).map(PyPoly).map_err(err)
}

/// `(polynomial, basis_indices)` for the given nodes.
#[pyfunction]
#[pyo3(name = "minimal_poly", signature = (nodes, side = "left"))]
fn py_minimal_poly(nodes: Vec<QArg>, side: &str) -> PyResult<(PyPoly, Vec<usize>)> {
    let m = minimal_poly(&elements(nodes)?, self::side(side)?);
    Ok((PyPoly(m.poly), m.basis_indices))
}

#[pyfunction]
#[pyo3(name = "is_p_independent", signature = (nodes, side = "left"))]
fn py_is_p_independent(nodes: Vec<QArg>, side: &str) -> PyResult<bool> {
    Ok(is_p_independent(&elements(nodes)?, self::side(side)?))
}

/// Solutions of `a·x − x·b = g` as `(particular, basis)`, with `particular`
/// `None` when there are none.
#[pyfunction]
#[pyo3(name = "solve_sylvester")]
fn py_solve_sylvester(a: QArg, b: QArg, g: QArg) -> PyResult<(Option<PyQuaternion>, Vec<PyQuaternion>)> {
    let s = solve_sylvester(&a.get()?, &b.get()?, &g.get()?);
    if s.status == SylvesterStatus::Unsolvable {
        return Ok((None, Vec::new()));
    }
    let s = canonical_solution(&s);
    Ok((
        s.particular.map(PyQuaternion),
        s.basis.into_iter().map(PyQuaternion).collect(),
    ))
}

/// All solutions of degree below `len(left) + len(right)`.
#[pyfunction]
#[pyo3(name = "solve_two_sided", signature = (left, right, generalized = false))]
fn py_solve_two_sided(
    left: Vec<(QArg, QArg)>,
    right: Vec<(QArg, QArg)>,
    generalized: bool,
) -> PyResult<PySolution> {
    let p = two_sided(left, right)?;
    let outcome = if generalized {
        generalized_lagrange(&p)
    } else {
        solve_two_sided(&p)
    };
    outcome.map(Into::into).map_err(err)
}

/// Whether `f` meets every condition.
#[pyfunction]
#[pyo3(name = "verify")]
fn py_verify(f: PolyArg, left: Vec<(QArg, QArg)>, right: Vec<(QArg, QArg)>) -> PyResult<bool> {
    Ok(two_sided(left, right)?.is_satisfied_by(&f.get()?))
}

/// `(left, right)` condition lists from a JSON problem file's text.
#[pyfunction]
#[pyo3(name = "load_problem")]
fn py_load_problem(
    text: &str,
) -> PyResult<(Vec<(PyQuaternion, PyQuaternion)>, Vec<(PyQuaternion, PyQuaternion)>)> {
    let p: Problem = text.parse().map_err(err)?;
    let wrap = |v: &[(Q, Q)]| {
        v.iter()
            .map(|(a, c)| (PyQuaternion(a.clone()), PyQuaternion(c.clone())))
            .collect()
    };
    Ok((wrap(p.problem.left()), wrap(p.problem.right())))
}

#[pymodule]
#[pyo3(name = "skewlagrange")]
fn skewlagrange_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuaternion>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(py_lagrange, m)?)?;
    m.add_function(wrap_pyfunction!(py_minimal_poly, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_p_independent, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve_sylvester, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve_two_sided, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify, m)?)?;
    m.add_function(wrap_pyfunction!(py_load_problem, m)?)?;
    Ok(())
}
