use std::fmt;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::CentralPoly;
use crate::scalar::{rat, Rational};

/// Conjugacy invariants of an element: `trace = 2·Re`, `norm = |x|²`, and
/// `kappa`, the degree of the minimal central polynomial of the class.
///
/// Two elements are conjugate exactly when their class data agree. The
/// derived ordering (trace, then norm) is the canonical class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugacyClassData {
    pub trace: Rational,
    pub norm: Rational,
    pub kappa: usize,
}

impl ConjugacyClassData {
    /// `z - t/2` when `kappa == 1`, otherwise `z² - t·z + n`.
    pub fn minimal_central_polynomial(&self) -> CentralPoly {
        match self.kappa {
            1 => CentralPoly::new(vec![-(&self.trace / rat(2)), <Rational as One>::one()]),
            2 => CentralPoly::new(vec![
                self.norm.clone(),
                -self.trace.clone(),
                <Rational as One>::one(),
            ]),
            k => unreachable!("unsupported class degree {k}"),
        }
    }
}

/// An element of a division ring that is finite dimensional over its center ℚ.
///
/// Everything above the scalar layer is written against this contract. The
/// coordinate embedding (`coords`, `left_matrix`, `right_matrix`) is what the
/// brute-force oracles run on.
pub trait DivisionRing:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Dimension over the center.
    const DIM: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// Two-sided inverse.
    fn inv(&self) -> Result<Self>;

    fn coords(&self) -> Vec<Rational>;
    fn from_coords(coords: &[Rational]) -> Self;

    fn class_data(&self) -> ConjugacyClassData;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r.clone()))
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// `h⁻¹·self·h`.
    fn conjugate_by(&self, h: &Self) -> Result<Self> {
        Ok(h.inv()?.mul(self).mul(h))
    }

    fn basis() -> Vec<Self> {
        (0..Self::DIM)
            .map(|i| {
                let mut c = vec![<Rational as Zero>::zero(); Self::DIM];
                c[i] = <Rational as One>::one();
                Self::from_coords(&c)
            })
            .collect()
    }

    fn is_central(&self) -> bool {
        Self::basis().iter().all(|e| self.mul(e) == e.mul(self))
    }

    fn is_conjugate(&self, other: &Self) -> bool {
        self.class_data() == other.class_data()
    }

    fn minimal_central_polynomial(&self) -> CentralPoly {
        self.class_data().minimal_central_polynomial()
    }

    /// Matrix of `x ↦ self·x` in coordinates.
    fn left_matrix(&self) -> Matrix {
        let cols: Vec<_> = Self::basis().iter().map(|e| self.mul(e).coords()).collect();
        Matrix::from_columns(&cols)
    }

    /// Matrix of `x ↦ x·self` in coordinates.
    fn right_matrix(&self) -> Matrix {
        let cols: Vec<_> = Self::basis().iter().map(|e| e.mul(self).coords()).collect();
        Matrix::from_columns(&cols)
    }

    /// Rows `r` such that `x` is central iff `r·coords(x) = 0` for all of them.
    fn central_constraints() -> Matrix {
        Self::basis()
            .iter()
            .map(|e| e.right_matrix().sub(&e.left_matrix()))
            .fold(Matrix::zeros(0, Self::DIM), |acc, m| acc.vstack(&m))
    }

    /// A ℚ-basis of `{x : a·x = x·b}`, from the nullspace of `L_a − R_b`.
    fn intertwiner_basis(a: &Self, b: &Self) -> Vec<Self> {
        a.left_matrix()
            .sub(&b.right_matrix())
            .nullspace()
            .iter()
            .map(|v| Self::from_coords(v))
            .collect()
    }
}

/// The commutative instance: ℚ as a (trivially) noncommutative division ring.
impl DivisionRing for Rational {
    const DIM: usize = 1;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn neg(&self) -> Self {
        -self.clone()
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }

    fn from_coords(coords: &[Rational]) -> Self {
        coords[0].clone()
    }

    fn class_data(&self) -> ConjugacyClassData {
        ConjugacyClassData {
            trace: self * rat(2),
            norm: self * self,
            kappa: 1,
        }
    }

    fn is_central(&self) -> bool {
        true
    }
}

/// Shorthand: `a⁻¹` where `a` is known to be nonzero by construction.
pub(crate) fn inv_nonzero<R: DivisionRing>(a: &R) -> R {
    a.inv().expect("inverse of an element known to be nonzero")
}
