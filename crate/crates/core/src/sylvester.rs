//! The scalar Sylvester equation `αx − xβ = γ` for algebraic `α`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{CentralPoly, SkewPoly};
use crate::scalar::{inv_nonzero, rat, DivisionRing, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SylvesterStatus {
    Unique,
    Affine,
    Unsolvable,
}

/// Solutions are `particular + Σ λₜ·basisₜ` (`λₜ ∈ ℚ`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "R: DivisionRing + Serialize + serde::de::DeserializeOwned")]
pub struct SylvesterSolution<R> {
    pub status: SylvesterStatus,
    pub particular: Option<R>,
    pub basis: Vec<R>,
}

impl<R: DivisionRing> SylvesterSolution<R> {
    pub fn is_solvable(&self) -> bool {
        self.status != SylvesterStatus::Unsolvable
    }
}

/// `(L_α 𝒳 γ)^{e_r}(β)` with `𝒳` the minimal central polynomial of `α`.
fn shifted_value<R: DivisionRing>(x: &CentralPoly, a: &R, b: &R, g: &R) -> R {
    x.to_skew::<R>().shift_left(a).scale_right(g).eval_right(b)
}

/// `Ψ_{α,β}(γ)`.
///
/// Non-conjugate `β`: `−(L_α 𝒳 γ)^{e_r}(β)·𝒳(β)⁻¹`. Conjugate `β`:
/// `Σ_{j=1}^{κ−1} Σ_{i=0}^{j−1} (−1)^{i+j}/(j+1)!·C(j−1,i)·αⁱ γ 𝒳^{(j+1)}(β) β^{j−i−1}·𝒳'(β)⁻¹`,
/// which is a solution whenever one exists.
pub fn psi<R: DivisionRing>(a: &R, b: &R, g: &R) -> R {
    let x = a.minimal_central_polynomial();
    if !a.is_conjugate(b) {
        let top = shifted_value(&x, a, b, g);
        return top.neg().mul(&inv_nonzero(&x.eval(b)));
    }
    let kappa = x.degree().unwrap_or(0);
    let mut sum = R::zero();
    let mut fact = rat(1);
    for j in 1..kappa {
        fact *= rat(j as i64 + 1);
        let xd = x.derivative(j + 1).eval(b);
        for i in 0..j {
            let sign = if (i + j) % 2 == 0 { rat(1) } else { rat(-1) };
            let coef: Rational = sign * binomial(j - 1, i) / &fact;
            let term = a.pow(i).mul(g).mul(&xd).mul(&b.pow(j - i - 1));
            sum = sum.add(&term.scale(&coef));
        }
    }
    sum.mul(&inv_nonzero(&x.derivative(1).eval(b)))
}

fn binomial(n: usize, k: usize) -> Rational {
    (0..k).fold(rat(1), |acc, t| {
        acc * rat((n - t) as i64) / rat(t as i64 + 1)
    })
}

/// Closed-form solution of `a·x − x·b = g`.
pub fn solve_sylvester<R: DivisionRing>(a: &R, b: &R, g: &R) -> SylvesterSolution<R> {
    let solution = if !a.is_conjugate(b) {
        SylvesterSolution {
            status: SylvesterStatus::Unique,
            particular: Some(psi(a, b, g)),
            basis: Vec::new(),
        }
    } else if a.is_central() {
        // here b = a and the equation reads 0 = g
        if g.is_zero() {
            SylvesterSolution {
                status: SylvesterStatus::Affine,
                particular: Some(R::zero()),
                basis: R::basis(),
            }
        } else {
            unsolvable()
        }
    } else if shifted_value(&a.minimal_central_polynomial(), a, b, g).is_zero() {
        SylvesterSolution {
            status: SylvesterStatus::Affine,
            particular: Some(psi(a, b, g)),
            basis: R::intertwiner_basis(a, b),
        }
    } else {
        unsolvable()
    };
    #[cfg(debug_assertions)]
    assert_matches_oracle(a, b, g, &solution);
    solution
}

fn unsolvable<R>() -> SylvesterSolution<R> {
    SylvesterSolution {
        status: SylvesterStatus::Unsolvable,
        particular: None,
        basis: Vec::new(),
    }
}

#[cfg(debug_assertions)]
fn assert_matches_oracle<R: DivisionRing>(a: &R, b: &R, g: &R, s: &SylvesterSolution<R>) {
    let oracle = crate::oracle::oracle_sylvester(a, b, g);
    match (&s.particular, oracle.dimension()) {
        (None, None) => {}
        (Some(x), Some(dim)) => {
            assert!(
                oracle.contains(&x.coords()),
                "Sylvester closed form off for {a}, {b}, {g}"
            );
            assert_eq!(dim, s.basis.len(), "intertwiner count off for {a}, {b}");
        }
        _ => panic!("Sylvester solvability disagrees with the oracle for {a}, {b}, {g}"),
    }
}

/// Whether `(L_α 𝒳 γ)^{e_r}(β) = 0`, i.e. whether `a·x − x·b = g` is solvable
/// for conjugate `a`, `b`.
pub fn solvability_check<R: DivisionRing>(a: &R, b: &R, g: &R) -> Result<bool> {
    if !a.is_conjugate(b) {
        return Err(Error::NotConjugate);
    }
    Ok(shifted_value(&a.minimal_central_polynomial(), a, b, g).is_zero())
}

/// The unique solution for `a ≁ b` computed from the class of `b`:
/// `x = 𝒳_β(α)⁻¹·(γ·L_β 𝒳_β)^{eℓ}(α)`.
pub fn sylvester_alt<R: DivisionRing>(a: &R, b: &R, g: &R) -> Result<R> {
    if a.is_conjugate(b) {
        return Err(Error::Hypothesis(format!("{a} and {b} are conjugate")));
    }
    let xb = b.minimal_central_polynomial();
    let shifted: SkewPoly<R> = xb.to_skew::<R>().shift_left(b).scale_left(g);
    Ok(inv_nonzero(&xb.eval(a)).mul(&shifted.eval_left(a)))
}

/// The same solution set with a normalized description: the intertwiner
/// basis in reduced echelon form over the coordinates, and the particular
/// solution reduced modulo that span so that its trailing coordinates are as
/// small as the span allows.
pub fn canonical_solution<R: DivisionRing>(s: &SylvesterSolution<R>) -> SylvesterSolution<R> {
    if s.basis.is_empty() {
        return s.clone();
    }
    let coords: Vec<Vec<Rational>> = s.basis.iter().map(DivisionRing::coords).collect();
    let (rows, _) = Matrix::from_rows(coords.clone()).rref_rows();
    let basis = rows.iter().map(|r| R::from_coords(r)).collect();
    let particular = s.particular.as_ref().map(|x| {
        let rev = |v: &[Rational]| v.iter().rev().cloned().collect::<Vec<_>>();
        let (rows, pivots) =
            Matrix::from_rows(coords.iter().map(|c| rev(c)).collect()).rref_rows();
        let mut v = rev(&x.coords());
        for (row, &p) in rows.iter().zip(&pivots) {
            let factor = v[p].clone();
            for (t, r) in row.iter().enumerate() {
                v[t] -= &factor * r;
            }
        }
        R::from_coords(&rev(&v))
    });
    SylvesterSolution {
        status: s.status,
        particular,
        basis,
    }
}

/// Entry `(i, j)` solves `αᵢ ψ − ψ βⱼ = cᵢ − dⱼ`.
pub fn batch_sylvester<R: DivisionRing>(
    lambda: &[R],
    omega: &[R],
    c: &[R],
    d: &[R],
) -> Result<Vec<Vec<SylvesterSolution<R>>>> {
    check_len(lambda.len(), c.len())?;
    check_len(omega.len(), d.len())?;
    Ok(lambda
        .iter()
        .zip(c)
        .map(|(a, ci)| {
            omega
                .iter()
                .zip(d)
                .map(|(b, dj)| solve_sylvester(a, b, &ci.sub(dj)))
                .collect()
        })
        .collect())
}

pub(crate) fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// `a·x − x·b − g`; zero exactly for solutions.
pub fn residual<R: DivisionRing>(a: &R, b: &R, g: &R, x: &R) -> R {
    a.mul(x).sub(&x.mul(b)).sub(g)
}
