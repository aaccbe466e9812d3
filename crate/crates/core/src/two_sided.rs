//! Two-sided interpolation: left conditions `f^{eℓ}(αᵢ) = cᵢ` together with
//! right conditions `f^{e_r}(βⱼ) = dⱼ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Side};
use crate::ideal::{minimal_poly, minimal_poly_without, require_independent, NodeSet};
use crate::one_sided::{
    extend_in_class, group_by_class, lagrange_unchecked, InterpolationFamily, OneSidedProblem,
};
use crate::poly::SkewPoly;
use crate::scalar::{inv_nonzero, DivisionRing, Rational};
use crate::sylvester::{check_len, psi, residual, solve_sylvester, SylvesterStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "R: DivisionRing + Serialize + serde::de::DeserializeOwned")]
pub struct TwoSidedProblem<R> {
    left: Vec<(R, R)>,
    right: Vec<(R, R)>,
}

impl<R: DivisionRing> TwoSidedProblem<R> {
    /// Nodes must be distinct within each side; a node may appear on both.
    pub fn new(left: Vec<(R, R)>, right: Vec<(R, R)>) -> Result<Self> {
        NodeSet::new(left.iter().map(|(a, _)| a.clone()).collect(), Side::Left)?;
        NodeSet::new(right.iter().map(|(b, _)| b.clone()).collect(), Side::Right)?;
        Ok(TwoSidedProblem { left, right })
    }

    pub fn left(&self) -> &[(R, R)] {
        &self.left
    }

    pub fn right(&self) -> &[(R, R)] {
        &self.right
    }

    pub fn left_nodes(&self) -> Vec<R> {
        self.left.iter().map(|(a, _)| a.clone()).collect()
    }

    pub fn right_nodes(&self) -> Vec<R> {
        self.right.iter().map(|(b, _)| b.clone()).collect()
    }

    pub fn left_values(&self) -> Vec<R> {
        self.left.iter().map(|(_, c)| c.clone()).collect()
    }

    pub fn right_values(&self) -> Vec<R> {
        self.right.iter().map(|(_, d)| d.clone()).collect()
    }

    pub fn left_problem(&self) -> OneSidedProblem<R> {
        OneSidedProblem::left(self.left.clone()).expect("nodes checked on construction")
    }

    pub fn right_problem(&self) -> OneSidedProblem<R> {
        OneSidedProblem::right(self.right.clone()).expect("nodes checked on construction")
    }

    /// `(f^{eℓ}(αᵢ) − cᵢ)ᵢ` and `(f^{e_r}(βⱼ) − dⱼ)ⱼ`.
    pub fn residuals(&self, f: &SkewPoly<R>) -> (Vec<R>, Vec<R>) {
        (
            self.left
                .iter()
                .map(|(a, c)| f.eval_left(a).sub(c))
                .collect(),
            self.right
                .iter()
                .map(|(b, d)| f.eval_right(b).sub(d))
                .collect(),
        )
    }

    pub fn is_satisfied_by(&self, f: &SkewPoly<R>) -> bool {
        let (l, r) = self.residuals(f);
        l.iter().chain(&r).all(DivisionRing::is_zero)
    }
}

/// `base + Σ λₜ·homogeneous_basisₜ + P_{Λ,ℓ}·h·P_{Ω,r}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "R: DivisionRing + Serialize + serde::de::DeserializeOwned")]
pub struct TwoSidedFamily<R: DivisionRing> {
    pub base: SkewPoly<R>,
    pub homogeneous_basis: Vec<SkewPoly<R>>,
    pub left_modulus: SkewPoly<R>,
    pub right_modulus: SkewPoly<R>,
}

impl<R: DivisionRing> TwoSidedFamily<R> {
    pub fn member(&self, lambdas: &[Rational], h: &SkewPoly<R>) -> SkewPoly<R> {
        self.clone().into_interpolation_family().member(lambdas, h)
    }

    pub fn into_interpolation_family(self) -> InterpolationFamily<R> {
        InterpolationFamily {
            particular: self.base,
            modulus_left: Some(self.left_modulus),
            modulus_right: Some(self.right_modulus),
            homogeneous_basis: self.homogeneous_basis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoSidedOutcome<R: DivisionRing> {
    Family(TwoSidedFamily<R>),
    /// The Sylvester equation for this (left, right) pair has no solution.
    Inconsistent { left: usize, right: usize },
}

/// Minimal polynomials shared by all the formulas: `pᵢ = P_{Λ∖{αᵢ},ℓ}`,
/// `pᵢ^{eℓ}(αᵢ)⁻¹`, `qⱼ = P_{Ω∖{βⱼ},r}`, `qⱼ^{e_r}(βⱼ)⁻¹`, `P_{Λ,ℓ}`, `P_{Ω,r}`.
pub(crate) struct Frame<R: DivisionRing> {
    pub lambda: Vec<R>,
    pub omega: Vec<R>,
    pub p: Vec<SkewPoly<R>>,
    pub p_inv: Vec<R>,
    pub q: Vec<SkewPoly<R>>,
    pub q_inv: Vec<R>,
    pub p_lambda: SkewPoly<R>,
    pub p_omega: SkewPoly<R>,
}

impl<R: DivisionRing> Frame<R> {
    pub fn new(lambda: Vec<R>, omega: Vec<R>) -> Result<Self> {
        require_independent(&lambda, Side::Left)?;
        require_independent(&omega, Side::Right)?;
        let p: Vec<_> = (0..lambda.len())
            .map(|i| minimal_poly_without(&lambda, i, Side::Left))
            .collect();
        let p_inv = p
            .iter()
            .zip(&lambda)
            .map(|(pi, a)| inv_nonzero(&pi.eval_left(a)))
            .collect();
        let q: Vec<_> = (0..omega.len())
            .map(|j| minimal_poly_without(&omega, j, Side::Right))
            .collect();
        let q_inv = q
            .iter()
            .zip(&omega)
            .map(|(qj, b)| inv_nonzero(&qj.eval_right(b)))
            .collect();
        Ok(Frame {
            p_lambda: minimal_poly(&lambda, Side::Left).poly,
            p_omega: minimal_poly(&omega, Side::Right).poly,
            lambda,
            omega,
            p,
            p_inv,
            q,
            q_inv,
        })
    }

    fn n(&self) -> usize {
        self.lambda.len()
    }

    fn k(&self) -> usize {
        self.omega.len()
    }

    /// `Σᵢⱼ pᵢ(αᵢ)⁻¹ ψᵢⱼ qⱼ(βⱼ)⁻¹ qⱼ`, or its mirror `Σᵢⱼ pᵢ pᵢ(αᵢ)⁻¹ ψᵢⱼ qⱼ(βⱼ)⁻¹`.
    fn psi_sum(&self, psi: &[Vec<R>], side: Side) -> SkewPoly<R> {
        let mut total = SkewPoly::zero();
        for i in 0..self.n() {
            for j in 0..self.k() {
                let w = self.p_inv[i].mul(&psi[i][j]).mul(&self.q_inv[j]);
                let term = match side {
                    Side::Left => self.q[j].scale_left(&w),
                    Side::Right => self.p[i].scale_right(&w),
                };
                total = total.add(&term);
            }
        }
        total
    }

    /// `Σ pᵢ pᵢ(αᵢ)⁻¹ cᵢ + P_{Λ,ℓ}·Σᵢⱼ pᵢ(αᵢ)⁻¹ ψᵢⱼ qⱼ(βⱼ)⁻¹ qⱼ`.
    fn bap1(&self, c: &[R], psi: &[Vec<R>]) -> SkewPoly<R> {
        lagrange_unchecked(&self.lambda, c, Side::Left)
            .add(&self.p_lambda.mul(&self.psi_sum(psi, Side::Left)))
    }

    /// `Σ dⱼ qⱼ(βⱼ)⁻¹ qⱼ + Σᵢⱼ pᵢ pᵢ(αᵢ)⁻¹ ψᵢⱼ qⱼ(βⱼ)⁻¹·P_{Ω,r}`.
    fn ap1a(&self, d: &[R], psi: &[Vec<R>]) -> SkewPoly<R> {
        lagrange_unchecked(&self.omega, d, Side::Right)
            .add(&self.psi_sum(psi, Side::Right).mul(&self.p_omega))
    }

    /// The left-anchored form, except that with no left nodes it carries no
    /// right data and the right-anchored form is used instead.
    fn modified(&self, c: &[R], d: &[R], psi: &[Vec<R>]) -> SkewPoly<R> {
        if self.n() == 0 {
            self.ap1a(d, psi)
        } else {
            self.bap1(c, psi)
        }
    }
}

fn check_psi<R: DivisionRing>(p: &TwoSidedProblem<R>, psi: &[Vec<R>]) -> Result<()> {
    check_len(p.left.len(), psi.len())?;
    for (i, row) in psi.iter().enumerate() {
        check_len(p.right.len(), row.len())?;
        let (a, c) = &p.left[i];
        for (j, x) in row.iter().enumerate() {
            let (b, d) = &p.right[j];
            if !residual(a, b, &c.sub(d), x).is_zero() {
                return Err(Error::SylvesterViolation { left: i, right: j });
            }
        }
    }
    Ok(())
}

/// The unique `f` of degree below `n + k` with the prescribed left and right
/// values and `(L_{αᵢ} f)^{e_r}(βⱼ) = ψᵢⱼ`.
pub fn solve_modified<R: DivisionRing>(p: &TwoSidedProblem<R>, psi: &[Vec<R>]) -> Result<SkewPoly<R>> {
    check_psi(p, psi)?;
    let frame = Frame::new(p.left_nodes(), p.right_nodes())?;
    Ok(frame.modified(&p.left_values(), &p.right_values(), psi))
}

/// The same polynomial as [`solve_modified`], assembled from the right
/// Lagrange polynomial (the left-anchored form is used when there are no
/// right nodes).
pub fn solve_modified_symmetric<R: DivisionRing>(
    p: &TwoSidedProblem<R>,
    psi: &[Vec<R>],
) -> Result<SkewPoly<R>> {
    check_psi(p, psi)?;
    let frame = Frame::new(p.left_nodes(), p.right_nodes())?;
    if frame.k() == 0 {
        Ok(frame.bap1(&p.left_values(), psi))
    } else {
        Ok(frame.ap1a(&p.right_values(), psi))
    }
}

/// All solutions of degree below `n + k`, or the first (row-major) pair whose
/// Sylvester equation `αᵢψ − ψβⱼ = cᵢ − dⱼ` is unsolvable.
pub fn solve_two_sided<R: DivisionRing>(p: &TwoSidedProblem<R>) -> Result<TwoSidedOutcome<R>> {
    let frame = Frame::new(p.left_nodes(), p.right_nodes())?;
    let mut psi_matrix = Vec::with_capacity(frame.n());
    let mut homogeneous_basis = Vec::new();
    for (i, (a, c)) in p.left.iter().enumerate() {
        let mut row = Vec::with_capacity(frame.k());
        for (j, (b, d)) in p.right.iter().enumerate() {
            let s = solve_sylvester(a, b, &c.sub(d));
            if s.status == SylvesterStatus::Unsolvable {
                return Ok(TwoSidedOutcome::Inconsistent { left: i, right: j });
            }
            row.push(s.particular.expect("solvable"));
            for v in &s.basis {
                let w = frame.p_inv[i].mul(v).mul(&frame.q_inv[j]);
                homogeneous_basis.push(frame.p_lambda.mul(&frame.q[j].scale_left(&w)));
            }
        }
        psi_matrix.push(row);
    }
    let base = frame.modified(&p.left_values(), &p.right_values(), &psi_matrix);
    Ok(TwoSidedOutcome::Family(TwoSidedFamily {
        base,
        homogeneous_basis,
        left_modulus: frame.p_lambda,
        right_modulus: frame.p_omega,
    }))
}

/// No nonzero `g` of degree below `|Λ| + |Ω|` vanishes on `Λ` (left) and `Ω`
/// (right): both sets independent and no left node conjugate to a right one.
pub fn two_sided_p_independent<R: DivisionRing>(lambda: &[R], omega: &[R]) -> bool {
    first_conjugate_pair(lambda, omega).is_none()
        && require_independent(lambda, Side::Left).is_ok()
        && require_independent(omega, Side::Right).is_ok()
}

pub(crate) fn first_conjugate_pair<R: DivisionRing>(lambda: &[R], omega: &[R]) -> Option<(usize, usize)> {
    lambda.iter().enumerate().find_map(|(i, a)| {
        omega
            .iter()
            .position(|b| a.is_conjugate(b))
            .map(|j| (i, j))
    })
}

/// The elementary pieces of the two-sided Lagrange formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangePieces<R: DivisionRing> {
    pub rho: Vec<R>,
    pub gamma: Vec<R>,
    /// `f_{ℓ,i} = pᵢ·ρᵢ·P_{Ω,r}`: value `cᵢ` at `αᵢ`, zero at the other nodes.
    pub left_pieces: Vec<SkewPoly<R>>,
    /// `f_{r,j} = P_{Λ,ℓ}·γⱼ·qⱼ`: value `dⱼ` at `βⱼ`, zero at the other nodes.
    pub right_pieces: Vec<SkewPoly<R>>,
}

impl<R: DivisionRing> LagrangePieces<R> {
    pub fn sum(&self) -> SkewPoly<R> {
        self.left_pieces
            .iter()
            .chain(&self.right_pieces)
            .fold(SkewPoly::zero(), |acc, f| acc.add(f))
    }
}

/// `ρᵢ = Σⱼ pᵢ(αᵢ)⁻¹ Ψ_{αᵢ,βⱼ}(cᵢ) qⱼ(βⱼ)⁻¹` and
/// `γⱼ = −Σᵢ pᵢ(αᵢ)⁻¹ Ψ_{αᵢ,βⱼ}(dⱼ) qⱼ(βⱼ)⁻¹`, for `[Λ] ∩ [Ω] = ∅`.
///
/// With one side empty the other side's one-sided formula is returned as
/// its pieces (`ρᵢ = pᵢ(αᵢ)⁻¹cᵢ`, resp. `γⱼ = dⱼqⱼ(βⱼ)⁻¹`).
pub fn lagrange_two_sided_pieces<R: DivisionRing>(p: &TwoSidedProblem<R>) -> Result<LagrangePieces<R>> {
    if let Some((left, right)) = first_conjugate_pair(&p.left_nodes(), &p.right_nodes()) {
        return Err(Error::ConjugatePair { left, right });
    }
    let f = Frame::new(p.left_nodes(), p.right_nodes())?;
    let (n, k) = (f.n(), f.k());
    let rho: Vec<R> = (0..n)
        .map(|i| {
            let c = &p.left[i].1;
            if k == 0 {
                return f.p_inv[i].mul(c);
            }
            (0..k).fold(R::zero(), |acc, j| {
                let t = f.p_inv[i]
                    .mul(&psi(&f.lambda[i], &f.omega[j], c))
                    .mul(&f.q_inv[j]);
                acc.add(&t)
            })
        })
        .collect();
    let gamma: Vec<R> = (0..k)
        .map(|j| {
            let d = &p.right[j].1;
            if n == 0 {
                return d.mul(&f.q_inv[j]);
            }
            (0..n).fold(R::zero(), |acc, i| {
                let t = f.p_inv[i]
                    .mul(&psi(&f.lambda[i], &f.omega[j], d))
                    .mul(&f.q_inv[j]);
                acc.sub(&t)
            })
        })
        .collect();
    let left_pieces = (0..n)
        .map(|i| f.p[i].scale_right(&rho[i]).mul(&f.p_omega))
        .collect();
    let right_pieces = (0..k)
        .map(|j| f.p_lambda.scale_right(&gamma[j]).mul(&f.q[j]))
        .collect();
    Ok(LagrangePieces {
        rho,
        gamma,
        left_pieces,
        right_pieces,
    })
}

/// `Σᵢ pᵢ·ρᵢ·P_{Ω,r} + Σⱼ P_{Λ,ℓ}·γⱼ·qⱼ`: the unique solution of degree
/// below `n + k` when the pair `(Λ, Ω)` is P-independent.
pub fn lagrange_two_sided<R: DivisionRing>(p: &TwoSidedProblem<R>) -> Result<SkewPoly<R>> {
    Ok(lagrange_two_sided_pieces(p)?.sum())
}

/// A condition implied by the conditions on the other side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "R: DivisionRing + Serialize + serde::de::DeserializeOwned")]
pub struct ForcedCondition<R> {
    /// Side of the forced condition.
    pub side: Side,
    pub index: usize,
    pub forced: R,
    pub prescribed: R,
    pub consistent: bool,
}

/// For every class in which the left nodes contain a left P-basis, each right
/// condition in that class is forced (its value is the extension of the left
/// data); mirrored for right P-bases. Reports the forced value and whether
/// the prescribed one matches.
pub fn within_class_redundancy<R: DivisionRing>(p: &TwoSidedProblem<R>) -> Vec<ForcedCondition<R>> {
    let mut out = Vec::new();
    collect_forced(p.left(), p.right(), Side::Left, &mut out);
    collect_forced(p.right(), p.left(), Side::Right, &mut out);
    out.sort_by_key(|f| (f.side == Side::Left, f.index));
    out
}

fn collect_forced<R: DivisionRing>(
    source: &[(R, R)],
    other: &[(R, R)],
    source_side: Side,
    out: &mut Vec<ForcedCondition<R>>,
) {
    let nodes: Vec<R> = source.iter().map(|(a, _)| a.clone()).collect();
    for class in group_by_class(&nodes) {
        let class_nodes: Vec<R> = class.iter().map(|&i| nodes[i].clone()).collect();
        let basis = minimal_poly(&class_nodes, source_side).basis_indices;
        let kappa = nodes[class[0]]
            .minimal_central_polynomial()
            .degree()
            .unwrap_or(0);
        if basis.len() != kappa {
            continue;
        }
        let conditions = basis.iter().map(|&l| source[class[l]].clone()).collect();
        let Ok(basis_problem) = OneSidedProblem::new(source_side, conditions) else {
            continue;
        };
        let target_side = source_side.mirror();
        for (index, (b, d)) in other.iter().enumerate() {
            if !b.is_conjugate(&nodes[class[0]]) {
                continue;
            }
            let Ok(forced) = extend_in_class(&basis_problem, b, target_side) else {
                continue;
            };
            out.push(ForcedCondition {
                side: target_side,
                index,
                consistent: forced == *d,
                forced,
                prescribed: d.clone(),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;

    type P = SkewPoly<Quaternion>;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn problem(left: &[(&str, &str)], right: &[(&str, &str)]) -> TwoSidedProblem<Quaternion> {
        let conv = |v: &[(&str, &str)]| v.iter().map(|(a, c)| (q(a), q(c))).collect();
        TwoSidedProblem::new(conv(left), conv(right)).unwrap()
    }

    fn golden() -> P {
        P::new(vec![q("4/5+3/5*i+2/5*j-1/5*k"), q("-3/5-1/5*i+1/5*j+2/5*k")])
    }

    #[test]
    fn modified_problem() {
        let p = problem(&[("i", "1")], &[("1+j", "0")]);
        let psi = vec![vec![q("-3/5-1/5*i+1/5*j+2/5*k")]];
        let f = solve_modified(&p, &psi).unwrap();
        assert_eq!(f, golden());
        assert_eq!(f.shift_left(&q("i")).eval_right(&q("1+j")), psi[0][0]);
        assert_eq!(solve_modified_symmetric(&p, &psi).unwrap(), f);
        assert_eq!(
            solve_modified(&p, &[vec![q("1")]]),
            Err(Error::SylvesterViolation { left: 0, right: 0 })
        );

        let p = problem(&[("i", "0")], &[("1+j", "0")]);
        assert_eq!(solve_modified(&p, &[vec![q("0")]]).unwrap(), P::zero());
    }

    #[test]
    fn two_sided_solver() {
        let p = problem(&[("i", "1")], &[("1+j", "0")]);
        match solve_two_sided(&p).unwrap() {
            TwoSidedOutcome::Family(fam) => {
                assert_eq!(fam.base, golden());
                assert!(fam.homogeneous_basis.is_empty());
            }
            other => panic!("{other:?}"),
        }

        let p = problem(&[("i", "0")], &[("j", "0")]);
        match solve_two_sided(&p).unwrap() {
            TwoSidedOutcome::Family(fam) => {
                assert_eq!(fam.base, P::zero());
                assert_eq!(fam.homogeneous_basis.len(), 2);
                for g in &fam.homogeneous_basis {
                    assert!(p.is_satisfied_by(g));
                    assert_eq!(g.degree(), Some(1));
                }
            }
            other => panic!("{other:?}"),
        }

        let p = problem(&[("i", "1")], &[("j", "0")]);
        assert_eq!(
            solve_two_sided(&p).unwrap(),
            TwoSidedOutcome::Inconsistent { left: 0, right: 0 }
        );

        let p = problem(&[("i", "0"), ("j", "0"), ("k", "1")], &[]);
        assert!(solve_two_sided(&p).is_err());
    }

    #[test]
    fn one_side_empty() {
        let p = problem(&[], &[("i", "1"), ("j", "0")]);
        let TwoSidedOutcome::Family(fam) = solve_two_sided(&p).unwrap() else {
            panic!()
        };
        assert!(p.is_satisfied_by(&fam.base));
        assert_eq!(lagrange_two_sided(&p).unwrap(), fam.base);

        let p = problem(&[("i", "1"), ("j", "0")], &[]);
        let TwoSidedOutcome::Family(fam) = solve_two_sided(&p).unwrap() else {
            panic!()
        };
        assert_eq!(fam.base, P::new(vec![q("1/2-1/2*k"), q("-1/2*i+1/2*j")]));
        assert_eq!(lagrange_two_sided(&p).unwrap(), fam.base);

        let empty = problem(&[], &[]);
        assert_eq!(lagrange_two_sided(&empty).unwrap(), P::zero());
    }

    #[test]
    fn lagrange_formula() {
        let p = problem(&[("i", "1")], &[("1+j", "0")]);
        let pieces = lagrange_two_sided_pieces(&p).unwrap();
        assert_eq!(pieces.sum(), golden());
        let fl = &pieces.left_pieces[0];
        assert_eq!(fl.eval_left(&q("i")), q("1"));
        assert_eq!(fl.eval_right(&q("1+j")), q("0"));

        let p = problem(&[("i", "2-k"), ("1+j", "i")], &[("3", "1"), ("2+i+k", "j")]);
        let f = lagrange_two_sided(&p).unwrap();
        assert!(p.is_satisfied_by(&f));
        assert!(f.degree().unwrap() < 4);
        let TwoSidedOutcome::Family(fam) = solve_two_sided(&p).unwrap() else {
            panic!()
        };
        assert_eq!(fam.base, f);

        let p = problem(&[("i", "1")], &[("j", "0")]);
        assert_eq!(
            lagrange_two_sided(&p),
            Err(Error::ConjugatePair { left: 0, right: 0 })
        );
    }

    #[test]
    fn independence_of_pairs() {
        assert!(two_sided_p_independent(&[q("i")], &[q("1+j")]));
        assert!(!two_sided_p_independent(&[q("i")], &[q("j")]));
        assert!(!two_sided_p_independent(&[q("i"), q("j"), q("k")], &[q("5")]));
    }

    #[test]
    fn redundancy_report() {
        let f: P = "(1) + (j) z + (2-k) z^2".parse().unwrap();
        let forced = f.eval_right(&q("k"));
        let p = TwoSidedProblem::new(
            vec![(q("i"), f.eval_left(&q("i"))), (q("j"), f.eval_left(&q("j")))],
            vec![(q("k"), forced.clone()), (q("3"), q("0"))],
        )
        .unwrap();
        let report = within_class_redundancy(&p);
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].side, Side::Right);
        assert_eq!(report[0].index, 0);
        assert!(report[0].consistent);

        let p = TwoSidedProblem::new(
            vec![(q("i"), f.eval_left(&q("i"))), (q("j"), f.eval_left(&q("j")))],
            vec![(q("k"), forced.add(&q("1")))],
        )
        .unwrap();
        let report = within_class_redundancy(&p);
        assert!(!report[0].consistent);
        assert_eq!(report[0].forced, forced);

        assert!(within_class_redundancy(&problem(&[("i", "1")], &[("j", "0")])).is_empty());
    }
}
