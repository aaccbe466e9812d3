//! Left and right Lagrange interpolation, consistency reduction of dependent
//! node sets, extension of values within a conjugacy class, and the bottom
//! row of the inverse Vandermonde matrix.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Side};
use crate::ideal::{minimal_poly, minimal_poly_without, require_independent, NodeSet};
use crate::linalg::Matrix;
use crate::poly::SkewPoly;
use crate::scalar::{inv_nonzero, rat, ConjugacyClassData, DivisionRing, Rational};

/// Conditions `f^{eℓ}(αᵢ) = cᵢ` (left) or `f^{e_r}(βᵢ) = dᵢ` (right).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "R: DivisionRing + Serialize + serde::de::DeserializeOwned")]
pub struct OneSidedProblem<R> {
    side: Side,
    conditions: Vec<(R, R)>,
}

impl<R: DivisionRing> OneSidedProblem<R> {
    pub fn new(side: Side, conditions: Vec<(R, R)>) -> Result<Self> {
        let nodes: Vec<R> = conditions.iter().map(|(a, _)| a.clone()).collect();
        NodeSet::new(nodes, side)?;
        Ok(OneSidedProblem { side, conditions })
    }

    pub fn left(conditions: Vec<(R, R)>) -> Result<Self> {
        Self::new(Side::Left, conditions)
    }

    pub fn right(conditions: Vec<(R, R)>) -> Result<Self> {
        Self::new(Side::Right, conditions)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn conditions(&self) -> &[(R, R)] {
        &self.conditions
    }

    pub fn len(&self) -> usize {
        self.conditions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }

    pub fn nodes(&self) -> Vec<R> {
        self.conditions.iter().map(|(a, _)| a.clone()).collect()
    }

    pub fn values(&self) -> Vec<R> {
        self.conditions.iter().map(|(_, c)| c.clone()).collect()
    }

    /// True when `f` meets every condition exactly.
    pub fn is_satisfied_by(&self, f: &SkewPoly<R>) -> bool {
        self.conditions
            .iter()
            .all(|(a, c)| f.eval(a, self.side) == *c)
    }

    /// The conditions at the given positions, in that order.
    pub fn subproblem(&self, indices: &[usize]) -> Self {
        OneSidedProblem {
            side: self.side,
            conditions: indices
                .iter()
                .map(|&i| self.conditions[i].clone())
                .collect(),
        }
    }
}

/// An affine family of interpolants:
/// `particular + Σ λₜ·basisₜ + M_ℓ·h·M_r` with `λₜ ∈ ℚ` and `h ∈ F[z]`, where
/// a missing modulus is read as 1 and the term is dropped when both are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "R: DivisionRing + Serialize + serde::de::DeserializeOwned")]
pub struct InterpolationFamily<R: DivisionRing> {
    pub particular: SkewPoly<R>,
    pub modulus_left: Option<SkewPoly<R>>,
    pub modulus_right: Option<SkewPoly<R>>,
    pub homogeneous_basis: Vec<SkewPoly<R>>,
}

impl<R: DivisionRing> InterpolationFamily<R> {
    pub fn member(&self, lambdas: &[Rational], h: &SkewPoly<R>) -> SkewPoly<R> {
        let mut f = self.particular.clone();
        for (l, b) in lambdas.iter().zip(&self.homogeneous_basis) {
            f = f.add(&b.scale_rational(l));
        }
        let free = match (&self.modulus_left, &self.modulus_right) {
            (None, None) => return f,
            (Some(l), None) => l.mul(h),
            (None, Some(r)) => h.mul(r),
            (Some(l), Some(r)) => l.mul(h).mul(r),
        };
        f.add(&free)
    }
}

/// `f_ℓ = Σ pᵢ·pᵢ^{eℓ}(αᵢ)⁻¹·cᵢ` with `pᵢ = P_{Λ∖{αᵢ},ℓ}`: the unique left
/// interpolant of degree below `n`.
pub fn lagrange_left<R: DivisionRing>(p: &OneSidedProblem<R>) -> Result<SkewPoly<R>> {
    expect_side(p, Side::Left)?;
    let nodes = p.nodes();
    require_independent(&nodes, Side::Left)?;
    Ok(lagrange_unchecked(&nodes, &p.values(), Side::Left))
}

/// `f_r = Σ dᵢ·qᵢ^{e_r}(βᵢ)⁻¹·qᵢ` with `qᵢ = P_{Ω∖{βᵢ},r}`.
pub fn lagrange_right<R: DivisionRing>(p: &OneSidedProblem<R>) -> Result<SkewPoly<R>> {
    expect_side(p, Side::Right)?;
    let nodes = p.nodes();
    require_independent(&nodes, Side::Right)?;
    Ok(lagrange_unchecked(&nodes, &p.values(), Side::Right))
}

pub fn lagrange<R: DivisionRing>(p: &OneSidedProblem<R>) -> Result<SkewPoly<R>> {
    match p.side {
        Side::Left => lagrange_left(p),
        Side::Right => lagrange_right(p),
    }
}

fn expect_side<R: DivisionRing>(p: &OneSidedProblem<R>, side: Side) -> Result<()> {
    if p.side == side {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!(
            "expected a {side} problem, got a {} one",
            p.side
        )))
    }
}

/// Elementary pieces `pᵢ·pᵢ(αᵢ)⁻¹` (left) or `qᵢ(βᵢ)⁻¹·qᵢ` (right); each takes
/// the value 1 at its own node and 0 at the others.
pub fn elementary_polynomials<R: DivisionRing>(nodes: &[R], side: Side) -> Vec<SkewPoly<R>> {
    (0..nodes.len())
        .map(|i| {
            let p = minimal_poly_without(nodes, i, side);
            let v = inv_nonzero(&p.eval(&nodes[i], side));
            match side {
                Side::Left => p.scale_right(&v),
                Side::Right => p.scale_left(&v),
            }
        })
        .collect()
}

pub(crate) fn lagrange_unchecked<R: DivisionRing>(
    nodes: &[R],
    values: &[R],
    side: Side,
) -> SkewPoly<R> {
    elementary_polynomials(nodes, side)
        .iter()
        .zip(values)
        .fold(SkewPoly::zero(), |acc, (e, c)| {
            let term = match side {
                Side::Left => e.scale_right(c),
                Side::Right => e.scale_left(c),
            };
            acc.add(&term)
        })
}

/// Outcome of [`consistency_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction<R> {
    /// The subproblem on a P-basis (positions `basis_indices` of the input)
    /// has the same solution set as the input.
    Reduced {
        problem: OneSidedProblem<R>,
        basis_indices: Vec<usize>,
    },
    /// The condition at `witness` (the smallest such position) contradicts
    /// the conditions on the P-basis.
    Inconsistent { witness: usize },
}

/// Splits the conditions by conjugacy class, extracts a P-basis of each
/// class (earliest nodes win), and checks every remaining condition against
/// the Lagrange interpolant of its class basis.
pub fn consistency_reduce<R: DivisionRing>(p: &OneSidedProblem<R>) -> Reduction<R> {
    let side = p.side;
    let nodes = p.nodes();
    let mut basis_indices = Vec::new();
    let mut witness: Option<usize> = None;
    for class in group_by_class(&nodes) {
        let class_nodes: Vec<R> = class.iter().map(|&i| nodes[i].clone()).collect();
        let local = minimal_poly(&class_nodes, side).basis_indices;
        let kept: Vec<usize> = local.iter().map(|&l| class[l]).collect();
        let kept_nodes: Vec<R> = kept.iter().map(|&i| nodes[i].clone()).collect();
        let kept_values: Vec<R> = kept.iter().map(|&i| p.conditions[i].1.clone()).collect();
        let f = lagrange_unchecked(&kept_nodes, &kept_values, side);
        for &j in &class {
            if !kept.contains(&j) && f.eval(&nodes[j], side) != p.conditions[j].1 {
                witness = Some(witness.map_or(j, |w| w.min(j)));
            }
        }
        basis_indices.extend(kept);
    }
    if let Some(witness) = witness {
        return Reduction::Inconsistent { witness };
    }
    basis_indices.sort_unstable();
    Reduction::Reduced {
        problem: p.subproblem(&basis_indices),
        basis_indices,
    }
}

/// Positions grouped by conjugacy class, classes in order of first appearance.
pub(crate) fn group_by_class<R: DivisionRing>(nodes: &[R]) -> Vec<Vec<usize>> {
    let mut order: Vec<ConjugacyClassData> = Vec::new();
    let mut groups: HashMap<ConjugacyClassData, Vec<usize>> = HashMap::new();
    for (i, a) in nodes.iter().enumerate() {
        let key = a.class_data();
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key).or_default().push(i);
    }
    order
        .into_iter()
        .map(|k| groups.remove(&k).unwrap_or_default())
        .collect()
}

/// Reduces a possibly dependent problem and returns its full solution family,
/// or the witness of inconsistency.
pub fn solve_one_sided<R: DivisionRing>(
    p: &OneSidedProblem<R>,
) -> std::result::Result<(InterpolationFamily<R>, Vec<usize>), usize> {
    match consistency_reduce(p) {
        Reduction::Inconsistent { witness } => Err(witness),
        Reduction::Reduced {
            problem,
            basis_indices,
        } => {
            let nodes = problem.nodes();
            let particular = lagrange_unchecked(&nodes, &problem.values(), p.side);
            let modulus = minimal_poly(&nodes, p.side).poly;
            let (modulus_left, modulus_right) = match p.side {
                Side::Left => (Some(modulus), None),
                Side::Right => (None, Some(modulus)),
            };
            Ok((
                InterpolationFamily {
                    particular,
                    modulus_left,
                    modulus_right,
                    homogeneous_basis: Vec::new(),
                },
                basis_indices,
            ))
        }
    }
}

/// The value at `target` (left value if `side` is left, right value
/// otherwise) shared by every polynomial that meets `basis`, when the nodes
/// of `basis` form a P-basis (on `basis.side()`) of the class of `target`.
///
/// For a left basis `Δ = {γ₁,…,γ_m}` with `pᵢ = P_{Δ∖{γᵢ},ℓ}`:
/// `f^{eℓ}(γ) = Σ pᵢ^{eℓ}(γ)·pᵢ^{eℓ}(γᵢ)⁻¹·f(γᵢ)` and
/// `f^{e_r}(γ) = Σ (pᵢ·pᵢ^{eℓ}(γᵢ)⁻¹·f(γᵢ))^{e_r}(γ)`. A right basis uses the
/// mirrored sums.
pub fn extend_in_class<R: DivisionRing>(
    basis: &OneSidedProblem<R>,
    target: &R,
    side: Side,
) -> Result<R> {
    let nodes = basis.nodes();
    let class = target.class_data();
    if nodes.iter().any(|a| a.class_data() != class) {
        return Err(Error::NotInClass);
    }
    let basis_side = basis.side();
    let m = minimal_poly(&nodes, basis_side);
    if m.basis_indices.len() != nodes.len()
        || m.poly != class.minimal_central_polynomial().to_skew()
    {
        return Err(Error::NotAPBasis);
    }
    let mut total = R::zero();
    for (i, (_, value)) in basis.conditions().iter().enumerate() {
        let p = minimal_poly_without(&nodes, i, basis_side);
        let w = inv_nonzero(&p.eval(&nodes[i], basis_side));
        let term = match (basis_side, side) {
            (Side::Left, Side::Left) => p.eval_left(target).mul(&w).mul(value),
            (Side::Left, Side::Right) => p.scale_right(&w.mul(value)).eval_right(target),
            (Side::Right, Side::Right) => value.mul(&w).mul(&p.eval_right(target)),
            (Side::Right, Side::Left) => p.scale_left(&value.mul(&w)).eval_left(target),
        };
        total = total.add(&term);
    }
    Ok(total)
}

/// Row `v` with `Σᵢ vᵢ·αᵢ^p = 0` for `p < n−1` and `= 1` for `p = n−1`: the
/// bottom row of the inverse of `W = [αᵢ^{j−1}]`.
pub fn vandermonde_bottom_row<R: DivisionRing>(nodes: &[R]) -> Result<Vec<R>> {
    let n = nodes.len();
    let d = R::DIM;
    let mut sys = Matrix::zeros(d * n, d * n);
    for p in 0..n {
        for (i, a) in nodes.iter().enumerate() {
            sys.set_block(d * p, d * i, &a.pow(p).right_matrix());
        }
    }
    let mut rhs = vec![rat(0); d * n];
    if n > 0 {
        rhs[d * (n - 1)] = rat(1);
    }
    match sys.solve(&rhs) {
        Some((v, null)) if null.is_empty() => Ok(v.chunks(d).map(R::from_coords).collect()),
        _ => Err(Error::Singular),
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

    fn cond(pairs: &[(&str, &str)]) -> Vec<(Quaternion, Quaternion)> {
        pairs.iter().map(|(a, c)| (q(a), q(c))).collect()
    }

    #[test]
    fn left_lagrange_examples() {
        let p = OneSidedProblem::left(cond(&[("i", "1"), ("j", "0")])).unwrap();
        let f = lagrange_left(&p).unwrap();
        assert_eq!(f, P::new(vec![q("1/2-1/2*k"), q("-1/2*i+1/2*j")]));
        assert!(p.is_satisfied_by(&f));

        let p = OneSidedProblem::left(cond(&[("i", "i"), ("j", "j")])).unwrap();
        assert_eq!(lagrange_left(&p).unwrap(), P::var());

        let p = OneSidedProblem::left(cond(&[("1+k", "2-j")])).unwrap();
        assert_eq!(lagrange_left(&p).unwrap(), P::constant(q("2-j")));
    }

    #[test]
    fn right_lagrange_examples() {
        let p = OneSidedProblem::right(cond(&[("i", "1"), ("j", "0")])).unwrap();
        let f = lagrange_right(&p).unwrap();
        assert!(p.is_satisfied_by(&f));
        assert_eq!(f.degree(), Some(1));

        let p = OneSidedProblem::right(cond(&[("i", "i"), ("j", "j")])).unwrap();
        assert_eq!(lagrange_right(&p).unwrap(), P::var());
    }

    #[test]
    fn dependent_nodes_are_rejected() {
        let p = OneSidedProblem::left(cond(&[("i", "0"), ("j", "0"), ("k", "1")])).unwrap();
        assert_eq!(
            lagrange_left(&p),
            Err(Error::Dependent {
                side: Side::Left,
                index: 0
            })
        );
        assert!(lagrange_right(&p).is_err());
        assert!(OneSidedProblem::left(cond(&[("i", "0"), ("i", "1")])).is_err());
    }

    #[test]
    fn reduction() {
        let g: P = "(1+j) + (2-i) z + (k) z^2".parse().unwrap();
        let nodes = ["i", "j", "k", "3"];
        let p = OneSidedProblem::left(nodes.iter().map(|a| (q(a), g.eval_left(&q(a)))).collect())
            .unwrap();
        match consistency_reduce(&p) {
            Reduction::Reduced {
                problem,
                basis_indices,
            } => {
                assert_eq!(basis_indices, vec![0, 1, 3]);
                assert_eq!(problem.len(), 3);
            }
            other => panic!("{other:?}"),
        }

        let p = OneSidedProblem::left(cond(&[("i", "0"), ("j", "0"), ("k", "1")])).unwrap();
        assert_eq!(
            consistency_reduce(&p),
            Reduction::Inconsistent { witness: 2 }
        );
        let p = OneSidedProblem::right(cond(&[("i", "0"), ("j", "0"), ("k", "1")])).unwrap();
        assert_eq!(
            consistency_reduce(&p),
            Reduction::Inconsistent { witness: 2 }
        );

        let p = OneSidedProblem::left(cond(&[("i", "1"), ("2", "0")])).unwrap();
        assert_eq!(
            consistency_reduce(&p),
            Reduction::Reduced {
                problem: p.clone(),
                basis_indices: vec![0, 1]
            }
        );
    }

    #[test]
    fn extension() {
        let f: P = "(2) + (i-k) z + (1+j) z^2 + (3) z^3".parse().unwrap();
        let basis = OneSidedProblem::left(vec![
            (q("i"), f.eval_left(&q("i"))),
            (q("j"), f.eval_left(&q("j"))),
        ])
        .unwrap();
        for target in ["k", "3/5*i+4/5*j", "i"] {
            let t = q(target);
            assert_eq!(
                extend_in_class(&basis, &t, Side::Left).unwrap(),
                f.eval_left(&t)
            );
            assert_eq!(
                extend_in_class(&basis, &t, Side::Right).unwrap(),
                f.eval_right(&t)
            );
        }
        assert_eq!(
            extend_in_class(&basis, &q("1+k"), Side::Left),
            Err(Error::NotInClass)
        );
        let short = OneSidedProblem::left(vec![(q("i"), q("1"))]).unwrap();
        assert_eq!(
            extend_in_class(&short, &q("j"), Side::Left),
            Err(Error::NotAPBasis)
        );

        let rbasis = OneSidedProblem::right(vec![
            (q("i"), f.eval_right(&q("i"))),
            (q("k"), f.eval_right(&q("k"))),
        ])
        .unwrap();
        let t = q("j");
        assert_eq!(
            extend_in_class(&rbasis, &t, Side::Left).unwrap(),
            f.eval_left(&t)
        );
        assert_eq!(
            extend_in_class(&rbasis, &t, Side::Right).unwrap(),
            f.eval_right(&t)
        );
    }

    #[test]
    fn vandermonde_rows() {
        assert_eq!(
            vandermonde_bottom_row(&[q("i"), q("j")]).unwrap(),
            vec![q("-1/2*i+1/2*j"), q("1/2*i-1/2*j")]
        );
        assert_eq!(vandermonde_bottom_row(&[q("2")]).unwrap(), vec![q("1")]);
        assert_eq!(
            vandermonde_bottom_row(&[q("0"), q("1")]).unwrap(),
            vec![q("-1"), q("1")]
        );
        assert_eq!(
            vandermonde_bottom_row(&[q("i"), q("j"), q("k")]),
            Err(Error::Singular)
        );
    }

    #[test]
    fn family_members() {
        let p = OneSidedProblem::left(cond(&[("i", "1"), ("1+j", "k")])).unwrap();
        let (fam, _) = solve_one_sided(&p).unwrap();
        let h: P = "(2-i) + (k) z".parse().unwrap();
        assert!(p.is_satisfied_by(&fam.member(&[], &h)));
        let p = OneSidedProblem::right(cond(&[("i", "1"), ("1+j", "k")])).unwrap();
        let (fam, _) = solve_one_sided(&p).unwrap();
        assert!(p.is_satisfied_by(&fam.member(&[], &h)));
    }
}
