//! Least common multiples, minimal polynomials of node sets, P-independence.

use std::ops::Deref;

use crate::error::{Error, Result, Side};
use crate::linalg::Matrix;
use crate::poly::SkewPoly;
use crate::scalar::{inv_nonzero, DivisionRing};

/// An ordered list of pairwise distinct nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSet<R> {
    nodes: Vec<R>,
}

impl<R: DivisionRing> NodeSet<R> {
    /// Rejects repeated nodes; `side` only labels the error.
    pub fn new(nodes: Vec<R>, side: Side) -> Result<Self> {
        for (index, node) in nodes.iter().enumerate() {
            if nodes[..index].contains(node) {
                return Err(Error::DuplicateNode { side, index });
            }
        }
        Ok(NodeSet { nodes })
    }

    pub fn into_inner(self) -> Vec<R> {
        self.nodes
    }
}

impl<R> Deref for NodeSet<R> {
    type Target = [R];

    fn deref(&self) -> &[R] {
        &self.nodes
    }
}

/// Minimal polynomial of a node set together with the P-basis that built it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolyResult<R: DivisionRing> {
    pub poly: SkewPoly<R>,
    /// Positions (into the input) of the nodes that raised the degree.
    pub basis_indices: Vec<usize>,
}

/// `P_{Δ,ℓ}`: the monic polynomial of least degree with every node as a left
/// zero.
///
/// Built one node at a time: if the current `P` does not already vanish at
/// `α`, with `v = P^{eℓ}(α)` the new minimal polynomial is `P·(z − v⁻¹αv)`.
/// Nodes that are already zeros are skipped, so the retained positions are a
/// left P-basis that prefers earlier nodes.
pub fn minimal_poly_left<R: DivisionRing>(nodes: &[R]) -> MinimalPolyResult<R> {
    let mut poly = SkewPoly::one();
    let mut basis_indices = Vec::new();
    for (idx, a) in nodes.iter().enumerate() {
        let v = poly.eval_left(a);
        if v.is_zero() {
            continue;
        }
        let shifted = inv_nonzero(&v).mul(a).mul(&v);
        poly = poly.mul(&SkewPoly::linear(&shifted));
        basis_indices.push(idx);
    }
    MinimalPolyResult {
        poly,
        basis_indices,
    }
}

/// `P_{Δ,r}`: mirror of [`minimal_poly_left`], growing by `(z − vβv⁻¹)·P`
/// with `v = P^{e_r}(β)`.
pub fn minimal_poly_right<R: DivisionRing>(nodes: &[R]) -> MinimalPolyResult<R> {
    let mut poly = SkewPoly::one();
    let mut basis_indices = Vec::new();
    for (idx, b) in nodes.iter().enumerate() {
        let v = poly.eval_right(b);
        if v.is_zero() {
            continue;
        }
        let shifted = v.mul(b).mul(&inv_nonzero(&v));
        poly = SkewPoly::linear(&shifted).mul(&poly);
        basis_indices.push(idx);
    }
    MinimalPolyResult {
        poly,
        basis_indices,
    }
}

pub fn minimal_poly<R: DivisionRing>(nodes: &[R], side: Side) -> MinimalPolyResult<R> {
    match side {
        Side::Left => minimal_poly_left(nodes),
        Side::Right => minimal_poly_right(nodes),
    }
}

/// Minimal polynomial of the nodes with position `skip` removed.
pub fn minimal_poly_without<R: DivisionRing>(nodes: &[R], skip: usize, side: Side) -> SkewPoly<R> {
    let rest: Vec<R> = nodes
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, a)| a.clone())
        .collect();
    minimal_poly(&rest, side).poly
}

/// The first node `β` at which `P_{Δ∖{β}}` vanishes (on the given side), if any.
pub fn first_dependent<R: DivisionRing>(nodes: &[R], side: Side) -> Option<usize> {
    (0..nodes.len()).find(|&i| {
        minimal_poly_without(nodes, i, side)
            .eval(&nodes[i], side)
            .is_zero()
    })
}

/// Left P-independence: `P_{Δ∖{β},ℓ}^{eℓ}(β) ≠ 0` for every `β ∈ Δ`.
pub fn is_p_independent_left<R: DivisionRing>(nodes: &[R]) -> bool {
    first_dependent(nodes, Side::Left).is_none()
}

pub fn is_p_independent_right<R: DivisionRing>(nodes: &[R]) -> bool {
    first_dependent(nodes, Side::Right).is_none()
}

pub fn is_p_independent<R: DivisionRing>(nodes: &[R], side: Side) -> bool {
    first_dependent(nodes, side).is_none()
}

/// Errors with the first redundant node when the set is not independent.
pub(crate) fn require_independent<R: DivisionRing>(nodes: &[R], side: Side) -> Result<()> {
    match first_dependent(nodes, side) {
        Some(index) => Err(Error::Dependent { side, index }),
        None => Ok(()),
    }
}

pub fn in_left_zero_set<R: DivisionRing>(f: &SkewPoly<R>, a: &R) -> bool {
    f.eval_left(a).is_zero()
}

pub fn in_right_zero_set<R: DivisionRing>(f: &SkewPoly<R>, a: &R) -> bool {
    f.eval_right(a).is_zero()
}

/// Least right common multiple: monic generator of `f·F[z] ∩ g·F[z]`.
pub fn lrcm<R: DivisionRing>(f: &SkewPoly<R>, g: &SkewPoly<R>) -> Result<SkewPoly<R>> {
    common_multiple(f, g, Side::Left)
}

/// Least left common multiple: monic generator of `F[z]·f ∩ F[z]·g`.
pub fn llcm<R: DivisionRing>(f: &SkewPoly<R>, g: &SkewPoly<R>) -> Result<SkewPoly<R>> {
    common_multiple(f, g, Side::Right)
}

/// Searches degrees `m = max(deg f, deg g), …, deg f + deg g` for nonzero
/// `a, b` with `f·a = g·b` (or `a·f = b·g` when `factor_side` is right) by
/// exact nullspace computation in center coordinates. The first hit has
/// minimal degree.
fn common_multiple<R: DivisionRing>(
    f: &SkewPoly<R>,
    g: &SkewPoly<R>,
    factor_side: Side,
) -> Result<SkewPoly<R>> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    let d = R::DIM;
    for m in df.max(dg)..=df + dg {
        let (na, nb) = (m - df + 1, m - dg + 1);
        let mut sys = Matrix::zeros(d * (m + 1), d * (na + nb));
        let mut place = |poly: &SkewPoly<R>, count: usize, col0: usize, sign: bool| {
            for s in 0..count {
                for (t, c) in poly.coeffs().iter().enumerate() {
                    let c = if sign { c.neg() } else { c.clone() };
                    let block = match factor_side {
                        Side::Left => c.left_matrix(),
                        Side::Right => c.right_matrix(),
                    };
                    sys.add_block(d * (s + t), col0 + d * s, &block);
                }
            }
        };
        place(f, na, 0, false);
        place(g, nb, d * na, true);
        if let Some(v) = sys.nullspace().into_iter().next() {
            let a = SkewPoly::new(v[..d * na].chunks(d).map(R::from_coords).collect());
            let multiple = match factor_side {
                Side::Left => f.mul(&a).monic_right(),
                Side::Right => a.mul(f).monic_left(),
            };
            return Ok(multiple);
        }
    }
    unreachable!("f·g-type products always give a common multiple of degree deg f + deg g")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;

    type P = SkewPoly<Quaternion>;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn rho(s: &str) -> P {
        P::linear(&q(s))
    }

    #[test]
    fn lrcm_of_two_linear_factors() {
        let m = lrcm(&rho("i"), &rho("j")).unwrap();
        assert_eq!(m, "z^2 + 1".parse().unwrap());
        let m = llcm(&rho("i"), &rho("j")).unwrap();
        assert_eq!(m, "z^2 + 1".parse().unwrap());
        assert_eq!(lrcm(&rho("1+i"), &rho("1+i")).unwrap(), rho("1+i"));

        let m = lrcm(&rho("i"), &rho("1+j")).unwrap();
        assert_eq!(m.degree(), Some(2));
        assert!(m.is_monic());
        assert!(in_left_zero_set(&m, &q("i")));
        assert!(in_left_zero_set(&m, &q("1+j")));
        assert_eq!(m, minimal_poly_left(&[q("i"), q("1+j")]).poly);
        assert!(lrcm(&P::zero(), &rho("i")).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let r = minimal_poly_left(&[q("i"), q("j")]);
        assert_eq!(r.poly, "z^2 + 1".parse().unwrap());
        assert_eq!(r.basis_indices, vec![0, 1]);

        let r = minimal_poly_left(&[q("i"), q("j"), q("k")]);
        assert_eq!(r.poly, "z^2 + 1".parse().unwrap());
        assert_eq!(r.basis_indices, vec![0, 1]);

        let r = minimal_poly_right(&[q("2")]);
        assert_eq!(r.poly, rho("2"));
        assert_eq!(r.basis_indices, vec![0]);

        let r = minimal_poly_left::<Quaternion>(&[]);
        assert_eq!(r.poly, P::one());
    }

    #[test]
    fn independence() {
        assert!(is_p_independent_left(&[q("i"), q("j")]));
        assert!(!is_p_independent_left(&[q("i"), q("j"), q("k")]));
        assert!(!is_p_independent_right(&[q("i"), q("j"), q("k")]));
        assert!(is_p_independent_left::<Quaternion>(&[]));
        assert!(is_p_independent_right(&[q("3-k")]));
        assert_eq!(
            first_dependent(&[q("i"), q("j"), q("k")], Side::Left),
            Some(0)
        );
    }

    #[test]
    fn zero_sets() {
        let f: P = "z^2 + 1".parse().unwrap();
        assert!(in_left_zero_set(&f, &Quaternion::k()));
        assert!(!in_left_zero_set(&rho("i"), &Quaternion::j()));
        let nodes = [q("1+i"), q("1+j"), q("2-k"), q("3")];
        let m = minimal_poly_left(&nodes).poly;
        assert!(nodes.iter().all(|a| in_left_zero_set(&m, a)));
        let m = minimal_poly_right(&nodes).poly;
        assert!(nodes.iter().all(|a| in_right_zero_set(&m, a)));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        assert_eq!(
            NodeSet::new(vec![q("i"), q("j"), q("i")], Side::Right),
            Err(Error::DuplicateNode {
                side: Side::Right,
                index: 2
            })
        );
    }
}
