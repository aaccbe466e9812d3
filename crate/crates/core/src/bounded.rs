//! Central divisors and multiples, the λ-transforms, and interpolation
//! across conjugacy classes shared by the left and right nodes.

use crate::error::{Error, Result, Side};
use crate::ideal::{minimal_poly, require_independent};
use crate::linalg::Matrix;
use crate::poly::{CentralPoly, SkewPoly};
use crate::scalar::{inv_nonzero, ConjugacyClassData, DivisionRing};
use crate::two_sided::{
    lagrange_two_sided_pieces, solve_two_sided, Frame, TwoSidedFamily, TwoSidedOutcome,
    TwoSidedProblem,
};

/// `g = 𝔇·𝔔`, `𝔐 = g·g◇ = g◇·g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedDecomposition<R: DivisionRing> {
    /// Greatest monic central divisor.
    pub d: CentralPoly,
    pub q: SkewPoly<R>,
    /// Least monic central multiple.
    pub m: CentralPoly,
    pub diamond: SkewPoly<R>,
}

/// The coordinate polynomials of `g` along the basis of the ring.
pub fn component_polynomials<R: DivisionRing>(g: &SkewPoly<R>) -> Vec<CentralPoly> {
    let coords: Vec<Vec<_>> = g.coeffs().iter().map(DivisionRing::coords).collect();
    (0..R::DIM)
        .map(|t| CentralPoly::new(coords.iter().map(|c| c[t].clone()).collect()))
        .collect()
}

/// Monic gcd of the component polynomials.
pub fn greatest_central_divisor<R: DivisionRing>(g: &SkewPoly<R>) -> Result<CentralPoly> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(component_polynomials(g)
        .iter()
        .fold(CentralPoly::zero(), |acc, c| acc.gcd(c)))
}

/// Smallest-degree nonzero `h` with `g·h` central, returned as
/// `(𝔐_g, g◇)` after normalizing `g·h` to be monic.
pub fn least_central_multiple<R: DivisionRing>(g: &SkewPoly<R>) -> Result<(CentralPoly, SkewPoly<R>)> {
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    let constraints = R::central_constraints();
    let cr = constraints.rows();
    let d = R::DIM;
    // g·conj(g) is central, so some m ≤ deg g succeeds
    for m in 0..=(dg * (d - 1)).max(dg) {
        let mut sys = Matrix::zeros(cr * (dg + m + 1), d * (m + 1));
        for t in 0..=dg + m {
            for s in 0..=m.min(t) {
                if t - s > dg {
                    continue;
                }
                let block = constraints.mul(&g.coeff(t - s).left_matrix());
                sys.add_block(cr * t, d * s, &block);
            }
        }
        if let Some(v) = sys.nullspace().into_iter().next() {
            let h: SkewPoly<R> = SkewPoly::new(v.chunks(d).map(R::from_coords).collect());
            let gh = g.mul(&h).to_central().expect("central by construction");
            let lc = gh.leading().expect("nonzero").clone();
            return Ok((gh.monic(), h.scale_rational(&lc.recip())));
        }
    }
    Err(Error::Unbounded(dg))
}

pub fn bounded_decompose<R: DivisionRing>(g: &SkewPoly<R>) -> Result<BoundedDecomposition<R>> {
    let d = greatest_central_divisor(g)?;
    let (q, rem) = g.divide_right(&d.to_skew())?;
    debug_assert!(rem.is_zero());
    let (m, diamond) = least_central_multiple(g)?;
    Ok(BoundedDecomposition { d, q, m, diamond })
}

/// `𝔇_g = 𝔐_g / 𝔐_{g◇}`, computed from central multiples only.
pub fn greatest_central_divisor_via_multiples<R: DivisionRing>(g: &SkewPoly<R>) -> Result<CentralPoly> {
    let (m, diamond) = least_central_multiple(g)?;
    let (m_diamond, _) = least_central_multiple(&diamond)?;
    let (quot, rem) = m.div_rem(&m_diamond)?;
    debug_assert!(rem.is_zero());
    Ok(quot)
}

/// `(h·δ)^{e_r}(β)`.
pub fn lambda_right<R: DivisionRing>(h: &SkewPoly<R>, delta: &R, b: &R) -> R {
    h.scale_right(delta).eval_right(b)
}

/// `(δ·h)^{eℓ}(β)`.
pub fn lambda_left<R: DivisionRing>(h: &SkewPoly<R>, delta: &R, b: &R) -> R {
    h.scale_left(delta).eval_left(b)
}

fn bound_at<R: DivisionRing>(h: &SkewPoly<R>, b: &R) -> Result<(SkewPoly<R>, R)> {
    let (m, diamond) = least_central_multiple(h)?;
    let mb = m.eval(b);
    if mb.is_zero() {
        return Err(Error::Hypothesis(format!("the bound of h vanishes at {b}")));
    }
    Ok((diamond, mb))
}

/// The `δ` with `(h·δ)^{e_r}(β) = d`: `(h◇·d)^{e_r}(β)·𝔐_h(β)⁻¹`.
pub fn lambda_inverse_right<R: DivisionRing>(h: &SkewPoly<R>, d: &R, b: &R) -> Result<R> {
    let (diamond, mb) = bound_at(h, b)?;
    Ok(diamond.scale_right(d).eval_right(b).mul(&inv_nonzero(&mb)))
}

/// The `δ` with `(δ·h)^{eℓ}(β) = d`: `𝔐_h(β)⁻¹·(d·h◇)^{eℓ}(β)`.
pub fn lambda_inverse_left<R: DivisionRing>(h: &SkewPoly<R>, d: &R, b: &R) -> Result<R> {
    let (diamond, mb) = bound_at(h, b)?;
    Ok(inv_nonzero(&mb).mul(&diamond.scale_left(d).eval_left(b)))
}

/// `ρᵢ` (for `side = Left`, `index` into Λ) or `γⱼ` (`side = Right`, into Ω)
/// such that `P_{Λ∖{αᵢ},ℓ}·ρᵢ·P_{Ω,r}` takes the value `target` at `αᵢ`
/// (resp. `P_{Λ,ℓ}·γⱼ·P_{Ω∖{βⱼ},r}` at `βⱼ`). The node must lie outside
/// every class met by the other side.
pub fn elementary_coefficient<R: DivisionRing>(
    lambda: &[R],
    omega: &[R],
    side: Side,
    index: usize,
    target: &R,
) -> Result<R> {
    let (node, others) = match side {
        Side::Left => (lambda.get(index), omega),
        Side::Right => (omega.get(index), lambda),
    };
    let node = node.ok_or(Error::LengthMismatch {
        expected: index + 1,
        actual: match side {
            Side::Left => lambda.len(),
            Side::Right => omega.len(),
        },
    })?;
    if others.iter().any(|o| o.is_conjugate(node)) {
        return Err(Error::Hypothesis(format!(
            "{node} is conjugate to a node on the other side"
        )));
    }
    if target.is_zero() {
        return Ok(R::zero());
    }
    let f = Frame::new(lambda.to_vec(), omega.to_vec())?;
    Ok(match side {
        Side::Left => {
            let (diamond, mb) = bound_at(&f.p_omega, node)?;
            f.p_inv[index]
                .mul(&inv_nonzero(&mb))
                .mul(&diamond.scale_left(target).eval_left(node))
        }
        Side::Right => {
            let (diamond, mb) = bound_at(&f.p_lambda, node)?;
            diamond
                .scale_right(target)
                .eval_right(node)
                .mul(&inv_nonzero(&mb))
                .mul(&f.q_inv[index])
        }
    })
}

/// Indices of one conjugacy class met by both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedClass {
    pub class: ConjugacyClassData,
    pub lambda: Vec<usize>,
    pub omega: Vec<usize>,
}

/// `Λ = Λ₀ ∪ ⋃Λₛ`, `Ω = Ω₀ ∪ ⋃Ωₛ`; shared classes in (trace, norm) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub lambda0: Vec<usize>,
    pub omega0: Vec<usize>,
    pub shared: Vec<SharedClass>,
}

pub fn class_partition<R: DivisionRing>(lambda: &[R], omega: &[R]) -> ClassPartition {
    let mut shared: Vec<SharedClass> = Vec::new();
    let mut lambda0 = Vec::new();
    for (i, a) in lambda.iter().enumerate() {
        if !omega.iter().any(|b| b.is_conjugate(a)) {
            lambda0.push(i);
            continue;
        }
        let class = a.class_data();
        match shared.iter_mut().find(|s| s.class == class) {
            Some(s) => s.lambda.push(i),
            None => shared.push(SharedClass {
                class,
                lambda: vec![i],
                omega: Vec::new(),
            }),
        }
    }
    let mut omega0 = Vec::new();
    for (j, b) in omega.iter().enumerate() {
        let class = b.class_data();
        match shared.iter_mut().find(|s| s.class == class) {
            Some(s) => s.omega.push(j),
            None => omega0.push(j),
        }
    }
    shared.sort_by(|x, y| x.class.cmp(&y.class));
    ClassPartition {
        lambda0,
        omega0,
        shared,
    }
}

/// A within-class problem at modified nodes with modified targets, and the
/// outer factors that lift its solutions back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedClass<R: DivisionRing> {
    pub problem: TwoSidedProblem<R>,
    /// `P_{Λ∖Λₛ,ℓ}`.
    pub outer_left: SkewPoly<R>,
    /// `P_{Ω∖Ωₛ,r}`.
    pub outer_right: SkewPoly<R>,
}

impl<R: DivisionRing> ReducedClass<R> {
    /// `P_{Λ∖Λₛ,ℓ}·g·P_{Ω∖Ωₛ,r}`.
    pub fn lift(&self, g: &SkewPoly<R>) -> SkewPoly<R> {
        self.outer_left.mul(g).mul(&self.outer_right)
    }
}

fn complement<R: DivisionRing>(nodes: &[R], skip: &[usize]) -> Vec<R> {
    nodes
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, x)| x.clone())
        .collect()
}

/// Replaces the conditions of `p` inside the shared class `class` by
/// conditions on `g` such that `P_{Λ∖Λₛ,ℓ}·g·P_{Ω∖Ωₛ,r}` meets the originals:
/// nodes `α̃ = u⁻¹αu` (`u = P_{Λ∖Λₛ,ℓ}^{eℓ}(α)`), `β̃ = wβw⁻¹`
/// (`w = P_{Ω∖Ωₛ,r}^{e_r}(β)`) and targets
/// `ρ = u⁻¹·𝔐_{P_{Ω∖Ωₛ}}(α)⁻¹·(c·P_{Ω∖Ωₛ}◇)^{eℓ}(α)`,
/// `γ = (P_{Λ∖Λₛ}◇·d)^{e_r}(β)·𝔐_{P_{Λ∖Λₛ}}(β)⁻¹·w⁻¹`.
pub fn class_reduce<R: DivisionRing>(p: &TwoSidedProblem<R>, class: &SharedClass) -> Result<ReducedClass<R>> {
    let in_class = |x: &R| x.class_data() == class.class;
    if !class.lambda.iter().all(|&i| p.left().get(i).is_some_and(|(a, _)| in_class(a)))
        || !class.omega.iter().all(|&j| p.right().get(j).is_some_and(|(b, _)| in_class(b)))
    {
        return Err(Error::NotInClass);
    }
    let outer_left = minimal_poly(&complement(&p.left_nodes(), &class.lambda), Side::Left).poly;
    let outer_right = minimal_poly(&complement(&p.right_nodes(), &class.omega), Side::Right).poly;
    let (m_left, diamond_left) = least_central_multiple(&outer_left)?;
    let (m_right, diamond_right) = least_central_multiple(&outer_right)?;
    let vanishes = |m: &CentralPoly, x: &R| m.eval(x).is_zero();

    let mut left = Vec::with_capacity(class.lambda.len());
    for &i in &class.lambda {
        let (a, c) = &p.left()[i];
        let u = outer_left.eval_left(a);
        if u.is_zero() || vanishes(&m_right, a) {
            return Err(Error::Hypothesis(format!(
                "outer minimal polynomials vanish at {a}"
            )));
        }
        let u_inv = inv_nonzero(&u);
        let rho = if c.is_zero() {
            R::zero()
        } else {
            u_inv
                .mul(&inv_nonzero(&m_right.eval(a)))
                .mul(&diamond_right.scale_left(c).eval_left(a))
        };
        left.push((u_inv.mul(a).mul(&u), rho));
    }
    let mut right = Vec::with_capacity(class.omega.len());
    for &j in &class.omega {
        let (b, d) = &p.right()[j];
        let w = outer_right.eval_right(b);
        if w.is_zero() || vanishes(&m_left, b) {
            return Err(Error::Hypothesis(format!(
                "outer minimal polynomials vanish at {b}"
            )));
        }
        let w_inv = inv_nonzero(&w);
        let gamma = if d.is_zero() {
            R::zero()
        } else {
            diamond_left
                .scale_right(d)
                .eval_right(b)
                .mul(&inv_nonzero(&m_left.eval(b)))
                .mul(&w_inv)
        };
        right.push((w.mul(b).mul(&w_inv), gamma));
    }
    Ok(ReducedClass {
        problem: TwoSidedProblem::new(left, right)?,
        outer_left,
        outer_right,
    })
}

/// `Σ_{Λ₀} f_{ℓ,i} + Σ_{Ω₀} f_{r,j} + Σₛ P_{Λ∖Λₛ,ℓ}·gₛ·P_{Ω∖Ωₛ,r}` with each
/// `gₛ` the base solution of the reduced problem of class `s`. The family's
/// homogeneous basis is the union of the lifted reduced ones. A class whose
/// reduced problem is unsolvable is reported by the offending pair, mapped
/// back to indices of `p`.
pub fn generalized_lagrange<R: DivisionRing>(p: &TwoSidedProblem<R>) -> Result<TwoSidedOutcome<R>> {
    let lambda = p.left_nodes();
    let omega = p.right_nodes();
    require_independent(&lambda, Side::Left)?;
    require_independent(&omega, Side::Right)?;
    let partition = class_partition(&lambda, &omega);

    let mut f = SkewPoly::zero();
    for &i in &partition.lambda0 {
        let rho = elementary_coefficient(&lambda, &omega, Side::Left, i, &p.left()[i].1)?;
        let pi = crate::ideal::minimal_poly_without(&lambda, i, Side::Left);
        let p_omega = minimal_poly(&omega, Side::Right).poly;
        f = f.add(&pi.scale_right(&rho).mul(&p_omega));
    }
    for &j in &partition.omega0 {
        let gamma = elementary_coefficient(&lambda, &omega, Side::Right, j, &p.right()[j].1)?;
        let qj = crate::ideal::minimal_poly_without(&omega, j, Side::Right);
        let p_lambda = minimal_poly(&lambda, Side::Left).poly;
        f = f.add(&p_lambda.scale_right(&gamma).mul(&qj));
    }
    let mut homogeneous_basis = Vec::new();
    for class in &partition.shared {
        let reduced = class_reduce(p, class)?;
        match solve_two_sided(&reduced.problem)? {
            TwoSidedOutcome::Inconsistent { left, right } => {
                return Ok(TwoSidedOutcome::Inconsistent {
                    left: class.lambda[left],
                    right: class.omega[right],
                })
            }
            TwoSidedOutcome::Family(fam) => {
                f = f.add(&reduced.lift(&fam.base));
                homogeneous_basis.extend(fam.homogeneous_basis.iter().map(|g| reduced.lift(g)));
            }
        }
    }
    Ok(TwoSidedOutcome::Family(TwoSidedFamily {
        base: f,
        homogeneous_basis,
        left_modulus: minimal_poly(&lambda, Side::Left).poly,
        right_modulus: minimal_poly(&omega, Side::Right).poly,
    }))
}

/// With no shared class this is the two-sided Lagrange polynomial; kept for
/// comparison with [`generalized_lagrange`].
pub fn disjoint_lagrange<R: DivisionRing>(p: &TwoSidedProblem<R>) -> Result<SkewPoly<R>> {
    Ok(lagrange_two_sided_pieces(p)?.sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;
    use crate::sylvester::solve_sylvester;

    type P = SkewPoly<Quaternion>;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn decompositions() {
        let g = P::linear(&q("i"));
        let b = bounded_decompose(&g).unwrap();
        assert_eq!(b.d, CentralPoly::one());
        assert_eq!(b.q, g);
        assert_eq!(b.m, CentralPoly::from_ints(&[1, 0, 1]));
        assert_eq!(b.diamond, poly("(i) + (1) z"));

        let x = CentralPoly::from_ints(&[1, 0, 1]);
        let g = P::linear(&q("i")).mul(&x.to_skew());
        let b = bounded_decompose(&g).unwrap();
        assert_eq!(b.d, x);
        assert_eq!(b.q, P::linear(&q("i")));
        assert_eq!(b.m, x.mul(&x));
        assert_eq!(greatest_central_divisor_via_multiples(&g).unwrap(), x);

        let c = CentralPoly::from_ints(&[2, -3, 1]);
        let b = bounded_decompose(&c.to_skew::<Quaternion>()).unwrap();
        assert_eq!(b.d, c);
        assert_eq!(b.q, P::one());
        assert_eq!(b.m, c);
        assert_eq!(b.diamond, P::one());

        assert_eq!(bounded_decompose(&P::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn diamond_identities() {
        let g = poly("(1+i) + (j-k) z + (2) z^2 + (i) z^3");
        let b = bounded_decompose(&g).unwrap();
        assert_eq!(g.mul(&b.diamond), b.m.to_skew());
        assert_eq!(b.diamond.mul(&g), b.m.to_skew());
        let (_, qd) = least_central_multiple(&b.q).unwrap();
        assert_eq!(qd, b.diamond);
        let (m2, dd) = least_central_multiple(&b.diamond).unwrap();
        assert_eq!(dd, b.q);
        assert_eq!(b.d.mul(&m2), b.m);
    }

    #[test]
    fn lambda_transforms() {
        let h = P::linear(&q("i"));
        let b = q("1+j");
        let d = lambda_right(&h, &q("1"), &b);
        assert_eq!(d, q("1-i+j"));
        assert_eq!(lambda_inverse_right(&h, &d, &b).unwrap(), q("1"));
        let d = lambda_left(&h, &q("2-k"), &b);
        assert_eq!(lambda_inverse_left(&h, &d, &b).unwrap(), q("2-k"));
        assert_eq!(lambda_inverse_right(&P::one(), &q("j"), &b).unwrap(), q("j"));
        assert!(lambda_inverse_right(&h, &q("1"), &q("j")).is_err());
    }

    #[test]
    fn elementary() {
        let (l, o) = (vec![q("i")], vec![q("1+j")]);
        let rho = elementary_coefficient(&l, &o, Side::Left, 0, &q("1")).unwrap();
        let piece = P::constant(rho).mul(&P::linear(&q("1+j")));
        assert_eq!(piece.eval_left(&q("i")), q("1"));
        assert_eq!(
            elementary_coefficient(&l, &o, Side::Left, 0, &q("0")).unwrap(),
            q("0")
        );
        let p = TwoSidedProblem::new(
            vec![(q("i"), q("2-k")), (q("1+j"), q("i"))],
            vec![(q("3"), q("1")), (q("2+i+k"), q("j"))],
        )
        .unwrap();
        let pieces = lagrange_two_sided_pieces(&p).unwrap();
        for i in 0..2 {
            let r = elementary_coefficient(&p.left_nodes(), &p.right_nodes(), Side::Left, i, &p.left()[i].1);
            assert_eq!(r.unwrap(), pieces.rho[i]);
            let g = elementary_coefficient(&p.left_nodes(), &p.right_nodes(), Side::Right, i, &p.right()[i].1);
            assert_eq!(g.unwrap(), pieces.gamma[i]);
        }
        assert!(elementary_coefficient(&[q("i")], &[q("j")], Side::Left, 0, &q("1")).is_err());
    }

    fn mixed_problem(d_last: Quaternion) -> TwoSidedProblem<Quaternion> {
        TwoSidedProblem::new(
            vec![(q("i"), q("1")), (q("2"), q("j")), (q("1+j"), q("k"))],
            vec![(q("j"), d_last), (q("3-k"), q("1"))],
        )
        .unwrap()
    }

    #[test]
    fn partition_and_reduction() {
        let p = mixed_problem(q("0"));
        let part = class_partition(&p.left_nodes(), &p.right_nodes());
        assert_eq!(part.lambda0, vec![1, 2]);
        assert_eq!(part.omega0, vec![1]);
        assert_eq!(part.shared.len(), 1);
        assert_eq!(part.shared[0].lambda, vec![0]);
        assert_eq!(part.shared[0].omega, vec![0]);

        let red = class_reduce(&p, &part.shared[0]).unwrap();
        let g = poly("(1-i) + (2+j) z + (k) z^2");
        let f = red.lift(&g);
        for (t, &i) in part.shared[0].lambda.iter().enumerate() {
            let (a, c) = &red.problem.left()[t];
            let fa = f.eval_left(&p.left()[i].0);
            // the lifted value is c exactly when g takes the reduced target
            assert_eq!(fa == p.left()[i].1, g.eval_left(a) == *c);
            let expected = lambda_left(
                &red.outer_right,
                &g.eval_left(a),
                a,
            );
            assert_eq!(fa, red.outer_left.eval_left(&p.left()[i].0).mul(&expected));
        }
    }

    #[test]
    fn generalized() {
        let p = mixed_problem(q("0"));
        // the original pair (i, j) with c − d = 1 is unsolvable
        assert_eq!(
            solve_sylvester(&q("i"), &q("j"), &q("1")).is_solvable(),
            false
        );
        assert_eq!(
            generalized_lagrange(&p).unwrap(),
            TwoSidedOutcome::Inconsistent { left: 0, right: 0 }
        );

        // d = 1 + (i − j)-compatible value: αψ − ψβ = c − d solvable
        let p = mixed_problem(q("1-i+j"));
        let TwoSidedOutcome::Family(fam) = generalized_lagrange(&p).unwrap() else {
            panic!()
        };
        assert!(p.is_satisfied_by(&fam.base));
        assert!(fam.base.degree().unwrap() < 5);
        assert_eq!(fam.homogeneous_basis.len(), 2);
        for h in &fam.homogeneous_basis {
            let zero = TwoSidedProblem::new(
                p.left().iter().map(|(a, _)| (a.clone(), q("0"))).collect(),
                p.right().iter().map(|(b, _)| (b.clone(), q("0"))).collect(),
            )
            .unwrap();
            assert!(zero.is_satisfied_by(h));
        }

        let disjoint = TwoSidedProblem::new(
            vec![(q("i"), q("2-k")), (q("1+j"), q("i"))],
            vec![(q("3"), q("1")), (q("2+i+k"), q("j"))],
        )
        .unwrap();
        let TwoSidedOutcome::Family(fam) = generalized_lagrange(&disjoint).unwrap() else {
            panic!()
        };
        assert_eq!(fam.base, disjoint_lagrange(&disjoint).unwrap());

        let zeros = TwoSidedProblem::new(vec![(q("i"), q("0"))], vec![(q("j"), q("0"))]).unwrap();
        let TwoSidedOutcome::Family(fam) = generalized_lagrange(&zeros).unwrap() else {
            panic!()
        };
        assert_eq!(fam.base, P::zero());
    }
}
