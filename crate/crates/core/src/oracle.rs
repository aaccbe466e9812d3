//! Brute-force verification by exact rational linear algebra.
//!
//! Every ring-linear condition on an unknown polynomial or scalar is expanded
//! into center coordinates (each unknown becomes `DIM` rational unknowns, each
//! equation `DIM` rational equations) and solved by row reduction. Nothing
//! here uses the closed-form machinery of the other modules.

use crate::linalg::Matrix;
use crate::poly::SkewPoly;
use crate::scalar::{DivisionRing, Rational};

/// `A·x = b` over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Matrix,
    pub rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(cols: usize) -> Self {
        LinearSystem {
            matrix: Matrix::zeros(0, cols),
            rhs: Vec::new(),
        }
    }

    /// Appends the block equation `Σ blocks[t]·x_t = value` where `x_t` is the
    /// `t`-th group of `DIM` unknowns.
    pub fn push<R: DivisionRing>(&mut self, blocks: &[(usize, Matrix)], value: &R) {
        let d = R::DIM;
        let mut rows = Matrix::zeros(d, self.matrix.cols());
        for (t, block) in blocks {
            rows.add_block(0, d * t, block);
        }
        self.matrix = self.matrix.vstack(&rows);
        self.rhs.extend(value.coords());
    }

    pub fn solve(&self) -> AffineSolutionSet {
        match self.matrix.solve(&self.rhs) {
            Some((p, null)) => AffineSolutionSet {
                particular: Some(p),
                nullspace_basis: null,
            },
            None => AffineSolutionSet {
                particular: None,
                nullspace_basis: self.matrix.nullspace(),
            },
        }
    }
}

/// `particular + span(nullspace_basis)`, or the empty set when `particular`
/// is absent (the basis then describes the homogeneous system).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub particular: Option<Vec<Rational>>,
    pub nullspace_basis: Vec<Vec<Rational>>,
}

impl AffineSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Dimension over ℚ; `None` for the empty set.
    pub fn dimension(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.nullspace_basis.len())
    }

    /// Whether `v − particular` lies in the span of the basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        let diff: Vec<Rational> = v.iter().zip(p).map(|(a, b)| a - b).collect();
        in_span(&self.nullspace_basis, &diff)
    }

    /// Whether `v` lies in the span of the basis (a homogeneous solution).
    pub fn contains_direction(&self, v: &[Rational]) -> bool {
        in_span(&self.nullspace_basis, v)
    }
}

pub(crate) fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(num_traits::Zero::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    Matrix::from_columns(basis).solve(v).is_some()
}

/// `Σ_t v_t·(L_{α_t} f)^{e_r}(β) = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftCondition<R> {
    pub terms: Vec<(R, R)>,
    pub beta: R,
    pub value: R,
}

/// Coefficient coordinates of a polynomial, padded to `len` coefficients.
pub fn encode_poly<R: DivisionRing>(f: &SkewPoly<R>, len: usize) -> Vec<Rational> {
    (0..len).flat_map(|j| f.coeff(j).coords()).collect()
}

pub fn decode_poly<R: DivisionRing>(v: &[Rational]) -> SkewPoly<R> {
    SkewPoly::new(v.chunks(R::DIM).map(R::from_coords).collect())
}

pub fn decode_scalar<R: DivisionRing>(v: &[Rational]) -> R {
    R::from_coords(v)
}

/// All `f` with `deg f < degree_bound` meeting the left, right and shift
/// conditions.
pub fn oracle_interpolate<R: DivisionRing>(
    left: &[(R, R)],
    right: &[(R, R)],
    shifts: &[ShiftCondition<R>],
    degree_bound: usize,
) -> AffineSolutionSet {
    let mut sys = LinearSystem::new(R::DIM * degree_bound);
    for (a, c) in left {
        let blocks: Vec<_> = (0..degree_bound)
            .map(|j| (j, a.pow(j).left_matrix()))
            .collect();
        sys.push(&blocks, c);
    }
    for (b, d) in right {
        let blocks: Vec<_> = (0..degree_bound)
            .map(|j| (j, b.pow(j).right_matrix()))
            .collect();
        sys.push(&blocks, d);
    }
    for s in shifts {
        // coefficient f_m enters (L_α f)^{e_r}(β) as Σ_{i+j=m−1} αⁱ f_m βʲ
        let blocks: Vec<_> = (1..degree_bound)
            .map(|m| {
                let mut acc = Matrix::zeros(R::DIM, R::DIM);
                for (weight, alpha) in &s.terms {
                    for i in 0..m {
                        let lhs = weight.mul(&alpha.pow(i)).left_matrix();
                        acc = acc.add(&lhs.mul(&s.beta.pow(m - 1 - i).right_matrix()));
                    }
                }
                (m, acc)
            })
            .collect();
        sys.push(&blocks, &s.value);
    }
    sys.solve()
}

/// All `x` with `a·x − x·b = g`.
pub fn oracle_sylvester<R: DivisionRing>(a: &R, b: &R, g: &R) -> AffineSolutionSet {
    let mut sys = LinearSystem::new(R::DIM);
    sys.push(&[(0, a.left_matrix().sub(&b.right_matrix()))], g);
    sys.solve()
}

/// Rank over `F` of the evaluation map `P_N → F^N`, `f ↦ (f(δ₁),…,f(δ_N))`,
/// on the given side; equals the degree of the minimal polynomial.
pub fn oracle_vandermonde_rank<R: DivisionRing>(nodes: &[R], side: crate::Side) -> usize {
    let n = nodes.len();
    let mut m = Matrix::zeros(R::DIM * n, R::DIM * n);
    for (i, a) in nodes.iter().enumerate() {
        for j in 0..n {
            let block = match side {
                crate::Side::Left => a.pow(j).left_matrix(),
                crate::Side::Right => a.pow(j).right_matrix(),
            };
            m.set_block(R::DIM * i, R::DIM * j, &block);
        }
    }
    m.rank() / R::DIM
}

/// Whether `f = left·h·right` for some `h`, by solving for the coefficients
/// of `h`.
pub fn oracle_in_two_sided_ideal<R: DivisionRing>(
    f: &SkewPoly<R>,
    left: &SkewPoly<R>,
    right: &SkewPoly<R>,
) -> bool {
    let (Some(dl), Some(dr)) = (left.degree(), right.degree()) else {
        return f.is_zero();
    };
    let Some(df) = f.degree() else {
        return true;
    };
    if df < dl + dr {
        return false;
    }
    let nh = df - dl - dr + 1;
    let d = R::DIM;
    let mut sys = LinearSystem::new(d * nh);
    // coefficient t of left·(z^s h_s)·right is Σ_{a+b=t−s} left_a h_s right_b
    for t in 0..=df {
        let blocks: Vec<_> = (0..nh)
            .filter(|&s| s <= t)
            .map(|s| {
                let mut acc = Matrix::zeros(d, d);
                for (a, la) in left.coeffs().iter().enumerate() {
                    if a + s > t || t - s - a > dr {
                        continue;
                    }
                    let rb = right.coeff(t - s - a);
                    acc = acc.add(&la.left_matrix().mul(&rb.right_matrix()));
                }
                (s, acc)
            })
            .collect();
        sys.push(&blocks, &f.coeff(t));
    }
    !sys.solve().is_empty()
}
