//! Seeded random instances for the property and acceptance suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Side;
use crate::ideal::is_p_independent;
use crate::poly::SkewPoly;
use crate::scalar::{ratio, DivisionRing, Quaternion, Rational};
use crate::two_sided::TwoSidedProblem;

pub const SEED_ENV: &str = "SKEWLAGRANGE_SEED";
pub const DEFAULT_SEED: u64 = 20240611;

/// The seed from `SKEWLAGRANGE_SEED`, or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Elements drawn with numerators and denominators bounded by the height.
pub trait Sample: DivisionRing {
    fn sample(g: &mut Generator) -> Self;
}

impl Sample for Rational {
    fn sample(g: &mut Generator) -> Self {
        g.rational()
    }
}

impl Sample for Quaternion {
    fn sample(g: &mut Generator) -> Self {
        Quaternion::new(g.rational(), g.rational(), g.rational(), g.rational())
    }
}

pub struct Generator {
    rng: ChaCha8Rng,
    height: i64,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Self::with_height(seed, 10)
    }

    pub fn with_height(seed: u64, height: i64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height: height.max(1),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n.max(1))
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    /// Mostly small integers, sometimes a proper fraction, sometimes zero.
    pub fn rational(&mut self) -> Rational {
        let h = self.height;
        match self.rng.random_range(0..8) {
            0 => ratio(0, 1),
            1 | 2 => ratio(self.rng.random_range(-h..=h), self.rng.random_range(1..=h)),
            _ => ratio(self.rng.random_range(-h..=h), 1),
        }
    }

    pub fn element<R: Sample>(&mut self) -> R {
        R::sample(self)
    }

    pub fn nonzero<R: Sample>(&mut self) -> R {
        loop {
            let x = R::sample(self);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A value that is zero a fifth of the time.
    pub fn target<R: Sample>(&mut self) -> R {
        if self.chance(0.2) {
            R::zero()
        } else {
            self.element()
        }
    }

    pub fn poly<R: Sample>(&mut self, max_degree: usize) -> SkewPoly<R> {
        let n = self.below(max_degree + 1) + 1;
        SkewPoly::new((0..n).map(|_| self.element()).collect())
    }

    pub fn nonzero_poly<R: Sample>(&mut self, max_degree: usize) -> SkewPoly<R> {
        loop {
            let f = self.poly(max_degree);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// `h·a·h⁻¹` for random nonzero `h`.
    pub fn conjugate_of<R: Sample>(&mut self, a: &R) -> R {
        let h: R = self.nonzero();
        h.mul(a).mul(&h.inv().expect("nonzero"))
    }

    /// `(α, hαh⁻¹)`.
    pub fn conjugate_pair<R: Sample>(&mut self) -> (R, R) {
        let a: R = self.element();
        let b = self.conjugate_of(&a);
        (a, b)
    }

    /// A noncentral element with small trace and norm, so that independent
    /// draws land in the same class often enough to matter.
    pub fn clustered<R: Sample>(&mut self) -> R {
        let pool = [
            "i", "j", "k", "1+i", "1+j", "1-k", "i+j", "2+i-k", "i+j+k", "3",
        ];
        let base: R = match R::DIM {
            4 => R::from_coords(
                &pool[self.below(pool.len())]
                    .parse::<Quaternion>()
                    .expect("valid literal")
                    .coords(),
            ),
            _ => self.element(),
        };
        if self.chance(0.5) {
            self.conjugate_of(&base)
        } else {
            base
        }
    }

    /// `n` distinct P-independent nodes on `side`, built by rejection;
    /// roughly half are drawn from a few fixed classes.
    pub fn independent_set<R: Sample>(&mut self, n: usize, side: Side) -> Vec<R> {
        let mut nodes: Vec<R> = Vec::with_capacity(n);
        while nodes.len() < n {
            let candidate: R = if self.chance(0.5) {
                self.clustered()
            } else {
                self.element()
            };
            if nodes.contains(&candidate) {
                continue;
            }
            nodes.push(candidate);
            if !is_p_independent(&nodes, side) {
                nodes.pop();
            }
        }
        nodes
    }

    /// Independent left and right node sets with random targets.
    pub fn two_sided_problem<R: Sample>(&mut self, n: usize, k: usize) -> TwoSidedProblem<R> {
        let lambda: Vec<R> = self.independent_set(n, Side::Left);
        let omega: Vec<R> = self.independent_set(k, Side::Right);
        let left = lambda.into_iter().map(|a| (a, self.target())).collect();
        let right = omega.into_iter().map(|b| (b, self.target())).collect();
        TwoSidedProblem::new(left, right).expect("distinct nodes")
    }

    /// Like [`Self::two_sided_problem`], with targets read off a random
    /// polynomial so that the problem is solvable.
    pub fn solvable_two_sided_problem<R: Sample>(&mut self, n: usize, k: usize) -> TwoSidedProblem<R> {
        let f: SkewPoly<R> = self.poly(n + k + 1);
        let lambda: Vec<R> = self.independent_set(n, Side::Left);
        let omega: Vec<R> = self.independent_set(k, Side::Right);
        let left = lambda.into_iter().map(|a| (a.clone(), f.eval_left(&a))).collect();
        let right = omega.into_iter().map(|b| (b.clone(), f.eval_right(&b))).collect();
        TwoSidedProblem::new(left, right).expect("distinct nodes")
    }

    /// `n` distinct nodes, any dependence allowed.
    pub fn node_list<R: Sample>(&mut self, n: usize) -> Vec<R> {
        let mut nodes: Vec<R> = Vec::with_capacity(n);
        while nodes.len() < n {
            let candidate: R = if self.chance(0.6) {
                self.clustered()
            } else {
                self.element()
            };
            if !nodes.contains(&candidate) {
                nodes.push(candidate);
            }
        }
        nodes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::is_p_independent_left;

    #[test]
    fn deterministic() {
        let a: Vec<Quaternion> = {
            let mut g = Generator::new(7);
            (0..20).map(|_| g.element()).collect()
        };
        let mut g = Generator::new(7);
        let b: Vec<Quaternion> = (0..20).map(|_| g.element()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn generators_meet_their_contracts() {
        let mut g = Generator::new(3);
        for _ in 0..50 {
            let (a, b): (Quaternion, Quaternion) = g.conjugate_pair();
            assert!(a.is_conjugate(&b));
            let nodes: Vec<Quaternion> = g.independent_set(4, Side::Left);
            assert!(is_p_independent_left(&nodes));
        }
    }
}
