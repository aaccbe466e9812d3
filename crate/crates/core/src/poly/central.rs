use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::SkewPoly;
use crate::scalar::{rat, Rational};

/// A polynomial over the center ℚ. Left and right values agree on it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CentralPoly {
    coeffs: Vec<Rational>,
}

impl CentralPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CentralPoly { coeffs }
    }

    pub fn zero() -> Self {
        CentralPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![<Rational as One>::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(<Rational as Zero>::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn to_skew<R: crate::scalar::DivisionRing>(&self) -> SkewPoly<R> {
        SkewPoly::new(self.coeffs.iter().cloned().map(R::from_rational).collect())
    }

    pub fn eval<R: crate::scalar::DivisionRing>(&self, a: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| {
            acc.mul(a).add(&R::from_rational(c.clone()))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![<Rational as Zero>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![<Rational as Zero>::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let t = &rem[top] * &lc_inv;
            if !t.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[top - dd + j] -= &t * c;
                }
                quot[top - dd] = t;
            }
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self, order: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..order {
            out = Self::new(
                out.coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, c)| c * rat(j as i64))
                    .collect(),
            );
        }
        out
    }
}

/// Descending powers: `z^2 - 2 z + 2`.
impl fmt::Display for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(&var)?,
                (_, false) => write!(f, "{mag} {var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CentralPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclid() {
        // (z^2+1)(z-1) and (z^2+1)(z+2)
        let a = CentralPoly::from_ints(&[1, 0, 1]).mul(&CentralPoly::from_ints(&[-1, 1]));
        let b = CentralPoly::from_ints(&[1, 0, 1]).mul(&CentralPoly::from_ints(&[2, 1]));
        assert_eq!(a.gcd(&b), CentralPoly::from_ints(&[1, 0, 1]));
        assert_eq!(
            CentralPoly::zero().gcd(&CentralPoly::zero()),
            CentralPoly::zero()
        );
        let (q, r) = a.div_rem(&CentralPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(q, CentralPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(
            CentralPoly::from_ints(&[2, -2, 1]).to_string(),
            "z^2 - 2 z + 2"
        );
        assert_eq!(CentralPoly::from_ints(&[-3, 1]).to_string(), "z - 3");
        assert_eq!(CentralPoly::from_ints(&[0, 0, -1]).to_string(), "-z^2");
        assert_eq!(CentralPoly::zero().to_string(), "0");
    }
}
