//! The polynomial ring `F[z]` with a central variable and coefficients written
//! on the right: `f(z) = Σ zʲ fⱼ`.

mod central;
mod text;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{inv_nonzero, DivisionRing, Rational};

pub use central::CentralPoly;

/// Dense skew polynomial, coefficients low to high, no trailing zeros.
///
/// The zero polynomial has no coefficients and `degree() == None`, which
/// orders below every `Some(d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly<R> {
    coeffs: Vec<R>,
}

impl<R: DivisionRing> SkewPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `zⁿ·c`
    pub fn monomial(c: R, n: usize) -> Self {
        let mut coeffs = vec![R::zero(); n];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `z − a`
    pub fn linear(a: &R) -> Self {
        Self::new(vec![a.neg(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> R {
        self.coeffs.get(j).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_central(&self) -> bool {
        self.coeffs.iter().all(R::is_central)
    }

    /// The same polynomial over the center, if every coefficient is central.
    pub fn to_central(&self) -> Option<CentralPoly> {
        self.is_central()
            .then(|| CentralPoly::new(self.coeffs.iter().map(|c| c.coords()[0].clone()).collect()))
    }

    pub fn map_coeffs(&self, f: impl FnMut(&R) -> R) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }

    /// `c·f`
    pub fn scale_left(&self, c: &R) -> Self {
        self.map_coeffs(|x| c.mul(x))
    }

    /// `f·c`
    pub fn scale_right(&self, c: &R) -> Self {
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map_coeffs(|x| x.scale(r))
    }

    /// `f·lc(f)⁻¹`: the monic generator of the right ideal `f·F[z]`.
    pub fn monic_right(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale_right(&inv_nonzero(lc)),
            None => Self::zero(),
        }
    }

    /// `lc(f)⁻¹·f`: the monic generator of the left ideal `F[z]·f`.
    pub fn monic_left(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale_left(&inv_nonzero(lc)),
            None => Self::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j).add(&other.coeff(j))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j).sub(&other.coeff(j))).collect())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(R::neg)
    }

    /// `(zⁱa)(zʲb) = z^{i+j}·ab`, coefficient order preserved.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Left division `f = d·q + r` with `deg r < deg d`.
    pub fn divide_left(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = inv_nonzero(d.leading().expect("nonzero divisor"));
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree().filter(|&rd| rd >= dd) {
            // d·z^{rd-dd}·t has leading coefficient lc(d)·t
            let t = lc_inv.mul(rem.leading().unwrap());
            rem = rem.sub(&d.scale_right(&t).shift_up(rd - dd));
            quot[rd - dd] = t;
        }
        Ok((Self::new(quot), rem))
    }

    /// Right division `f = q·d + r` with `deg r < deg d`.
    pub fn divide_right(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = inv_nonzero(d.leading().expect("nonzero divisor"));
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree().filter(|&rd| rd >= dd) {
            let t = rem.leading().unwrap().mul(&lc_inv);
            rem = rem.sub(&d.scale_left(&t).shift_up(rd - dd));
            quot[rd - dd] = t;
        }
        Ok((Self::new(quot), rem))
    }

    /// Multiplication by `zⁿ`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        SkewPoly { coeffs }
    }

    /// Left value `Σ aʲ fⱼ`.
    pub fn eval_left(&self, a: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| a.mul(&acc).add(c))
    }

    /// Right value `Σ fⱼ aʲ`.
    pub fn eval_right(&self, a: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(a).add(c))
    }

    pub fn eval(&self, a: &R, side: crate::Side) -> R {
        match side {
            crate::Side::Left => self.eval_left(a),
            crate::Side::Right => self.eval_right(a),
        }
    }

    /// Left backward shift `L_a f = Σⱼ (Σᵢ aⁱ f_{i+j+1}) zʲ`, the quotient in
    /// `f = f^{eℓ}(a) + (z − a)·L_a f`.
    pub fn shift_left(&self, a: &R) -> Self {
        let Some(m) = self.degree() else {
            return Self::zero();
        };
        let mut out = vec![R::zero(); m];
        let mut acc = R::zero();
        for j in (0..m).rev() {
            acc = self.coeffs[j + 1].add(&a.mul(&acc));
            out[j] = acc.clone();
        }
        Self::new(out)
    }

    /// Right backward shift `R_a f = Σⱼ zʲ Σᵢ f_{i+j+1} aⁱ`, the quotient in
    /// `f = f^{e_r}(a) + (R_a f)·(z − a)`.
    pub fn shift_right(&self, a: &R) -> Self {
        let Some(m) = self.degree() else {
            return Self::zero();
        };
        let mut out = vec![R::zero(); m];
        let mut acc = R::zero();
        for j in (0..m).rev() {
            acc = self.coeffs[j + 1].add(&acc.mul(a));
            out[j] = acc.clone();
        }
        Self::new(out)
    }

    /// Formal derivative of the given order.
    pub fn derivative(&self, order: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..order {
            out = Self::new(
                out.coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, c)| c.scale(&crate::scalar::rat(j as i64)))
                    .collect(),
            );
        }
        out
    }
}

impl<R: DivisionRing> Default for SkewPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: DivisionRing> From<&CentralPoly> for SkewPoly<R> {
    fn from(p: &CentralPoly) -> Self {
        p.to_skew()
    }
}

macro_rules! forward_poly_op {
    ($tr:ident, $method:ident) => {
        impl<R: DivisionRing> std::ops::$tr<&SkewPoly<R>> for &SkewPoly<R> {
            type Output = SkewPoly<R>;
            fn $method(self, rhs: &SkewPoly<R>) -> SkewPoly<R> {
                SkewPoly::$method(self, rhs)
            }
        }

        impl<R: DivisionRing> std::ops::$tr for SkewPoly<R> {
            type Output = SkewPoly<R>;
            fn $method(self, rhs: SkewPoly<R>) -> SkewPoly<R> {
                SkewPoly::$method(&self, &rhs)
            }
        }
    };
}

forward_poly_op!(Add, add);
forward_poly_op!(Sub, sub);
forward_poly_op!(Mul, mul);

impl<R: DivisionRing> std::ops::Neg for &SkewPoly<R> {
    type Output = SkewPoly<R>;
    fn neg(self) -> SkewPoly<R> {
        SkewPoly::neg(self)
    }
}

/// `(c0) + (c1) z + (c2) z^2 + …`, zero terms omitted, `0` for zero.
impl<R: DivisionRing> fmt::Display for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) z")?,
                _ => write!(f, "({c}) z^{j}")?,
            }
        }
        Ok(())
    }
}

impl<R: DivisionRing> fmt::Debug for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{self}]")
    }
}

impl<R: DivisionRing + serde::Serialize> serde::Serialize for SkewPoly<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de, R: DivisionRing + serde::Deserialize<'de>> serde::Deserialize<'de> for SkewPoly<R> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(SkewPoly::new(Vec::<R>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Quaternion};

    type P = SkewPoly<Quaternion>;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn products_of_linear_factors() {
        let (i, zi) = (Quaternion::i(), P::linear(&Quaternion::i()));
        let zmi = P::linear(&-&i);
        assert_eq!(&zi * &zmi, p("z^2 + 1"));
        assert_eq!(&zmi * &zi, p("z^2 + 1"));
        assert_eq!(&zi * &P::zero(), P::zero());
        // noncommuting coefficients keep their order
        let a = P::constant(Quaternion::i());
        let b = P::constant(Quaternion::j());
        assert_eq!(&a * &b, P::constant(Quaternion::k()));
    }

    #[test]
    fn divisions() {
        let (quot, rem) = p("z^2 + 1")
            .divide_left(&P::linear(&Quaternion::i()))
            .unwrap();
        assert_eq!(quot, P::linear(&-Quaternion::i()));
        assert!(rem.is_zero());
        let f = p("(1+i) + (2-j) z + (k) z^2 + (3) z^3");
        let (quot, rem) = f.divide_right(&P::one()).unwrap();
        assert_eq!((quot, rem), (f.clone(), P::zero()));
        assert_eq!(f.divide_left(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn left_and_right_values() {
        let f = p("1 + (i) z");
        let j = Quaternion::j();
        assert_eq!(f.eval_left(&j), q("1-k"));
        assert_eq!(f.eval_right(&j), q("1+k"));
        let a = q("1+2i-j");
        assert!(P::linear(&a).eval_left(&a).is_zero());
        let chi = a.minimal_central_polynomial().to_skew::<Quaternion>();
        let h = q("3-k");
        let conj = a.conjugate_by(&h).unwrap();
        assert!(chi.eval_left(&conj).is_zero());
        assert!(chi.eval_right(&conj).is_zero());
    }

    #[test]
    fn backward_shifts() {
        let a = q("2+i+k");
        let z2 = P::monomial(Quaternion::one(), 2);
        assert_eq!(
            z2.shift_left(&a),
            P::new(vec![a.clone(), Quaternion::one()])
        );
        assert!(P::constant(q("5")).shift_left(&a).is_zero());
        assert!(P::zero().shift_right(&a).is_zero());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("z^2 + 1").derivative(1), p("2 z"));
        assert_eq!(
            p("z^2 - 2 z + 2").derivative(2),
            P::constant(Quaternion::from(2))
        );
        assert!(p("z").derivative(2).is_zero());
        assert_eq!(
            p("(i) z^3").derivative(1),
            P::monomial(Quaternion::i().scale(&rat(3)), 2)
        );
    }

    #[test]
    fn text_form() {
        let f = P::new(vec![
            q("4/5+3/5*i+2/5*j-1/5*k"),
            q("-3/5-1/5*i+1/5*j+2/5*k"),
        ]);
        let s = "(4/5+3/5*i+2/5*j-1/5*k) + (-3/5-1/5*i+1/5*j+2/5*k) z";
        assert_eq!(f.to_string(), s);
        assert_eq!(p(s), f);
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p("z^2 + 1").to_string(), "(1) + (1) z^2");
    }
}
