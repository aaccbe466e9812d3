use std::fmt;

use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::rational::{is_one, is_zero, parse_rational};
use crate::scalar::ring::{ConjugacyClassData, DivisionRing};
use crate::scalar::{rat, Rational};

/// A rational quaternion `re + im_i·i + im_j·j + im_k·k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub re: Rational,
    pub im_i: Rational,
    pub im_j: Rational,
    pub im_k: Rational,
}

impl Quaternion {
    pub fn new(re: Rational, im_i: Rational, im_j: Rational, im_k: Rational) -> Self {
        Quaternion {
            re,
            im_i,
            im_j,
            im_k,
        }
    }

    pub fn from_ints(re: i64, i: i64, j: i64, k: i64) -> Self {
        Self::new(rat(re), rat(i), rat(j), rat(k))
    }

    pub fn real(re: Rational) -> Self {
        Self::new(
            re,
            <Rational as Zero>::zero(),
            <Rational as Zero>::zero(),
            <Rational as Zero>::zero(),
        )
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.re.clone(),
            -self.im_i.clone(),
            -self.im_j.clone(),
            -self.im_k.clone(),
        )
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re
            + &self.im_i * &self.im_i
            + &self.im_j * &self.im_j
            + &self.im_k * &self.im_k
    }

    pub fn trace(&self) -> Rational {
        &self.re * rat(2)
    }

    /// Largest absolute numerator or denominator among the components.
    pub fn height(&self) -> num_bigint::BigInt {
        [&self.re, &self.im_i, &self.im_j, &self.im_k]
            .iter()
            .flat_map(|r| [r.numer().abs(), r.denom().clone()])
            .max()
            .unwrap_or_default()
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_literal(text)
    }
}

impl DivisionRing for Quaternion {
    const DIM: usize = 4;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::real(<Rational as One>::one())
    }

    fn from_rational(r: Rational) -> Self {
        Self::real(r)
    }

    fn is_zero(&self) -> bool {
        is_zero(&self.re) && is_zero(&self.im_i) && is_zero(&self.im_j) && is_zero(&self.im_k)
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(
            &self.re + &o.re,
            &self.im_i + &o.im_i,
            &self.im_j + &o.im_j,
            &self.im_k + &o.im_k,
        )
    }

    fn sub(&self, o: &Self) -> Self {
        Self::new(
            &self.re - &o.re,
            &self.im_i - &o.im_i,
            &self.im_j - &o.im_j,
            &self.im_k - &o.im_k,
        )
    }

    fn neg(&self) -> Self {
        Self::new(
            -self.re.clone(),
            -self.im_i.clone(),
            -self.im_j.clone(),
            -self.im_k.clone(),
        )
    }

    fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.re, &self.im_i, &self.im_j, &self.im_k);
        let (a2, b2, c2, d2) = (&o.re, &o.im_i, &o.im_j, &o.im_k);
        Self::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if is_zero(&n) {
            return Err(Error::DivisionByZero);
        }
        let s = n.recip();
        Ok(self.conj().scale(&s))
    }

    fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im_i * r, &self.im_j * r, &self.im_k * r)
    }

    fn coords(&self) -> Vec<Rational> {
        vec![
            self.re.clone(),
            self.im_i.clone(),
            self.im_j.clone(),
            self.im_k.clone(),
        ]
    }

    fn from_coords(c: &[Rational]) -> Self {
        Self::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    fn is_central(&self) -> bool {
        is_zero(&self.im_i) && is_zero(&self.im_j) && is_zero(&self.im_k)
    }

    fn class_data(&self) -> ConjugacyClassData {
        ConjugacyClassData {
            trace: self.trace(),
            norm: self.norm(),
            kappa: if self.is_central() { 1 } else { 2 },
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl std::ops::$tr<&Quaternion> for &Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                DivisionRing::$method(self, rhs)
            }
        }

        impl std::ops::$tr for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                DivisionRing::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        DivisionRing::neg(&self)
    }
}

impl std::ops::Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        DivisionRing::neg(self)
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::real(rat(n))
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::real(r)
    }
}

/// Canonical literal: nonzero components in the order `1, i, j, k`, unit
/// coefficients elided (`i`, `-k`), `0` for zero.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        if !is_zero(&self.re) {
            terms.push(self.re.to_string());
        }
        for (c, unit) in [(&self.im_i, "i"), (&self.im_j, "j"), (&self.im_k, "k")] {
            if is_zero(c) {
                continue;
            }
            let term = if is_one(c) {
                unit.to_string()
            } else if is_one(&-c) {
                format!("-{unit}")
            } else {
                format!("{c}*{unit}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, t) in terms.iter().enumerate() {
            if n > 0 && !t.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_literal(s)
    }
}

impl serde::Serialize for Quaternion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Quaternion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_literal(&s).map_err(serde::de::Error::custom)
    }
}

/// Grammar: a signed sum of terms `r`, `r*u`, `r u` or `u`, where `r` is `p`
/// or `p/q` and `u` is one of `i`, `j`, `k`. Whitespace is ignored; repeated
/// components add up.
fn parse_literal(text: &str) -> Result<Quaternion> {
    // (column, char) with whitespace dropped; columns are 1-based
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, c))
        .collect();
    let err = |pos: usize, message: &str| Error::Parse {
        column: chars.get(pos).map_or(text.len(), |&(c, _)| c) + 1,
        message: message.to_string(),
    };
    if chars.is_empty() {
        return Err(err(0, "empty quaternion literal"));
    }

    let mut out = Quaternion::default();
    let mut pos = 0;
    let mut first = true;
    while pos < chars.len() {
        let mut negative = false;
        match chars[pos].1 {
            '+' | '-' => {
                negative = chars[pos].1 == '-';
                pos += 1;
            }
            _ if !first => return Err(err(pos, "expected '+' or '-'")),
            _ => {}
        }
        first = false;

        let num_start = pos;
        while pos < chars.len() && (chars[pos].1.is_ascii_digit() || chars[pos].1 == '/') {
            pos += 1;
        }
        let coef = if pos > num_start {
            let s: String = chars[num_start..pos].iter().map(|&(_, c)| c).collect();
            Some(parse_rational(&s, chars[num_start].0)?)
        } else {
            None
        };

        let mut star = false;
        if pos < chars.len() && chars[pos].1 == '*' {
            if coef.is_none() {
                return Err(err(pos, "'*' without a coefficient"));
            }
            star = true;
            pos += 1;
        }

        let unit = match chars.get(pos).map(|&(_, c)| c) {
            Some(u @ ('i' | 'j' | 'k')) => {
                pos += 1;
                Some(u)
            }
            _ => None,
        };
        if star && unit.is_none() {
            return Err(err(pos, "expected i, j or k after '*'"));
        }
        if coef.is_none() && unit.is_none() {
            return Err(err(pos, "expected a rational or a unit i, j, k"));
        }

        let mut value = coef.unwrap_or_else(<Rational as One>::one);
        if negative {
            value = -value;
        }
        let slot = match unit {
            None => &mut out.re,
            Some('i') => &mut out.im_i,
            Some('j') => &mut out.im_j,
            Some(_) => &mut out.im_k,
        };
        *slot += value;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = Quaternion::from(-1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&k * &j, -&i);
        assert_eq!(&i * &k, -&j);
        assert_eq!(&i * &i, m1);
        assert_eq!(&(&i * &j) * &k, m1);
    }

    #[test]
    fn inverse_of_i_minus_j() {
        let x = q("i-j");
        let expected = q("j-i").scale(&ratio(1, 2));
        assert_eq!(x.inv().unwrap(), expected);
        assert_eq!(&x * &expected, Quaternion::one());
        assert_eq!(&expected * &x, Quaternion::one());
        assert_eq!(Quaternion::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn norm_identity() {
        let x = q("1+2*i");
        assert_eq!(&x.conj() * &x, Quaternion::from(5));
    }

    #[test]
    fn conjugacy_examples() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        assert!(i.is_conjugate(&j));
        assert!(!i.is_conjugate(&q("1+j")));
        let h = q("1+k");
        let c = &(&h * &i) * &h.inv().unwrap();
        assert!(i.is_conjugate(&c));
        assert!(!Quaternion::from(2).is_conjugate(&Quaternion::from(3)));
    }

    #[test]
    fn minimal_central_polynomials() {
        assert_eq!(
            Quaternion::from(3).minimal_central_polynomial().to_string(),
            "z - 3"
        );
        assert_eq!(
            Quaternion::i().minimal_central_polynomial().to_string(),
            "z^2 + 1"
        );
        assert_eq!(
            q("1+j").minimal_central_polynomial().to_string(),
            "z^2 - 2 z + 2"
        );
    }

    #[test]
    fn intertwiners() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        assert!(Quaternion::intertwiner_basis(&i, &q("1+j")).is_empty());
        let basis = Quaternion::intertwiner_basis(&i, &j);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_eq!(&i * v, v * &j);
        }
        // the span is {1-k, i+j}: both lie in it and the basis has rank 2
        let span = crate::linalg::Matrix::from_columns(
            &basis.iter().map(|v| v.coords()).collect::<Vec<_>>(),
        );
        for target in [q("1-k"), q("i+j")] {
            assert!(span.solve(&target.coords()).is_some());
        }
        let two = Quaternion::from(2);
        assert_eq!(Quaternion::intertwiner_basis(&two, &two).len(), 4);
    }

    #[test]
    fn literal_grammar() {
        assert_eq!(
            q("3/5 - 1/5*i + 2 j + k"),
            Quaternion::new(ratio(3, 5), ratio(-1, 5), rat(2), rat(1))
        );
        assert_eq!(q("-k"), Quaternion::from_ints(0, 0, 0, -1));
        assert_eq!(q("i+i"), Quaternion::from_ints(0, 2, 0, 0));
        assert_eq!(q("0"), Quaternion::zero());
        assert_eq!(
            q("4/5+3/5*i+2/5*j-1/5*k").to_string(),
            "4/5+3/5*i+2/5*j-1/5*k"
        );
        assert_eq!(q("1 - k").to_string(), "1-k");
        assert_eq!(q("-1/2*j").to_string(), "-1/2*j");
    }

    #[test]
    fn literal_errors_carry_columns() {
        for bad in ["", "1+", "2*", "*i", "1/0", "1 i j", "x", "1++i"] {
            assert!(bad.parse::<Quaternion>().is_err(), "{bad:?} should fail");
        }
        match "1 + 2*q".parse::<Quaternion>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("unexpected {other:?}"),
        }
    }
}
