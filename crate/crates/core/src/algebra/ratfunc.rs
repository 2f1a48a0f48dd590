use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::forward_owned_binop;
use super::{Poly, Rational, Series, Substitution};
use crate::error::{Error, Result};

/// A quotient `num / den` of polynomials in lowest terms.
///
/// Normal form: `gcd(num, den) = 1`, `den` has coprime integer coefficients,
/// and the lowest-order nonzero coefficient of `den` is positive (so any
/// denominator with `den(0) != 0` reads `den(0) > 0`, as in `1 - 2x`). The zero
/// function is `0 / 1`. Two equal functions therefore have equal fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let (content, prim) = den.content_primitive();
        let mut den = Poly::from_integers(prim);
        let mut factor = content.recip();
        if den.trailing().is_negative() {
            den = -den;
            factor = -factor;
        }
        RatFunc {
            num: num.scale(&factor),
            den,
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(Poly::one())
    }

    pub fn x() -> Self {
        Self::from(Poly::x())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(Poly::from(c))
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::from(Poly::monomial(Rational::one(), k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Half of `self`; used for the even/odd splits.
    pub fn half(&self) -> Self {
        self.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self::normalized(self.num.shift(k), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn substitute(&self, kind: Substitution) -> Self {
        Self::normalized(self.num.substitute(kind), self.den.substitute(kind))
    }

    pub fn neg_x(&self) -> Self {
        self.substitute(Substitution::Neg)
    }

    pub fn at_x_squared(&self) -> Self {
        self.substitute(Substitution::Square)
    }

    /// `(½(f(x) + f(−x)), ½(f(x) − f(−x)))`.
    pub fn even_odd_part(&self) -> (Self, Self) {
        let reflected = self.neg_x();
        ((self + &reflected).half(), (self - &reflected).half())
    }

    /// Taylor coefficients at `x = 0` through `x^order`.
    pub fn series(&self, order: usize) -> Result<Series> {
        Series::from_ratfunc(self, order)
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        Self::normalized(p, Poly::one())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_owned_binop!(RatFunc, Add, add);
forward_owned_binop!(RatFunc, Sub, sub);
forward_owned_binop!(RatFunc, Mul, mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            rf(&[1], &[1, -1]) + rf(&[0, 1], &[1, -1]),
            rf(&[1, 1], &[1, -1])
        );
        assert_eq!(
            rf(&[1], &[1, -1]) * RatFunc::from(p(&[1, -1])),
            RatFunc::one()
        );
        assert_eq!(rf(&[1], &[1, -2]) - RatFunc::one(), rf(&[0, 2], &[1, -2]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            RatFunc::new(p(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn normal_form_cancels_and_fixes_sign() {
        // (x^2 - 1) / (2 - 2x) = -(1 + x)/2
        let f = rf(&[-1, 0, 1], &[2, -2]);
        assert_eq!(f.den(), &p(&[1]));
        assert_eq!(
            f.num(),
            &Poly::from_coeffs(vec![super::super::rat(-1, 2), super::super::rat(-1, 2)])
        );
        let g = rf(&[1], &[-1, 2]);
        assert_eq!(g.den(), &p(&[1, -2]));
        assert_eq!(g.num(), &p(&[-1]));
    }

    #[test]
    fn substitutions() {
        assert_eq!(rf(&[1], &[1, -1]).neg_x(), rf(&[1], &[1, 1]));
        assert_eq!(rf(&[1, 1], &[1, 0, 1]).neg_x(), rf(&[1, -1], &[1, 0, 1]));
        assert_eq!(rf(&[1], &[1, -1]).at_x_squared(), rf(&[1], &[1, 0, -1]));
    }

    #[test]
    fn even_odd_split() {
        let (e, o) = rf(&[1, 1], &[1, 0, 0, 0, -1]).even_odd_part();
        assert_eq!(e, rf(&[1], &[1, 0, 0, 0, -1]));
        assert_eq!(o, rf(&[0, 1], &[1, 0, 0, 0, -1]));
        assert_eq!(
            RatFunc::one().even_odd_part(),
            (RatFunc::one(), RatFunc::zero())
        );
        assert_eq!(
            RatFunc::x().even_odd_part(),
            (RatFunc::zero(), RatFunc::x())
        );
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&rf(&[1, -1], &[1, -2])).unwrap();
        assert_eq!(json, r#"{"num":["1","-1"],"den":["1","-2"]}"#);
    }
}
