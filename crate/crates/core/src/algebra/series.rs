use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::poly::forward_owned_binop;
use super::{Integer, RatFunc, Rational, Substitution};
use crate::error::{Error, Result};

/// A power series known through `x^order`. Binary operations keep the
/// smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series carries at least its constant term"
        );
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_integers<I: IntoIterator<Item = Integer>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// Expand `f` at `x = 0`: solves `num = den * s` term by term.
    pub fn from_ratfunc(f: &RatFunc, order: usize) -> Result<Self> {
        let den = f.den().coeffs();
        let d0 = den
            .first()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NoSeriesExpansion)?;
        let d0_inv = d0.recip();
        let num = f.num();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeff(n);
            for (j, d) in den.iter().enumerate().skip(1).take(n) {
                acc -= d * &out[n - j];
            }
            out.push(acc * &d0_inv);
        }
        Ok(Series { coeffs: out })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<Integer>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn half(&self) -> Self {
        self.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Multiply by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k < coeffs.len() {
                coeffs[i + k] = c.clone();
            }
        }
        Series { coeffs }
    }

    pub fn substitute(&self, kind: Substitution) -> Self {
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            match kind {
                Substitution::Neg => {
                    coeffs[i] = if i % 2 == 1 { -c } else { c.clone() };
                }
                Substitution::Square | Substitution::NegSquare => {
                    if 2 * i > order {
                        break;
                    }
                    let flip = kind == Substitution::NegSquare && i % 2 == 1;
                    coeffs[2 * i] = if flip { -c } else { c.clone() };
                }
            }
        }
        Series { coeffs }
    }

    pub fn neg_x(&self) -> Self {
        self.substitute(Substitution::Neg)
    }

    /// Reciprocal; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let c0_inv = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(c0_inv.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for j in 1..=n {
                acc += &self.coeffs[j] * &out[n - j];
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Series { coeffs: out })
    }

    pub fn checked_div(&self, rhs: &Series) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }
}

/// Catalan numbers `C_0..C_order`, the fixed point of `C = 1 + x C^2`.
pub fn catalan_series(order: usize) -> Series {
    let mut c: Vec<Integer> = Vec::with_capacity(order + 1);
    c.push(Integer::one());
    for n in 1..=order {
        let next = (0..n).map(|j| &c[j] * &c[n - 1 - j]).sum();
        c.push(next);
    }
    Series::from_integers(c)
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(len - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }
}

forward_owned_binop!(Series, Add, add);
forward_owned_binop!(Series, Sub, sub);
forward_owned_binop!(Series, Mul, mul);

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            rf(&[1, -1], &[1, -2]).series(3).unwrap(),
            Series::from_ints(&[1, 1, 2, 4])
        );
        assert_eq!(
            rf(&[1], &[1, -1]).series(4).unwrap(),
            Series::from_ints(&[1; 5])
        );
        assert_eq!(
            rf(&[1, 1], &[1, 0, 0, 0, -1]).series(6).unwrap(),
            Series::from_ints(&[1, 1, 0, 0, 1, 1, 0])
        );
    }

    #[test]
    fn expansion_needs_nonvanishing_denominator() {
        assert_eq!(rf(&[1], &[0, 1]).series(3), Err(Error::NoSeriesExpansion));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_series(5), Series::from_ints(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(catalan_series(0), Series::from_ints(&[1]));
        let c = catalan_series(12);
        let fixed = &Series::one(12) + &(&c * &c).shift(1);
        assert_eq!(fixed, c);
    }

    #[test]
    fn orders_propagate_to_minimum() {
        let a = Series::from_ints(&[1, 2, 3, 4]);
        let b = Series::from_ints(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b), Series::from_ints(&[2, 3]));
    }

    #[test]
    fn reciprocal() {
        let s = Series::from_ints(&[1, -1, 0, 0]);
        assert_eq!(s.inv().unwrap(), Series::from_ints(&[1, 1, 1, 1]));
        assert_eq!(
            Series::from_ints(&[0, 1]).inv(),
            Err(Error::NonUnitConstantTerm)
        );
    }

    proptest! {
        #[test]
        fn expansion_solves_convolution(
            num in prop::collection::vec(-5i64..=5, 0..5),
            den_tail in prop::collection::vec(-5i64..=5, 0..5),
            d0 in prop_oneof![-3i64..=-1, 1i64..=3],
        ) {
            let mut den = vec![d0];
            den.extend(den_tail);
            let f = rf(&num, &den);
            let s = f.series(10).unwrap();
            // den * s must reproduce num through order 10
            let den_series = Series::from_coeffs(
                (0..=10).map(|i| f.den().coeff(i)).collect());
            let prod = &den_series * &s;
            for i in 0..=10 {
                prop_assert_eq!(prod.coeff(i), &f.num().coeff(i));
            }
        }

        #[test]
        fn catalan_recurrence(n in 1usize..25) {
            let c = catalan_series(n);
            let conv: Rational = (0..n).map(|j| c.coeff(j) * c.coeff(n - 1 - j)).sum();
            prop_assert_eq!(&conv, c.coeff(n));
        }
    }
}
