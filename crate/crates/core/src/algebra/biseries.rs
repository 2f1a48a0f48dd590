use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::poly::forward_owned_binop;
use super::{Poly, Rational, Series, Substitution};
use crate::error::{Error, Result};

/// A series in `x` known through `x^order` whose coefficients are
/// polynomials in a marker variable `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiSeries {
    rows: Vec<Poly>,
}

impl BiSeries {
    /// `rows[n]` is the coefficient of `x^n`, a polynomial in `y`.
    pub fn from_rows(rows: Vec<Poly>) -> Self {
        assert!(
            !rows.is_empty(),
            "a series carries at least its constant term"
        );
        BiSeries { rows }
    }

    pub fn zero(order: usize) -> Self {
        BiSeries {
            rows: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_series(&Series::one(order))
    }

    /// `c x^i y^j`, truncated.
    pub fn monomial(c: Rational, i: usize, j: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if i <= order {
            s.rows[i] = Poly::monomial(c, j);
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, 0, order)
    }

    pub fn y(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, 1, order)
    }

    /// Embed a univariate series (no `y` dependence).
    pub fn from_series(s: &Series) -> Self {
        BiSeries {
            rows: s
                .coeffs()
                .iter()
                .map(|c| Poly::constant(c.clone()))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &Poly {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Poly] {
        &self.rows
    }

    pub fn coeff(&self, n: usize, j: usize) -> Rational {
        self.rows[n].coeff(j)
    }

    pub fn truncate(&self, order: usize) -> Self {
        BiSeries {
            rows: self.rows[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiSeries {
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn half(&self) -> Self {
        self.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Substitute for `x` only; `y` is untouched.
    pub fn substitute_x(&self, kind: Substitution) -> Self {
        let order = self.order();
        let mut rows = vec![Poly::zero(); order + 1];
        for (i, r) in self.rows.iter().enumerate() {
            match kind {
                Substitution::Neg => rows[i] = if i % 2 == 1 { -r } else { r.clone() },
                Substitution::Square | Substitution::NegSquare => {
                    if 2 * i > order {
                        break;
                    }
                    let flip = kind == Substitution::NegSquare && i % 2 == 1;
                    rows[2 * i] = if flip { -r } else { r.clone() };
                }
            }
        }
        BiSeries { rows }
    }

    /// Set `y` to a constant.
    pub fn at_y(&self, y: &Rational) -> Series {
        Series::from_coeffs(self.rows.iter().map(|r| r.eval(y)).collect())
    }

    /// Reciprocal; the `x^0` coefficient must be a nonzero constant.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.rows[0];
        if !c0.is_constant() || c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let c0_inv = c0.coeff(0).recip();
        let mut out: Vec<Poly> = Vec::with_capacity(self.rows.len());
        out.push(Poly::constant(c0_inv.clone()));
        for n in 1..self.rows.len() {
            let mut acc = Poly::zero();
            for j in 1..=n {
                acc = &acc + &(&self.rows[j] * &out[n - j]);
            }
            out.push(acc.scale(&-c0_inv.clone()));
        }
        Ok(BiSeries { rows: out })
    }

    pub fn checked_div(&self, rhs: &BiSeries) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        BiSeries {
            rows: self.rows.iter().map(|r| -r).collect(),
        }
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        BiSeries {
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        BiSeries {
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let len = self.rows.len().min(rhs.rows.len());
        let mut rows = vec![Poly::zero(); len];
        for (i, a) in self.rows.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().take(len - i).enumerate() {
                if !b.is_zero() {
                    rows[i + j] = &rows[i + j] + &(a * b);
                }
            }
        }
        BiSeries { rows }
    }
}

forward_owned_binop!(BiSeries, Add, add);
forward_owned_binop!(BiSeries, Sub, sub);
forward_owned_binop!(BiSeries, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalan_series, int};

    #[test]
    fn difference_of_squares() {
        let xy = BiSeries::x(4) * BiSeries::y(4);
        let one = BiSeries::one(4);
        let prod = (&one + &xy) * (&one - &xy);
        let expected = &one - &BiSeries::monomial(int(1), 2, 2, 4);
        assert_eq!(prod, expected);
    }

    #[test]
    fn geometric_series_in_xy() {
        let xy = BiSeries::x(3) * BiSeries::y(3);
        let g = (BiSeries::one(3) - xy).inv().unwrap();
        for n in 0..=3 {
            assert_eq!(g.row(n), &Poly::monomial(int(1), n));
        }
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        assert_eq!(BiSeries::y(3).inv(), Err(Error::NonUnitConstantTerm));
        assert_eq!(BiSeries::x(3).inv(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn catalan_marking_at_y_one() {
        // 1/(1 - x y C(x)) at y = 1 is C(x)^... : 1/(1 - xC) = C.
        let n = 10;
        let c = catalan_series(n);
        let f = (BiSeries::one(n) - BiSeries::x(n) * BiSeries::y(n) * BiSeries::from_series(&c))
            .inv()
            .unwrap();
        assert_eq!(f.at_y(&int(1)), c);
    }
}
