//! Statistic-marked generating functions and a pair of simultaneous
//! restrictions.

use crate::algebra::{catalan_series, int, BiSeries, Poly, RatFunc, Series};
use crate::chebyshev::{cleared_u, r, r_sq};
use crate::error::{Error, Result};
use crate::genfun::GfTriple;

fn lift(s: &Series) -> BiSeries {
    BiSeries::from_series(s)
}

/// Even and odd 132-avoiders by length and number of right-to-left maxima,
/// through `x^order`:
///
/// ```text
/// A = 1/(1 − xyC(x))
/// B = (1 + xy − x²yC(x²)) / (1 − 2x²yC(x²) + x²y²C(x²))
/// even = (A + B)/2,  odd = (A − B)/2
/// ```
pub fn rlm_distribution(order: usize) -> Result<(BiSeries, BiSeries)> {
    let c = lift(&catalan_series(order));
    let c2 = lift(&catalan_series(order).substitute(crate::algebra::Substitution::Square));
    let one = BiSeries::one(order);
    let x = BiSeries::x(order);
    let y = BiSeries::y(order);
    let x2 = &x * &x;
    let xy = &x * &y;
    let a = (&one - &(&xy * &c)).inv()?;
    let x2yc2 = &(&x2 * &y) * &c2;
    let num = &(&one + &xy) - &x2yc2;
    let den = &(&one - &x2yc2.scale(&int(2))) + &(&x2yc2 * &y);
    let b = num.checked_div(&den)?;
    Ok(((&a + &b).half(), (&a - &b).half()))
}

/// `W_m = (1 − x²R_{m−2}R_{m−3}) R_{m−1} / (1 − x²R_{m−1}R_{m−2})`, `m >= 3`.
pub fn w_family(m: usize) -> Result<RatFunc> {
    if m < 3 {
        return Err(Error::OutOfRange(format!("W_m needs m >= 3, got {m}")));
    }
    let one = RatFunc::one();
    let num = (&one - (r(m - 2) * r(m - 3)).shift(2)) * r(m - 1);
    let den = &one - (r(m - 1) * r(m - 2)).shift(2);
    num.checked_div(&den)
}

/// `V_m = (1 − xW_m) W_{m+1}`.
pub fn v_family(m: usize) -> Result<RatFunc> {
    Ok((RatFunc::one() - RatFunc::x() * w_family(m)?) * w_family(m + 1)?)
}

/// Generating functions of 132-avoiders that also avoid `12…L` and
/// `2134…L`, for `L >= 4`. `F = W_L`; the signed part is
///
/// ```text
/// L = 2k:     M = 1 + xR_k(x²)
/// L = 2k + 1: M = Z·R_{k+1}(x²), with R = R_{k+1}(x²) and
///             Z = (2(1 + xR) − V_{2k}(x) − xR·V_{2k}(−x)) / (1 + x²R²)
/// ```
pub fn two_restrictions(len: usize) -> Result<GfTriple> {
    if len < 4 {
        return Err(Error::OutOfRange(format!("needs L >= 4, got {len}")));
    }
    let f = w_family(len)?;
    let k = len / 2;
    let x = RatFunc::x();
    let one = RatFunc::one();
    let m = if len.is_multiple_of(2) {
        &one + &x * r_sq(k)
    } else {
        let rr = r_sq(k + 1);
        let v = v_family(2 * k)?;
        let xr = &x * &rr;
        let num = (&one + &xr).scale(&int(2)) - &v - &xr * v.neg_x();
        let z = num.checked_div(&(&one + (&rr * &rr).shift(2)))?;
        z * rr
    };
    Ok(GfTriple::from_f_m(f, m))
}

/// `D_m` for `m >= −2`, with `D_{−1} = 1` and `D_{−2} = 0`:
///
/// ```text
/// D_{2m}   = (Û_{2m+1} − 2x²Û_{2m} − 2x^{2m+2}) / (1 − 4x²)
/// D_{2m+1} = (Û_{2m+3} − x²Û_{2m+1} − 4x^{2m+4}) / (1 − 4x²)
/// ```
pub fn d_family(m: isize) -> Result<RatFunc> {
    let four_x2 = Poly::from_ints(&[1, 0, -4]);
    let num = match m {
        -2 => return Ok(RatFunc::zero()),
        -1 => return Ok(RatFunc::one()),
        m if m < -2 => return Err(Error::OutOfRange(format!("D_m needs m >= −2, got {m}"))),
        m if m % 2 == 0 => {
            let h = (m / 2) as usize;
            &(&cleared_u(2 * h + 1) - &cleared_u(2 * h).shift(2).scale(&int(2)))
                - &Poly::monomial(int(2), 2 * h + 2)
        }
        m => {
            let h = (m / 2) as usize;
            &(&cleared_u(2 * h + 3) - &cleared_u(2 * h + 1).shift(2))
                - &Poly::monomial(int(4), 2 * h + 4)
        }
    };
    RatFunc::new(num, four_x2)
}

/// `E_m = ((−1)^m − 1) x^{m+1}`.
fn e_family(m: usize) -> RatFunc {
    if m.is_multiple_of(2) {
        RatFunc::zero()
    } else {
        RatFunc::x_pow(m + 1).scale(&int(-2))
    }
}

/// `B_{2m} = −x^{2m−1}`, `B_{2m+1} = −x^{2m} + 2x^{2m+1}`.
fn b_family(m: usize) -> RatFunc {
    if m.is_multiple_of(2) {
        -RatFunc::x_pow(m - 1)
    } else {
        RatFunc::x_pow(m).scale(&int(2)) - RatFunc::x_pow(m - 1)
    }
}

/// The coefficients of `G_k` as polynomials in `u = 1 − y`:
/// numerator `[n0, n1, n2]` and denominator `[d0, d1, d2]` with
///
/// ```text
/// G_k = 1 + x (n0 + n1 u + n2 u²) / (d0 + d1 u + d2 u²)
/// n0 = D_{k−1} − x^k,  n1 = B_k,  n2 = x²D_{k−3} − x^k
/// d0 = D_k,            d1 = E_k,  d2 = x²D_{k−2}
/// ```
pub fn gk_parts(k: usize) -> Result<([RatFunc; 3], [RatFunc; 3])> {
    if k == 0 {
        return Err(Error::OutOfRange("G_k needs k >= 1".into()));
    }
    let ki = k as isize;
    let xk = RatFunc::x_pow(k);
    let num = [
        d_family(ki - 1)? - &xk,
        b_family(k),
        d_family(ki - 3)?.shift(2) - &xk,
    ];
    let den = [d_family(ki)?, e_family(k), d_family(ki - 2)?.shift(2)];
    Ok((num, den))
}

/// `G_k(x, y) = Σ (e − o) x^n y^j` over 132-avoiders that avoid `12…(k+1)`,
/// where `y` marks occurrences of `12…k`. Expanded through `x^order`.
pub fn gk_xy(k: usize, order: usize) -> Result<BiSeries> {
    let (num, den) = gk_parts(k)?;
    let u = &BiSeries::one(order) - &BiSeries::y(order);
    let combine = |parts: &[RatFunc; 3]| -> Result<BiSeries> {
        let mut acc = BiSeries::zero(order);
        let mut upow = BiSeries::one(order);
        for p in parts {
            acc = &acc + &(&lift(&p.series(order)?) * &upow);
            upow = &upow * &u;
        }
        Ok(acc)
    };
    let ratio = combine(&num)?.checked_div(&combine(&den)?)?;
    Ok(&BiSeries::one(order) + &(&BiSeries::x(order) * &ratio))
}

/// `G_k(x, 1) = 1 + x (D_{k−1} − x^k) / D_k` as a rational function.
pub fn gk_at_y_one(k: usize) -> Result<RatFunc> {
    let (num, den) = gk_parts(k)?;
    let [n0, _, _] = num;
    let [d0, _, _] = den;
    Ok(RatFunc::one() + RatFunc::x() * n0.checked_div(&d0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::m_increasing;
    use crate::patterns::{oracle_bivariate, oracle_series, Constraints, Perm, Statistic};

    #[test]
    fn rlm_low_terms() {
        let (even, odd) = rlm_distribution(6).unwrap();
        assert_eq!(even.coeff(0, 0), int(1));
        assert_eq!(even.coeff(1, 1), int(1));
        assert_eq!(odd.coeff(1, 1), int(0));
    }

    #[test]
    fn rlm_matches_oracle_at_small_order() {
        let n = 7;
        let (even, odd) = rlm_distribution(n).unwrap();
        let (oe, oo) = oracle_bivariate(&Constraints::new(), &Statistic::Rlm, n).unwrap();
        assert_eq!(even, oe);
        assert_eq!(odd, oo);
    }

    #[test]
    fn d_family_is_polynomial() {
        for m in -2..12 {
            assert!(d_family(m).unwrap().is_polynomial(), "m = {m}");
        }
    }

    #[test]
    fn gk_at_one_is_increasing_signed_gf() {
        for k in 1..=6 {
            assert_eq!(gk_at_y_one(k).unwrap(), m_increasing(k + 1), "k = {k}");
        }
    }

    #[test]
    fn gk_two_matches_oracle() {
        let n = 8;
        let c = Constraints::new().avoid(Perm::increasing(3));
        let (e, o) = oracle_bivariate(&c, &Statistic::Inc(2), n).unwrap();
        assert_eq!(gk_xy(2, n).unwrap(), &e - &o);
    }

    #[test]
    fn two_restrictions_length_four() {
        let n = 10;
        let t = two_restrictions(4).unwrap();
        let c = Constraints::new()
            .avoid(Perm::increasing(4))
            .avoid(Perm::two_one_then_increasing(4).unwrap());
        let s = oracle_series(&c, n).unwrap();
        assert_eq!(t.e.series(n).unwrap(), s.even());
        assert_eq!(t.o.series(n).unwrap(), s.odd());
    }
}
