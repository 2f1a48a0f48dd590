//! Closed forms for particular pattern families.

use crate::algebra::{catalan_series, int, solve_linear_2x2, Poly, RatFunc, Series, Substitution};
use crate::chebyshev::{cleared_u, r, r_sq};
use crate::error::{Error, Result};
use crate::genfun::{Engine, GfTriple};
use crate::patterns::Perm;

fn poly_rf(p: Poly) -> RatFunc {
    RatFunc::from(p)
}

fn u_hat(n: usize) -> RatFunc {
    poly_rf(cleared_u(n))
}

/// `M_τ` for `τ = (β, k)` (a pattern ending in its maximum), from `M_β`:
/// `2(1 + x M_β(−x)) / ((1 − x M_β(x))² + (1 + x M_β(−x))²)`.
pub fn closed_mmc(m_beta: &RatFunc) -> Result<RatFunc> {
    let x = RatFunc::x();
    let plus = RatFunc::one() + &x * m_beta.neg_x();
    let minus = RatFunc::one() - &x * m_beta;
    let den = minus.pow(2) + plus.pow(2);
    plus.scale(&int(2)).checked_div(&den)
}

/// [`closed_mmc`] with `M_β` taken from the engine (`M_∅ = 0`).
pub fn closed_mmc_for(engine: &mut Engine, beta: &Perm) -> Result<RatFunc> {
    let m_beta = if beta.is_empty() {
        RatFunc::zero()
    } else {
        engine.m_tau(beta)?
    };
    closed_mmc(&m_beta)
}

/// Parity split of all 132-avoiders through `x^order`:
/// `E = (C(x) + 1)/2 + (x/2) C(x²)`, `O = (C(x) − 1)/2 − (x/2) C(x²)`.
pub fn closed_unrestricted(order: usize) -> (Series, Series) {
    let c = catalan_series(order);
    let one = Series::one(order);
    let twist = c.substitute(Substitution::Square).shift(1);
    let e = (&(&c + &one) + &twist).half();
    let o = (&(&c - &one) - &twist).half();
    (e, o)
}

/// `M_{[L]}` for the increasing pattern of length `L >= 1`.
pub fn m_increasing(len: usize) -> RatFunc {
    let x = RatFunc::x();
    if len % 2 == 1 {
        // L = 2j − 1
        let j = len.div_ceil(2);
        RatFunc::one() + &x * r_sq(j - 1)
    } else {
        let j = len / 2;
        let rj = r_sq(j);
        let num = (RatFunc::one() + &x * &rj) * &rj;
        let den = RatFunc::one() + (&rj * &rj).shift(2);
        num.checked_div(&den).expect("1 + x²R² is nonzero")
    }
}

/// Triple for `12…L`: `F = R_L` and `M` from [`m_increasing`].
pub fn closed_increasing(len: usize) -> Result<GfTriple> {
    if len == 0 {
        return Err(Error::OutOfRange(
            "pattern length must be at least 1".into(),
        ));
    }
    Ok(GfTriple::from_f_m(r(len), m_increasing(len)))
}

/// Triple for `2134…L`, `L >= 2`, with `F = R_L`.
pub fn closed_213k(len: usize) -> Result<GfTriple> {
    if len < 2 {
        return Err(Error::OutOfRange(format!("2134…L needs L >= 2, got {len}")));
    }
    let x = RatFunc::x();
    let one_minus_3x2 = poly_rf(Poly::from_ints(&[1, 0, -3]));
    let one_plus_2x = poly_rf(Poly::from_ints(&[1, 2]));
    let bracket = poly_rf(Poly::from_ints(&[-1, 2, 1])); // x² + 2x − 1
    let k = len.div_ceil(2);
    let (num, den) = if len.is_multiple_of(2) {
        let tail = (RatFunc::x_pow(len) * &bracket).checked_div(&one_minus_3x2)?;
        let num = &one_plus_2x * (&x * u_hat(len - 1) - u_hat(len) + tail);
        let corr = RatFunc::x_pow(len + 4)
            .scale(&int(4))
            .checked_div(&one_minus_3x2)?;
        let den = u_hat(len) - u_hat(len + 1).scale(&int(2)) + corr;
        (num, den)
    } else {
        // L = 2k − 1
        let tail = (RatFunc::x_pow(len) * &bracket).checked_div(&one_minus_3x2)?;
        let num = &one_plus_2x * (&x * u_hat(2 * k - 2) - u_hat(2 * k - 1) + tail);
        let five = poly_rf(Poly::from_ints(&[2, 0, -10])); // 2(1 − 5x²)
        let corr = (RatFunc::x_pow(2 * k) * five).checked_div(&one_minus_3x2)?;
        let den = u_hat(2 * k - 1) - u_hat(2 * k).scale(&int(2)) - corr;
        (num, den)
    };
    Ok(GfTriple::from_f_m(r(len), num.checked_div(&den)?))
}

/// `M_{[L,D]}` by solving the paired linear system for `[L, D]` built from
/// `M_{[L−D−1]}` and `M_{[D]}` (with `M_{[0]} = 0`).
pub fn m_rotated_by_system(len: usize, d: usize) -> Result<RatFunc> {
    if len < 2 || d == 0 || d >= len {
        return Err(Error::OutOfRange(format!(
            "[L, D] needs L >= 2, 1 <= D <= L − 1, got [{len}, {d}]"
        )));
    }
    let top_len = len - d - 1;
    let p = if top_len == 0 {
        RatFunc::zero()
    } else {
        m_increasing(top_len)
    };
    let q = m_increasing(d);
    let (pn, qn) = (p.neg_x(), q.neg_x());
    let x = RatFunc::x();
    let one = RatFunc::one();
    let a11 = &one + &x * &pn - &x * &qn;
    let a12 = &one - &x * &p + &x * &q;
    let b1 = RatFunc::from_int(2) + &x * &pn * &q - &x * &p * &qn;
    let a21 = &one - &x * &p - &x * &q;
    let a22 = -(&one + &x * &pn + &x * &qn);
    let b2 = -(&x * &p * &q) - &x * &pn * &qn;
    let (a, b) = solve_linear_2x2(&a11, &a12, &a21, &a22, &b1, &b2)?;
    if a.neg_x() != b {
        return Err(Error::Inconsistent(format!(
            "[{len},{d}] system is not reflection-symmetric"
        )));
    }
    Ok(a)
}

/// Triple for `[L, D] = (D+1)…L 1…D` with `F = R_L`. For odd `L = 2k + 1`,
/// `M = 1 + x R_k(x²)` whatever `D` is; for even `L`, `M` comes from the
/// paired system of [`m_rotated_by_system`].
pub fn closed_kd(len: usize, d: usize) -> Result<GfTriple> {
    if len < 2 || d == 0 || d >= len {
        return Err(Error::OutOfRange(format!(
            "[L, D] needs L >= 2, 1 <= D <= L − 1, got [{len}, {d}]"
        )));
    }
    let m = if len % 2 == 1 {
        RatFunc::one() + RatFunc::x() * r_sq(len / 2)
    } else {
        m_rotated_by_system(len, d)?
    };
    Ok(GfTriple::from_f_m(r(len), m))
}

/// The standard closed forms for `M_{[L,D]}` with `L` even, kept as stated
/// so they can be compared with the engine. With `L = 2k`, `m = k − d − 1`:
/// for `D = 2d + 1`
/// `(1 − x²(R_m + R_d) + x(1 − x²R_mR_d))(1 + x²R_mR_d) / (1 − x²(1 + R_m²)(1 + x²R_m²))`,
/// for `D = 2d`
/// `1/x − (1 − x²(R_m − R_d))(1 − x²(R_d + R_m) − x(1 − x²R_dR_m)) / (x + x³(1 + x²R_d²)(1 − 2R_m + x²R_m²))`,
/// every `R` evaluated at `x²`.
pub fn literal_m_rotated_even(len: usize, d_full: usize) -> Result<RatFunc> {
    if len % 2 == 1 || len < 2 || d_full == 0 || d_full >= len {
        return Err(Error::OutOfRange(format!(
            "needs even L and 1 <= D <= L − 1, got [{len}, {d_full}]"
        )));
    }
    let k = len / 2;
    let d = d_full / 2;
    let m = k - d - 1;
    let (rm, rd) = (r_sq(m), r_sq(d));
    let one = RatFunc::one();
    let x = RatFunc::x();
    let x2 = |f: RatFunc| f.shift(2);
    if d_full % 2 == 1 {
        let left = &one - x2(&rm + &rd) + &x * (&one - x2(&rm * &rd));
        let right = &one + x2(&rm * &rd);
        let den = &one - x2((&one + &rm * &rm) * (&one + x2(&rm * &rm)));
        (left * right).checked_div(&den)
    } else {
        let a = &one - x2(&rm - &rd);
        let b = &one - x2(&rd + &rm) - &x * (&one - x2(&rd * &rm));
        let c = &x
            + RatFunc::x_pow(3)
                * (&one + x2(&rd * &rd))
                * (&one - rm.scale(&int(2)) + x2(&rm * &rm));
        Ok(x.inv()? - (a * b).checked_div(&c)?)
    }
}

/// Odd-wedge detection.
///
/// A wedge pattern interleaves nonempty runs of its large values
/// `s+1, s+2, …, k` (in increasing order) with blocks of the small values
/// `1..=s`, where each block is one increasing run of consecutive values
/// and the blocks step downwards (like `6 45 78 3 9 12`). It is odd-wedge if every
/// initial stretch ending after a small-value run, and the whole pattern,
/// has odd length. Returns `k` with the pattern length `2k + 1`.
pub fn odd_wedge_index(tau: &Perm) -> Option<usize> {
    let e = tau.entries();
    let len = e.len();
    if len.is_multiple_of(2) || !tau.avoids_132() {
        return None;
    }
    let s = e[0] - 1;
    // large values in increasing order
    let large: Vec<u8> = e.iter().copied().filter(|&v| v > s).collect();
    if large
        .iter()
        .zip(large.iter().skip(1))
        .any(|(a, b)| b != &(a + 1))
    {
        return None;
    }
    // each maximal block of small values is one increasing run of
    // consecutive values, and the blocks step downwards
    let mut ceiling = s + 1;
    let mut i = 0;
    while i < len {
        if e[i] > s {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < len && e[i + 1] <= s {
            if e[i + 1] != e[i] + 1 {
                return None;
            }
            i += 1;
        }
        if e[i] + 1 != ceiling {
            return None;
        }
        ceiling = e[start];
        i += 1;
    }
    // positions where a run of small values ends
    for (pos, w) in e.windows(2).enumerate() {
        if w[0] <= s && w[1] > s && (pos + 1) % 2 == 0 {
            return None;
        }
    }
    Some(len / 2)
}

/// Triple for an odd-wedge pattern of length `2k + 1`:
/// `E = (R_{2k+1} + x R_k(x²) + 1)/2`, `O = (R_{2k+1} − x R_k(x²) − 1)/2`.
pub fn odd_wedge(tau: &Perm) -> Option<GfTriple> {
    let k = odd_wedge_index(tau)?;
    let m = RatFunc::one() + RatFunc::x() * r_sq(k);
    Some(GfTriple::from_f_m(r(2 * k + 1), m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn mmc_examples() {
        let mut engine = Engine::new();
        assert_eq!(
            closed_mmc_for(&mut engine, &perm("1")).unwrap(),
            rf(&[1, 1], &[1, 0, 1])
        );
        assert_eq!(
            closed_mmc_for(&mut engine, &perm("12")).unwrap(),
            rf(&[1, 1], &[1])
        );
        assert_eq!(
            closed_mmc_for(&mut engine, &perm("21")).unwrap(),
            engine.m_tau(&perm("213")).unwrap()
        );
        assert_eq!(
            closed_mmc_for(&mut engine, &Perm::empty()).unwrap(),
            RatFunc::one()
        );
    }

    #[test]
    fn unrestricted_small_counts() {
        let (e, o) = closed_unrestricted(6);
        assert_eq!(e.coeff(0), &int(1));
        assert_eq!(o.coeff(0), &int(0));
        assert_eq!(e.coeff(2), &int(1));
        assert_eq!(e.coeff(3), &int(3));
    }

    #[test]
    fn increasing_small_cases() {
        assert_eq!(closed_increasing(1).unwrap().m, RatFunc::one());
        assert_eq!(closed_increasing(2).unwrap().m, rf(&[1, 1], &[1, 0, 1]));
        assert_eq!(closed_increasing(3).unwrap().m, rf(&[1, 1], &[1]));
    }

    #[test]
    fn two_one_increasing_small_cases() {
        assert_eq!(closed_213k(2).unwrap().m, rf(&[1], &[1, -1]));
        let mut engine = Engine::new();
        assert_eq!(
            closed_213k(3).unwrap(),
            engine.gftriple(&perm("213")).unwrap()
        );
    }

    #[test]
    fn wedge_detection() {
        assert_eq!(odd_wedge_index(&perm("23145")), Some(2));
        assert_eq!(odd_wedge_index(&perm("34251")), Some(2));
        assert_eq!(odd_wedge_index(&perm("12")), None);
        assert_eq!(odd_wedge_index(&perm("34512")), Some(2));
        // 2 and 1 would need a large value between them
        assert_eq!(odd_wedge_index(&perm("32145")), None);
        assert_eq!(odd_wedge_index(&perm("321")), None);
        // small values 2 1 3 are not a skew sum of increasing runs
        assert_eq!(odd_wedge_index(&perm("42135")), None);
        // 34 12 567: the stretch 3412 has even length
        assert_eq!(odd_wedge_index(&perm("3412567")), None);
    }

    #[test]
    fn detected_wedges_agree_with_engine() {
        let mut engine = Engine::new();
        let mut found = 0;
        for len in [3, 5, 7] {
            for p in crate::patterns::generate_132_avoiders(len) {
                if let Some(t) = odd_wedge(&p) {
                    assert_eq!(t, engine.gftriple(&p).unwrap(), "{p}");
                    found += 1;
                }
            }
        }
        assert!(found > 2);
    }
}
