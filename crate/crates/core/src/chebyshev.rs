//! Chebyshev polynomials of the second kind and the rational family `R_k`.
//!
//! Expressions in `U_n(1/(2√x))` and `U_n(1/(2x))` are never formed
//! directly. They are carried by the cleared polynomials
//! `Ŵ_n(x) = x^{n/2} U_n(1/(2√x))` and `Û_n(x) = x^n U_n(1/(2x)) = Ŵ_n(x²)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{int, Poly, RatFunc, Rational, Substitution};

/// `U_n(t)` as a polynomial in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ChebPoly(Poly);

impl ChebPoly {
    pub fn index(&self) -> usize {
        self.0.degree().finite().expect("U_n is never zero")
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    /// Clear the radical: `Ŵ_n(x) = sum_j u_j 2^{-j} x^{(n-j)/2}`.
    pub fn cleared(&self) -> Poly {
        let n = self.index();
        let mut coeffs = vec![Rational::zero(); n / 2 + 1];
        for (j, c) in self.0.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scale = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(j as u32));
            coeffs[(n - j) / 2] = c * scale;
        }
        Poly::from_coeffs(coeffs)
    }
}

/// `U_0 = 1`, `U_1 = 2t`, `U_n = 2t U_{n-1} - U_{n-2}`.
pub fn chebyshev_u(n: usize) -> ChebPoly {
    let two_t = Poly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    for _ in 0..n {
        let next = &(&two_t * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    ChebPoly(cur)
}

/// `Ŵ_0 .. Ŵ_n` from `Ŵ_n = Ŵ_{n-1} - x Ŵ_{n-2}`.
pub fn cleared_w_family(n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(), Poly::one()];
    for i in 2..=n {
        let next = &out[i - 1] - &out[i - 2].shift(1);
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

pub fn cleared_w(n: usize) -> Poly {
    cleared_w_family(n).pop().expect("family is nonempty")
}

/// `Û_n(x) = Ŵ_n(x²)`.
pub fn cleared_u(n: usize) -> Poly {
    cleared_w(n).substitute(Substitution::Square)
}

/// `R_k = Ŵ_{k-1} / Ŵ_k`, with `R_0 = 0`.
pub fn r(k: usize) -> RatFunc {
    if k == 0 {
        return RatFunc::zero();
    }
    let w = cleared_w_family(k);
    RatFunc::new(w[k - 1].clone(), w[k].clone()).expect("Ŵ_k is nonzero")
}

/// `R_k(x²)`.
pub fn r_sq(k: usize) -> RatFunc {
    r(k).at_x_squared()
}

/// `R_0 .. R_k` by iterating `R_k = 1 / (1 - x R_{k-1})` from `R_0 = 0`.
pub fn r_by_recurrence(k: usize) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::zero()];
    for i in 1..=k {
        let step = (RatFunc::one() - RatFunc::x() * &out[i - 1])
            .inv()
            .expect("1 - x R is never zero");
        out.push(step);
    }
    out
}

/// The identities tied to `R_k` and the cleared polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `R_k = Ŵ_{k-1}/Ŵ_k`, with `Ŵ` recovered from `U_n(t)` by clearing.
    Drk { k: usize },
    /// `R_k = 1/(1 - x R_{k-1})`.
    Rk { k: usize },
    /// `1 - x² R_p(x²) R_q(x²) = Û_{p+q} / (Û_p Û_q)`.
    IrksProduct { p: usize, q: usize },
    /// `1 - x² (R_p(x²) + R_q(x²)) = Û_{p+q+1} / (Û_p Û_q)`.
    IrksSum { p: usize, q: usize },
}

/// Exact check of one identity.
pub fn verify_identity(which: Identity) -> bool {
    match which {
        Identity::Drk { k } => {
            if k == 0 {
                return r(0).is_zero();
            }
            let lhs = RatFunc::new(chebyshev_u(k - 1).cleared(), chebyshev_u(k).cleared())
                .expect("nonzero");
            lhs == r(k) && lhs == r_by_recurrence(k)[k]
        }
        Identity::Rk { k } => {
            if k == 0 {
                return r(0).is_zero();
            }
            let rhs = (RatFunc::one() - RatFunc::x() * r(k - 1)).inv();
            rhs.is_ok_and(|v| v == r(k))
        }
        Identity::IrksProduct { p, q } => {
            let lhs = RatFunc::one() - (r_sq(p) * r_sq(q)).shift(2);
            lhs == u_ratio(p + q, p, q)
        }
        Identity::IrksSum { p, q } => {
            let lhs = RatFunc::one() - (r_sq(p) + r_sq(q)).shift(2);
            lhs == u_ratio(p + q + 1, p, q)
        }
    }
}

fn u_ratio(top: usize, p: usize, q: usize) -> RatFunc {
    RatFunc::new(cleared_u(top), &cleared_u(p) * &cleared_u(q)).expect("nonzero")
}

/// Evaluate `U_n(t)` at a rational point; used by property tests.
pub fn eval_u(n: usize, t: &Rational) -> Rational {
    let (mut prev, mut cur) = (Rational::zero(), Rational::one());
    let two_t = int(2) * t;
    for _ in 0..n {
        let next = &two_t * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn first_chebyshev_polynomials() {
        assert_eq!(chebyshev_u(0).poly(), &Poly::one());
        assert_eq!(chebyshev_u(1).poly(), &Poly::from_ints(&[0, 2]));
        assert_eq!(chebyshev_u(2).poly(), &Poly::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn first_r_values() {
        assert_eq!(r(1), RatFunc::one());
        assert_eq!(r(2), rf(&[1], &[1, -1]));
        assert_eq!(r(3), rf(&[1, -1], &[1, -2]));
    }

    #[test]
    fn cleared_values() {
        assert_eq!(cleared_w(2), Poly::from_ints(&[1, -1]));
        assert_eq!(cleared_w(3), Poly::from_ints(&[1, -2]));
        assert_eq!(cleared_u(1), Poly::one());
        assert_eq!(chebyshev_u(1).cleared(), Poly::one());
    }

    #[test]
    fn small_identities() {
        assert!(verify_identity(Identity::Rk { k: 3 }));
        assert!(verify_identity(Identity::Drk { k: 2 }));
        assert!(verify_identity(Identity::IrksProduct { p: 1, q: 1 }));
        assert!(verify_identity(Identity::IrksSum { p: 1, q: 1 }));
        assert!(verify_identity(Identity::IrksProduct { p: 0, q: 4 }));
    }

    #[test]
    fn u_hat_is_w_hat_at_x_squared() {
        // Û_n(x) = x^n U_n(1/(2x)); check at x = 1/3, i.e. t = 3/2.
        let x = Rational::new(1.into(), 3.into());
        let t = Rational::new(3.into(), 2.into());
        for n in 0..20 {
            let lhs = cleared_u(n).eval(&x);
            let rhs = num_traits::pow(x.clone(), n) * eval_u(n, &t);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn chebyshev_shape(n in 0usize..30) {
            let u = chebyshev_u(n);
            prop_assert_eq!(u.index(), n);
            prop_assert_eq!(u.poly().leading(), Rational::from_integer(num_bigint::BigInt::from(2).pow(n as u32)));
            prop_assert!(u.poly().has_integer_coeffs());
            let flipped = u.poly().substitute(Substitution::Neg);
            let expected = if n % 2 == 0 { u.poly().clone() } else { -u.poly() };
            prop_assert_eq!(flipped, expected);
        }

        #[test]
        fn r_is_ratio_of_consecutive_cleared(k in 1usize..30) {
            let drk = verify_identity(Identity::Drk { k });
            let rk = verify_identity(Identity::Rk { k });
            prop_assert!(drk && rk);
        }
    }
}
