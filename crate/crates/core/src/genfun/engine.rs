//! Memoized solver for `F_τ` and `M_τ` over the canonical decomposition.
//!
//! With prefixes `π^d` and suffixes `σ^d`, and `F_∅ = M_∅ = 0`:
//!
//! ```text
//! F_τ = 1 + x Σ_d (F_{π^d} − F_{π^{d−1}}) F_{σ^d}
//! M_τ(x) − M_τ(−x)     = x Σ_d [P_d Q_d + P_d(−x) Q_d(−x)]
//! M_τ(x) + M_τ(−x) − 2 = x Σ_d [P_d Q_d(−x) − P_d(−x) Q_d]
//! ```
//!
//! where `P_d = M_{π^d} − M_{π^{d−1}}` and `Q_d = M_{σ^d}`. The pattern itself
//! shows up as `σ^0` and (when `r >= 1`) as `π^r`, always multiplied by a
//! strictly shorter pattern's function, so the first equation is linear in
//! `F_τ` and the other two are a 2×2 linear system in `(M_τ(x), M_τ(−x))`.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{solve_linear_2x2, RatFunc};
use crate::error::{Error, Result};
use crate::patterns::{CanonicalDecomposition, Perm};

/// `F`, `M = E − O`, `E`, `O` for one pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfTriple {
    pub f: RatFunc,
    pub m: RatFunc,
    pub e: RatFunc,
    pub o: RatFunc,
}

impl GfTriple {
    /// Build from `F` and `M`, with `E = (F + M)/2` and `O = (F − M)/2`.
    pub fn from_f_m(f: RatFunc, m: RatFunc) -> Self {
        let e = (&f + &m).half();
        let o = (&f - &m).half();
        GfTriple { f, m, e, o }
    }

    fn zero() -> Self {
        Self::from_f_m(RatFunc::zero(), RatFunc::zero())
    }
}

/// Memo table keyed by normalized pattern.
#[derive(Debug, Default)]
pub struct Engine {
    memo: HashMap<Perm, GfTriple>,
}

/// `c + a·F_τ`.
#[derive(Clone)]
struct LinearF {
    c: RatFunc,
    a: RatFunc,
}

impl LinearF {
    fn known(c: RatFunc) -> Self {
        LinearF {
            c,
            a: RatFunc::zero(),
        }
    }

    fn unknown() -> Self {
        LinearF {
            c: RatFunc::zero(),
            a: RatFunc::one(),
        }
    }

    fn is_known(&self) -> bool {
        self.a.is_zero()
    }

    fn sub(&self, rhs: &LinearF) -> LinearF {
        LinearF {
            c: &self.c - &rhs.c,
            a: &self.a - &rhs.a,
        }
    }

    fn mul(&self, rhs: &LinearF) -> Result<LinearF> {
        let (k, v) = match (self.is_known(), rhs.is_known()) {
            (true, _) => (&self.c, rhs),
            (_, true) => (&rhs.c, self),
            _ => return Err(Error::Inconsistent("F_τ appears quadratically".into())),
        };
        Ok(LinearF {
            c: k * &v.c,
            a: k * &v.a,
        })
    }
}

/// `c + a·A + b·B` with `A = M_τ(x)`, `B = M_τ(−x)`.
#[derive(Clone)]
struct Affine {
    c: RatFunc,
    a: RatFunc,
    b: RatFunc,
}

impl Affine {
    fn known(c: RatFunc) -> Self {
        Affine {
            c,
            a: RatFunc::zero(),
            b: RatFunc::zero(),
        }
    }

    fn unknown() -> Self {
        Affine {
            c: RatFunc::zero(),
            a: RatFunc::one(),
            b: RatFunc::zero(),
        }
    }

    fn is_known(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Apply `x → −x`, which also swaps the roles of `A` and `B`.
    fn reflect(&self) -> Self {
        Affine {
            c: self.c.neg_x(),
            a: self.b.neg_x(),
            b: self.a.neg_x(),
        }
    }

    fn add(&self, rhs: &Affine) -> Affine {
        Affine {
            c: &self.c + &rhs.c,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    fn sub(&self, rhs: &Affine) -> Affine {
        Affine {
            c: &self.c - &rhs.c,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    fn mul(&self, rhs: &Affine) -> Result<Affine> {
        let (k, v) = match (self.is_known(), rhs.is_known()) {
            (true, _) => (&self.c, rhs),
            (_, true) => (&rhs.c, self),
            _ => return Err(Error::Inconsistent("M_τ appears quadratically".into())),
        };
        Ok(Affine {
            c: k * &v.c,
            a: k * &v.a,
            b: k * &v.b,
        })
    }

    fn times_x(&self) -> Affine {
        Affine {
            c: self.c.shift(1),
            a: self.a.shift(1),
            b: self.b.shift(1),
        }
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized patterns.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn gftriple(&mut self, tau: &Perm) -> Result<GfTriple> {
        if tau.is_empty() {
            return Err(Error::InvalidPerm(
                "the empty pattern has no generating function here".into(),
            ));
        }
        self.triple(tau)
    }

    pub fn f_tau(&mut self, tau: &Perm) -> Result<RatFunc> {
        Ok(self.gftriple(tau)?.f)
    }

    pub fn m_tau(&mut self, tau: &Perm) -> Result<RatFunc> {
        Ok(self.gftriple(tau)?.m)
    }

    /// Like [`Engine::gftriple`] but maps `∅` to the zero triple.
    fn triple(&mut self, tau: &Perm) -> Result<GfTriple> {
        if tau.is_empty() {
            return Ok(GfTriple::zero());
        }
        if let Some(t) = self.memo.get(tau) {
            return Ok(t.clone());
        }
        let dec = CanonicalDecomposition::new(tau)?;
        let f = self.solve_f(&dec)?;
        let m = self.solve_m(&dec)?;
        let t = GfTriple::from_f_m(f, m);
        self.memo.insert(tau.clone(), t.clone());
        Ok(t)
    }

    fn linear_f(&mut self, p: &Perm, tau: &Perm) -> Result<LinearF> {
        if p == tau {
            Ok(LinearF::unknown())
        } else {
            Ok(LinearF::known(self.triple(p)?.f))
        }
    }

    fn affine_m(&mut self, p: &Perm, tau: &Perm) -> Result<Affine> {
        if p == tau {
            Ok(Affine::unknown())
        } else {
            Ok(Affine::known(self.triple(p)?.m))
        }
    }

    fn solve_f(&mut self, dec: &CanonicalDecomposition) -> Result<RatFunc> {
        let tau = dec.pattern();
        let mut sum = LinearF::known(RatFunc::zero());
        for d in 0..=dec.r() {
            let diff = self
                .linear_f(dec.pi(d), tau)?
                .sub(&self.linear_f(dec.pi_before(d), tau)?);
            let term = diff.mul(&self.linear_f(dec.sigma(d), tau)?)?;
            sum = LinearF {
                c: &sum.c + &term.c,
                a: &sum.a + &term.a,
            };
        }
        // F = 1 + x (c + a F)
        let coeff = RatFunc::one() - sum.a.shift(1);
        if coeff.is_zero() {
            return Err(Error::SingularRecursion(format!("F_{tau}")));
        }
        (RatFunc::one() + sum.c.shift(1)).checked_div(&coeff)
    }

    fn solve_m(&mut self, dec: &CanonicalDecomposition) -> Result<RatFunc> {
        let tau = dec.pattern();
        let zero = Affine::known(RatFunc::zero());
        let (mut diff_rhs, mut sum_rhs) = (zero.clone(), zero);
        for d in 0..=dec.r() {
            let p = self
                .affine_m(dec.pi(d), tau)?
                .sub(&self.affine_m(dec.pi_before(d), tau)?);
            let q = self.affine_m(dec.sigma(d), tau)?;
            let (p_neg, q_neg) = (p.reflect(), q.reflect());
            diff_rhs = diff_rhs.add(&p.mul(&q)?.add(&p_neg.mul(&q_neg)?));
            sum_rhs = sum_rhs.add(&p.mul(&q_neg)?.sub(&p_neg.mul(&q)?));
        }
        let diff_rhs = diff_rhs.times_x();
        let sum_rhs = sum_rhs.times_x();
        // A − B = c1 + a1 A + b1 B ;  A + B − 2 = c2 + a2 A + b2 B
        let one = RatFunc::one();
        let (a, b) = solve_linear_2x2(
            &(&one - &diff_rhs.a),
            &(-(&one + &diff_rhs.b)),
            &(&one - &sum_rhs.a),
            &(&one - &sum_rhs.b),
            &diff_rhs.c,
            &(RatFunc::from_int(2) + sum_rhs.c),
        )
        .map_err(|_| Error::SingularRecursion(format!("M_{tau}")))?;
        if a.neg_x() != b {
            return Err(Error::Inconsistent(format!(
                "M_{tau}(−x) does not match the solved pair"
            )));
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::chebyshev::r;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn single_letter() {
        let t = Engine::new().gftriple(&perm("1")).unwrap();
        assert_eq!(t.f, RatFunc::one());
        assert_eq!(t.m, RatFunc::one());
        assert_eq!(t.o, RatFunc::zero());
    }

    #[test]
    fn length_two_increasing() {
        let t = Engine::new().gftriple(&perm("12")).unwrap();
        assert_eq!(t.f, rf(&[1], &[1, -1]));
        assert_eq!(t.m, rf(&[1, 1], &[1, 0, 1]));
        assert_eq!(t.e, rf(&[1, 1], &[1, 0, 0, 0, -1]));
        assert_eq!(t.o, rf(&[0, 0, 1, 1], &[1, 0, 0, 0, -1]));
    }

    #[test]
    fn length_three_increasing() {
        let t = Engine::new().gftriple(&perm("123")).unwrap();
        assert_eq!(t.f, rf(&[1, -1], &[1, -2]));
        assert_eq!(t.m, rf(&[1, 1], &[1]));
        // E = 1 + x + x²/(1 − 2x), O = x²/(1 − 2x)
        assert_eq!(
            t.e,
            RatFunc::from(Poly::from_ints(&[1, 1])) + rf(&[0, 0, 1], &[1, -2])
        );
        assert_eq!(t.o, rf(&[0, 0, 1], &[1, -2]));
    }

    #[test]
    fn two_one_three() {
        let t = Engine::new().gftriple(&perm("213")).unwrap();
        // (1−2x)(1−3x²+4x⁴) = 1 − 2x − 3x² + 6x³ + 4x⁴ − 8x⁵
        let den = [1, -2, -3, 6, 4, -8];
        // (1−x)(1−4x²+4x⁴) = 1 − x − 4x² + 4x³ + 4x⁴ − 4x⁵
        assert_eq!(t.e, rf(&[1, -1, -4, 4, 4, -4], &den));
        assert_eq!(t.o, rf(&[0, 0, 1, -1], &den));
    }

    #[test]
    fn increasing_patterns_give_r_k() {
        let mut engine = Engine::new();
        for k in 1..=8 {
            assert_eq!(engine.f_tau(&Perm::increasing(k)).unwrap(), r(k), "k = {k}");
        }
    }

    #[test]
    fn memo_is_keyed_by_pattern() {
        let mut engine = Engine::new();
        engine.gftriple(&perm("3412")).unwrap();
        let before = engine.memo_len();
        engine.gftriple(&perm("12")).unwrap();
        assert_eq!(engine.memo_len(), before);
    }

    #[test]
    fn rejects_patterns_with_132() {
        assert!(matches!(
            Engine::new().gftriple(&perm("132")),
            Err(Error::Contains132(_))
        ));
    }
}
