//! Permutations containing a pattern an exact number of times.

use serde::Serialize;

use crate::algebra::{RatFunc, Series, Substitution};
use crate::chebyshev::{cleared_u, cleared_w, r_sq};
use crate::error::{Error, Result};
use crate::patterns::{oracle_series, CanonicalDecomposition, Constraints, ParitySeries, Perm};

/// `M_{τ;1} = E_{τ;1} − O_{τ;1}` with its parity parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainOnceGf {
    pub m1: RatFunc,
    pub e1: RatFunc,
    pub o1: RatFunc,
}

/// Generating function of 132-avoiders containing `12…L` exactly once:
/// `x^L / Ŵ_L(x)²`.
pub fn g_increasing_once(len: usize) -> RatFunc {
    let w = cleared_w(len);
    RatFunc::new(
        crate::algebra::Poly::monomial(crate::algebra::int(1), len),
        &w * &w,
    )
    .expect("nonzero")
}

/// Exactly-once containment of `12…L`, `L >= 1`.
///
/// `L = 2m + 1`: `M = x^{2m+1} / Û_m²`.
/// `L = 2m + 2`: `M = x^{2m+2} R² (1 + 2xR − x²R²) / ((1 + x²R²)² Û_m²)` with
/// `R = R_{m+1}(x²)`.
pub fn contain_once_increasing(len: usize) -> Result<ContainOnceGf> {
    if len == 0 {
        return Err(Error::OutOfRange(
            "pattern length must be at least 1".into(),
        ));
    }
    let m = (len - 1) / 2;
    let u = RatFunc::from(cleared_u(m));
    let u2 = &u * &u;
    let m1 = if len % 2 == 1 {
        RatFunc::x_pow(len).checked_div(&u2)?
    } else {
        let r = r_sq(m + 1);
        let r2 = &r * &r;
        let one = RatFunc::one();
        let factor = &one + r.shift(1).scale(&crate::algebra::int(2)) - r2.shift(2);
        let den = (&one + r2.shift(2)).pow(2) * &u2;
        (r2.shift(len) * factor).checked_div(&den)?
    };
    let g = g_increasing_once(len);
    Ok(ContainOnceGf {
        e1: (&g + &m1).half(),
        o1: (&g - &m1).half(),
        m1,
    })
}

/// `M_{[2k+1];r}` for `r ∈ {0, 1, 2}`:
/// `1 + xR_k(x²)`, `x^{2k+1}/Û_k²`, and `x^{2k+2}(xR_k(x²) − 1)/Û_k²`.
pub fn contain_r_increasing(k: usize, r: u32) -> Result<RatFunc> {
    if k == 0 {
        return Err(Error::OutOfRange("needs k >= 1".into()));
    }
    let u = RatFunc::from(cleared_u(k));
    let u2 = &u * &u;
    match r {
        0 => Ok(RatFunc::one() + RatFunc::x() * r_sq(k)),
        1 => RatFunc::x_pow(2 * k + 1).checked_div(&u2),
        2 => ((RatFunc::x() * r_sq(k) - RatFunc::one()).shift(2 * k + 2)).checked_div(&u2),
        _ => Err(Error::OutOfRange(format!("r = {r} is not one of 0, 1, 2"))),
    }
}

/// Generating function of 132-avoiders containing `12…L` exactly twice,
/// `L = 2k + 1`: `x^{L+1} Ŵ_{L−1} / Ŵ_L³`.
pub fn g_increasing_twice(len: usize) -> RatFunc {
    let w = cleared_w(len);
    RatFunc::new(
        &crate::algebra::Poly::monomial(crate::algebra::int(1), len + 1) * &cleared_w(len - 1),
        &(&w * &w) * &w,
    )
    .expect("nonzero")
}

/// The exactly-twice form with the cleared polynomials indexed by `k`
/// rather than by the pattern length: `x^{k+1} Ŵ_{k−1} / Ŵ_k³`.
pub fn literal_g_increasing_twice(k: usize) -> RatFunc {
    g_increasing_twice(k)
}

/// Which pairing of prefix/suffix restrictions to use in the sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    /// Term `d` splits `π = β n γ` with `β` avoiding `π^d`, containing
    /// `π^{d−1}` once, and `γ` avoiding `σ^{d−1}`, containing `σ^d` once,
    /// where `π^{r+1}` and `σ^{−1}` mean "no restriction".
    Literal,
    /// As `Literal`, except the `d = 1` term has `β` avoiding the initial
    /// segment that ends at the maximum `m_0`, which is what the
    /// decomposition `π = β n γ` actually requires.
    Exact,
}

/// One side of a split: avoid `avoid` (if any) and contain `contain` once.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Side {
    avoid: Option<Perm>,
    contain: Perm,
}

fn side_series(side: &Side, order: usize) -> Result<ParitySeries> {
    let mut c = Constraints::new().contain(side.contain.clone(), 1);
    if let Some(a) = &side.avoid {
        c = c.avoid(a.clone());
    }
    oracle_series(&c, order)
}

fn split_terms(dec: &CanonicalDecomposition, pairing: Pairing) -> Vec<(Side, Side)> {
    let r = dec.r();
    let prefix_avoid = |d: usize| -> Option<Perm> {
        if d == r + 1 {
            None
        } else {
            Some(dec.pi(d).clone())
        }
    };
    (0..=r + 1)
        .map(|d| {
            let beta_avoid = match (pairing, d) {
                (Pairing::Exact, 1) => Some(dec.through_max(0)),
                _ => prefix_avoid(d),
            };
            let beta = Side {
                avoid: beta_avoid,
                contain: dec.pi_before(d).clone(),
            };
            let gamma_avoid = if d == 0 {
                None
            } else {
                Some(dec.sigma(d - 1).clone())
            };
            let gamma = Side {
                avoid: gamma_avoid,
                contain: dec.sigma(d).clone(),
            };
            (beta, gamma)
        })
        .collect()
}

/// Outcome of checking one equation through a given order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub name: &'static str,
    pub pairing: Pairing,
    pub holds: bool,
}

fn plus(s: &Series) -> Series {
    s + &s.substitute(Substitution::Neg)
}

fn minus(s: &Series) -> Series {
    s - &s.substitute(Substitution::Neg)
}

/// Check the exactly-once equations for `τ` coefficientwise through
/// `x^order`, with every component series taken from the oracle.
///
/// Checked equations, summing over the split terms `(β, γ)`:
///
/// ```text
/// even-difference  E(x) − E(−x) = x Σ [E_β E_γ + O_β O_γ](x) + [..](−x)
/// odd-difference   O(x) − O(−x) = x Σ [E_β O_γ + O_β E_γ](x) + [..](−x)
/// even-sum         E(x) + E(−x) = x/2 Σ E_β⁺O_γ⁻ + O_β⁺E_γ⁻ + E_β⁻E_γ⁺ + O_β⁻O_γ⁺
/// odd-sum          O(x) + O(−x) = x/2 Σ E_β⁺E_γ⁻ + O_β⁺O_γ⁻ + E_β⁻O_γ⁺ + O_β⁻E_γ⁺
/// signed-difference M(x) − M(−x) = x Σ [M_β M_γ](x) + [M_β M_γ](−x)
/// signed-sum        M(x) + M(−x) = x Σ M_β(x) M_γ(−x) − M_β(−x) M_γ(x)
/// total             G = x Σ G_β G_γ
/// ```
///
/// where `f⁺ = f(x) + f(−x)` and `f⁻ = f(x) − f(−x)`.
pub fn verify_containment_equations(
    tau: &Perm,
    order: usize,
    pairing: Pairing,
) -> Result<Vec<EquationCheck>> {
    let dec = CanonicalDecomposition::new(tau)?;
    let whole = oracle_series(&Constraints::new().contain(tau.clone(), 1), order)?;
    let (e, o) = (whole.even(), whole.odd());
    let m = &e - &o;
    let g = &e + &o;

    let zero = Series::zero(order);
    let mut sums = [
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero,
    ];
    for (beta, gamma) in split_terms(&dec, pairing) {
        let b = side_series(&beta, order)?;
        let c = side_series(&gamma, order)?;
        let (eb, ob, ec, oc) = (b.even(), b.odd(), c.even(), c.odd());
        let (mb, mc) = (&eb - &ob, &ec - &oc);
        sums[0] = &sums[0] + &plus(&(&(&eb * &ec) + &(&ob * &oc)));
        sums[1] = &sums[1] + &plus(&(&(&eb * &oc) + &(&ob * &ec)));
        let es = &(&(&plus(&eb) * &minus(&oc)) + &(&plus(&ob) * &minus(&ec)))
            + &(&(&minus(&eb) * &plus(&ec)) + &(&minus(&ob) * &plus(&oc)));
        sums[2] = &sums[2] + &es;
        let os = &(&(&plus(&eb) * &minus(&ec)) + &(&plus(&ob) * &minus(&oc)))
            + &(&(&minus(&eb) * &plus(&oc)) + &(&minus(&ob) * &plus(&ec)));
        sums[3] = &sums[3] + &os;
        sums[4] = &sums[4] + &plus(&(&mb * &mc));
        let (mbn, mcn) = (
            mb.substitute(Substitution::Neg),
            mc.substitute(Substitution::Neg),
        );
        sums[5] = &sums[5] + &(&(&mb * &mcn) - &(&mbn * &mc));
        sums[6] = &sums[6] + &(&(&eb + &ob) * &(&ec + &oc));
    }
    let x = |s: &Series| s.shift(1);
    let checks = [
        ("even-difference", minus(&e) == x(&sums[0])),
        ("odd-difference", minus(&o) == x(&sums[1])),
        ("even-sum", plus(&e) == x(&sums[2]).half()),
        ("odd-sum", plus(&o) == x(&sums[3]).half()),
        ("signed-difference", minus(&m) == x(&sums[4])),
        ("signed-sum", plus(&m) == x(&sums[5])),
        ("total", g == x(&sums[6])),
    ];
    Ok(checks
        .into_iter()
        .map(|(name, holds)| EquationCheck {
            name,
            pairing,
            holds,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn small_increasing_cases() {
        assert_eq!(contain_once_increasing(1).unwrap().m1, RatFunc::x());
        assert_eq!(contain_once_increasing(3).unwrap().m1, RatFunc::x_pow(3));
        assert_eq!(
            contain_r_increasing(1, 0).unwrap(),
            RatFunc::from(Poly::from_ints(&[1, 1]))
        );
        assert_eq!(contain_r_increasing(1, 1).unwrap(), RatFunc::x_pow(3));
        assert_eq!(
            contain_r_increasing(1, 2).unwrap(),
            RatFunc::from(Poly::from_ints(&[0, 0, 0, 0, -1, 1]))
        );
    }

    #[test]
    fn twice_containment_at_length_four() {
        // 2134 is the only 132-avoider of length 4 with two occurrences of 123
        let s = g_increasing_twice(3).series(4).unwrap();
        assert_eq!(s.coeff(4), &crate::algebra::int(1));
        assert_eq!(
            literal_g_increasing_twice(1).series(2).unwrap().coeff(2),
            &crate::algebra::int(1)
        );
    }

    #[test]
    fn corrected_pairing_for_small_patterns() {
        for p in ["12", "21", "123"] {
            let checks = verify_containment_equations(&perm(p), 8, Pairing::Exact).unwrap();
            assert!(checks.iter().all(|c| c.holds), "{p}: {checks:?}");
        }
    }
}
