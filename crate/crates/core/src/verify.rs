//! Verification sweeps: closed forms against the engine, and both against
//! the enumeration oracle.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{catalan_series, BiSeries, RatFunc, Series};
use crate::chebyshev::{cleared_w, verify_identity, Identity};
use crate::error::{Error, Result};
use crate::genfun::{
    closed_213k, closed_increasing, closed_kd, closed_unrestricted, contain_once_increasing,
    contain_r_increasing, g_increasing_twice, gk_at_y_one, gk_xy, literal_g_increasing_twice,
    literal_m_rotated_even, m_increasing, odd_wedge, rlm_distribution, two_restrictions,
    verify_containment_equations, Engine, GfTriple, Pairing,
};
use crate::patterns::{
    generate_132_avoiders, oracle_bivariate, oracle_series_with_bound, Constraints, Perm,
    Statistic, DEFAULT_MAX_N,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A stated closed form disagrees with the engine and oracle, which
    /// agree with each other. Informational, not a failure.
    Discrepancy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Discrepancy => "discrepancy",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "increasing")]
    Increasing,
    #[serde(rename = "kd")]
    Kd,
    #[serde(rename = "wedge")]
    Wedge,
    #[serde(rename = "213k")]
    TwoOneK,
    #[serde(rename = "contain-once")]
    ContainOnce,
    #[serde(rename = "contain-eqs")]
    ContainEqs,
    #[serde(rename = "rlm")]
    Rlm,
    #[serde(rename = "two-restrict")]
    TwoRestrict,
    #[serde(rename = "gk-xy")]
    GkXy,
    #[serde(rename = "engine")]
    Engine,
    #[serde(rename = "examples")]
    Examples,
    #[serde(rename = "parity")]
    Parity,
    #[serde(rename = "chebyshev")]
    Chebyshev,
    #[serde(rename = "coefficients")]
    Coefficients,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Examples,
        Family::Chebyshev,
        Family::Parity,
        Family::Engine,
        Family::Increasing,
        Family::Kd,
        Family::Wedge,
        Family::TwoOneK,
        Family::Coefficients,
        Family::ContainOnce,
        Family::ContainEqs,
        Family::Rlm,
        Family::TwoRestrict,
        Family::GkXy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Increasing => "increasing",
            Family::Kd => "kd",
            Family::Wedge => "wedge",
            Family::TwoOneK => "213k",
            Family::ContainOnce => "contain-once",
            Family::ContainEqs => "contain-eqs",
            Family::Rlm => "rlm",
            Family::TwoRestrict => "two-restrict",
            Family::GkXy => "gk-xy",
            Family::Engine => "engine",
            Family::Examples => "examples",
            Family::Parity => "parity",
            Family::Chebyshev => "chebyshev",
            Family::Coefficients => "coefficients",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown family {s:?}")))
    }
}

/// One line of a report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub family: Family,
    pub params: String,
    /// Which closed form or identity the expected value comes from.
    pub source: String,
    pub expected: String,
    pub observed: String,
    pub verdict: Verdict,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == verdict).count()
    }

    /// No check failed; discrepancies are allowed.
    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {} {} ({}) {} ms\n",
                c.verdict, c.family, c.params, c.source, c.runtime_ms
            ));
            if c.verdict != Verdict::Pass {
                out.push_str(&format!(
                    "    expected: {}\n    observed: {}\n",
                    c.expected, c.observed
                ));
            }
        }
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} discrepancy\n",
            self.checks.len(),
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Discrepancy)
        ));
        out
    }
}

/// Sweep limits. `max_k` bounds pattern length (or the family index),
/// `max_n` the series order, `oracle_bound` the largest length the oracle
/// will enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_k: usize,
    pub max_n: usize,
    pub oracle_bound: usize,
}

impl Bounds {
    pub fn new(max_k: usize, max_n: usize) -> Self {
        Bounds {
            max_k,
            max_n,
            oracle_bound: DEFAULT_MAX_N,
        }
    }
}

struct Outcome {
    expected: String,
    observed: String,
    verdict: Verdict,
}

impl Outcome {
    fn compare<T: PartialEq + fmt::Display>(expected: T, observed: T) -> Self {
        Self::compare_as(expected, observed, Verdict::Fail)
    }

    /// Like [`Outcome::compare`] but a mismatch gets `on_mismatch`.
    fn compare_as<T: PartialEq + fmt::Display>(
        expected: T,
        observed: T,
        on_mismatch: Verdict,
    ) -> Self {
        let verdict = if expected == observed {
            Verdict::Pass
        } else {
            on_mismatch
        };
        Outcome {
            expected: expected.to_string(),
            observed: observed.to_string(),
            verdict,
        }
    }

    fn flag(ok: bool, expected: &str, observed: String) -> Self {
        Outcome {
            expected: expected.to_string(),
            observed,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }
}

/// Coefficients of a series, shown as integers when they are.
struct Coeffs(Series);

impl PartialEq for Coeffs {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl fmt::Display for Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

struct Bi(BiSeries);

impl PartialEq for Bi {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl fmt::Display for Bi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.rows().iter().map(|r| format!("({r})")).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

struct Sweep {
    family: Family,
    report: Report,
}

impl Sweep {
    fn new(family: Family) -> Self {
        Sweep {
            family,
            report: Report::default(),
        }
    }

    fn check(
        &mut self,
        params: impl Into<String>,
        source: &str,
        f: impl FnOnce() -> Result<Outcome>,
    ) {
        let start = Instant::now();
        let outcome = f().unwrap_or_else(|e| Outcome {
            expected: "no error".into(),
            observed: e.to_string(),
            verdict: Verdict::Fail,
        });
        self.report.checks.push(Check {
            family: self.family,
            params: params.into(),
            source: source.to_string(),
            expected: outcome.expected,
            observed: outcome.observed,
            verdict: outcome.verdict,
            runtime_ms: start.elapsed().as_millis() as u64,
        });
    }
}

/// Compare the even/odd series of `t` with the oracle through `max_n`.
fn against_oracle(t: &GfTriple, c: &Constraints, b: &Bounds) -> Result<Outcome> {
    let s = oracle_series_with_bound(c, b.max_n, b.oracle_bound)?;
    let expected = format!("E {} O {}", Coeffs(s.even()), Coeffs(s.odd()));
    let observed = format!(
        "E {} O {}",
        Coeffs(t.e.series(b.max_n)?),
        Coeffs(t.o.series(b.max_n)?)
    );
    Ok(Outcome::compare(expected, observed))
}

fn avoiders_between(lo: usize, hi: usize) -> impl Iterator<Item = Perm> {
    (lo..=hi).flat_map(generate_132_avoiders)
}

/// Run one family.
pub fn run_family(family: Family, b: &Bounds) -> Report {
    let mut sweep = Sweep::new(family);
    let mut engine = Engine::new();
    match family {
        Family::Examples => examples(&mut sweep, &mut engine),
        Family::Chebyshev => chebyshev(&mut sweep, b),
        Family::Parity => parity(&mut sweep, b),
        Family::Engine => engine_sweep(&mut sweep, &mut engine, b),
        Family::Increasing => increasing(&mut sweep, &mut engine, b),
        Family::Kd => kd(&mut sweep, &mut engine, b),
        Family::Wedge => wedge(&mut sweep, &mut engine, b),
        Family::TwoOneK => two_one_k(&mut sweep, &mut engine, b),
        Family::Coefficients => coefficients(&mut sweep),
        Family::ContainOnce => contain_once(&mut sweep, b),
        Family::ContainEqs => contain_eqs(&mut sweep, b),
        Family::Rlm => rlm(&mut sweep, b),
        Family::TwoRestrict => two_restrict(&mut sweep, b),
        Family::GkXy => gk(&mut sweep, b),
    }
    sweep.report
}

/// Run every family.
pub fn run_all(b: &Bounds) -> Report {
    let mut report = Report::default();
    for f in Family::ALL {
        report.extend(run_family(f, b));
    }
    report
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    use crate::algebra::Poly;
    RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).expect("nonzero denominator")
}

fn examples(s: &mut Sweep, engine: &mut Engine) {
    let cases: [(&str, &str, RatFunc, RatFunc); 3] = [
        (
            "12",
            "worked example for 12",
            rf(&[1, 1], &[1, 0, 0, 0, -1]),
            rf(&[0, 0, 1, 1], &[1, 0, 0, 0, -1]),
        ),
        (
            "123",
            "worked example for 123",
            RatFunc::from(crate::algebra::Poly::from_ints(&[1, 1])) + rf(&[0, 0, 1], &[1, -2]),
            rf(&[0, 0, 1], &[1, -2]),
        ),
        (
            "213",
            "worked example for 213",
            rf(&[1, -1, -4, 4, 4, -4], &[1, -2, -3, 6, 4, -8]),
            rf(&[0, 0, 1, -1], &[1, -2, -3, 6, 4, -8]),
        ),
    ];
    for (tau, source, e, o) in cases {
        let tau: Perm = tau.parse().expect("valid");
        s.check(format!("tau={tau}"), source, || {
            let t = engine.gftriple(&tau)?;
            Ok(Outcome::compare(
                format!("E = {e}; O = {o}"),
                format!("E = {}; O = {}", t.e, t.o),
            ))
        });
    }
    let tau: Perm = "123".parse().expect("valid");
    s.check("tau=123", "worked example for 123, signed", || {
        Ok(Outcome::compare(rf(&[1, 1], &[1]), engine.m_tau(&tau)?))
    });
    let tau: Perm = "12".parse().expect("valid");
    s.check("tau=12", "worked example for 12, signed", || {
        Ok(Outcome::compare(
            rf(&[1, 1], &[1, 0, 1]),
            engine.m_tau(&tau)?,
        ))
    });
}

fn chebyshev(s: &mut Sweep, b: &Bounds) {
    let k_max = 50.max(b.max_k);
    s.check(format!("k<={k_max}"), "R_k recurrence", || {
        let bad: Vec<usize> = (0..=k_max)
            .filter(|&k| !verify_identity(Identity::Rk { k }))
            .collect();
        Ok(Outcome::flag(
            bad.is_empty(),
            "all hold",
            format!("failing k: {bad:?}"),
        ))
    });
    s.check(
        format!("k<={k_max}"),
        "R_k as a ratio of cleared Chebyshev polynomials",
        || {
            let bad: Vec<usize> = (0..=k_max)
                .filter(|&k| !verify_identity(Identity::Drk { k }))
                .collect();
            Ok(Outcome::flag(
                bad.is_empty(),
                "all hold",
                format!("failing k: {bad:?}"),
            ))
        },
    );
    let pq = 20;
    for (name, make) in [
        (
            "product identity 1 − x²R_pR_q",
            (|p, q| Identity::IrksProduct { p, q }) as fn(usize, usize) -> Identity,
        ),
        (
            "sum identity 1 − x²(R_p + R_q)",
            (|p, q| Identity::IrksSum { p, q }) as fn(usize, usize) -> Identity,
        ),
    ] {
        s.check(format!("p,q<={pq}"), name, || {
            let mut bad = Vec::new();
            for p in 0..=pq {
                for q in 0..=pq {
                    if !verify_identity(make(p, q)) {
                        bad.push((p, q));
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "all hold",
                format!("failing (p, q): {bad:?}"),
            ))
        });
    }
}

fn parity(s: &mut Sweep, b: &Bounds) {
    let n = b.max_n;
    s.check(
        format!("n<={n}"),
        "parity split of all 132-avoiders",
        || {
            let (e, o) = closed_unrestricted(n);
            let or = oracle_series_with_bound(&Constraints::new(), n, b.oracle_bound)?;
            Ok(Outcome::compare(
                format!("E {} O {}", Coeffs(or.even()), Coeffs(or.odd())),
                format!("E {} O {}", Coeffs(e), Coeffs(o)),
            ))
        },
    );
    s.check(
        format!("2n-1<={n}"),
        "even/odd counts via Catalan numbers",
        || {
            let or = oracle_series_with_bound(&Constraints::new(), n, b.oracle_bound)?;
            let c = catalan_series(n);
            let half = |v: BigInt| v / 2;
            let cat = |i: usize| c.coeff(i).to_integer();
            let mut bad = Vec::new();
            for m in 1..=n.div_ceil(2) {
                if 2 * m - 1 > n {
                    break;
                }
                let odd_len = 2 * m - 1;
                if m >= 2 {
                    let even_len = 2 * m - 2;
                    let h = half(cat(even_len));
                    if BigInt::from(or.counts[even_len].even) != h
                        || BigInt::from(or.counts[even_len].odd) != h
                    {
                        bad.push(even_len);
                    }
                }
                let plus = half(cat(odd_len) + cat(m - 1));
                let minus = half(cat(odd_len) - cat(m - 1));
                if BigInt::from(or.counts[odd_len].even) != plus
                    || BigInt::from(or.counts[odd_len].odd) != minus
                {
                    bad.push(odd_len);
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "all lengths agree",
                format!("failing lengths: {bad:?}"),
            ))
        },
    );
}

fn engine_sweep(s: &mut Sweep, engine: &mut Engine, b: &Bounds) {
    for tau in avoiders_between(1, b.max_k) {
        s.check(format!("tau={tau}"), "recursive engine", || {
            let t = engine.gftriple(&tau)?;
            if t.f != &t.e + &t.o {
                return Err(Error::Inconsistent("F differs from E + O".into()));
            }
            against_oracle(&t, &Constraints::new().avoid(tau.clone()), b)
        });
    }
}

fn closed_vs_engine_and_oracle(
    s: &mut Sweep,
    engine: &mut Engine,
    b: &Bounds,
    tau: &Perm,
    params: String,
    source: &str,
    closed: impl FnOnce() -> Result<GfTriple>,
) {
    let mut value = None;
    s.check(params.clone(), source, || {
        let c = closed()?;
        let t = engine.gftriple(tau)?;
        let out = Outcome::compare(
            format!("E = {}; O = {}", t.e, t.o),
            format!("E = {}; O = {}", c.e, c.o),
        );
        value = Some(c);
        Ok(out)
    });
    if let Some(c) = value {
        s.check(params, &format!("{source}, series"), || {
            against_oracle(&c, &Constraints::new().avoid(tau.clone()), b)
        });
    }
}

fn increasing(s: &mut Sweep, engine: &mut Engine, b: &Bounds) {
    for k in 1..=b.max_k {
        let tau = Perm::increasing(k);
        closed_vs_engine_and_oracle(
            s,
            engine,
            b,
            &tau,
            format!("k={k}"),
            "increasing pattern",
            || closed_increasing(k),
        );
    }
}

fn kd(s: &mut Sweep, engine: &mut Engine, b: &Bounds) {
    for len in 2..=b.max_k {
        let mut firsts: Vec<(usize, RatFunc)> = Vec::new();
        for d in 1..len {
            let Ok(tau) = Perm::rotated(len, d) else {
                continue;
            };
            let params = format!("k={len},d={d}");
            closed_vs_engine_and_oracle(
                s,
                engine,
                b,
                &tau,
                params.clone(),
                "rotated pattern",
                || closed_kd(len, d),
            );
            if let Ok(t) = closed_kd(len, d) {
                firsts.push((d, t.e));
            }
            if len % 2 == 0 {
                s.check(params, "rotated pattern, even length, stated form", || {
                    let stated = literal_m_rotated_even(len, d)?;
                    let truth = engine.m_tau(&tau)?;
                    Ok(Outcome::compare_as(truth, stated, Verdict::Discrepancy))
                });
            }
        }
        if len % 2 == 1 {
            for parity in [1, 0] {
                let group: Vec<&(usize, RatFunc)> =
                    firsts.iter().filter(|(d, _)| d % 2 == parity).collect();
                if group.len() < 2 {
                    continue;
                }
                let label = if parity == 1 { "odd" } else { "even" };
                s.check(format!("k={len},d {label}"), "E independent of d", || {
                    let first = &group[0].1;
                    let differing: Vec<usize> = group
                        .iter()
                        .filter(|(_, e)| e != first)
                        .map(|(d, _)| *d)
                        .collect();
                    Ok(Outcome::flag(
                        differing.is_empty(),
                        "all equal",
                        format!("differing d: {differing:?}"),
                    ))
                });
            }
        }
    }
}

fn wedge(s: &mut Sweep, engine: &mut Engine, b: &Bounds) {
    for tau in avoiders_between(1, b.max_k) {
        let Some(closed) = odd_wedge(&tau) else {
            continue;
        };
        closed_vs_engine_and_oracle(
            s,
            engine,
            b,
            &tau,
            format!("tau={tau}"),
            "odd-wedge pattern",
            || Ok(closed),
        );
    }
}

fn two_one_k(s: &mut Sweep, engine: &mut Engine, b: &Bounds) {
    for len in 2..=b.max_k {
        let Ok(tau) = Perm::two_one_then_increasing(len) else {
            continue;
        };
        closed_vs_engine_and_oracle(
            s,
            engine,
            b,
            &tau,
            format!("k={len}"),
            "pattern 2134…k",
            || closed_213k(len),
        );
    }
}

/// `F_n` with `F_0 = F_1 = 1`.
fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(1));
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

type CoefficientRule = fn(usize) -> Option<BigInt>;

fn coefficients(s: &mut Sweep) {
    let n_max = 25;
    let rules: [(usize, &str, CoefficientRule); 3] = [
        (5, "e − o for 12345", |n| Some(BigInt::from(n % 2))),
        (7, "e − o for 1234567", |n| {
            if n < 3 {
                None
            } else if n % 2 == 0 {
                Some(BigInt::from(0))
            } else {
                Some(BigInt::from(2).pow(((n - 3) / 2) as u32))
            }
        }),
        (9, "e − o for 123456789", |n| {
            if n < 3 {
                None
            } else if n % 2 == 0 {
                Some(BigInt::from(0))
            } else {
                Some(fibonacci(n - 3))
            }
        }),
    ];
    for (len, source, rule) in rules {
        s.check(format!("k={len},n<={n_max}"), source, || {
            let m = closed_increasing(len)?.m.series(n_max)?;
            let mut bad = Vec::new();
            for n in 1..=n_max {
                if let Some(want) = rule(n) {
                    if m.coeff(n).to_integer() != want || !m.coeff(n).is_integer() {
                        bad.push(n);
                    }
                }
            }
            Ok(Outcome::flag(
                bad.is_empty(),
                "identity holds",
                format!("failing n: {bad:?}"),
            ))
        });
    }
}

fn contain_once(s: &mut Sweep, b: &Bounds) {
    for k in 1..=b.max_k {
        s.check(format!("k={k}"), "exactly one occurrence of 12…k", || {
            let g = contain_once_increasing(k)?;
            let t = GfTriple {
                f: &g.e1 + &g.o1,
                m: g.m1,
                e: g.e1,
                o: g.o1,
            };
            let total = RatFunc::new(crate::algebra::Poly::monomial(crate::algebra::int(1), k), {
                let w = cleared_w(k);
                &w * &w
            })?;
            if t.f != total {
                return Err(Error::Inconsistent("E1 + O1 differs from x^k/Ŵ_k²".into()));
            }
            against_oracle(&t, &Constraints::new().contain(Perm::increasing(k), 1), b)
        });
    }
    for k in 1.. {
        let len = 2 * k + 1;
        if len > b.max_k {
            break;
        }
        let tau = Perm::increasing(len);
        s.check(format!("k={k},r=0"), "r occurrences of 12…(2k+1)", || {
            let m = contain_r_increasing(k, 0)?;
            Ok(Outcome::compare(closed_increasing(len)?.m, m))
        });
        s.check(format!("k={k},r=1"), "r occurrences of 12…(2k+1)", || {
            let m = contain_r_increasing(k, 1)?;
            Ok(Outcome::compare(contain_once_increasing(len)?.m1, m))
        });
        for r in 0..=2u32 {
            s.check(
                format!("k={k},r={r}"),
                "r occurrences of 12…(2k+1), series",
                || {
                    let m = contain_r_increasing(k, r)?;
                    let c = if r == 0 {
                        Constraints::new().avoid(tau.clone())
                    } else {
                        Constraints::new().contain(tau.clone(), r as u64)
                    };
                    let or = oracle_series_with_bound(&c, b.max_n, b.oracle_bound)?;
                    Ok(Outcome::compare(
                        Coeffs(or.signed()),
                        Coeffs(m.series(b.max_n)?),
                    ))
                },
            );
        }
        s.check(
            format!("k={k},r=2"),
            "two occurrences of 12…(2k+1), parity split",
            || {
                let m = contain_r_increasing(k, 2)?;
                let t = GfTriple::from_f_m(g_increasing_twice(len), m);
                against_oracle(&t, &Constraints::new().contain(tau.clone(), 2), b)
            },
        );
        s.check(
            format!("k={k},r=2"),
            "two occurrences, total indexed by k as stated",
            || {
                Ok(Outcome::compare_as(
                    g_increasing_twice(len),
                    literal_g_increasing_twice(k),
                    Verdict::Discrepancy,
                ))
            },
        );
    }
}

fn contain_eqs(s: &mut Sweep, b: &Bounds) {
    for tau in avoiders_between(1, b.max_k.min(4)) {
        for pairing in [Pairing::Exact, Pairing::Literal] {
            let source = match pairing {
                Pairing::Exact => "exactly-once equations",
                Pairing::Literal => "exactly-once equations, stated pairing",
            };
            s.check(format!("tau={tau},n<={}", b.max_n), source, || {
                let checks = verify_containment_equations(&tau, b.max_n, pairing)?;
                let failing: Vec<&str> =
                    checks.iter().filter(|c| !c.holds).map(|c| c.name).collect();
                let on_mismatch = match pairing {
                    Pairing::Exact => Verdict::Fail,
                    Pairing::Literal => Verdict::Discrepancy,
                };
                Ok(Outcome {
                    expected: "all equations hold".into(),
                    observed: if failing.is_empty() {
                        "all equations hold".into()
                    } else {
                        format!("failing: {}", failing.join(", "))
                    },
                    verdict: if failing.is_empty() {
                        Verdict::Pass
                    } else {
                        on_mismatch
                    },
                })
            });
        }
    }
}

fn rlm(s: &mut Sweep, b: &Bounds) {
    let n = b.max_n;
    s.check(
        format!("n<={n}"),
        "right-to-left maxima distribution",
        || {
            let (even, odd) = rlm_distribution(n)?;
            if n > b.oracle_bound {
                return Err(Error::BoundExceeded {
                    what: "oracle length n",
                    value: n,
                    bound: b.oracle_bound,
                });
            }
            let (oe, oo) = oracle_bivariate(&Constraints::new(), &Statistic::Rlm, n)?;
            Ok(Outcome::compare(
                format!("E {} O {}", Bi(oe), Bi(oo)),
                format!("E {} O {}", Bi(even), Bi(odd)),
            ))
        },
    );
}

fn two_restrict(s: &mut Sweep, b: &Bounds) {
    for len in 4..=b.max_k {
        s.check(format!("L={len}"), "avoiding 12…L and 2134…L", || {
            let t = two_restrictions(len)?;
            let c = Constraints::new()
                .avoid(Perm::increasing(len))
                .avoid(Perm::two_one_then_increasing(len)?);
            against_oracle(&t, &c, b)
        });
    }
}

fn gk(s: &mut Sweep, b: &Bounds) {
    for k in 1..b.max_k {
        s.check(
            format!("k={k},n<={}", b.max_n),
            "occurrences of 12…k, avoiding 12…(k+1)",
            || {
                if b.max_n > b.oracle_bound {
                    return Err(Error::BoundExceeded {
                        what: "oracle length n",
                        value: b.max_n,
                        bound: b.oracle_bound,
                    });
                }
                let g = gk_xy(k, b.max_n)?;
                let c = Constraints::new().avoid(Perm::increasing(k + 1));
                let (e, o) = oracle_bivariate(&c, &Statistic::Inc(k), b.max_n)?;
                Ok(Outcome::compare(Bi(&e - &o), Bi(g)))
            },
        );
        s.check(format!("k={k}"), "occurrence marking at y = 1", || {
            Ok(Outcome::compare(m_increasing(k + 1), gk_at_y_one(k)?))
        });
    }
}
