//! Brute-force counts over the 132-avoiders of a given length.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::perm::Matcher;
use super::{AvoiderTable, Parity, Perm};
use crate::algebra::{BiSeries, Integer, Poly, Rational, Series};
use crate::error::{Error, Result};

/// Largest length enumerated unless a caller raises the bound explicitly.
pub const DEFAULT_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ParityFilter {
    Even,
    Odd,
    #[default]
    Both,
}

/// "Contains `pattern` exactly `count` times."
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainSpec {
    pub pattern: Perm,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    /// Right-to-left maxima.
    Rlm,
    /// Occurrences of `12…j`.
    Inc(usize),
    /// Occurrences of an arbitrary pattern.
    Occurrences(Perm),
}

impl Statistic {
    pub fn eval(&self, p: &Perm) -> u64 {
        match self {
            Statistic::Rlm => p.right_to_left_maxima() as u64,
            Statistic::Inc(j) => p.increasing_occurrences(*j),
            Statistic::Occurrences(tau) => p.occurrences(tau),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Rlm => write!(f, "rlm"),
            Statistic::Inc(j) => write!(f, "inc:{j}"),
            Statistic::Occurrences(tau) => write!(f, "occ:{tau}"),
        }
    }
}

/// Restrictions on a 132-avoider: patterns to avoid (132 is always among
/// them) and optionally a pattern to contain an exact number of times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraints {
    avoid: Vec<Perm>,
    contain: Option<ContainSpec>,
}

impl Default for Constraints {
    fn default() -> Self {
        Self::new()
    }
}

impl Constraints {
    pub fn new() -> Self {
        Constraints {
            avoid: vec![pattern_132()],
            contain: None,
        }
    }

    pub fn avoiding<'a>(patterns: impl IntoIterator<Item = &'a Perm>) -> Self {
        patterns
            .into_iter()
            .fold(Self::new(), |c, p| c.avoid(p.clone()))
    }

    pub fn avoid(mut self, tau: Perm) -> Self {
        if !self.avoid.contains(&tau) {
            self.avoid.push(tau);
        }
        self
    }

    pub fn contain(mut self, pattern: Perm, count: u64) -> Self {
        self.contain = Some(ContainSpec { pattern, count });
        self
    }

    pub fn avoided(&self) -> &[Perm] {
        &self.avoid
    }

    pub fn contained(&self) -> Option<&ContainSpec> {
        self.contain.as_ref()
    }

    fn compile(&self) -> Compiled {
        Compiled {
            // every candidate already avoids 132
            avoid: self
                .avoid
                .iter()
                .filter(|p| **p != pattern_132())
                .map(Matcher::new)
                .collect(),
            contain: self
                .contain
                .as_ref()
                .map(|c| (Matcher::new(&c.pattern), c.count)),
        }
    }
}

impl fmt::Display for Constraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let avoid: Vec<String> = self.avoid.iter().map(ToString::to_string).collect();
        write!(f, "avoid {{{}}}", avoid.join(", "))?;
        if let Some(c) = &self.contain {
            write!(f, ", contain {} exactly {} time(s)", c.pattern, c.count)?;
        }
        Ok(())
    }
}

fn pattern_132() -> Perm {
    Perm::from_vec_unchecked(vec![1, 3, 2])
}

struct Compiled {
    avoid: Vec<Matcher>,
    contain: Option<(Matcher, u64)>,
}

impl Compiled {
    fn accepts(&self, p: &[u8]) -> bool {
        if self.avoid.iter().any(|m| m.count(p, 1) > 0) {
            return false;
        }
        match &self.contain {
            Some((m, r)) => m.count(p, r + 1) == *r,
            None => true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParityCounts {
    pub even: u64,
    pub odd: u64,
}

impl ParityCounts {
    pub fn total(&self) -> u64 {
        self.even + self.odd
    }

    pub fn signed(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }

    fn add(&mut self, parity: Parity) {
        match parity {
            Parity::Even => self.even += 1,
            Parity::Odd => self.odd += 1,
        }
    }

    pub fn select(&self, filter: ParityFilter) -> u64 {
        match filter {
            ParityFilter::Even => self.even,
            ParityFilter::Odd => self.odd,
            ParityFilter::Both => self.total(),
        }
    }
}

/// A single-length oracle request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleQuery {
    pub n: usize,
    pub constraints: Constraints,
    pub parity: ParityFilter,
    pub statistic: Option<Statistic>,
}

/// Counts by parity, and the per-value histogram when a statistic was asked for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCount {
    pub counts: ParityCounts,
    pub distribution: Option<BTreeMap<u64, ParityCounts>>,
}

impl OracleQuery {
    pub fn new(n: usize) -> Self {
        OracleQuery {
            n,
            constraints: Constraints::new(),
            parity: ParityFilter::Both,
            statistic: None,
        }
    }

    pub fn avoid(mut self, tau: Perm) -> Self {
        self.constraints = self.constraints.avoid(tau);
        self
    }

    pub fn contain(mut self, pattern: Perm, count: u64) -> Self {
        self.constraints = self.constraints.contain(pattern, count);
        self
    }

    pub fn parity(mut self, parity: ParityFilter) -> Self {
        self.parity = parity;
        self
    }

    pub fn statistic(mut self, statistic: Statistic) -> Self {
        self.statistic = Some(statistic);
        self
    }

    pub fn run(&self) -> Result<OracleCount> {
        self.run_with_bound(DEFAULT_MAX_N)
    }

    pub fn run_with_bound(&self, bound: usize) -> Result<OracleCount> {
        check_bound(self.n, bound)?;
        let table = AvoiderTable::shared(self.n);
        let compiled = self.constraints.compile();
        let mut counts = ParityCounts::default();
        let mut distribution = self.statistic.as_ref().map(|_| BTreeMap::new());
        for (p, parity) in table.iter(self.n) {
            if !compiled.accepts(p) {
                continue;
            }
            counts.add(parity);
            if let (Some(stat), Some(dist)) = (&self.statistic, distribution.as_mut()) {
                let value = stat.eval(&Perm::from_vec_unchecked(p.to_vec()));
                dist.entry(value)
                    .or_insert_with(ParityCounts::default)
                    .add(parity);
            }
        }
        Ok(OracleCount {
            counts,
            distribution,
        })
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "oracle length n",
            value: n,
            bound,
        });
    }
    Ok(())
}

/// Counts by parity for every length `0..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParitySeries {
    pub counts: Vec<ParityCounts>,
}

impl ParitySeries {
    pub fn even(&self) -> Series {
        Series::from_integers(self.counts.iter().map(|c| Integer::from(c.even)))
    }

    pub fn odd(&self) -> Series {
        Series::from_integers(self.counts.iter().map(|c| Integer::from(c.odd)))
    }

    pub fn total(&self) -> Series {
        Series::from_integers(self.counts.iter().map(|c| Integer::from(c.total())))
    }

    /// Even minus odd.
    pub fn signed(&self) -> Series {
        Series::from_integers(self.counts.iter().map(|c| Integer::from(c.signed())))
    }
}

/// Oracle counts for lengths `0..=max_n`, bounded by [`DEFAULT_MAX_N`].
pub fn oracle_series(constraints: &Constraints, max_n: usize) -> Result<ParitySeries> {
    oracle_series_with_bound(constraints, max_n, DEFAULT_MAX_N)
}

pub fn oracle_series_with_bound(
    constraints: &Constraints,
    max_n: usize,
    bound: usize,
) -> Result<ParitySeries> {
    check_bound(max_n, bound)?;
    let table = AvoiderTable::shared(max_n);
    let compiled = constraints.compile();
    let counts = (0..=max_n)
        .map(|n| {
            let mut c = ParityCounts::default();
            for (p, parity) in table.iter(n) {
                if compiled.accepts(p) {
                    c.add(parity);
                }
            }
            c
        })
        .collect();
    Ok(ParitySeries { counts })
}

/// Statistic-marked generating series for lengths `0..=max_n`: the
/// coefficient of `x^n y^s` counts the accepted permutations of length `n`
/// with statistic value `s`. Returned as (even, odd).
pub fn oracle_bivariate(
    constraints: &Constraints,
    statistic: &Statistic,
    max_n: usize,
) -> Result<(BiSeries, BiSeries)> {
    check_bound(max_n, DEFAULT_MAX_N)?;
    let table = AvoiderTable::shared(max_n);
    let compiled = constraints.compile();
    let mut even_rows = Vec::with_capacity(max_n + 1);
    let mut odd_rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut hist: BTreeMap<u64, ParityCounts> = BTreeMap::new();
        for (p, parity) in table.iter(n) {
            if compiled.accepts(p) {
                let v = statistic.eval(&Perm::from_vec_unchecked(p.to_vec()));
                hist.entry(v).or_default().add(parity);
            }
        }
        let top = hist.keys().next_back().map_or(0, |&v| v as usize);
        let mut even = vec![Rational::from_integer(0.into()); top + 1];
        let mut odd = even.clone();
        for (v, c) in hist {
            even[v as usize] = Rational::from_integer(c.even.into());
            odd[v as usize] = Rational::from_integer(c.odd.into());
        }
        even_rows.push(Poly::from_coeffs(even));
        odd_rows.push(Poly::from_coeffs(odd));
    }
    Ok((
        BiSeries::from_rows(even_rows),
        BiSeries::from_rows(odd_rows),
    ))
}
