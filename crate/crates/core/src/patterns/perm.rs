use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Parity of the inversion count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(inversions: u64) -> Self {
        if inversions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip_if(self, cond: bool) -> Self {
        match (self, cond) {
            (p, false) => p,
            (Parity::Even, true) => Parity::Odd,
            (Parity::Odd, true) => Parity::Even,
        }
    }

    pub fn combine(self, other: Parity) -> Self {
        self.flip_if(other == Parity::Odd)
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// A permutation of `1..=n` in one-line notation; also used for patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPerm(format!("length {n} is too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPerm(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(Perm::new(entries.clone()).is_ok());
        Perm(entries)
    }

    pub fn empty() -> Self {
        Perm(Vec::new())
    }

    /// The increasing pattern `12…k`, written `[k]`.
    pub fn increasing(k: usize) -> Self {
        Perm((1..=k as u8).collect())
    }

    /// `[k, d] = (d+1)(d+2)…k 1 2…d`.
    pub fn rotated(k: usize, d: usize) -> Result<Self> {
        if d == 0 || d >= k {
            return Err(Error::OutOfRange(format!(
                "[k, d] needs 1 <= d <= k - 1, got [{k}, {d}]"
            )));
        }
        Ok(Perm(((d + 1) as u8..=k as u8).chain(1..=d as u8).collect()))
    }

    /// `2134…k` for `k >= 2`.
    pub fn two_one_then_increasing(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::OutOfRange(format!("2134…k needs k >= 2, got {k}")));
        }
        Ok(Perm([2u8, 1].into_iter().chain(3..=k as u8).collect()))
    }

    /// The order-isomorphic permutation of a sequence of distinct values.
    pub fn normalize(values: &[u8]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut out = vec![0u8; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = (rank + 1) as u8;
        }
        Perm(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn inversions(&self) -> u64 {
        let e = &self.0;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.inversions())
    }

    /// Number of occurrences of `tau` (the empty pattern occurs once).
    pub fn occurrences(&self, tau: &Perm) -> u64 {
        Matcher::new(tau).count(&self.0, u64::MAX)
    }

    pub fn contains(&self, tau: &Perm) -> bool {
        Matcher::new(tau).count(&self.0, 1) > 0
    }

    pub fn avoids(&self, tau: &Perm) -> bool {
        !self.contains(tau)
    }

    pub fn avoids_132(&self) -> bool {
        self.avoids(&Perm(vec![1, 3, 2]))
    }

    /// Entries strictly greater than every entry to their right.
    pub fn right_to_left_maxima(&self) -> usize {
        let mut best = 0u8;
        let mut count = 0;
        for &v in self.0.iter().rev() {
            if v > best {
                best = v;
                count += 1;
            }
        }
        count
    }

    /// Occurrences of `12…j`, by counting increasing subsequences ending at
    /// each position.
    pub fn increasing_occurrences(&self, j: usize) -> u64 {
        if j == 0 {
            return 1;
        }
        let e = &self.0;
        let n = e.len();
        // ending[i] = number of increasing subsequences of the current length ending at i
        let mut ending = vec![1u64; n];
        for _ in 1..j {
            let mut next = vec![0u64; n];
            for i in 0..n {
                for h in 0..i {
                    if e[h] < e[i] {
                        next[i] += ending[h];
                    }
                }
            }
            ending = next;
        }
        ending.iter().sum()
    }

    /// Concatenate, shifting `other` above every entry of `self`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let k = self.len() as u8;
        Perm(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|v| v + k))
                .collect(),
        )
    }

    /// Concatenate, shifting `self` above every entry of `other`.
    pub fn skew_sum(&self, other: &Perm) -> Perm {
        let k = other.len() as u8;
        Perm(
            self.0
                .iter()
                .map(|v| v + k)
                .chain(other.0.iter().copied())
                .collect(),
        )
    }
}

/// Counts occurrences by backtracking over positions. Each pattern entry
/// only needs to sit between the nearest earlier pattern entries just below
/// and just above it in value, so those two thresholds are the whole state.
pub(crate) struct Matcher {
    k: usize,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Matcher {
    pub(crate) fn new(tau: &Perm) -> Self {
        let t = &tau.0;
        let k = t.len();
        let mut below = vec![None; k];
        let mut above = vec![None; k];
        for a in 0..k {
            for b in 0..a {
                if t[b] < t[a] && below[a].is_none_or(|c: usize| t[c] < t[b]) {
                    below[a] = Some(b);
                }
                if t[b] > t[a] && above[a].is_none_or(|c: usize| t[c] > t[b]) {
                    above[a] = Some(b);
                }
            }
        }
        Matcher { k, below, above }
    }

    /// Number of occurrences, stopping once `cap` is reached.
    pub(crate) fn count(&self, p: &[u8], cap: u64) -> u64 {
        if self.k == 0 {
            return 1;
        }
        if p.len() < self.k {
            return 0;
        }
        let mut chosen = vec![0u8; self.k];
        let mut total = 0;
        self.extend(p, 0, 0, &mut chosen, &mut total, cap);
        total
    }

    fn extend(
        &self,
        p: &[u8],
        a: usize,
        start: usize,
        chosen: &mut [u8],
        total: &mut u64,
        cap: u64,
    ) {
        let lo = self.below[a].map_or(0, |b| chosen[b]);
        let hi = self.above[a].map_or(u8::MAX, |b| chosen[b]);
        let last = p.len() - (self.k - a);
        for pos in start..=last {
            let v = p[pos];
            if v <= lo || v >= hi {
                continue;
            }
            if a + 1 == self.k {
                *total += 1;
            } else {
                chosen[a] = v;
                self.extend(p, a + 1, pos + 1, chosen, total, cap);
            }
            if *total >= cap {
                return;
            }
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `"2,1,3,4"` or, for patterns with entries at most 9, `"2134"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = || Error::InvalidPerm(format!("cannot parse {s:?}"));
        let entries: Vec<u8> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| parse_err()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(parse_err))
                .collect::<Result<_>>()?
        };
        Perm::new(entries)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let compact = self.0.len() <= 9;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
