use serde::Serialize;

use super::Perm;
use crate::error::{Error, Result};

/// One block `(τ^i, m_i)`: the entries before a right-to-left maximum, then
/// the maximum itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub segment: Vec<u8>,
    pub max: u8,
}

/// `τ = (τ^0, m_0, τ^1, m_1, …, τ^r, m_r)` split along the right-to-left
/// maxima `m_0 = k > m_1 > … > m_r` of a 132-avoiding pattern.
///
/// Prefixes: `π^{-1} = ∅`, `π^0 = τ^0`, and `π^d` is the normalized
/// `(τ^0, m_0, …, τ^d, m_d)` for `d >= 1`. Suffixes: `σ^d` is the normalized
/// `(τ^d, m_d, …, τ^r, m_r)` and `σ^{r+1} = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalDecomposition {
    pattern: Perm,
    blocks: Vec<Block>,
    /// `prefixes[d + 1] = π^d` for `d = -1..=r`.
    prefixes: Vec<Perm>,
    /// `suffixes[d] = σ^d` for `d = 0..=r+1`.
    suffixes: Vec<Perm>,
}

impl CanonicalDecomposition {
    pub fn new(tau: &Perm) -> Result<Self> {
        if tau.is_empty() {
            return Err(Error::InvalidPerm(
                "the empty pattern has no decomposition".into(),
            ));
        }
        if !tau.avoids_132() {
            return Err(Error::Contains132(tau.to_string()));
        }
        let e = tau.entries();
        let mut is_max = vec![false; e.len()];
        let mut best = 0;
        for i in (0..e.len()).rev() {
            if e[i] > best {
                best = e[i];
                is_max[i] = true;
            }
        }
        let mut blocks = Vec::new();
        let mut segment = Vec::new();
        let mut block_end = Vec::new();
        for (i, &v) in e.iter().enumerate() {
            if is_max[i] {
                blocks.push(Block {
                    segment: std::mem::take(&mut segment),
                    max: v,
                });
                block_end.push(i + 1);
            } else {
                segment.push(v);
            }
        }
        let r = blocks.len() - 1;
        let mut prefixes = vec![Perm::empty(), Perm::normalize(&blocks[0].segment)];
        for &end in &block_end[1..] {
            prefixes.push(Perm::normalize(&e[..end]));
        }
        let mut suffixes = Vec::with_capacity(r + 2);
        let mut start = 0;
        for &end in &block_end {
            suffixes.push(Perm::normalize(&e[start..]));
            start = end;
        }
        suffixes.push(Perm::empty());
        Ok(CanonicalDecomposition {
            pattern: tau.clone(),
            blocks,
            prefixes,
            suffixes,
        })
    }

    pub fn pattern(&self) -> &Perm {
        &self.pattern
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of right-to-left maxima minus one.
    pub fn r(&self) -> usize {
        self.blocks.len() - 1
    }

    /// `π^d` for `0 <= d <= r`.
    pub fn pi(&self, d: usize) -> &Perm {
        &self.prefixes[d + 1]
    }

    /// `π^{d-1}` for `0 <= d <= r + 1`.
    pub fn pi_before(&self, d: usize) -> &Perm {
        &self.prefixes[d]
    }

    /// `σ^d` for `0 <= d <= r + 1`.
    pub fn sigma(&self, d: usize) -> &Perm {
        &self.suffixes[d]
    }

    /// The normalized initial segment `(τ^0, m_0, …, τ^i, m_i)`, ending at
    /// the `i`-th maximum; for `i = r` this is `τ` itself.
    pub fn through_max(&self, i: usize) -> Perm {
        let len: usize = self.blocks[..=i].iter().map(|b| b.segment.len() + 1).sum();
        Perm::normalize(&self.pattern.entries()[..len])
    }

    /// Flatten the blocks back into the pattern.
    pub fn reassemble(&self) -> Perm {
        let mut out = Vec::with_capacity(self.pattern.len());
        for b in &self.blocks {
            out.extend_from_slice(&b.segment);
            out.push(b.max);
        }
        Perm::from_vec_unchecked(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::generate_132_avoiders;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_of_3412() {
        let d = CanonicalDecomposition::new(&perm("3412")).unwrap();
        assert_eq!(d.r(), 1);
        assert_eq!(
            d.blocks()[0],
            Block {
                segment: vec![3],
                max: 4
            }
        );
        assert_eq!(
            d.blocks()[1],
            Block {
                segment: vec![1],
                max: 2
            }
        );
        assert_eq!(d.pi_before(0), &Perm::empty());
        assert_eq!(d.pi(0), &perm("1"));
        assert_eq!(d.pi(1), &perm("3412"));
        assert_eq!(d.sigma(0), &perm("3412"));
        assert_eq!(d.sigma(1), &perm("12"));
        assert_eq!(d.sigma(2), &Perm::empty());
        assert_eq!(d.through_max(0), perm("12"));
    }

    #[test]
    fn increasing_has_one_block() {
        let d = CanonicalDecomposition::new(&Perm::increasing(5)).unwrap();
        assert_eq!(d.r(), 0);
        assert_eq!(d.blocks()[0].segment, vec![1, 2, 3, 4]);
        assert_eq!(d.blocks()[0].max, 5);
        assert_eq!(d.pi(0), &Perm::increasing(4));
    }

    #[test]
    fn decreasing_is_all_maxima() {
        let d = CanonicalDecomposition::new(&perm("321")).unwrap();
        assert_eq!(d.r(), 2);
        assert!(d.blocks().iter().all(|b| b.segment.is_empty()));
        assert_eq!(
            d.blocks().iter().map(|b| b.max).collect::<Vec<_>>(),
            vec![3, 2, 1]
        );
    }

    #[test]
    fn rejects_132_and_empty() {
        assert_eq!(
            CanonicalDecomposition::new(&perm("2431")),
            Err(Error::Contains132("2431".into()))
        );
        assert!(CanonicalDecomposition::new(&Perm::empty()).is_err());
    }

    #[test]
    fn reassembly_and_block_ordering() {
        for n in 1..=7 {
            for tau in generate_132_avoiders(n) {
                let d = CanonicalDecomposition::new(&tau).unwrap();
                assert_eq!(d.reassemble(), tau);
                let blocks = d.blocks();
                assert_eq!(blocks[0].max as usize, n);
                for i in 0..blocks.len() - 1 {
                    let next = &blocks[i + 1];
                    for &v in &blocks[i].segment {
                        assert!(v > next.max);
                        assert!(next.segment.iter().all(|&w| v > w));
                    }
                }
                if d.r() >= 1 {
                    assert_eq!(d.pi(d.r()), &tau);
                }
                assert_eq!(d.sigma(0), &tau);
            }
        }
    }
}
