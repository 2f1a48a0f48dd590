use std::sync::{Arc, Mutex};

use super::{Parity, Perm};

/// Every 132-avoider of each length `0..=max_n`, stored flat, with parity.
///
/// Length `n` is assembled from shorter lengths through the split
/// `π = β n γ`, where `β` is a 132-avoider on the `j` letters just below `n`
/// and `γ` one on `1..n-1-j`. The sign multiplies as
/// `sign(π) = (-1)^{(j+1)(n-1)} sign(β) sign(γ)`, so parity comes for free.
#[derive(Debug)]
pub struct AvoiderTable {
    levels: Vec<Level>,
}

#[derive(Debug, Clone)]
struct Level {
    len: usize,
    data: Vec<u8>,
    odd: Vec<bool>,
}

impl Level {
    fn count(&self) -> usize {
        self.odd.len()
    }

    fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.len..(i + 1) * self.len]
    }
}

static SHARED: Mutex<Option<Arc<AvoiderTable>>> = Mutex::new(None);

impl AvoiderTable {
    pub fn build(max_n: usize) -> Self {
        let mut table = AvoiderTable {
            levels: vec![Level {
                len: 0,
                data: Vec::new(),
                odd: vec![false],
            }],
        };
        table.extend_to(max_n);
        table
    }

    /// A process-wide table covering at least `max_n`, built on first use
    /// and replaced only by a larger one.
    pub fn shared(max_n: usize) -> Arc<AvoiderTable> {
        let mut guard = SHARED.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(t) = guard.as_ref().filter(|t| t.max_n() >= max_n) {
            return Arc::clone(t);
        }
        let mut table = match guard.as_ref() {
            Some(t) => AvoiderTable {
                levels: t.levels.clone(),
            },
            None => AvoiderTable::build(0),
        };
        table.extend_to(max_n);
        let table = Arc::new(table);
        *guard = Some(Arc::clone(&table));
        table
    }

    fn extend_to(&mut self, max_n: usize) {
        for n in self.levels.len()..=max_n {
            let mut data = Vec::new();
            let mut odd = Vec::new();
            for j in 0..n {
                let beta = &self.levels[j];
                let gamma = &self.levels[n - 1 - j];
                let shift = (n - 1 - j) as u8;
                let split_flip = (j + 1) * (n - 1) % 2 == 1;
                for b in 0..beta.count() {
                    let bs = beta.get(b);
                    for g in 0..gamma.count() {
                        data.extend(bs.iter().map(|v| v + shift));
                        data.push(n as u8);
                        data.extend_from_slice(gamma.get(g));
                        odd.push(beta.odd[b] ^ gamma.odd[g] ^ split_flip);
                    }
                }
            }
            self.levels.push(Level { len: n, data, odd });
        }
    }

    pub fn max_n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn count(&self, n: usize) -> usize {
        self.levels[n].count()
    }

    /// Entries and parity of every 132-avoider of length `n`.
    pub fn iter(&self, n: usize) -> impl Iterator<Item = (&[u8], Parity)> + '_ {
        let level = &self.levels[n];
        (0..level.count()).map(move |i| {
            let parity = if level.odd[i] {
                Parity::Odd
            } else {
                Parity::Even
            };
            (level.get(i), parity)
        })
    }
}

/// The 132-avoiders of length `n`, each exactly once.
pub fn generate_132_avoiders(n: usize) -> impl Iterator<Item = Perm> {
    let table = AvoiderTable::shared(n);
    (0..table.count(n)).map(move |i| Perm::from_vec_unchecked(table.levels[n].get(i).to_vec()))
}
