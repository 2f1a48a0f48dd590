//! Integer-coefficient helpers behind `Poly::gcd`.
//!
//! The gcd runs Euclid's algorithm on primitive integer polynomials, pulling
//! the content out of every pseudo-remainder. A single-prime image is tried
//! first: when the inputs are coprime modulo a prime that divides neither
//! leading coefficient, they are coprime over the integers and the
//! remainder sequence is skipped.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

const PRIME: u64 = (1 << 61) - 1;

pub(crate) fn content(coeffs: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in coeffs {
        g = g.gcd(c);
        if g == BigInt::from(1) {
            break;
        }
    }
    g
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in v.iter_mut() {
        *c /= &g;
    }
    v
}

/// Pseudo-remainder of `a` by `b` (both nonzero, trimmed).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn reduce(c: &BigInt) -> u64 {
    let m = BigInt::from(PRIME);
    c.mod_floor(&m).to_u64().unwrap()
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    powmod(a, PRIME - 2)
}

fn degree_of_gcd_mod_p(a: &[u64], b: &[u64]) -> usize {
    let mut x: Vec<u64> = a.to_vec();
    let mut y: Vec<u64> = b.to_vec();
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let dy = y.len() - 1;
        let li = inv(y[dy]);
        while x.len() > dy {
            let q = mulmod(*x.last().unwrap(), li);
            let shift = x.len() - 1 - dy;
            for (j, &c) in y.iter().enumerate() {
                let t = mulmod(q, c);
                x[shift + j] = (x[shift + j] + PRIME - t) % PRIME;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len().saturating_sub(1)
}

/// Primitive gcd with positive leading coefficient. Inputs must be nonzero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = primitive(a.to_vec());
    let b = primitive(b.to_vec());
    let ra: Vec<u64> = a.iter().map(reduce).collect();
    let rb: Vec<u64> = b.iter().map(reduce).collect();
    if *ra.last().unwrap() != 0 && *rb.last().unwrap() != 0 && degree_of_gcd_mod_p(&ra, &rb) == 0 {
        return vec![BigInt::from(1)];
    }
    let (mut x, mut y) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !y.is_empty() {
        let r = primitive(prem(&x, &y));
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_finds_common_factor() {
        // (2x + 1)(x - 3) and (2x + 1)(x + 5)
        assert_eq!(gcd(&v(&[-3, -5, 2]), &v(&[5, 11, 2])), v(&[1, 2]));
    }

    #[test]
    fn coprime_shortcut() {
        assert_eq!(gcd(&v(&[1, -2]), &v(&[1, -1])), v(&[1]));
    }
}
