//! Exact matrix rank over the rationals and over prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rationals,
    /// `F_p`; the modulus is assumed prime.
    Prime(u64),
}

impl Field {
    pub fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match *self {
            Field::Rationals => rank_rational(rows),
            Field::Prime(p) => rank_mod_prime(rows, p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "q" {
            return Ok(Field::Rationals);
        }
        let p: u64 = s
            .strip_prefix("fp:")
            .ok_or_else(|| format!("unknown field `{s}` (expected q or fp:P)"))?
            .parse()
            .map_err(|e| format!("bad prime in `{s}`: {e}"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(Field::Prime(p))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Rank over `Q` by fraction-free (Bareiss) elimination.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // Smallest pivot keeps intermediate entries short.
        let pivot = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            for c in col + 1..ncols {
                let v = (&prow[col] * &row[c] - &row[col] * &prow[c]) / &prev;
                row[c] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = prow[col].clone();
        rank += 1;
    }
    rank
}

/// Rank over `F_p`.
pub fn rank_mod_prime(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i128;
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| (v as i128).rem_euclid(p)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for v in &mut m[rank][col..ncols] {
            *v = *v * inv % p;
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                row[c] = (row[c] - factor * prow[c]).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    // Fermat; p is prime.
    let mut result = 1i128;
    let mut base = a.rem_euclid(p);
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}
