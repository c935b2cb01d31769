//! Monomial ideals given by exponent vectors, their multigraded Betti numbers
//! and Castelnuovo-Mumford regularity.
//!
//! Betti numbers come from the upper Koszul simplicial complexes
//! `K^b(I) = {S : x^(b - 1_S) in I}`: `beta_{i,b}(I)` is the rank of the
//! reduced homology `H_{i-1}(K^b(I))`, and only multidegrees in the lcm
//! lattice can carry a nonzero value.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Field;

pub type Exponent = Vec<u32>;

/// Limits on lcm-lattice enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeCaps {
    pub max_generators: usize,
    pub max_joins: usize,
}

impl Default for LatticeCaps {
    fn default() -> Self {
        LatticeCaps { max_generators: 20, max_joins: 1 << 20 }
    }
}

/// A monomial ideal stored by its minimal generators, sorted in decreasing
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<Exponent>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn join(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn total_degree(a: &[u32]) -> i64 {
    a.iter().map(|&v| v as i64).sum()
}

impl MonomialIdeal {
    /// Drops duplicates and generators divisible by another generator.
    pub fn minimalize(mut gens: Vec<Exponent>) -> Result<Self> {
        let dim = gens.first().ok_or(Error::EmptyIdeal)?.len();
        if let Some(bad) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        gens.sort();
        gens.dedup();
        let minimal: Vec<Exponent> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .rev()
            .collect();
        Ok(MonomialIdeal { dim, generators: minimal })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn contains(&self, monomial: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, monomial))
    }

    /// Regularity of an ideal in two variables from its staircase.
    ///
    /// With generators `y1^b_i y2^c_i`, `b_1 > .. > b_r`, the value is
    /// `b_1 + c_1` for `r = 1` and `max_i (b_i + c_{i+1}) - 1` otherwise.
    pub fn regularity_bivariate(&self) -> Result<i64> {
        if self.dim != 2 {
            return Err(Error::NotBivariate(self.dim));
        }
        // Decreasing lex order is exactly b_1 > b_2 > ..; minimality forces
        // the c_i to increase.
        let g = &self.generators;
        if g.len() == 1 {
            return Ok(total_degree(&g[0]));
        }
        let best = g
            .windows(2)
            .map(|w| w[0][0] as i64 + w[1][1] as i64)
            .max()
            .expect("at least two generators");
        Ok(best - 1)
    }

    /// All joins (componentwise maxima) of nonempty generator subsets.
    pub fn lcm_lattice(&self, caps: LatticeCaps) -> Result<BTreeSet<Exponent>> {
        if self.generators.len() > caps.max_generators {
            return Err(Error::TooManyGenerators {
                count: self.generators.len(),
                cap: caps.max_generators,
            });
        }
        let mut lattice: BTreeSet<Exponent> = self.generators.iter().cloned().collect();
        let mut frontier: Vec<Exponent> = lattice.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for g in &self.generators {
                    let j = join(m, g);
                    if !lattice.contains(&j) {
                        if lattice.len() >= caps.max_joins {
                            return Err(Error::LatticeTooLarge { cap: caps.max_joins });
                        }
                        lattice.insert(j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        Ok(lattice)
    }

    /// Nonzero multigraded Betti numbers.
    pub fn betti_numbers(&self, field: Field, caps: LatticeCaps) -> Result<BettiTable> {
        let lattice: Vec<Exponent> = self.lcm_lattice(caps)?.into_iter().collect();
        let per_degree: Vec<Vec<(usize, u64)>> = lattice
            .par_iter()
            .map(|b| self.koszul_homology(b, field))
            .collect();
        let mut entries = BTreeMap::new();
        for (b, ranks) in lattice.into_iter().zip(per_degree) {
            for (i, rank) in ranks {
                entries.insert((i, b.clone()), rank);
            }
        }
        Ok(BettiTable { field, entries })
    }

    /// `max {|b| - i : beta_{i,b} != 0}`.
    pub fn regularity_general(&self, field: Field, caps: LatticeCaps) -> Result<i64> {
        Ok(self.betti_numbers(field, caps)?.regularity())
    }

    /// Uses the staircase formula in two variables and Betti numbers otherwise.
    pub fn regularity(&self, field: Field, caps: LatticeCaps) -> Result<i64> {
        if self.dim == 2 {
            self.regularity_bivariate()
        } else {
            self.regularity_general(field, caps)
        }
    }

    /// `(i, rank)` for each nonzero `beta_{i,b}`.
    fn koszul_homology(&self, b: &[u32], field: Field) -> Vec<(usize, u64)> {
        let d = self.dim;
        // Faces grouped by cardinality; bit k set means coordinate k lowered.
        let mut faces: Vec<Vec<u64>> = vec![Vec::new(); d + 1];
        let mut shifted = b.to_vec();
        for mask in 0u64..(1u64 << d) {
            let mut ok = true;
            for (k, slot) in shifted.iter_mut().enumerate() {
                if mask >> k & 1 == 1 {
                    if b[k] == 0 {
                        ok = false;
                        break;
                    }
                    *slot = b[k] - 1;
                } else {
                    *slot = b[k];
                }
            }
            if ok && self.contains(&shifted) {
                faces[mask.count_ones() as usize].push(mask);
            }
        }
        if faces[0].is_empty() {
            return Vec::new();
        }

        // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces.
        let mut boundary_rank = vec![0usize; d + 2];
        for s in 1..=d {
            if faces[s].is_empty() || faces[s - 1].is_empty() {
                continue;
            }
            boundary_rank[s] = field.rank(&boundary_matrix(&faces[s - 1], &faces[s]));
        }
        let mut out = Vec::new();
        for s in 0..=d {
            let n = faces[s].len();
            if n == 0 {
                continue;
            }
            // Size-s faces have dimension s - 1, which gives beta_{s, b}.
            let h = n - boundary_rank[s] - boundary_rank[s + 1];
            if h > 0 {
                out.push((s, h as u64));
            }
        }
        out
    }
}

fn boundary_matrix(lower: &[u64], upper: &[u64]) -> Vec<Vec<i64>> {
    let index: BTreeMap<u64, usize> = lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, &face) in upper.iter().enumerate() {
        let mut position = 0;
        for k in 0..64 {
            if face >> k & 1 == 1 {
                let sign = if position % 2 == 0 { 1 } else { -1 };
                // Every subface of a face is a face of the complex.
                if let Some(&row) = index.get(&(face & !(1u64 << k))) {
                    rows[row][col] = sign;
                }
                position += 1;
            }
        }
    }
    rows
}

/// Multigraded Betti numbers `beta_{i,b}` keyed by `(i, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub entries: BTreeMap<(usize, Exponent), u64>,
}

impl BettiTable {
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, b)| total_degree(b) - *i as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `beta_i`, summed over all multidegrees.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn get(&self, i: usize, b: &[u32]) -> u64 {
        self.entries.get(&(i, b.to_vec())).copied().unwrap_or(0)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            homological_degree: usize,
            multidegree: &'a Exponent,
            rank: u64,
        }
        #[derive(Serialize)]
        struct Table<'a> {
            field: Field,
            entries: Vec<Entry<'a>>,
        }
        let entries = self
            .entries
            .iter()
            .map(|((i, b), r)| Entry { homological_degree: *i, multidegree: b, rank: *r })
            .collect();
        Table { field: self.field, entries }.serialize(serializer)
    }
}
