//! Lattice points, semigroup presentations and membership.
//!
//! A presentation fixes the dimension `d`, the grading constant `alpha` and the
//! extra generators `a_1..a_c`. The unit generators `e_i = alpha * u_i` are
//! implicit. Every generator has coordinate sum `alpha`, so every generator has
//! degree one and membership can be decided by descending through degrees.

use std::cell::{OnceCell, RefCell};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer vector in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    /// `alpha` times the `axis`-th unit vector.
    pub fn scaled_unit(dim: usize, axis: usize, alpha: i64) -> Self {
        let mut coords = vec![0; dim];
        coords[axis] = alpha;
        LatticePoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &LatticePoint) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn componentwise_min(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn scale(&self, factor: i64) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c * factor).collect())
    }

    /// `sum(x) / alpha` as an exact rational.
    pub fn degree(&self, alpha: i64) -> Ratio<i64> {
        Ratio::new(self.coordinate_sum(), alpha)
    }

    /// The degree when it is an integer.
    pub fn integer_degree(&self, alpha: i64) -> Option<i64> {
        let sum = self.coordinate_sum();
        (sum % alpha == 0).then(|| sum / alpha)
    }

    /// Componentwise representative in `[0, alpha)`.
    pub fn residue(&self, alpha: i64) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c.mod_floor(&alpha)).collect())
    }

    pub fn is_equivalent(&self, other: &LatticePoint, alpha: i64) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| (a - b).mod_floor(&alpha) == 0)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint(coords.to_vec())
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// `(d, alpha, a_1..a_c)`; the generators `e_1..e_d` are implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupPresentation {
    pub d: usize,
    pub alpha: i64,
    #[serde(rename = "generators")]
    pub extras: Vec<LatticePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DimensionTooSmall { d: usize },
    NonPositiveAlpha { alpha: i64 },
    NoExtras,
    WrongLength { index: usize, len: usize },
    NegativeCoordinate { index: usize },
    WrongCoordinateSum { index: usize, sum: i64 },
    IsUnitGenerator { index: usize, axis: usize },
    Duplicate { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionTooSmall { d } => write!(f, "dimension {d} < 2"),
            Violation::NonPositiveAlpha { alpha } => write!(f, "alpha {alpha} is not positive"),
            Violation::NoExtras => write!(f, "at least one extra generator is required"),
            Violation::WrongLength { index, len } => {
                write!(f, "generator {} has {len} coordinates", index + 1)
            }
            Violation::NegativeCoordinate { index } => {
                write!(f, "generator {} has a negative coordinate", index + 1)
            }
            Violation::WrongCoordinateSum { index, sum } => {
                write!(f, "generator {} has coordinate sum {sum}, not alpha", index + 1)
            }
            Violation::IsUnitGenerator { index, axis } => {
                write!(f, "generator {} equals e_{}", index + 1, axis + 1)
            }
            Violation::Duplicate { first, second } => {
                write!(f, "generators {} and {} coincide", first + 1, second + 1)
            }
        }
    }
}

/// Outcome of [`SemigroupPresentation::validate`].
///
/// `gcd_warning` carries the common divisor of `alpha` and all extra
/// coordinates when it is not 1. It does not make the report invalid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub gcd_warning: Option<i64>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")?;
        } else {
            let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join("; "))?;
        }
        if let Some(g) = self.gcd_warning {
            write!(f, " (warning: coordinates share the factor {g})")?;
        }
        Ok(())
    }
}

impl SemigroupPresentation {
    pub fn new(d: usize, alpha: i64, extras: Vec<LatticePoint>) -> Self {
        SemigroupPresentation { d, alpha, extras }
    }

    pub fn codim(&self) -> usize {
        self.extras.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.d < 2 {
            violations.push(Violation::DimensionTooSmall { d: self.d });
        }
        if self.alpha <= 0 {
            violations.push(Violation::NonPositiveAlpha { alpha: self.alpha });
        }
        if self.extras.is_empty() {
            violations.push(Violation::NoExtras);
        }
        for (index, a) in self.extras.iter().enumerate() {
            if a.dim() != self.d {
                violations.push(Violation::WrongLength { index, len: a.dim() });
                continue;
            }
            if !a.is_nonnegative() {
                violations.push(Violation::NegativeCoordinate { index });
            }
            let sum = a.coordinate_sum();
            if sum != self.alpha {
                violations.push(Violation::WrongCoordinateSum { index, sum });
            }
            if self.alpha > 0 {
                for axis in 0..self.d {
                    if *a == LatticePoint::scaled_unit(self.d, axis, self.alpha) {
                        violations.push(Violation::IsUnitGenerator { index, axis });
                    }
                }
            }
        }
        for first in 0..self.extras.len() {
            for second in first + 1..self.extras.len() {
                if self.extras[first] == self.extras[second] {
                    violations.push(Violation::Duplicate { first, second });
                }
            }
        }

        let mut gcd_warning = None;
        if self.alpha > 0 && !self.extras.is_empty() {
            let g = self
                .extras
                .iter()
                .flat_map(|a| a.coords().iter().copied())
                .fold(self.alpha, |acc, c| acc.gcd(&c));
            if g != 1 {
                gcd_warning = Some(g);
            }
        }
        ValidationReport { violations, gcd_warning }
    }
}

/// A validated presentation together with its membership cache.
///
/// The cache uses interior mutability and is not shared across threads;
/// parallel callers build one `Semigroup` per worker.
#[derive(Debug)]
pub struct Semigroup {
    presentation: SemigroupPresentation,
    generators: Vec<LatticePoint>,
    gcd_warning: Option<i64>,
    membership: RefCell<HashMap<LatticePoint, bool>>,
    class_count: OnceCell<usize>,
}

impl Semigroup {
    pub fn new(presentation: SemigroupPresentation) -> Result<Self> {
        let report = presentation.validate();
        if !report.is_valid() {
            return Err(Error::InvalidPresentation(report));
        }
        let d = presentation.d;
        let alpha = presentation.alpha;
        let mut generators: Vec<LatticePoint> =
            (0..d).map(|axis| LatticePoint::scaled_unit(d, axis, alpha)).collect();
        generators.extend(presentation.extras.iter().cloned());
        Ok(Semigroup {
            presentation,
            generators,
            gcd_warning: report.gcd_warning,
            membership: RefCell::new(HashMap::new()),
            class_count: OnceCell::new(),
        })
    }

    pub fn presentation(&self) -> &SemigroupPresentation {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.presentation.d
    }

    pub fn alpha(&self) -> i64 {
        self.presentation.alpha
    }

    pub fn codim(&self) -> usize {
        self.presentation.codim()
    }

    pub fn extras(&self) -> &[LatticePoint] {
        &self.presentation.extras
    }

    /// `e_1..e_d` followed by `a_1..a_c`.
    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    pub fn unit(&self, axis: usize) -> &LatticePoint {
        &self.generators[axis]
    }

    pub fn gcd_warning(&self) -> Option<i64> {
        self.gcd_warning
    }

    /// Whether `x` is an `N`-combination of the generators.
    pub fn is_member(&self, x: &LatticePoint) -> bool {
        if x.dim() != self.dim() || !x.is_nonnegative() {
            return false;
        }
        if x.integer_degree(self.alpha()).is_none() {
            return false;
        }
        self.member_rec(x)
    }

    fn member_rec(&self, x: &LatticePoint) -> bool {
        if x.is_zero() {
            return true;
        }
        if let Some(&known) = self.membership.borrow().get(x) {
            return known;
        }
        let mut found = false;
        for g in &self.generators {
            if x.dominates(g) && self.member_rec(&(x - g)) {
                found = true;
                break;
            }
        }
        self.membership.borrow_mut().insert(x.clone(), found);
        found
    }

    /// Order of the subgroup of `(Z/alpha)^d` generated by the residues of the
    /// extras, i.e. the number of equivalence classes on `B`.
    pub fn class_count(&self) -> usize {
        *self.class_count.get_or_init(|| residue_subgroup(self).len())
    }
}

/// All residues reachable from 0 by adding extras modulo alpha.
pub(crate) fn residue_subgroup(sg: &Semigroup) -> HashSet<LatticePoint> {
    let alpha = sg.alpha();
    let steps: Vec<LatticePoint> = sg.extras().iter().map(|a| a.residue(alpha)).collect();
    let start = LatticePoint::zero(sg.dim());
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(r) = queue.pop_front() {
        for s in &steps {
            let next = (&r + s).residue(alpha);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}
