//! Sequences with the *-property and the combinatorics built on them:
//! index coincidences `Delta`, the defect `delta`, crosses, adjacency and an
//! instance checker for the upper bound `delta(x, y) <= deg h(x, y) - 1`.
//!
//! A sequence `(b_1, .., b_n)` of generators has the *-property for `x` when
//! every remainder `x - b_1 - .. - b_i` stays in `B`. `Lambda_x` collects the
//! ones of full length `deg x`; their last remainder is 0.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use serde::Serialize;

use crate::apery::{is_apery_element, AperyClass, AperyData};
use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, Semigroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StarSequence {
    base: LatticePoint,
    steps: Vec<LatticePoint>,
}

impl StarSequence {
    /// Checks that every step is a generator and every remainder lies in `B`.
    pub fn new(sg: &Semigroup, base: LatticePoint, steps: Vec<LatticePoint>) -> Result<Self> {
        let seq = StarSequence { base, steps };
        seq.check(sg)?;
        Ok(seq)
    }

    fn from_indices(sg: &Semigroup, base: &LatticePoint, path: &[u16]) -> Self {
        StarSequence {
            base: base.clone(),
            steps: path.iter().map(|&g| sg.generators()[g as usize].clone()).collect(),
        }
    }

    pub fn check(&self, sg: &Semigroup) -> Result<()> {
        if !sg.is_member(&self.base) {
            return Err(Error::Precondition(format!("{} is not in B", self.base)));
        }
        let mut rem = self.base.clone();
        for (i, b) in self.steps.iter().enumerate() {
            if !sg.generators().contains(b) {
                return Err(Error::Precondition(format!("step {} ({b}) is not a generator", i + 1)));
            }
            rem = &rem - b;
            if !sg.is_member(&rem) {
                return Err(Error::Precondition(format!("remainder {rem} after step {} is not in B", i + 1)));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &LatticePoint {
        &self.base
    }

    pub fn steps(&self) -> &[LatticePoint] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Whether the length equals `deg base`, i.e. the sequence is in `Lambda_x`.
    pub fn is_full(&self, alpha: i64) -> bool {
        self.base.integer_degree(alpha) == Some(self.steps.len() as i64)
    }

    /// `x(lambda, i) = x - b_1 - .. - b_i`.
    pub fn partial_point(&self, i: usize) -> Result<LatticePoint> {
        if i > self.steps.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.steps.len() });
        }
        Ok(self.steps[..i].iter().fold(self.base.clone(), |acc, b| &acc - b))
    }

    /// `x(lambda, 0), .., x(lambda, n)`.
    pub fn partial_points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut rem = self.base.clone();
        out.push(rem.clone());
        for b in &self.steps {
            rem = &rem - b;
            out.push(rem.clone());
        }
        out
    }

    /// The same steps in reverse order; still a *-sequence of the base.
    pub fn reverse(&self) -> StarSequence {
        StarSequence {
            base: self.base.clone(),
            steps: self.steps.iter().rev().cloned().collect(),
        }
    }

    /// Steps reordered as `steps[order[0]], steps[order[1]], ..`.
    pub fn permuted(&self, order: &[usize]) -> StarSequence {
        StarSequence {
            base: self.base.clone(),
            steps: order.iter().map(|&i| self.steps[i].clone()).collect(),
        }
    }

    /// The sequence `(b_from+1, .., b_to)` as a *-sequence of its own sum.
    pub fn segment(&self, from: usize, to: usize) -> StarSequence {
        let steps = self.steps[from..to].to_vec();
        let base = steps
            .iter()
            .fold(LatticePoint::zero(self.base.dim()), |acc, b| &acc + b);
        StarSequence { base, steps }
    }
}

fn degree_of(sg: &Semigroup, x: &LatticePoint) -> Result<usize> {
    match x.integer_degree(sg.alpha()) {
        Some(d) if d >= 0 => Ok(d as usize),
        _ => Err(Error::Precondition(format!("{x} has no integer degree"))),
    }
}

/// Depth-first enumeration of `Lambda_x` as generator-index paths.
fn enumerate_paths(sg: &Semigroup, x: &LatticePoint, cap: usize) -> Result<Vec<Vec<u16>>> {
    if !sg.is_member(x) {
        return Err(Error::Precondition(format!("{x} is not in B")));
    }
    let n = degree_of(sg, x)?;
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut path = Vec::with_capacity(n);
    dfs(sg, x, n, &mut path, &mut out, cap)?;
    Ok(out)
}

fn dfs(
    sg: &Semigroup,
    rem: &LatticePoint,
    left: usize,
    path: &mut Vec<u16>,
    out: &mut Vec<Vec<u16>>,
    cap: usize,
) -> Result<()> {
    if left == 0 {
        if out.len() == cap {
            return Err(Error::SequenceCap { point: rem.clone(), count: cap, cap });
        }
        out.push(path.clone());
        return Ok(());
    }
    for (gi, g) in sg.generators().iter().enumerate() {
        if rem.dominates(g) {
            let next = rem - g;
            if sg.is_member(&next) {
                path.push(gi as u16);
                dfs(sg, &next, left - 1, path, out, cap)?;
                path.pop();
            }
        }
    }
    Ok(())
}

/// All of `Lambda_x`; empty for `x = 0`.
pub fn enumerate_full(sg: &Semigroup, x: &LatticePoint, cap: usize) -> Result<Vec<StarSequence>> {
    match enumerate_paths(sg, x, cap) {
        Ok(paths) => Ok(paths.iter().map(|p| StarSequence::from_indices(sg, x, p)).collect()),
        Err(Error::SequenceCap { count, cap, .. }) => Err(Error::SequenceCap { point: x.clone(), count, cap }),
        Err(e) => Err(e),
    }
}

/// `Delta(lambda, nu)`: index pairs with equivalent partial points.
pub fn delta_set(lambda: &StarSequence, nu: &StarSequence, alpha: i64) -> BTreeSet<(usize, usize)> {
    let mut positions: HashMap<LatticePoint, Vec<usize>> = HashMap::new();
    for (j, p) in nu.partial_points().iter().enumerate() {
        positions.entry(p.residue(alpha)).or_default().push(j);
    }
    let mut out = BTreeSet::new();
    for (i, p) in lambda.partial_points().iter().enumerate() {
        if let Some(js) = positions.get(&p.residue(alpha)) {
            out.extend(js.iter().map(|&j| (i, j)));
        }
    }
    out
}

/// `delta(lambda, nu) = #Delta - 2`.
pub fn delta(lambda: &StarSequence, nu: &StarSequence, alpha: i64) -> i64 {
    delta_set(lambda, nu, alpha).len() as i64 - 2
}

/// Whether `Delta` is a chain under the componentwise order.
pub fn is_chain(delta: &BTreeSet<(usize, usize)>) -> bool {
    let mut last = 0;
    for &(_, j) in delta {
        if j < last {
            return false;
        }
        last = j;
    }
    true
}

/// Positions `(i, j, l, k)` of a cross: `i < j`, `l < k`,
/// `x(lambda, i) ~ y(nu, k)` and `x(lambda, j) ~ y(nu, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrossIndices {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub k: usize,
}

impl CrossIndices {
    pub fn height(&self) -> (usize, usize) {
        (self.j - self.i, self.k - self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCertificate {
    pub lambda: StarSequence,
    pub nu: StarSequence,
    #[serde(flatten)]
    pub at: CrossIndices,
}

impl CrossCertificate {
    pub fn height(&self) -> (usize, usize) {
        self.at.height()
    }

    /// Re-checks every defining condition of the cross.
    pub fn validate(&self, sg: &Semigroup) -> Result<()> {
        let alpha = sg.alpha();
        for s in [&self.lambda, &self.nu] {
            s.check(sg)?;
            if !s.is_full(alpha) {
                return Err(Error::Precondition(format!("sequence of {} is not full length", s.base)));
            }
        }
        let CrossIndices { i, j, l, k } = self.at;
        if !(i < j && j <= self.lambda.len() && l < k && k <= self.nu.len()) {
            return Err(Error::Precondition(format!("indices {:?} are not a cross shape", self.at)));
        }
        let xi = self.lambda.partial_point(i)?;
        let xj = self.lambda.partial_point(j)?;
        let yl = self.nu.partial_point(l)?;
        let yk = self.nu.partial_point(k)?;
        if !xi.is_equivalent(&yk, alpha) || !xj.is_equivalent(&yl, alpha) {
            return Err(Error::Precondition(format!("indices {:?} do not pair equivalent points", self.at)));
        }
        Ok(())
    }
}

/// Every cross of the pair, in lexicographic order of `(i, j, l, k)`.
pub fn cross_indices(delta: &BTreeSet<(usize, usize)>) -> Vec<CrossIndices> {
    let mut out = Vec::new();
    for &(i, k) in delta {
        for &(j, l) in delta.range((i + 1, 0)..) {
            if l < k {
                out.push(CrossIndices { i, j, l, k });
            }
        }
    }
    out
}

pub fn find_crosses(lambda: &StarSequence, nu: &StarSequence, alpha: i64) -> Vec<CrossCertificate> {
    cross_indices(&delta_set(lambda, nu, alpha))
        .into_iter()
        .map(|at| CrossCertificate { lambda: lambda.clone(), nu: nu.clone(), at })
        .collect()
}

pub fn is_crossless(lambda: &StarSequence, nu: &StarSequence, alpha: i64) -> bool {
    is_chain(&delta_set(lambda, nu, alpha))
}

/// The cross with the largest `j - i`; ties go to the smallest `i`, then `l`.
pub fn maximal_cross(crosses: &[CrossIndices]) -> Option<CrossIndices> {
    crosses
        .iter()
        .copied()
        .min_by(|a, b| {
            (b.j - b.i)
                .cmp(&(a.j - a.i))
                .then(a.i.cmp(&b.i))
                .then(a.l.cmp(&b.l))
                .then(a.j.cmp(&b.j))
                .then(a.k.cmp(&b.k))
        })
}

/// `h(x, y)`, the componentwise minimum.
pub fn h_min(x: &LatticePoint, y: &LatticePoint) -> LatticePoint {
    x.componentwise_min(y)
}

/// Combines two crosses `(i, j, l, k)` and `(i', j', l', k')` of the same pair
/// with `j <= i'` and `k <= l'` into one cross of height
/// `(j - i + j' - i', k - l + k' - l')` on rearranged sequences.
pub fn glue_crosses(sg: &Semigroup, first: &CrossCertificate, second: &CrossCertificate) -> Result<CrossCertificate> {
    if first.lambda != second.lambda || first.nu != second.nu {
        return Err(Error::Precondition("crosses live on different sequence pairs".into()));
    }
    let CrossIndices { i, j, l, k } = first.at;
    let CrossIndices { i: i2, j: j2, l: l2, k: k2 } = second.at;
    if j > i2 || k > l2 {
        return Err(Error::Precondition(format!(
            "glueing needs j <= i' and k <= l' (got j = {j}, i' = {i2}, k = {k}, l' = {l2})"
        )));
    }
    first.validate(sg)?;
    second.validate(sg)?;

    let b = first.lambda.steps();
    let g = first.nu.steps();
    let lambda_steps: Vec<LatticePoint> = [&b[j..j2], &b[i..j], &b[..i], &b[j2..]].concat();
    let nu_steps: Vec<LatticePoint> = [&g[k..k2], &g[l..k], &g[..l], &g[k2..]].concat();
    let glued = CrossCertificate {
        lambda: StarSequence { base: first.lambda.base.clone(), steps: lambda_steps },
        nu: StarSequence { base: first.nu.base.clone(), steps: nu_steps },
        at: CrossIndices { i: i2 - j, j: j2 - i, l: l2 - k, k: k2 - l },
    };
    glued.validate(sg)?;
    Ok(glued)
}

/// Given crossing sequences of two elements of one class, builds a third
/// element of that class: `z' = x(lambda, j) + (y - y(nu, l))`, then
/// subtracts as many unit generators as possible while staying in `B`.
/// Among maximal reductions the lexicographically largest multiplicity
/// vector wins.
pub fn third_element(sg: &Semigroup, apery: &AperyData, cross: &CrossCertificate) -> Result<LatticePoint> {
    let x = cross.lambda.base();
    let y = cross.nu.base();
    for p in [x, y] {
        if !apery.contains(p) || p.is_zero() {
            return Err(Error::NotInAperySet(p.clone()));
        }
    }
    if !x.is_equivalent(y, sg.alpha()) {
        return Err(Error::NotEquivalent(x.clone(), y.clone()));
    }
    cross.validate(sg)?;

    let xj = cross.lambda.partial_point(cross.at.j)?;
    let yl = cross.nu.partial_point(cross.at.l)?;
    let z_prime = &xj + &(y - &yl);
    let z = reduce_to_apery(sg.alpha(), apery, &z_prime)?;
    if &z == x || &z == y || !is_apery_element(sg, &z) || !z.is_equivalent(x, sg.alpha()) {
        return Err(Error::Consistency(format!("third element construction produced {z}")));
    }
    Ok(z)
}

/// The Apery element `z <= p` of the same class with the least degree.
pub fn reduce_to_apery(alpha: i64, apery: &AperyData, p: &LatticePoint) -> Result<LatticePoint> {
    let class = apery
        .class_of(p)
        .ok_or_else(|| Error::Consistency(format!("{p} has no class")))?;
    class
        .elements
        .iter()
        .filter(|m| p.dominates(m))
        .map(|m| {
            let n: Vec<i64> = (p - m).coords().iter().map(|c| c / alpha).collect();
            (n.iter().sum::<i64>(), n, m)
        })
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .map(|(_, _, m)| m.clone())
        .ok_or_else(|| Error::Consistency(format!("no Apery element below {p}")))
}

/// No class element lies strictly between `x` and `y` in both coordinates.
pub fn is_adjacent(class: &AperyClass, x: &LatticePoint, y: &LatticePoint) -> Result<bool> {
    if x.dim() != 2 {
        return Err(Error::NotBivariate(x.dim()));
    }
    if x == y {
        return Err(Error::Precondition("adjacency needs two distinct elements".into()));
    }
    for p in [x, y] {
        if !class.contains(p) {
            return Err(Error::Precondition(format!("{p} is not in the class")));
        }
    }
    let between = |v: i64, a: i64, b: i64| a.min(b) < v && v < a.max(b);
    let (xc, yc) = (x.coords(), y.coords());
    Ok(!class
        .elements
        .iter()
        .any(|z| between(z.coords()[0], xc[0], yc[0]) && between(z.coords()[1], xc[1], yc[1])))
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchCaps {
    /// Per `Lambda_x`.
    pub max_sequences: usize,
    /// Per `(x, y)`, counted over distinct class paths.
    pub max_pairs: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps { max_sequences: 1_000_000, max_pairs: 10_000_000 }
    }
}

/// `Lambda_x` with duplicates (same class at every position) removed.
#[derive(Debug)]
struct PathSet {
    base: LatticePoint,
    /// Generator-index paths, one representative per class path.
    sequences: Vec<Vec<u16>>,
    /// Class index of `x(lambda, i)` for `i = 0..=deg x`.
    classes: Vec<Vec<u32>>,
}

/// Shared enumeration state for pair computations on one semigroup.
pub struct PairEngine<'a> {
    sg: &'a Semigroup,
    apery: &'a AperyData,
    caps: SearchCaps,
    cache: HashMap<LatticePoint, Rc<PathSet>>,
}

/// `delta(x, y)` with the sequence pair attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaMin {
    pub value: i64,
    pub lambda: StarSequence,
    pub nu: StarSequence,
}

enum Scan {
    Done,
    Stopped,
}

impl<'a> PairEngine<'a> {
    pub fn new(sg: &'a Semigroup, apery: &'a AperyData, caps: SearchCaps) -> Self {
        PairEngine { sg, apery, caps, cache: HashMap::new() }
    }

    fn paths(&mut self, x: &LatticePoint) -> Result<Rc<PathSet>> {
        if let Some(p) = self.cache.get(x) {
            return Ok(p.clone());
        }
        let raw = match enumerate_paths(self.sg, x, self.caps.max_sequences) {
            Err(Error::SequenceCap { count, cap, .. }) => {
                return Err(Error::SequenceCap { point: x.clone(), count, cap })
            }
            other => other?,
        };
        let gens = self.sg.generators();
        let mut seen = HashMap::new();
        let mut sequences = Vec::new();
        let mut classes = Vec::new();
        for path in raw {
            let mut rem = x.clone();
            let mut ids = Vec::with_capacity(path.len() + 1);
            ids.push(self.class_id(&rem)?);
            for &g in &path {
                rem = &rem - &gens[g as usize];
                ids.push(self.class_id(&rem)?);
            }
            if seen.insert(ids.clone(), ()).is_none() {
                sequences.push(path);
                classes.push(ids);
            }
        }
        let set = Rc::new(PathSet { base: x.clone(), sequences, classes });
        self.cache.insert(x.clone(), set.clone());
        Ok(set)
    }

    fn class_id(&self, p: &LatticePoint) -> Result<u32> {
        self.apery
            .class_index(p)
            .map(|i| i as u32)
            .ok_or_else(|| Error::Consistency(format!("{p} has no residue class")))
    }

    /// Calls `visit(delta, crossless, ix, iy)` for every distinct pair until
    /// it returns `false` or the pair cap is hit.
    fn scan<F>(&mut self, x: &LatticePoint, y: &LatticePoint, mut visit: F) -> Result<(Scan, u64, Rc<PathSet>, Rc<PathSet>)>
    where
        F: FnMut(i64, bool, usize, usize) -> bool,
    {
        let px = self.paths(x)?;
        let py = self.paths(y)?;
        let f = self.apery.classes().len();
        let mut positions: Vec<Vec<usize>> = vec![Vec::new(); f];
        let mut explored = 0u64;
        for (iy, cy) in py.classes.iter().enumerate() {
            for (j, &c) in cy.iter().enumerate() {
                positions[c as usize].push(j);
            }
            for (ix, cx) in px.classes.iter().enumerate() {
                if explored == self.caps.max_pairs {
                    return Ok((Scan::Stopped, explored, px, py));
                }
                explored += 1;
                let mut count = 0i64;
                let mut last = 0usize;
                let mut chain = true;
                for &c in cx {
                    for &j in &positions[c as usize] {
                        count += 1;
                        if j < last {
                            chain = false;
                        }
                        last = j;
                    }
                }
                if !visit(count - 2, chain, ix, iy) {
                    for &c in cy {
                        positions[c as usize].clear();
                    }
                    return Ok((Scan::Done, explored, px, py));
                }
            }
            for &c in cy {
                positions[c as usize].clear();
            }
        }
        Ok((Scan::Done, explored, px, py))
    }

    fn sequence(&self, set: &PathSet, idx: usize) -> StarSequence {
        StarSequence::from_indices(self.sg, &set.base, &set.sequences[idx])
    }

    /// `|Lambda_x|` after removing class-path duplicates.
    pub fn distinct_sequences(&mut self, x: &LatticePoint) -> Result<usize> {
        Ok(self.paths(x)?.sequences.len())
    }

    /// Exact `delta(x, y)`; stops early at 0 when `x ~ y`.
    pub fn delta_min(&mut self, x: &LatticePoint, y: &LatticePoint) -> Result<DeltaMin> {
        let floor = if x.is_equivalent(y, self.sg.alpha()) { 0 } else { -2 };
        let mut best: Option<(i64, usize, usize)> = None;
        let (scan, explored, px, py) = self.scan(x, y, |d, _, ix, iy| {
            if best.is_none_or(|(b, _, _)| d < b) {
                best = Some((d, ix, iy));
            }
            d > floor
        })?;
        match (scan, best) {
            (Scan::Done, Some((value, ix, iy))) => Ok(DeltaMin {
                value,
                lambda: self.sequence(&px, ix),
                nu: self.sequence(&py, iy),
            }),
            (Scan::Done, None) => Err(Error::Precondition("Lambda_x or Lambda_y is empty".into())),
            (Scan::Stopped, best) => Err(Error::PairCap {
                explored,
                cap: self.caps.max_pairs,
                sampled_upper_bound: best.map(|b| b.0),
            }),
        }
    }

    /// Some pair in `Lambda_x x Lambda_y` is crossless.
    pub fn are_crossless(&mut self, x: &LatticePoint, y: &LatticePoint) -> Result<Option<(StarSequence, StarSequence)>> {
        let mut hit = None;
        let (scan, explored, px, py) = self.scan(x, y, |_, chain, ix, iy| {
            if chain {
                hit = Some((ix, iy));
            }
            !chain
        })?;
        match (hit, scan) {
            (Some((ix, iy)), _) => Ok(Some((self.sequence(&px, ix), self.sequence(&py, iy)))),
            (None, Scan::Done) => Ok(None),
            (None, Scan::Stopped) => Err(Error::PairCap {
                explored,
                cap: self.caps.max_pairs,
                sampled_upper_bound: None,
            }),
        }
    }

    /// Checks the bound `delta <= deg h(x, y) - 1` for one pair.
    pub fn check_pair(&mut self, x: &LatticePoint, y: &LatticePoint, strong: bool) -> PairVerdict {
        let alpha = self.sg.alpha();
        let deg_h = h_min(x, y).coordinate_sum() / alpha;
        let bound = deg_h - 1;
        let outcome = if strong {
            self.check_strong(x, y, bound)
        } else {
            self.check_weak(x, y, bound)
        };
        PairVerdict { x: x.clone(), y: y.clone(), deg_h, bound, outcome }
    }

    fn check_weak(&mut self, x: &LatticePoint, y: &LatticePoint, bound: i64) -> PairOutcome {
        match self.delta_min(x, y) {
            Ok(min) if min.value <= bound => PairOutcome::Holds { delta: min.value, exact: true },
            Ok(min) => PairOutcome::Violation { delta: min.value, lambda: min.lambda, nu: min.nu },
            Err(Error::PairCap { sampled_upper_bound: Some(b), .. }) if b <= bound => {
                PairOutcome::Holds { delta: b, exact: false }
            }
            Err(e) => PairOutcome::Indeterminate {
                reason: e.to_string(),
                sampled_upper_bound: match e {
                    Error::PairCap { sampled_upper_bound, .. } => sampled_upper_bound,
                    _ => None,
                },
            },
        }
    }

    fn check_strong(&mut self, x: &LatticePoint, y: &LatticePoint, bound: i64) -> PairOutcome {
        let mut worst: Option<(i64, usize, usize)> = None;
        let result = self.scan(x, y, |d, _, ix, iy| {
            if worst.is_none_or(|(w, _, _)| d > w) {
                worst = Some((d, ix, iy));
            }
            d <= bound
        });
        match result {
            Ok((_, _, px, py)) if worst.is_some_and(|w| w.0 > bound) => {
                let (delta, ix, iy) = worst.expect("checked");
                PairOutcome::Violation {
                    delta,
                    lambda: self.sequence(&px, ix),
                    nu: self.sequence(&py, iy),
                }
            }
            Ok((Scan::Done, ..)) => PairOutcome::Holds { delta: worst.map_or(0, |w| w.0), exact: true },
            Ok((Scan::Stopped, explored, ..)) => PairOutcome::Indeterminate {
                reason: format!("pair cap reached after {explored} pairs"),
                sampled_upper_bound: None,
            },
            Err(e) => PairOutcome::Indeterminate { reason: e.to_string(), sampled_upper_bound: None },
        }
    }
}

/// Exact `delta(x, y)` over all of `Lambda_x x Lambda_y`.
pub fn delta_min(
    sg: &Semigroup,
    apery: &AperyData,
    x: &LatticePoint,
    y: &LatticePoint,
    caps: SearchCaps,
) -> Result<DeltaMin> {
    PairEngine::new(sg, apery, caps).delta_min(x, y)
}

/// Whether `x` and `y` have a crossless pair of full sequences.
pub fn are_crossless(
    sg: &Semigroup,
    apery: &AperyData,
    x: &LatticePoint,
    y: &LatticePoint,
    caps: SearchCaps,
) -> Result<bool> {
    Ok(PairEngine::new(sg, apery, caps).are_crossless(x, y)?.is_some())
}

/// Which pairs of equivalent Apery elements a conjecture check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// `delta(x, y)` for every pair.
    AllPairs,
    /// `delta(x, y)` for adjacent pairs only (d = 2).
    AdjacentOnly,
    /// `delta(lambda, nu)` for every pair and every sequence pair.
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PairOutcome {
    /// `delta` is the exact value when `exact`, otherwise a witnessed upper
    /// bound (weak scopes) or the largest value seen (strong scope).
    Holds { delta: i64, exact: bool },
    Violation { delta: i64, lambda: StarSequence, nu: StarSequence },
    Indeterminate { reason: String, sampled_upper_bound: Option<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub x: LatticePoint,
    pub y: LatticePoint,
    pub deg_h: i64,
    pub bound: i64,
    #[serde(flatten)]
    pub outcome: PairOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub scope: Scope,
    /// False for the adjacent-only scope outside dimension 2.
    pub adjacency_defined: bool,
    pub pairs_checked: usize,
    pub holds: usize,
    pub violations: usize,
    pub indeterminate: usize,
    pub verdicts: Vec<PairVerdict>,
}

/// Unordered pairs `x != y` of equivalent nonzero Apery elements.
pub fn equivalent_pairs(apery: &AperyData) -> Vec<(LatticePoint, LatticePoint)> {
    let mut out = Vec::new();
    for class in apery.classes() {
        for (a, x) in class.elements.iter().enumerate() {
            for y in &class.elements[a + 1..] {
                if !x.is_zero() && !y.is_zero() {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// Checks `delta(x, y) <= deg h(x, y) - 1` (or the per-sequence version) on
/// every pair in scope. Capped pairs are reported as indeterminate.
pub fn check_conjecture(sg: &Semigroup, apery: &AperyData, scope: Scope, caps: SearchCaps) -> ConjectureReport {
    let adjacency_defined = scope != Scope::AdjacentOnly || sg.dim() == 2;
    let mut engine = PairEngine::new(sg, apery, caps);
    let mut verdicts = Vec::new();
    if adjacency_defined {
        for (x, y) in equivalent_pairs(apery) {
            if scope == Scope::AdjacentOnly {
                let class = apery.class_of(&x).expect("pair comes from a class");
                if !is_adjacent(class, &x, &y).unwrap_or(false) {
                    continue;
                }
            }
            verdicts.push(engine.check_pair(&x, &y, scope == Scope::Strong));
        }
    }
    let count = |pred: fn(&PairOutcome) -> bool| verdicts.iter().filter(|v| pred(&v.outcome)).count();
    ConjectureReport {
        scope,
        adjacency_defined,
        pairs_checked: verdicts.len(),
        holds: count(|o| matches!(o, PairOutcome::Holds { .. })),
        violations: count(|o| matches!(o, PairOutcome::Violation { .. })),
        indeterminate: count(|o| matches!(o, PairOutcome::Indeterminate { .. })),
        verdicts,
    }
}
