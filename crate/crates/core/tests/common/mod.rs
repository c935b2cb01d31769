//! Independent oracles and the randomized property suite shared by the
//! integration tests and the acceptance runner.
//!
//! The oracles only use plain vectors and hash sets: membership in `B` by
//! building every degree level as a sumset, the Apery set by filtering those
//! levels, and `Delta` by direct residue comparison.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use simplicial_reg::apery::AperyData;
use simplicial_reg::error::Error;
use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::linalg::Field;
use simplicial_reg::monomial::{LatticeCaps, MonomialIdeal};
use simplicial_reg::regularity::decompose_with;
use simplicial_reg::star::{enumerate_full, PairEngine, SearchCaps, StarSequence};

pub type Point = Vec<i64>;

pub fn pt(c: &[i64]) -> LatticePoint {
    LatticePoint::new(c.to_vec())
}

pub fn semigroup(d: usize, alpha: i64, extras: &[&[i64]]) -> Semigroup {
    let extras = extras.iter().map(|c| pt(c)).collect();
    Semigroup::new(SemigroupPresentation::new(d, alpha, extras)).expect("valid fixture")
}

/// Degree levels of `B` built as iterated sumsets.
pub struct BruteForce {
    pub d: usize,
    pub alpha: i64,
    pub gens: Vec<Point>,
    levels: Vec<HashSet<Point>>,
}

impl BruteForce {
    pub fn new(p: &SemigroupPresentation) -> Self {
        let mut gens = Vec::new();
        for i in 0..p.d {
            let mut e = vec![0; p.d];
            e[i] = p.alpha;
            gens.push(e);
        }
        gens.extend(p.extras.iter().map(|a| a.coords().to_vec()));
        BruteForce { d: p.d, alpha: p.alpha, gens, levels: vec![HashSet::from([vec![0; p.d]])] }
    }

    fn level(&mut self, k: usize) -> &HashSet<Point> {
        while self.levels.len() <= k {
            let prev = self.levels.last().expect("level 0 exists");
            let mut next = HashSet::new();
            for p in prev {
                for g in &self.gens {
                    next.insert(p.iter().zip(g).map(|(a, b)| a + b).collect::<Point>());
                }
            }
            self.levels.push(next);
        }
        &self.levels[k]
    }

    pub fn member(&mut self, p: &[i64]) -> bool {
        let s: i64 = p.iter().sum();
        if p.iter().any(|&c| c < 0) || s % self.alpha != 0 {
            return false;
        }
        self.level((s / self.alpha) as usize).contains(p)
    }

    pub fn is_apery(&mut self, p: &[i64]) -> bool {
        if !self.member(p) {
            return false;
        }
        (0..self.d).all(|i| {
            let mut q = p.to_vec();
            q[i] -= self.alpha;
            !self.member(&q)
        })
    }

    /// Apery elements level by level; stops at the first empty level.
    pub fn apery_set(&mut self) -> Vec<Point> {
        let mut out = Vec::new();
        for k in 0.. {
            let candidates: Vec<Point> = self.level(k).iter().cloned().collect();
            let found: Vec<Point> = candidates.into_iter().filter(|p| self.is_apery(p)).collect();
            if found.is_empty() {
                break;
            }
            out.extend(found);
        }
        out.sort();
        out
    }
}

pub fn residue(p: &[i64], alpha: i64) -> Point {
    p.iter().map(|c| c.rem_euclid(alpha)).collect()
}

pub fn degree(p: &[i64], alpha: i64) -> i64 {
    p.iter().sum::<i64>() / alpha
}

pub fn partials(base: &[i64], steps: &[LatticePoint]) -> Vec<Point> {
    let mut cur = base.to_vec();
    let mut out = vec![cur.clone()];
    for s in steps {
        for (c, v) in cur.iter_mut().zip(s.coords()) {
            *c -= v;
        }
        out.push(cur.clone());
    }
    out
}

pub fn oracle_delta(px: &[Point], py: &[Point], alpha: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in px.iter().enumerate() {
        for (j, b) in py.iter().enumerate() {
            if a.iter().zip(b).all(|(u, v)| (u - v).rem_euclid(alpha) == 0) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn oracle_chain(delta: &[(usize, usize)]) -> bool {
    delta.iter().all(|&(i, j)| {
        delta
            .iter()
            .all(|&(k, l)| (i <= k && j <= l) || (i >= k && j >= l))
    })
}

fn hmin(x: &[i64], y: &[i64]) -> Point {
    x.iter().zip(y).map(|(a, b)| *a.min(b)).collect()
}

/// A random normalized presentation with `c` extras drawn without
/// replacement from the non-unit points of degree one.
pub fn random_presentation(rng: &mut impl Rng, d: usize, alpha_max: i64, c_max: usize) -> SemigroupPresentation {
    loop {
        let alpha = rng.gen_range(2..=alpha_max);
        let mut pool = Vec::new();
        let mut stack = vec![(Vec::<i64>::new(), alpha)];
        while let Some((prefix, left)) = stack.pop() {
            if prefix.len() == d - 1 {
                let mut p = prefix.clone();
                p.push(left);
                if p.iter().filter(|&&c| c != 0).count() > 1 {
                    pool.push(p);
                }
                continue;
            }
            for v in 0..=left {
                let mut p = prefix.clone();
                p.push(v);
                stack.push((p, left - v));
            }
        }
        pool.sort();
        if pool.is_empty() {
            continue;
        }
        let c = rng.gen_range(1..=c_max.min(pool.len()));
        let extras: Vec<LatticePoint> = pool.choose_multiple(rng, c).map(|p| LatticePoint::new(p.clone())).collect();
        let p = SemigroupPresentation::new(d, alpha, extras);
        let g = p.extras.iter().flat_map(|a| a.coords().iter().copied()).fold(alpha, num_integer::gcd);
        if g == 1 {
            return p;
        }
    }
}

/// Pass / violation / indeterminate counts for one property.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub passed: u64,
    pub violated: u64,
    pub indeterminate: u64,
    pub first_violation: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Suite {
    pub instances: usize,
    pub props: BTreeMap<&'static str, Tally>,
}

impl Suite {
    fn unknown(&mut self, name: &'static str) {
        self.props.entry(name).or_default().indeterminate += 1;
    }

    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.props.entry(name).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.violated += 1;
            if t.first_violation.is_none() {
                t.first_violation = Some(detail());
            }
        }
    }

    pub fn violations(&self) -> u64 {
        self.props.values().map(|t| t.violated).sum()
    }

    pub fn merge(&mut self, other: Suite) {
        self.instances += other.instances;
        for (k, v) in other.props {
            let t = self.props.entry(k).or_default();
            t.passed += v.passed;
            t.violated += v.violated;
            t.indeterminate += v.indeterminate;
            if t.first_violation.is_none() {
                t.first_violation = v.first_violation;
            }
        }
    }
}

pub const APERY_MATCH: &str = "Apery set matches brute force";
pub const STAR_IN_APERY: &str = "partial points stay in B_A and are pairwise inequivalent";
pub const DEGREE_BOUND: &str = "deg x <= f - c on B_A";
pub const REVERSAL: &str = "x - x(l, i) = x(l*, deg x - i)";
pub const PERMUTATION: &str = "permutations of full sequences are full sequences";
pub const H_SUPERADDITIVE: &str = "h(x',y') + h(x'',y'') <= h(x,y)";
pub const MATCHING: &str = "Delta is a partial matching of size <= min deg + 1";
pub const CROSSLESS_BOUND: &str = "crossless pairs satisfy delta <= deg h - 1";
pub const SPLITTING: &str = "splitting: delta' + delta'' <= delta - 1, equal when crossless";
pub const TWO_ELEMENT: &str = "two-element classes are crossless";
pub const ADJACENT_BOUND: &str = "adjacent pairs satisfy delta(x,y) <= deg h - 1";
pub const CURVE_EG: &str = "Eisenbud-Goto holds for curves";
pub const BIVARIATE_AGREES: &str = "bivariate and Betti regularity agree";

/// Limits that keep one instance in the millisecond range.
pub const SEQ_CAP: usize = 400;
pub const SEQ_PAIR_CAP: usize = 4000;

/// Checks every property on one instance.
pub fn check_instance(p: &SemigroupPresentation, rng: &mut impl Rng) -> Suite {
    let mut suite = Suite { instances: 1, ..Suite::default() };
    let alpha = p.alpha;
    let sg = Semigroup::new(p.clone()).expect("generated presentations are valid");
    let apery = AperyData::compute(&sg).expect("Apery set");
    let mut brute = BruteForce::new(p);

    let oracle: Vec<Point> = brute.apery_set();
    let ours: Vec<Point> = apery.elements().iter().map(|x| x.coords().to_vec()).collect();
    suite.check(APERY_MATCH, oracle == ours, || format!("{p:?}: oracle {} vs {}", oracle.len(), ours.len()));
    let f = oracle.iter().map(|x| residue(x, alpha)).collect::<HashSet<_>>().len() as i64;
    let c = p.extras.len() as i64;
    for x in &oracle {
        suite.check(DEGREE_BOUND, degree(x, alpha) <= f - c, || format!("{p:?}: {x:?} exceeds {}", f - c));
    }

    // Per-element sequence properties.
    let mut sequences: BTreeMap<Point, Option<Vec<StarSequence>>> = BTreeMap::new();
    for x in oracle.iter().filter(|x| x.iter().any(|&v| v != 0)) {
        let seqs = match enumerate_full(&sg, &pt(x), SEQ_CAP) {
            Ok(s) => Some(s),
            Err(Error::SequenceCap { .. }) => None,
            Err(e) => panic!("{e}"),
        };
        match &seqs {
            None => {
                suite.unknown(STAR_IN_APERY);
                suite.unknown(REVERSAL);
                suite.unknown(PERMUTATION);
            }
            Some(seqs) => {
                let full: HashSet<Vec<LatticePoint>> = seqs.iter().map(|s| s.steps().to_vec()).collect();
                for s in seqs {
                    let pts = partials(x, s.steps());
                    let residues: HashSet<Point> = pts.iter().map(|q| residue(q, alpha)).collect();
                    let in_apery = pts.iter().all(|q| brute.is_apery(q));
                    suite.check(STAR_IN_APERY, in_apery && residues.len() == pts.len(), || {
                        format!("{p:?}: {x:?} via {:?}", s.steps())
                    });

                    let rev = s.reverse();
                    let n = s.len();
                    let ok = (0..=n).all(|i| {
                        let lhs: Point = x.iter().zip(&pts[i]).map(|(a, b)| a - b).collect();
                        rev.partial_point(n - i).ok().map(|q| q.coords().to_vec()) == Some(lhs)
                    });
                    suite.check(REVERSAL, ok, || format!("{p:?}: {x:?} via {:?}", s.steps()));

                    let mut order: Vec<usize> = (0..n).collect();
                    order.shuffle(rng);
                    let perm = s.permuted(&order);
                    let valid = partials(x, perm.steps()).iter().all(|q| brute.member(q));
                    suite.check(PERMUTATION, valid && full.contains(perm.steps()), || {
                        format!("{p:?}: {x:?} permuted to {:?}", perm.steps())
                    });
                }
            }
        }
        sequences.insert(x.clone(), seqs);
    }

    // Pairwise properties over equivalent elements.
    let mut classes: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    for x in oracle.iter().filter(|x| x.iter().any(|&v| v != 0)) {
        classes.entry(residue(x, alpha)).or_default().push(x.clone());
    }
    let mut engine = PairEngine::new(&sg, &apery, SearchCaps { max_sequences: 20_000, max_pairs: 2_000_000 });
    for members in classes.values() {
        for (a, x) in members.iter().enumerate() {
            for y in &members[a + 1..] {
                check_pair(&mut suite, p, &sequences, members, x, y);
                if p.d == 2 {
                    let between = |v: i64, s: i64, t: i64| s.min(t) < v && v < s.max(t);
                    let adjacent = !members
                        .iter()
                        .any(|z| between(z[0], x[0], y[0]) && between(z[1], x[1], y[1]));
                    if adjacent {
                        match engine.delta_min(&pt(x), &pt(y)) {
                            Ok(m) => {
                                let bound = degree(&hmin(x, y), alpha) - 1;
                                suite.check(ADJACENT_BOUND, m.value <= bound, || {
                                    format!("{p:?}: {x:?} {y:?} delta {} > {bound}", m.value)
                                });
                            }
                            Err(_) => suite.unknown(ADJACENT_BOUND),
                        }
                    }
                }
            }
        }
    }

    if p.d == 2 {
        let report = decompose_with(&sg, &apery, Field::Rationals, LatticeCaps::default()).expect("decomposition");
        suite.check(CURVE_EG, report.reg_kb <= f - c, || format!("{p:?}: reg {} > {}", report.reg_kb, f - c));
        for class in apery.classes() {
            let ideal: MonomialIdeal = class.ideal().expect("class ideal");
            let a = ideal.regularity_bivariate().expect("d = 2");
            let b = ideal.regularity_general(Field::Rationals, LatticeCaps::default());
            suite.check(BIVARIATE_AGREES, b.as_ref().ok() == Some(&a), || {
                format!("{p:?}: {:?} bivariate {a} general {b:?}", ideal.generators())
            });
        }
    }
    suite
}

fn check_pair(
    suite: &mut Suite,
    p: &SemigroupPresentation,
    sequences: &BTreeMap<Point, Option<Vec<StarSequence>>>,
    members: &[Point],
    x: &[i64],
    y: &[i64],
) {
    let names = [H_SUPERADDITIVE, MATCHING, CROSSLESS_BOUND, SPLITTING];
    let (Some(Some(lx)), Some(Some(ly))) = (sequences.get(x), sequences.get(y)) else {
        for n in names {
            suite.unknown(n);
        }
        if members.len() == 2 {
            suite.unknown(TWO_ELEMENT);
        }
        return;
    };
    let alpha = p.alpha;
    let deg_h = degree(&hmin(x, y), alpha);
    let (dx, dy) = (degree(x, alpha) as usize, degree(y, alpha) as usize);
    let mut seen = 0usize;
    let mut all_crossless = true;
    'outer: for l in lx {
        let px = partials(x, l.steps());
        for n in ly {
            if seen == SEQ_PAIR_CAP {
                break 'outer;
            }
            seen += 1;
            let py = partials(y, n.steps());
            let delta = oracle_delta(&px, &py, alpha);
            let d = delta.len() as i64 - 2;
            let chain = oracle_chain(&delta);
            all_crossless &= chain;

            let rows: HashSet<usize> = delta.iter().map(|t| t.0).collect();
            let cols: HashSet<usize> = delta.iter().map(|t| t.1).collect();
            let matching = rows.len() == delta.len() && cols.len() == delta.len() && delta.len() <= dx.min(dy) + 1;
            suite.check(MATCHING, matching, || format!("{p:?}: {x:?} {y:?} Delta {delta:?}"));

            if chain {
                suite.check(CROSSLESS_BOUND, d < deg_h, || {
                    format!("{p:?}: {x:?} {y:?} crossless with delta {d} > {}", deg_h - 1)
                });
            }

            for &(i, k) in &delta {
                if i == 0 || k == 0 || i == dx || k == dy {
                    continue;
                }
                let (x1, x2) = (sub(x, &px[i]), px[i].clone());
                let (y1, y2) = (sub(y, &py[k]), py[k].clone());
                let lhs: Point = hmin(&x1, &y1).iter().zip(hmin(&x2, &y2)).map(|(a, b)| a + b).collect();
                let rhs = hmin(x, y);
                suite.check(H_SUPERADDITIVE, lhs.iter().zip(&rhs).all(|(a, b)| a <= b), || {
                    format!("{p:?}: split of {x:?} {y:?} at ({i},{k})")
                });

                let d1 = oracle_delta(&partials(&x1, &l.steps()[..i]), &partials(&y1, &n.steps()[..k]), alpha).len() as i64 - 2;
                let d2 = oracle_delta(&px[i..], &py[k..], alpha).len() as i64 - 2;
                let ok = d1 + d2 < d && (!chain || d1 + d2 == d - 1);
                suite.check(SPLITTING, ok, || {
                    format!("{p:?}: {x:?} {y:?} at ({i},{k}): {d1} + {d2} vs {d}, crossless {chain}")
                });
            }
        }
    }
    let complete = seen == lx.len() * ly.len();
    if !complete {
        for n in names {
            suite.unknown(n);
        }
    }
    if members.len() == 2 {
        if all_crossless && !complete {
            suite.unknown(TWO_ELEMENT);
        } else {
            suite.check(TWO_ELEMENT, all_crossless, || format!("{p:?}: class {members:?} has a crossing pair"));
        }
    }
}

fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(u, v)| u - v).collect()
}

/// Runs the suite on `count` random instances of dimension `d`.
pub fn run_suite(seed: u64, count: usize, d: usize, alpha_max: i64, c_max: usize) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = Suite::default();
    for _ in 0..count {
        let p = random_presentation(&mut rng, d, alpha_max, c_max);
        total.merge(check_instance(&p, &mut rng));
    }
    total
}

pub fn print_suite(s: &Suite) {
    for (name, t) in &s.props {
        println!(
            "    {name}: {} passed, {} violated, {} indeterminate",
            t.passed, t.violated, t.indeterminate
        );
        if let Some(v) = &t.first_violation {
            println!("      first violation: {v}");
        }
    }
}
