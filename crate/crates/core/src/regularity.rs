//! The decomposition `K[B] = (+)_t I_t(-deg h_t)`, the regularity
//! `reg K[B] = max_t (reg I_t + deg h_t)`, Eisenbud-Goto verdicts and the
//! gap bounds for monomial curves.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::apery::AperyData;
use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use crate::linalg::Field;
use crate::monomial::{Exponent, LatticeCaps};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    /// 1-based position in the class order.
    pub index: usize,
    pub residue: LatticePoint,
    pub elements: Vec<LatticePoint>,
    pub shift: LatticePoint,
    pub shift_degree: i64,
    /// Minimal generators of `I_t`.
    pub ideal_generators: Vec<Exponent>,
    pub ideal_regularity: i64,
    /// `reg I_t + deg h_t`.
    pub total: i64,
}

/// One isomorphism type of summand `I(-shift)` with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Summand {
    pub shift: i64,
    /// `[0, .., 0]` alone stands for the free module `T`.
    pub ideal_generators: Vec<Exponent>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub presentation: SemigroupPresentation,
    pub gcd_warning: Option<i64>,
    pub field: Field,
    /// Number of classes.
    pub f: usize,
    pub codim: usize,
    /// `deg K[B] = f`; withheld under a gcd warning.
    pub degree: Option<usize>,
    pub classes: Vec<ClassSummary>,
    pub reg_kb: i64,
    /// 1-based indices of the classes attaining `reg_kb`.
    pub gamma_set: Vec<usize>,
    pub eg_bound: i64,
    pub eg_holds: Option<bool>,
    pub margin: Option<i64>,
    pub eg_status: String,
    pub summands: Vec<Summand>,
}

/// Full decomposition; per-class regularities run in parallel.
pub fn decompose(sg: &Semigroup, field: Field, caps: LatticeCaps) -> Result<DecompositionReport> {
    let apery = AperyData::compute(sg)?;
    decompose_with(sg, &apery, field, caps)
}

pub fn decompose_with(sg: &Semigroup, apery: &AperyData, field: Field, caps: LatticeCaps) -> Result<DecompositionReport> {
    let alpha = sg.alpha();
    let classes: Vec<ClassSummary> = apery
        .classes()
        .par_iter()
        .enumerate()
        .map(|(i, class)| {
            let ideal = class.ideal()?;
            let ideal_regularity = ideal.regularity(field, caps)?;
            let shift_degree = class.shift_degree(alpha);
            Ok(ClassSummary {
                index: i + 1,
                residue: class.residue.clone(),
                elements: class.elements.clone(),
                shift: class.shift.clone(),
                shift_degree,
                ideal_generators: ideal.generators().to_vec(),
                ideal_regularity,
                total: ideal_regularity + shift_degree,
            })
        })
        .collect::<Result<_>>()?;

    let reg_kb = classes
        .iter()
        .map(|c| c.total)
        .max()
        .ok_or_else(|| Error::Consistency("no classes".into()))?;
    let gamma_set = classes.iter().filter(|c| c.total == reg_kb).map(|c| c.index).collect();

    let f = classes.len();
    let codim = sg.codim();
    let eg_bound = f as i64 - codim as i64;
    let normalized = sg.gcd_warning().is_none();
    let (eg_holds, margin, eg_status) = if normalized {
        let holds = reg_kb <= eg_bound;
        let status = if holds { "holds" } else { "fails" };
        (Some(holds), Some(eg_bound - reg_kb), status.to_string())
    } else {
        (
            None,
            None,
            format!(
                "suppressed: coordinates share the factor {} with alpha, so deg K[B] = f is not asserted",
                sg.gcd_warning().unwrap_or(1)
            ),
        )
    };

    let mut multiset: BTreeMap<(i64, Vec<Exponent>), usize> = BTreeMap::new();
    for c in &classes {
        *multiset.entry((c.shift_degree, c.ideal_generators.clone())).or_default() += 1;
    }
    let summands = multiset
        .into_iter()
        .map(|((shift, ideal_generators), multiplicity)| Summand { shift, ideal_generators, multiplicity })
        .collect();

    Ok(DecompositionReport {
        presentation: sg.presentation().clone(),
        gcd_warning: sg.gcd_warning(),
        field,
        f,
        codim,
        degree: normalized.then_some(f),
        classes,
        reg_kb,
        gamma_set,
        eg_bound,
        eg_holds,
        margin,
        eg_status,
        summands,
    })
}

/// Which known result covers the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProvedCase {
    /// `dim K[B] = 2`.
    Curve,
    /// Every class has at most two elements.
    AllClassesAtMostTwo,
    /// Some class attaining the regularity has at most two elements.
    RegularityClassAtMostTwo,
    /// Unproved regime; the inequality is only checked empirically.
    Unproved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgVerdict {
    pub reg_kb: i64,
    pub bound: i64,
    pub holds: Option<bool>,
    pub margin: Option<i64>,
    pub proved_case: ProvedCase,
    pub status: String,
}

pub fn eisenbud_goto_verdict(report: &DecompositionReport) -> EgVerdict {
    let proved_case = if report.presentation.d == 2 {
        ProvedCase::Curve
    } else if report.classes.iter().all(|c| c.elements.len() <= 2) {
        ProvedCase::AllClassesAtMostTwo
    } else if report
        .gamma_set
        .iter()
        .any(|&t| report.classes[t - 1].elements.len() <= 2)
    {
        ProvedCase::RegularityClassAtMostTwo
    } else {
        ProvedCase::Unproved
    };
    EgVerdict {
        reg_kb: report.reg_kb,
        bound: report.eg_bound,
        holds: report.eg_holds,
        margin: report.margin,
        proved_case,
        status: report.eg_status.clone(),
    }
}

pub fn check_eisenbud_goto(sg: &Semigroup, field: Field, caps: LatticeCaps) -> Result<EgVerdict> {
    Ok(eisenbud_goto_verdict(&decompose(sg, field, caps)?))
}

/// A maximal run of missing degree-one points `(k, alpha - k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gap {
    pub start: i64,
    pub len: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub alpha: i64,
    /// Membership of `(k, alpha - k)` for `k = 0..=alpha`.
    pub pattern: Vec<bool>,
    pub gaps: Vec<Gap>,
    /// Lengths of the two longest gaps (0 when absent).
    pub longest: i64,
    pub second_longest: i64,
    pub lvovsky_bound: i64,
    /// Only for smooth curves, i.e. `(1, alpha - 1)` and `(alpha - 1, 1)` in `B`.
    pub hhs_bound: Option<i64>,
    /// `f - c`.
    pub degree_minus_codim: i64,
    /// Sum of gap lengths plus one.
    pub gap_sum_plus_one: i64,
    pub identity_holds: bool,
}

pub fn gap_report(sg: &Semigroup) -> Result<GapReport> {
    if sg.dim() != 2 {
        return Err(Error::NotBivariate(sg.dim()));
    }
    let alpha = sg.alpha();
    let pattern: Vec<bool> = (0..=alpha)
        .map(|k| sg.is_member(&LatticePoint::new(vec![k, alpha - k])))
        .collect();
    let mut gaps = Vec::new();
    let mut k = 0;
    while k <= alpha {
        if pattern[k as usize] {
            k += 1;
            continue;
        }
        let start = k;
        while k <= alpha && !pattern[k as usize] {
            k += 1;
        }
        gaps.push(Gap { start, len: k - start });
    }
    let mut lens: Vec<i64> = gaps.iter().map(|g| g.len).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    let longest = lens.first().copied().unwrap_or(0);
    let second_longest = lens.get(1).copied().unwrap_or(0);
    let smooth = pattern[1] && pattern[alpha as usize - 1];
    let degree_minus_codim = sg.class_count() as i64 - sg.codim() as i64;
    let gap_sum_plus_one = lens.iter().sum::<i64>() + 1;
    Ok(GapReport {
        alpha,
        pattern,
        gaps,
        longest,
        second_longest,
        lvovsky_bound: longest + second_longest + 1,
        hhs_bound: smooth.then_some(longest + 1),
        degree_minus_codim,
        gap_sum_plus_one,
        identity_holds: degree_minus_codim == gap_sum_plus_one,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    pub max_degree: i64,
    pub witness: LatticePoint,
    pub bound: i64,
    pub holds: bool,
}

/// Largest degree over `B_A` against `f - c`.
pub fn degree_bound_check(sg: &Semigroup, apery: &AperyData) -> DegreeBoundReport {
    let (max_degree, witness) = apery.max_degree();
    let bound = sg.class_count() as i64 - sg.codim() as i64;
    DegreeBoundReport { max_degree, witness, bound, holds: max_degree <= bound }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(d: usize, alpha: i64, extras: &[&[i64]]) -> Semigroup {
        let extras = extras.iter().map(|c| LatticePoint::new(c.to_vec())).collect();
        Semigroup::new(SemigroupPresentation::new(d, alpha, extras)).unwrap()
    }

    #[test]
    fn p5_curve_decomposition() {
        let s = sg(2, 12, &[&[11, 1], &[9, 3], &[4, 8], &[1, 11]]);
        let r = decompose(&s, Field::Rationals, LatticeCaps::default()).unwrap();
        assert_eq!((r.f, r.codim, r.reg_kb), (12, 4, 4));
        assert_eq!(r.eg_holds, Some(true));
        assert_eq!(r.margin, Some(4));
        assert_eq!(r.gamma_set.len(), 1);
        let top = &r.classes[r.gamma_set[0] - 1];
        assert_eq!(top.ideal_generators, vec![vec![2, 0], vec![1, 1], vec![0, 3]]);
        let shape: Vec<(i64, usize, usize)> = r
            .summands
            .iter()
            .map(|s| (s.shift, s.ideal_generators.len(), s.multiplicity))
            .collect();
        assert_eq!(shape, vec![(0, 1, 1), (1, 1, 4), (1, 2, 2), (1, 2, 2), (1, 2, 2), (1, 3, 1)]);
        assert_eq!(eisenbud_goto_verdict(&r).proved_case, ProvedCase::Curve);
    }

    #[test]
    fn p5_curve_gaps() {
        let s = sg(2, 12, &[&[11, 1], &[9, 3], &[4, 8], &[1, 11]]);
        let g = gap_report(&s).unwrap();
        let lens: Vec<i64> = g.gaps.iter().map(|g| g.len).collect();
        assert_eq!(lens, vec![2, 4, 1]);
        assert_eq!((g.lvovsky_bound, g.hhs_bound), (7, Some(5)));
        assert!(g.identity_holds);
        assert_eq!(g.degree_minus_codim, 8);
    }

    #[test]
    fn no_gaps_when_every_point_is_present() {
        let extras: Vec<Vec<i64>> = (1..5).map(|k| vec![k, 5 - k]).collect();
        let refs: Vec<&[i64]> = extras.iter().map(|v| v.as_slice()).collect();
        let g = gap_report(&sg(2, 5, &refs)).unwrap();
        assert!(g.gaps.is_empty());
        assert_eq!((g.lvovsky_bound, g.hhs_bound, g.degree_minus_codim), (1, Some(1), 1));
    }

    #[test]
    fn gaps_need_a_curve() {
        let s = sg(3, 2, &[&[1, 1, 0]]);
        assert!(matches!(gap_report(&s), Err(Error::NotBivariate(3))));
    }

    #[test]
    fn four_dimensional_example() {
        let s = sg(4, 6, &[&[0, 2, 0, 4], &[3, 0, 2, 1], &[0, 2, 2, 2]]);
        let r = decompose(&s, Field::Rationals, LatticeCaps::default()).unwrap();
        assert_eq!(r.reg_kb, 6);
        let v = eisenbud_goto_verdict(&r);
        assert_eq!(v.holds, Some(true));
        assert!(matches!(
            v.proved_case,
            ProvedCase::AllClassesAtMostTwo | ProvedCase::RegularityClassAtMostTwo
        ));
    }

    #[test]
    fn gcd_warning_suppresses_verdict() {
        let s = sg(2, 4, &[&[2, 2]]);
        let r = decompose(&s, Field::Rationals, LatticeCaps::default()).unwrap();
        assert_eq!(r.eg_holds, None);
        assert_eq!(r.degree, None);
        assert!(r.eg_status.starts_with("suppressed"));
    }
}
