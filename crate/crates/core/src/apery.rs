//! The Apery set `B_A` of `B` relative to `A = <e_1, .., e_d>` and its
//! partition into residue classes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, Semigroup};
use crate::monomial::MonomialIdeal;

/// One equivalence class `Gamma_t` of the Apery set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperyClass {
    pub residue: LatticePoint,
    /// Sorted ascending.
    pub elements: Vec<LatticePoint>,
    /// Componentwise minimum of `elements`.
    pub shift: LatticePoint,
    /// `(x - shift) / alpha` for each element, in the order of `elements`.
    pub exponents: Vec<Vec<u32>>,
}

impl AperyClass {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn shift_degree(&self, alpha: i64) -> i64 {
        self.shift.coordinate_sum() / alpha
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// The monomial ideal generated by the class exponents.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(self.exponents.clone())
    }
}

/// Returns `{x in B : x - e_i not in B for all i}`.
pub fn apery_set(sg: &Semigroup) -> Result<BTreeSet<LatticePoint>> {
    let f = sg.class_count();
    let c = sg.codim();
    // With normalized coordinates no element exceeds degree f - c; one extra
    // level is built to confirm that. Without normalization the search runs
    // until a level comes up empty.
    let level_cap = sg.gcd_warning().is_none().then(|| f.saturating_sub(c));

    let zero = LatticePoint::zero(sg.dim());
    let mut all = BTreeSet::from([zero.clone()]);
    let mut level = BTreeSet::from([zero]);
    let mut degree = 0usize;
    while !level.is_empty() {
        degree += 1;
        let mut next = BTreeSet::new();
        // An Apery element minus a generator stays in the Apery set, and a
        // unit generator can never be the last step, so extending the previous
        // level by extras reaches everything.
        for y in &level {
            for a in sg.extras() {
                let x = y + a;
                if !next.contains(&x) && in_apery(sg, &x) {
                    next.insert(x);
                }
            }
        }
        if let Some(cap) = level_cap {
            if degree > cap && !next.is_empty() {
                let witness = next.iter().next().expect("checked non-empty");
                return Err(Error::Consistency(format!(
                    "Apery element {witness} has degree {degree} above the bound {cap}"
                )));
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }

    let residues: HashSet<LatticePoint> = all.iter().map(|x| x.residue(sg.alpha())).collect();
    if residues.len() != f {
        return Err(Error::Consistency(format!(
            "found {} residue classes in the Apery set, expected {f}",
            residues.len()
        )));
    }
    Ok(all)
}

/// Membership test for `B_A`, assuming `x` is already known to lie in `B`.
fn in_apery(sg: &Semigroup, x: &LatticePoint) -> bool {
    (0..sg.dim()).all(|axis| {
        let e = sg.unit(axis);
        !(x.dominates(e) && sg.is_member(&(x - e)))
    })
}

/// Whether `x` lies in `B_A`.
pub fn is_apery_element(sg: &Semigroup, x: &LatticePoint) -> bool {
    sg.is_member(x) && in_apery(sg, x)
}

/// Groups the Apery set by residue.
///
/// Order: the class of 0, then the singleton classes `{a_i}` in input order,
/// then the remaining classes by residue.
pub fn partition_classes(sg: &Semigroup, apery: &BTreeSet<LatticePoint>) -> Result<Vec<AperyClass>> {
    let alpha = sg.alpha();
    let mut groups: BTreeMap<LatticePoint, Vec<LatticePoint>> = BTreeMap::new();
    for x in apery {
        groups.entry(x.residue(alpha)).or_default().push(x.clone());
    }
    if groups.len() != sg.class_count() {
        return Err(Error::Consistency(format!(
            "{} classes, expected {}",
            groups.len(),
            sg.class_count()
        )));
    }

    let mut leading = vec![LatticePoint::zero(sg.dim())];
    leading.extend(sg.extras().iter().map(|a| a.residue(alpha)));

    let mut classes = Vec::with_capacity(groups.len());
    for residue in &leading {
        if let Some(elements) = groups.remove(residue) {
            classes.push(build_class(residue.clone(), elements, alpha)?);
        }
    }
    for (residue, elements) in groups {
        classes.push(build_class(residue, elements, alpha)?);
    }
    Ok(classes)
}

fn build_class(residue: LatticePoint, mut elements: Vec<LatticePoint>, alpha: i64) -> Result<AperyClass> {
    elements.sort();
    let (shift, exponents) = shift_and_exponents(&elements, alpha)?;
    Ok(AperyClass { residue, elements, shift, exponents })
}

/// The shift `h_t` (componentwise minimum) and exponent vectors
/// `(x - h_t) / alpha` of a class.
pub fn shift_and_exponents(elements: &[LatticePoint], alpha: i64) -> Result<(LatticePoint, Vec<Vec<u32>>)> {
    let first = elements
        .first()
        .ok_or_else(|| Error::Precondition("empty class".into()))?;
    let shift = elements
        .iter()
        .skip(1)
        .fold(first.clone(), |acc, x| acc.componentwise_min(x));
    let mut exponents = Vec::with_capacity(elements.len());
    for x in elements {
        let diff = x - &shift;
        let mut exps = Vec::with_capacity(diff.dim());
        for &c in diff.coords() {
            if c < 0 || c % alpha != 0 {
                return Err(Error::Consistency(format!(
                    "{x} - {shift} is not a nonnegative multiple of {alpha}"
                )));
            }
            exps.push(u32::try_from(c / alpha).map_err(|_| Error::Consistency("exponent overflow".into()))?);
        }
        exponents.push(exps);
    }
    Ok((shift, exponents))
}

/// The Apery set with its classes and a residue index.
#[derive(Clone, Debug)]
pub struct AperyData {
    alpha: i64,
    elements: BTreeSet<LatticePoint>,
    classes: Vec<AperyClass>,
    by_residue: HashMap<LatticePoint, usize>,
}

impl AperyData {
    pub fn compute(sg: &Semigroup) -> Result<Self> {
        let elements = apery_set(sg)?;
        let classes = partition_classes(sg, &elements)?;
        let by_residue = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.residue.clone(), i))
            .collect();
        Ok(AperyData { alpha: sg.alpha(), elements, classes, by_residue })
    }

    pub fn elements(&self) -> &BTreeSet<LatticePoint> {
        &self.elements
    }

    pub fn classes(&self) -> &[AperyClass] {
        &self.classes
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.elements.contains(x)
    }

    /// Index of the class with the residue of `x`.
    pub fn class_index(&self, x: &LatticePoint) -> Option<usize> {
        self.by_residue.get(&x.residue(self.alpha)).copied()
    }

    pub fn class_of(&self, x: &LatticePoint) -> Option<&AperyClass> {
        self.class_index(x).map(|i| &self.classes[i])
    }

    /// Largest degree among Apery elements with a witness.
    pub fn max_degree(&self) -> (i64, LatticePoint) {
        self.elements
            .iter()
            .map(|x| (x.coordinate_sum() / self.alpha, x.clone()))
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))
            .expect("the Apery set always contains 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SemigroupPresentation;

    fn p(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec())
    }

    fn sg(d: usize, alpha: i64, extras: &[&[i64]]) -> Semigroup {
        Semigroup::new(SemigroupPresentation::new(d, alpha, extras.iter().map(|c| p(c)).collect())).unwrap()
    }

    #[test]
    fn fixture_points_are_apery_elements() {
        let s = sg(2, 30, &[&[3, 27], &[23, 7]]);
        let set = apery_set(&s).unwrap();
        assert!(set.contains(&p(&[27, 243])));
        assert!(set.contains(&p(&[207, 63])));
        assert!(set.contains(&p(&[0, 0])));
    }

    #[test]
    fn smooth_rational_quartic_apery_set() {
        for alpha in 3..12 {
            let s = sg(2, alpha, &[&[alpha - 1, 1], &[1, alpha - 1]]);
            let set = apery_set(&s).unwrap();
            let mut expected = BTreeSet::new();
            for i in 0..=alpha - 2 {
                expected.insert(p(&[i, i * (alpha - 1)]));
                expected.insert(p(&[i * (alpha - 1), i]));
            }
            assert_eq!(set, expected, "alpha = {alpha}");
        }
    }

    #[test]
    fn class_sizes_for_p5_curve() {
        let s = sg(2, 12, &[&[11, 1], &[9, 3], &[4, 8], &[1, 11]]);
        let data = AperyData::compute(&s).unwrap();
        let mut sizes: Vec<usize> = data.classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3]);
        assert_eq!(data.classes()[0].elements, vec![p(&[0, 0])]);
        for (i, a) in s.extras().iter().enumerate() {
            assert_eq!(data.classes()[i + 1].elements, vec![a.clone()]);
        }
    }

    #[test]
    fn shift_and_exponents_examples() {
        let (h, e) = shift_and_exponents(&[p(&[7, 41]), p(&[19, 17]), p(&[31, 5])], 12).unwrap();
        assert_eq!(h, p(&[7, 5]));
        assert_eq!(e, vec![vec![0, 3], vec![1, 1], vec![2, 0]]);

        let (h, e) = shift_and_exponents(&[p(&[0, 0, 0])], 5).unwrap();
        assert_eq!(h, p(&[0, 0, 0]));
        assert_eq!(e, vec![vec![0, 0, 0]]);

        let (h, e) = shift_and_exponents(&[p(&[3, 6, 4, 11]), p(&[15, 0, 10, 5])], 6).unwrap();
        assert_eq!(h, p(&[3, 0, 4, 5]));
        assert_eq!(h.coordinate_sum() / 6, 2);
        assert_eq!(e, vec![vec![0, 1, 0, 1], vec![2, 0, 1, 0]]);
    }

    #[test]
    fn mixed_residues_are_a_consistency_error() {
        let err = shift_and_exponents(&[p(&[1, 2]), p(&[2, 1])], 3).unwrap_err();
        assert!(matches!(err, Error::Consistency(_)));
        assert!(shift_and_exponents(&[], 3).is_err());
    }

    #[test]
    fn four_dimensional_example_has_two_element_class() {
        let s = sg(4, 6, &[&[0, 2, 0, 4], &[3, 0, 2, 1], &[0, 2, 2, 2]]);
        let data = AperyData::compute(&s).unwrap();
        let class = data.class_of(&p(&[3, 6, 4, 11])).unwrap();
        assert_eq!(class.elements, vec![p(&[3, 6, 4, 11]), p(&[15, 0, 10, 5])]);
    }
}
