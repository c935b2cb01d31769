//! Decomposes the coordinate ring of a smooth monomial curve in P^5 into
//! shifted monomial ideals and reads off its regularity.
//!
//! Run with `cargo run --example decompose_curve`.

use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::linalg::Field;
use simplicial_reg::monomial::LatticeCaps;
use simplicial_reg::regularity::{decompose, eisenbud_goto_verdict};

fn monomial(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| if p == 1 { format!("y{}", i + 1) } else { format!("y{}^{p}", i + 1) })
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join("") }
}

fn main() -> simplicial_reg::error::Result<()> {
    let extras = [[11, 1], [9, 3], [4, 8], [1, 11]].map(|c| LatticePoint::new(c.to_vec()));
    let sg = Semigroup::new(SemigroupPresentation::new(2, 12, extras.to_vec()))?;
    let report = decompose(&sg, Field::Rationals, LatticeCaps::default())?;

    println!("f = {}, codim = {}", report.f, report.codim);
    println!("summands:");
    for s in &report.summands {
        let gens: Vec<String> = s.ideal_generators.iter().map(|g| monomial(g)).collect();
        println!("  ({})T(-{})^{}", gens.join(", "), s.shift, s.multiplicity);
    }
    for &t in &report.gamma_set {
        let c = &report.classes[t - 1];
        let elems: Vec<String> = c.elements.iter().map(|e| e.to_string()).collect();
        println!("class {t} attains the maximum: {{{}}}, reg I = {}, deg h = {}", elems.join(", "), c.ideal_regularity, c.shift_degree);
    }
    let v = eisenbud_goto_verdict(&report);
    println!("reg K[B] = {} <= {} = deg - codim: {:?} ({:?})", v.reg_kb, v.bound, v.holds, v.proved_case);
    Ok(())
}
