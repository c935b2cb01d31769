//! A four-dimensional instance where the regularity comes from a class with
//! two elements, so the general Betti-number path does the work.
//!
//! Run with `cargo run --example four_dim_decomposition`.

use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::linalg::Field;
use simplicial_reg::monomial::LatticeCaps;
use simplicial_reg::regularity::{decompose, eisenbud_goto_verdict};

fn main() -> simplicial_reg::error::Result<()> {
    let extras = [[0, 2, 0, 4], [3, 0, 2, 1], [0, 2, 2, 2]].map(|c| LatticePoint::new(c.to_vec()));
    let sg = Semigroup::new(SemigroupPresentation::new(4, 6, extras.to_vec()))?;
    let report = decompose(&sg, Field::Rationals, LatticeCaps::default())?;

    let mut sizes = std::collections::BTreeMap::new();
    for c in &report.classes {
        *sizes.entry(c.elements.len()).or_insert(0) += 1;
    }
    println!("f = {}, class sizes (size: count) = {sizes:?}", report.f);
    for &t in &report.gamma_set {
        let c = &report.classes[t - 1];
        println!(
            "class {t}: elements {:?}, exponents {:?}, reg I = {}, deg h = {}",
            c.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            c.ideal_generators,
            c.ideal_regularity,
            c.shift_degree
        );
    }
    let v = eisenbud_goto_verdict(&report);
    println!("reg K[B] = {}, bound {}, proved case {:?}", v.reg_kb, v.bound, v.proved_case);
    Ok(())
}
