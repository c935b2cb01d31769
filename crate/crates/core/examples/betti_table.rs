//! Multigraded Betti numbers of monomial ideals from the homology of upper
//! Koszul complexes over the lcm lattice.
//!
//! Run with `cargo run --example betti_table`.

use simplicial_reg::linalg::Field;
use simplicial_reg::monomial::{LatticeCaps, MonomialIdeal};

fn show(gens: Vec<Vec<u32>>, field: Field) -> simplicial_reg::error::Result<()> {
    let ideal = MonomialIdeal::minimalize(gens)?;
    let table = ideal.betti_numbers(field, LatticeCaps::default())?;
    println!("ideal {:?} over {field}", ideal.generators());
    for i in 0..=table.projective_dimension() {
        println!("  beta_{i} = {}", table.total(i));
    }
    for ((i, b), n) in &table.entries {
        println!("  beta_{i},{b:?} = {n}");
    }
    println!("  reg = {}", table.regularity());
    Ok(())
}

fn main() -> simplicial_reg::error::Result<()> {
    show(vec![vec![1, 4, 0], vec![4, 1, 0], vec![0, 0, 3]], Field::Rationals)?;
    show(vec![vec![0, 1, 0, 1], vec![2, 0, 1, 0]], Field::Prime(2))?;
    // Both lcm lattices are small; the table is the same over every field here.
    let ideal = MonomialIdeal::minimalize(vec![vec![2, 0], vec![1, 1], vec![0, 3]])?;
    println!(
        "bivariate formula {} vs Betti path {}",
        ideal.regularity_bivariate()?,
        ideal.regularity_general(Field::Rationals, LatticeCaps::default())?
    );
    Ok(())
}
