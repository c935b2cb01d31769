//! Two equivalent Apery elements whose only full sequences cross, and the
//! third element of their class that the crossing forces.
//!
//! Run with `cargo run --example pair_crosses`.

use simplicial_reg::apery::AperyData;
use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::star::{delta_min, delta_set, enumerate_full, find_crosses, h_min, third_element, SearchCaps};

fn main() -> simplicial_reg::error::Result<()> {
    let extras = vec![LatticePoint::new(vec![77, 2]), LatticePoint::new(vec![34, 45])];
    let sg = Semigroup::new(SemigroupPresentation::new(2, 79, extras))?;
    let apery = AperyData::compute(&sg)?;
    let x = LatticePoint::new(vec![1232, 32]);
    let y = LatticePoint::new(vec![442, 585]);

    let lx = enumerate_full(&sg, &x, 1000)?;
    let ly = enumerate_full(&sg, &y, 1000)?;
    println!("|Lambda_x| = {}, |Lambda_y| = {}", lx.len(), ly.len());
    println!("Delta = {:?}", delta_set(&lx[0], &ly[0], sg.alpha()));

    let min = delta_min(&sg, &apery, &x, &y, SearchCaps::default())?;
    let h = h_min(&x, &y);
    println!("delta(x, y) = {}, h = {h}, deg h - 1 = {}", min.value, h.coordinate_sum() / sg.alpha() - 1);

    for cross in find_crosses(&lx[0], &ly[0], sg.alpha()) {
        println!("cross at {:?} of height {:?}", cross.at, cross.height());
        let z = third_element(&sg, &apery, &cross)?;
        let class: Vec<String> = apery.class_of(&x).expect("x is an Apery element").elements.iter().map(|e| e.to_string()).collect();
        println!("third element {z}; class = {{{}}}", class.join(", "));
    }
    Ok(())
}
