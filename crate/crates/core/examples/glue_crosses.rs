//! Two disjoint crosses on the same pair of sequences combine into one cross
//! whose height is the sum of both heights.
//!
//! Run with `cargo run --example glue_crosses`.

use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::star::{enumerate_full, find_crosses, glue_crosses};

fn main() -> simplicial_reg::error::Result<()> {
    let extras = vec![LatticePoint::new(vec![1, 21]), LatticePoint::new(vec![17, 5])];
    let sg = Semigroup::new(SemigroupPresentation::new(2, 22, extras))?;
    let x = LatticePoint::new(vec![16, 336]);
    let y = LatticePoint::new(vec![170, 50]);

    for lambda in enumerate_full(&sg, &x, 100)? {
        for nu in enumerate_full(&sg, &y, 100)? {
            let crosses = find_crosses(&lambda, &nu, sg.alpha());
            for a in &crosses {
                for b in &crosses {
                    if a.at.j <= b.at.i && a.at.k <= b.at.l {
                        let glued = glue_crosses(&sg, a, b)?;
                        println!("{:?} height {:?}", a.at, a.height());
                        println!("{:?} height {:?}", b.at, b.height());
                        println!("glued into {:?} height {:?}", glued.at, glued.height());
                        let steps: Vec<String> = glued.lambda.steps().iter().map(|s| s.to_string()).collect();
                        println!("rearranged lambda: {}", steps.join(" "));
                        return Ok(());
                    }
                }
            }
        }
    }
    println!("no disjoint crosses found");
    Ok(())
}
