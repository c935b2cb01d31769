//! Smooth rational curves in P^3, `<(a,0),(0,a),(a-1,1),(1,a-1)>`: the
//! regularity equals `a - 2 = deg - codim` for every `a >= 3`.
//!
//! Run with `cargo run --release --example smooth_p3_sweep -- 40`.

use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::linalg::Field;
use simplicial_reg::monomial::LatticeCaps;
use simplicial_reg::regularity::decompose;

fn main() -> simplicial_reg::error::Result<()> {
    let top: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    for alpha in 3..=top {
        let extras = vec![LatticePoint::new(vec![alpha - 1, 1]), LatticePoint::new(vec![1, alpha - 1])];
        let sg = Semigroup::new(SemigroupPresentation::new(2, alpha, extras))?;
        let r = decompose(&sg, Field::Rationals, LatticeCaps::default())?;
        let two_generated = r.summands.iter().filter(|s| s.ideal_generators.len() == 2).count();
        println!(
            "alpha {alpha:>3}: reg {:>3}, deg - codim {:>3}, margin {:?}, two-generated summands {two_generated}",
            r.reg_kb, r.eg_bound, r.margin
        );
    }
    Ok(())
}
