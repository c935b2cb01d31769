//! Gaps on the degree-one line of monomial curves and the bounds built from
//! them, next to the actual regularity.
//!
//! Run with `cargo run --example gap_bounds`.

use simplicial_reg::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use simplicial_reg::linalg::Field;
use simplicial_reg::monomial::LatticeCaps;
use simplicial_reg::regularity::{decompose, gap_report};

fn main() -> simplicial_reg::error::Result<()> {
    let curves: &[(i64, &[i64])] = &[(12, &[11, 9, 4, 1]), (10, &[9, 1]), (7, &[1, 2, 3, 4, 5, 6]), (15, &[14, 10, 3, 1])];
    for &(alpha, firsts) in curves {
        let extras = firsts.iter().map(|&k| LatticePoint::new(vec![k, alpha - k])).collect();
        let sg = Semigroup::new(SemigroupPresentation::new(2, alpha, extras))?;
        let gaps = gap_report(&sg)?;
        let reg = decompose(&sg, Field::Rationals, LatticeCaps::default())?.reg_kb;
        let line: String = gaps.pattern.iter().map(|&m| if m { '#' } else { '.' }).collect();
        println!(
            "alpha {alpha:>2} {line:<16} reg {reg}  L'vovsky {}  smooth bound {:?}  deg - codim {}",
            gaps.lvovsky_bound, gaps.hhs_bound, gaps.degree_minus_codim
        );
    }
    Ok(())
}
