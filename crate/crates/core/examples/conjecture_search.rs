//! Seeded random search over small instances for pairs with
//! `delta(x, y) > deg h(x, y) - 1`. Prints the summary and any violation.
//!
//! Run with `cargo run --release --example conjecture_search -- <seed> <trials>`.

use simplicial_reg::cli::search::{run_search, SearchConfig};
use simplicial_reg::star::{Scope, SearchCaps};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    for (scope, d_range, alpha_range) in [
        (Scope::AllPairs, (2, 2), (3, 25)),
        (Scope::Strong, (2, 2), (3, 15)),
        (Scope::AllPairs, (3, 3), (2, 6)),
    ] {
        let config = SearchConfig {
            seed,
            trials,
            alpha_range,
            d_range,
            c_range: (1, 4),
            scope,
            caps: SearchCaps { max_sequences: 20_000, max_pairs: 2_000_000 },
        };
        let out = run_search(&config);
        println!("{scope:?} d in {d_range:?} alpha in {alpha_range:?}: {:?}", out.summary);
        for r in out.records.iter().filter(|r| r["violations"].as_u64().unwrap_or(0) > 0) {
            println!("  {r}");
        }
    }
}
