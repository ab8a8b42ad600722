//! Runs one check over all multipartitions up to a size bound and prints
//! the summary table.
//!
//! ```text
//! cargo run --release --example theorem_sweep -- cr 3 0,1 5
//! ```
//! Arguments: theorem id, `e`, `kappa`, maximum size.

use std::time::Instant;

use klr_specht::config::{parse_kappa, AlgebraConfig};
use klr_specht::verify::{summarise, summary_table, SweepSpec, Theorem, Verifier};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let theorem: Theorem = args.first().map_or("cr", String::as_str).parse()?;
    let e: u32 = args.get(1).map_or("3", String::as_str).parse()?;
    let kappa = parse_kappa(args.get(2).map_or("0,1", String::as_str))?;
    let n_max: usize = args.get(3).map_or("4", String::as_str).parse()?;

    let cfg = AlgebraConfig::finite(e, &kappa);
    let start = Instant::now();
    let verifier = Verifier::new();
    let reports = verifier.sweep(theorem, &SweepSpec::new(cfg, n_max));
    for r in reports.iter().filter(|r| r.is_failure()) {
        println!("{r}");
    }
    print!("{}", summary_table(&summarise(&reports)));
    println!("{} models built in {:.1?}", verifier.cache.len(), start.elapsed());
    Ok(())
}
