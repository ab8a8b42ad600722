//! Column removal: graded dimensions of dominated homs before and after
//! splitting off columns, and product homomorphisms spanning the result.
//!
//! ```text
//! cargo run --release --example column_removal
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::verify::Verifier;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(3, &[0, 1]);
    let v = Verifier::new();
    let cases = [("2,1|1", "1,1|2"), ("2|2,1", "2|1,1,1"), ("1,1|2,1", "1,1|1,1,1"), ("3,1|0", "2,1,1|0")];
    for (l, m) in cases {
        let (lambda, mu): (Multipartition, Multipartition) = (l.parse()?, m.parse()?);
        println!("DHom({lambda}, {mu}) = {}", v.dhom(&lambda, &mu, &cfg)?);
        for m in 1..=2 {
            println!("  {}", v.verify_cr(&lambda, &mu, m, &cfg));
            println!("  {}", v.verify_fcr(&lambda, &mu, m, &cfg));
            for c in 1..=2 {
                println!("  {}", v.verify_gcr(&lambda, &mu, c, m, &cfg));
            }
        }
    }
    Ok(())
}
