//! Homomorphisms between column Specht modules: the level-3 pair with
//! `e = 2`, `kappa = (0,1,0)` has a single homomorphism, of degree 1, and
//! it is dominated.
//!
//! ```text
//! cargo run --release --example hom_space
//! ```

use std::sync::Arc;

use klr_specht::config::AlgebraConfig;
use klr_specht::hom::hom_space;
use klr_specht::io::{hom_json, hom_text};
use klr_specht::partition::Multipartition;
use klr_specht::specht::build_column_model;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(2, &[0, 1, 0]);
    let lambda: Multipartition = "1,1|2,1,1,1|1".parse()?;
    let mu: Multipartition = "1|3,1|3".parse()?;
    let source = build_column_model(&lambda, &cfg)?;
    let target = Arc::new(build_column_model(&mu, &cfg)?);

    for dominated in [false, true] {
        let h = hom_space(&source, &target, dominated)?;
        println!("{} homomorphisms:", if dominated { "dominated" } else { "all" });
        print!("{}", hom_text(&h));
        println!("{}", hom_json(&h));
    }
    Ok(())
}
