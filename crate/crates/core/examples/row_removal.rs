//! Row removal, generalised row removal and the row-join candidate built
//! from the dual bases, on the level-3 example with `e = 2`.
//!
//! ```text
//! cargo run --release --example row_removal
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::verify::Verifier;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(2, &[0, 1, 0]);
    let lambda: Multipartition = "1,1|2,1,1,1|1".parse()?;
    let mu: Multipartition = "1|3,1|3".parse()?;
    let (lt, lb, kt, kb) = lambda.split_rows(1, 2, &cfg.kappa)?;
    let (mt, mb, _, _) = mu.split_rows(1, 2, &cfg.kappa)?;
    println!("top:    {lt} -> {mt} with kappa {kt:?}");
    println!("bottom: {lb} -> {mb} with kappa {kb:?}");

    let v = Verifier::new();
    println!("DHom top    = {}", v.dhom(&lt, &mt, &cfg.with_kappa(&kt))?);
    println!("DHom bottom = {}", v.dhom(&lb, &mb, &cfg.with_kappa(&kb))?);
    println!("DHom whole  = {}", v.dhom(&lambda, &mu, &cfg)?);
    println!("{}", v.verify_grr(&lambda, &mu, 1, 2, &cfg));
    println!("{}", v.verify_exprow_worked_example());

    let small = AlgebraConfig::finite(3, &[0]);
    let (a, b): (Multipartition, Multipartition) = ("3,1".parse()?, "3,1".parse()?);
    println!("{}", v.verify_rr(&a, &b, 1, &small));
    Ok(())
}
