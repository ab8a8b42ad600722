//! When `e != 2` and `kappa` has distinct entries every homomorphism is
//! dominated and Specht modules are indecomposable. Outside those
//! hypotheses two small modules have endomorphism rings of dimension 2.
//!
//! ```text
//! cargo run --release --example dominated_homs
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::verify::{summarise, summary_table, Verifier};

fn main() {
    let v = Verifier::new();
    let reports = v.verify_domhom(&AlgebraConfig::finite(3, &[0, 1]), 4);
    print!("{}", summary_table(&summarise(&reports)));
    println!("{}", v.verify_domhom(&AlgebraConfig::finite(2, &[0]), 4)[0]);
    for rep in v.verify_decomposable_witnesses() {
        println!("{rep}");
    }
}
