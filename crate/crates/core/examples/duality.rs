//! Dominated homs `S_lambda -> S_mu` against `S_mu' -> S_lambda'` for the
//! conjugate multicharge, over all pairs of size at most 4.
//!
//! ```text
//! cargo run --release --example duality
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::verify::{summarise, summary_table, SweepSpec, Verifier};

fn main() {
    let v = Verifier::new();
    let spec = SweepSpec::new(AlgebraConfig::finite(3, &[0, 1]), 4);
    let mut reports = Vec::new();
    for (lambda, mu) in spec.pairs() {
        let rep = v.verify_duality(&lambda, &mu, &spec.cfg);
        if rep.left.as_deref() != Some("0") {
            println!("{rep}");
        }
        reports.push(rep);
    }
    print!("{}", summary_table(&summarise(&reports)));
}
