//! The standard-basis lemmas on one module: reduced words, `y`-action,
//! adjacent `psi` generators and reduced subexpressions of random words.
//!
//! ```text
//! cargo run --release --example basis_lemmas
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::symgroup::WordConvention;
use klr_specht::verify::lemmas::{adjacent, check_lemmas, reduced_subword_products};
use klr_specht::verify::Verifier;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(3, &[0, 1]);
    let lambda: Multipartition = "2,1|1,1".parse()?;
    let v = Verifier::new();
    let model = v.cache.column(&lambda, &cfg)?;
    for t in &model.basis {
        let w = t.perm_col();
        let rel: Vec<String> = (2..=t.n()).map(|j| format!("{:?}", adjacent(t, j))).collect();
        println!(
            "{t}: w = {w}, words {:?} / {:?}, adjacent pairs {}",
            w.reduced_word(WordConvention::LexMin),
            w.reduced_word(WordConvention::LexMax),
            rel.join(" ")
        );
    }
    let word = [1, 2, 1, 3, 2];
    println!("reduced subexpressions of {word:?}: {}", reduced_subword_products(5, &word).len());
    println!("{}", check_lemmas(&v, &lambda, &cfg, 200, 7));
    Ok(())
}
