//! Builds the column Specht module of `lambda = (2,1)` for `e = 3`, checks
//! it against the full presentation and prints the standard basis.
//!
//! ```text
//! cargo run --example specht_module
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::specht::{build_column_model, validate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(3, &[0]);
    let lambda: Multipartition = "2,1".parse()?;
    let model = build_column_model(&lambda, &cfg)?;

    println!("S_{lambda} over {cfg}");
    println!("dimension {}, graded dimension {}", model.dim(), model.graded_dimension());
    for (i, t) in model.basis.iter().enumerate() {
        println!("  v[{t}]  degree {}  residues {:?}  word {:?}", model.degrees[i], model.residues[i], model.basis_word(i));
    }
    // psi_2 sends v_{t_lambda} to the other basis vector.
    let image = model.act_word(&[2], &model.unit(model.seed()));
    println!("psi_2 z = {:?}", image.iter().map(|(j, c)| format!("{c} v[{}]", model.basis[*j])).collect::<Vec<_>>());

    let report = validate(&model);
    println!("{report}");
    Ok(())
}
