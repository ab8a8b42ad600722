//! Tableaux of `lambda = ((2,2),(2,1,1),(3,2))`: the column and row reading
//! tableaux, residues for `e = 4`, `kappa = (1,2,0)`, and graded counts.
//!
//! ```text
//! cargo run --example tableau_combinatorics
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::tableau::{enumerate_std, std_graded_count, Tableau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(4, &[1, 2, 0]);
    let lambda: Multipartition = "2,2|2,1,1|3,2".parse()?;
    let (t_col, t_row) = (Tableau::t_col(&lambda), Tableau::t_row(&lambda));
    println!("t_lambda = {t_col}");
    println!("t^lambda = {t_row}");
    println!("i_lambda = {:?}", t_col.residue_sequence(&cfg));
    println!("i^lambda = {:?}", t_row.residue_sequence(&cfg));
    println!("w^(t_lambda) = {}", t_col.perm_row());
    println!("defect {}", lambda.defect(&cfg));

    let (count, graded) = std_graded_count(&lambda, &cfg);
    println!("|Std| = {count}");
    println!("sum of v^codeg = {graded}");

    // Dominance between standard tableaux of a small shape.
    let small: Multipartition = "2,1".parse()?;
    let std = enumerate_std(&small);
    for s in &std {
        for t in &std {
            if s != t && s.dominates(t)? {
                println!("{s} dominates {t}");
            }
        }
    }
    Ok(())
}
