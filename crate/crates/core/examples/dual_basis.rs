//! The row Specht module, the pairing with the column module and the dual
//! basis `f_t` of `S_mu` for `mu = ((1),(3,1),(3))`.
//!
//! ```text
//! cargo run --release --example dual_basis
//! ```

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::specht::{build_column_model, build_row_model, dual_basis, validate};
use klr_specht::tableau::Tableau;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AlgebraConfig::finite(2, &[0, 1, 0]);
    let mu: Multipartition = "1|3,1|3".parse()?;
    let col = build_column_model(&mu, &cfg)?;
    let row = build_row_model(&mu, &cfg)?;
    println!("column model: dim {}, graded {}", col.dim(), col.graded_dimension());
    println!("row model:    dim {}, graded {}, certified {}", row.dim(), row.graded_dimension(), validate(&row).passed());

    let dual = dual_basis(&col)?;
    let u: Tableau = "7|2,6,8;3|1,4,5".parse()?;
    let i = col.index_of(&u).ok_or("u is not standard")?;
    let f_u = dual.from_f_coords(&col.unit(i));
    let terms: Vec<String> = f_u.iter().map(|(j, c)| format!("{c} v[{}]", col.basis[*j])).collect();
    println!("f[{u}] = {}", terms.join(" + "));
    Ok(())
}
