//! Drives the command-line front end in-process and replays the bundled
//! fixture file.
//!
//! ```text
//! cargo run --release --example cli_in_process
//! ```

use klr_specht::cli::{parse_fixtures, run};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = run(["klr-specht", "specht-info", "--e", "3", "--kappa", "0", "--lambda", "2,1"]);
    print!("{}", out.stdout);
    let out = run(["klr-specht", "verify", "domhom", "--e", "2"]);
    println!("exit {}:\n{}", out.code, out.stdout);

    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/cli.jsonl"))?;
    for f in parse_fixtures(&text)? {
        println!("{:<40} {}", f.name, f.check().map_or("ok".to_string(), |why| format!("FAIL {why}")));
    }
    Ok(())
}
