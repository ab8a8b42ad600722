//! Replays the recorded CLI invocations in `fixtures/cli.jsonl`.

use klr_specht::cli::parse_fixtures;

#[test]
fn cli_fixtures_replay() {
    let text = include_str!("fixtures/cli.jsonl");
    let fixtures = parse_fixtures(text).expect("fixture file parses");
    assert!(!fixtures.is_empty());
    let failures: Vec<String> = fixtures
        .iter()
        .filter_map(|f| f.check().map(|why| format!("{}: {why}", f.name)))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
