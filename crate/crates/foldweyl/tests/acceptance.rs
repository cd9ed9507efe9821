//! End-to-end acceptance run: the full verification suite, one line per
//! criterion.  Run with `cargo test --test acceptance -- --nocapture` to see
//! the per-check report.

use foldweyl::suite::{run, Level};

#[test]
fn acceptance() {
    let results = run(Level::Full);
    let mut failed = Vec::new();
    for r in &results {
        if r.passed {
            println!("{}: pass ({})", r.name, r.detail);
        } else {
            println!("{}: FAIL ({})", r.name, r.detail);
            failed.push(r.name);
        }
    }
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}
