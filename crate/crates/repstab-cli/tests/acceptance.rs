//! End-to-end acceptance gate: runs every verification suite and prints one
//! pass/fail line per criterion. Run with `--nocapture` to see the lines on
//! success.

use repstab_cli::cache::Cache;
use repstab_cli::suites::{run_one, SuiteContext, SUITE_NAMES};
use repstab_core::exactlin::Field;

#[test]
fn acceptance_criteria() {
    let tmp = tempfile::tempdir().expect("temp cache dir");
    let ctx = SuiteContext {
        field: Field::Q,
        n_max: None,
        cache: Cache::at(tmp.path()),
    };
    let mut failures = Vec::new();
    for (idx, name) in SUITE_NAMES.iter().enumerate() {
        let line = match run_one(name, &ctx) {
            Ok(rep) if rep.pass => format!("criterion {:2} [{name}]: pass", idx + 1),
            Ok(rep) => {
                failures.push(format!("{name}: {}", rep.measured));
                format!("criterion {:2} [{name}]: FAIL", idx + 1)
            }
            Err(e) => {
                failures.push(format!("{name}: hard error: {e}"));
                format!("criterion {:2} [{name}]: ERROR", idx + 1)
            }
        };
        println!("{line}");
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
