//! End-to-end checks of the command-line surface: cache determinism and
//! corrupt-entry recovery, module file round trips, a tampered-module
//! negative control, and exit codes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use repstab_cli::cache::Cache;
use repstab_cli::corpus::builtin_module;
use repstab_core::exactlin::Field;

fn repstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn dir_snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

#[test]
fn cache_entries_are_byte_identical_across_runs() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let cache_a = Cache::at(dir_a.path());
    let cache_b = Cache::at(dir_b.path());

    let first = builtin_module("m1", 4, Field::Q, &cache_a).unwrap();
    let snap_one = dir_snapshot(dir_a.path());
    assert!(!snap_one.is_empty(), "construction populated the cache");

    // Second call in the same cache: served from disk, bytes untouched.
    let second = builtin_module("m1", 4, Field::Q, &cache_a).unwrap();
    assert_eq!(first, second);
    assert_eq!(snap_one, dir_snapshot(dir_a.path()));

    // Fresh cache directory: identical keys and identical bytes.
    let third = builtin_module("m1", 4, Field::Q, &cache_b).unwrap();
    assert_eq!(first, third);
    assert_eq!(snap_one, dir_snapshot(dir_b.path()));
}

#[test]
fn corrupt_cache_entries_are_recovered() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let original = builtin_module("m0", 3, Field::Q, &cache).unwrap();
    let snap = dir_snapshot(dir.path());

    for name in snap.keys() {
        fs::write(dir.path().join(name), b"{ not json").unwrap();
    }
    let recovered = builtin_module("m0", 3, Field::Q, &cache).unwrap();
    assert_eq!(original, recovered);
    // Entries were rewritten with valid content.
    assert_eq!(snap, dir_snapshot(dir.path()));
}

#[test]
fn binary_warns_on_corrupt_cache_and_reproduces_output() {
    let cache = tempfile::tempdir().unwrap();
    let cache_flag = cache.path().to_str().unwrap().to_owned();
    let args = ["--n-max", "3", "--cache", &cache_flag, "degrees", "--builtin", "m1"];
    let first = repstab(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));

    for entry in fs::read_dir(cache.path()).unwrap() {
        fs::write(entry.unwrap().path(), b"garbage").unwrap();
    }
    let second = repstab(&args);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "recomputed output differs");
    assert!(
        String::from_utf8_lossy(&second.stderr).contains("corrupt cache entry"),
        "expected a corruption warning, got: {}",
        String::from_utf8_lossy(&second.stderr)
    );
}

#[test]
fn validate_round_trips_a_module_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let module = builtin_module("m1", 4, Field::Q, &cache).unwrap();
    let path = dir.path().join("m1.json");
    fs::write(&path, serde_json::to_vec_pretty(&module).unwrap()).unwrap();

    let out = repstab(&["validate", "--module", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["valid"], serde_json::Value::Bool(true));
}

#[test]
fn tampered_module_fails_validation_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let module = builtin_module("m1", 4, Field::Q, &cache).unwrap();
    let mut value = serde_json::to_value(&module).unwrap();

    // Break one group-generator matrix entry at rank 2.
    let entry = &mut value["generators"]["2"][0]["entries"][0][2];
    *entry = serde_json::Value::String("7/3".into());
    let path = dir.path().join("bad.json");
    fs::write(&path, serde_json::to_vec(&value).unwrap()).unwrap();

    let out = repstab(&["validate", "--module", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "tampered module must fail");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["valid"], serde_json::Value::Bool(false));
    assert!(
        !report["violations"].as_array().unwrap().is_empty(),
        "expected a violation witness"
    );
}

#[test]
fn exit_codes_distinguish_failure_from_error() {
    // A bound evaluation that succeeds.
    let ok = repstab(&["bounds", "--kind", "pbr", "--d", "-1", "--r", "1", "--i", "3"]);
    assert_eq!(ok.status.code(), Some(0));

    // A hard usage error: unknown built-in module.
    let err = repstab(&["degrees", "--builtin", "no-such-module"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(!err.stderr.is_empty());
}
