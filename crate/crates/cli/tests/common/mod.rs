#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn pbn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbn")).args(args).output().expect("spawn pbn")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// `(name, args)` pairs from the golden script.
pub fn golden_script() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(golden_dir().join("commands.txt")).expect("golden script");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut words = l.split_whitespace().map(String::from);
            let name = words.next().expect("name");
            (name, words.collect())
        })
        .collect()
}

/// Names of golden commands whose output differs from the stored file.
pub fn golden_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (name, args) in golden_script() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = pbn(&args);
        let stored = std::fs::read(golden_dir().join(format!("{name}.json"))).unwrap_or_default();
        if !out.status.success() || out.stdout != stored {
            bad.push(name);
        }
    }
    bad
}
