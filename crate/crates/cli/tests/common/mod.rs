#![allow(dead_code)]

use std::path::PathBuf;

use solgroup_cli::{run, Streams};

pub struct Ran {
    pub code: i32,
    pub out: String,
    pub err: String,
}

pub fn run_with(args: &[&str], stdin: &str) -> Ran {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut input = stdin.as_bytes();
    let mut s = Streams { out: &mut out, err: &mut err, stdin: &mut input };
    let argv: Vec<&str> = std::iter::once("solgroup").chain(args.iter().copied()).collect();
    let code = run(argv, &mut s);
    Ran { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

pub fn cli(args: &[&str]) -> Ran {
    run_with(args, "")
}

/// A fresh scratch path, unique per test name.
pub fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("solgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}
