//! Golden CLI transcripts: `golden/cases/<name>.args` holds one argument per
//! line, `<name>.expected` the exit code and both streams. Commands run with
//! `golden/` as the working directory so document paths stay relative.
//! Set `SQFREE_BLESS=1` to rewrite the expected files.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub struct GoldenCase {
    pub name: String,
    pub args: Vec<String>,
    pub expected: PathBuf,
}

pub fn cases() -> Vec<GoldenCase> {
    let dir = golden_dir().join("cases");
    let mut out: Vec<GoldenCase> = fs::read_dir(&dir)
        .expect("golden cases directory")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "args").then_some(path)
        })
        .map(|path| {
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            let args = fs::read_to_string(&path)
                .unwrap()
                .lines()
                .filter(|l| !l.is_empty())
                .map(str::to_string)
                .collect();
            GoldenCase { expected: dir.join(format!("{name}.expected")), name, args }
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn transcript(args: &[String]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_sqfree"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("run sqfree");
    format!(
        "exit: {}\nstdout:\n{}stderr:\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// `Ok(())` when two runs agree with each other and with the expected file.
pub fn check(case: &GoldenCase) -> Result<(), String> {
    let first = transcript(&case.args);
    let second = transcript(&case.args);
    if first != second {
        return Err(format!("{}: output differs between runs", case.name));
    }
    if std::env::var_os("SQFREE_BLESS").is_some() {
        fs::write(&case.expected, &first).unwrap();
        return Ok(());
    }
    let expected = fs::read_to_string(&case.expected)
        .map_err(|e| format!("{}: cannot read expected transcript: {e}", case.name))?;
    if expected != first {
        return Err(format!("{}: transcript mismatch\n--- expected\n{expected}--- actual\n{first}", case.name));
    }
    Ok(())
}

pub fn exit_code(transcript: &str) -> i32 {
    transcript
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("exit: "))
        .and_then(|c| c.parse().ok())
        .expect("transcript starts with the exit code")
}
