#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fuzzy_homlie::format::{parse_algebra, parse_flag, serialize_algebra, serialize_flag};

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn fhl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fhl"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("fhl runs")
}

/// Report text with the timing value zeroed.
pub fn normalized(stdout: &[u8]) -> String {
    let text = String::from_utf8_lossy(stdout);
    text.lines()
        .map(|line| {
            if line.trim_start().starts_with("\"timing_ms\":") {
                "  \"timing_ms\": 0".to_owned()
            } else {
                line.to_owned()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// Runs `fhl args`, checks the exit code, and compares the report with
/// `tests/golden/<name>.json`. With `UPDATE_GOLDEN` set the file is
/// rewritten instead.
pub fn golden(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let out = fhl(args);
    if out.status.code() != Some(code) {
        return Err(format!(
            "{name}: exit {:?}, expected {code}; stderr {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = golden_dir().join(format!("{name}.json"));
    let actual = normalized(&out.stdout);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if actual != expected {
        return Err(format!("{name}: report differs from {}", path.display()));
    }
    Ok(())
}

/// parse ∘ serialize ∘ parse = parse for every shipped algebra and flag.
pub fn shipped_files_round_trip() -> Result<usize, String> {
    let mut count = 0;
    for entry in std::fs::read_dir(data_dir()).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let fail = |e: fuzzy_homlie::Error| format!("{}: {e}", path.display());
        let ok = match path.extension().and_then(|e| e.to_str()) {
            Some("alg") => {
                let a = parse_algebra(&text).map_err(fail)?;
                let again = serialize_algebra(&a);
                let b = parse_algebra(&again).map_err(fail)?;
                b == a && serialize_algebra(&b) == again
            }
            Some("flag") => {
                let mu = parse_flag(&text, None).map_err(fail)?;
                let again = serialize_flag(&mu);
                let nu = parse_flag(&again, None).map_err(fail)?;
                nu == mu && serialize_flag(&nu) == again
            }
            _ => continue,
        };
        if !ok {
            return Err(format!("{} does not round-trip", path.display()));
        }
        count += 1;
    }
    Ok(count)
}
