#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

/// Every subcommand, with success, inequality and error paths.
pub const CASES: &[Case] = &[
    case("charpoly_free1", &["charpoly", "free1.json"], 0),
    case("charpoly_alt", &["charpoly", "alt.json"], 0),
    case("charpoly_alt_oracle", &["--oracle", "charpoly", "alt.json"], 0),
    case("charpoly_free1_lambda", &["charpoly", "free1.json", "--lambda", "2"], 0),
    case("charpoly_sep_lambda", &["charpoly", "sepx.json", "--lambda", "0"], 0),
    case("charpoly_typo", &["charpoly", "typo.json"], 2),
    case("charpoly_short", &["charpoly", "short.json"], 2),
    case("charpoly_cube", &["charpoly", "cube.json"], 3),
    case("charpoly_bad_lambda", &["charpoly", "alt.json", "--lambda", "abc"], 2),
    case("charpoly_missing_file", &["charpoly", "nosuch.json"], 2),
    case("fermi_eq_shifted", &["fermi-eq", "sepx.json", "sepy.json", "--lambda0", "0"], 0),
    case("fermi_eq_alt_free", &["fermi-eq", "alt.json", "free2.json", "--lambda0", "0"], 1),
    case("fermi_eq_mismatch", &["fermi-eq", "alt.json", "v123.json", "--lambda0", "0"], 3),
    case("fermi_eq_float_lambda", &["fermi-eq", "alt.json", "free2.json", "--lambda0", "0.5"], 2),
    case("floquet_eq_cyclic", &["floquet-eq", "v123.json", "v231.json"], 0),
    case("floquet_eq_alt_free", &["floquet-eq", "alt.json", "free2.json"], 1),
    case("floquet_eq_mismatch", &["floquet-eq", "alt.json", "v123.json"], 3),
    case("floquet_eq_float", &["floquet-eq", "float.json", "float_rev.json"], 0),
    case("floquet_eq_float_unequal", &["floquet-eq", "float.json", "free2.json"], 1),
    case("branches_free1", &["branches", "free1.json", "--terms", "3"], 0),
    case("branches_alt", &["branches", "alt.json", "--terms", "4"], 0),
    case("branches_bad_samples", &["branches", "alt.json", "--samples", "1000"], 3),
    case("branches_small_radius", &["branches", "alt.json", "--radius", "5"], 3),
    case("lemma31_alt_free", &["lemma31", "alt.json", "free2.json", "--l", "0"], 0),
    case("lemma31_identical", &["lemma31", "alt.json", "alt.json"], 3),
    case("lemma31_average_mismatch", &["lemma31", "alt.json", "ones2.json"], 3),
    case("irreducible_const11", &["irreducible", "const11.json", "--lambda", "5"], 0),
    case("irreducible_const23_scan", &["irreducible", "const23.json", "--scan", "0,1/2,1"], 0),
    case("irreducible_const23_default", &["irreducible", "const23.json"], 0),
    case("irreducible_sep_average", &["irreducible", "sepx.json", "--lambda", "5/3"], 0),
    case("irreducible_noncoprime", &["irreducible", "square22.json", "--lambda", "0"], 3),
    case("irreducible_line", &["irreducible", "alt.json", "--lambda", "0"], 3),
    case("rigidity_shift_reflect", &["verify-rigidity", "sepx.json", "sepy.json", "--lambda0", "0"], 0),
    case("rigidity_constant_transfer", &["verify-rigidity", "sepx.json", "sepc.json", "--lambda0", "0"], 0),
    case("rigidity_not_fermi", &["verify-rigidity", "sepx.json", "sepz.json", "--lambda0", "0"], 1),
    case("unknown_subcommand", &["frobnicate"], 2),
];

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fermiso"))
        .args(args)
        .current_dir(root().join("data"))
        .output()
        .expect("spawn fermiso");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Structural JSON equality; floats agree to 1e-9 relative.
pub fn json_close(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => {
            if x.is_f64() || y.is_f64() {
                let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
                (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()))
            } else {
                x == y
            }
        }
        (Value::Array(x), Value::Array(y)) => x.len() == y.len() && x.iter().zip(y).all(|(p, q)| json_close(p, q)),
        (Value::Object(x), Value::Object(y)) => {
            x.len() == y.len() && x.iter().all(|(k, v)| y.get(k).is_some_and(|w| json_close(v, w)))
        }
        _ => a == b,
    }
}

fn golden_path(name: &str, ext: &str) -> PathBuf {
    root().join("golden").join(format!("{name}.{ext}"))
}

fn read_opt(p: &Path) -> Option<String> {
    std::fs::read_to_string(p).ok()
}

/// Checks one case against its golden files; `Err` explains the mismatch.
/// With `FERMISO_BLESS=1` the golden files are rewritten instead.
pub fn check_case(c: &Case) -> Result<(), String> {
    let first = run(c.args);
    let again = run(c.args);
    if first.stdout != again.stdout || first.stderr != again.stderr || first.code != again.code {
        return Err("rerun output differs".into());
    }
    if first.code != c.exit {
        return Err(format!("exit {} (expected {}): {}", first.code, c.exit, first.stderr));
    }
    let (out_path, err_path) = (golden_path(c.name, "json"), golden_path(c.name, "stderr"));
    if std::env::var_os("FERMISO_BLESS").is_some() {
        for (path, text) in [(&out_path, &first.stdout), (&err_path, &first.stderr)] {
            if text.is_empty() {
                let _ = std::fs::remove_file(path);
            } else {
                std::fs::write(path, text).map_err(|e| e.to_string())?;
            }
        }
        return Ok(());
    }
    match read_opt(&out_path) {
        Some(want) => {
            let got: Value = serde_json::from_str(&first.stdout).map_err(|e| format!("stdout is not JSON: {e}"))?;
            let want: Value = serde_json::from_str(&want).map_err(|e| format!("bad golden file: {e}"))?;
            if !json_close(&got, &want) {
                return Err(format!("stdout differs from golden:\n{}", first.stdout));
            }
        }
        None if !first.stdout.is_empty() => return Err("unexpected stdout".into()),
        None => {}
    }
    match read_opt(&err_path) {
        Some(want) if want.trim_end() == first.stderr.trim_end() => {}
        Some(want) if c.name == "unknown_subcommand" && first.stderr.contains(want.lines().next().unwrap_or("")) => {}
        Some(_) => return Err(format!("stderr differs from golden: {}", first.stderr)),
        None if !first.stderr.is_empty() => return Err(format!("unexpected stderr: {}", first.stderr)),
        None => {}
    }
    Ok(())
}
