//! Scripted CLI matrix shared by the golden tests and the acceptance run.
//!
//! Each case runs the binary from `tests/fixtures` and compares stdout (exit 0 or 1) or stderr
//! (exit 2) byte for byte with `tests/golden/<name>.out`. Set `JFORGE_BLESS=1` to rewrite them.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: Vec<String>,
    pub env: Vec<(&'static str, &'static str)>,
    pub exit: i32,
}

fn case(name: &'static str, args: &[&str], exit: i32) -> Case {
    Case { name, args: args.iter().map(|s| s.to_string()).collect(), env: vec![], exit }
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixtures() -> PathBuf {
    manifest_dir().join("tests/fixtures")
}

fn scratch() -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("jforge-cli");
    std::fs::create_dir_all(&d).expect("scratch dir");
    d
}

pub fn cases() -> Vec<Case> {
    let out = scratch().join("gde_out.json").display().to_string();
    let mut v = vec![
        case("catalog_list", &["catalog", "list"], 0),
        case("catalog_get_J_2_1", &["catalog", "get", "J_2_1"], 0),
        case("catalog_get_J_3_alpha_k", &["catalog", "get", "J_3_alpha_k", "--param", "alpha=1/2", "--param", "k=-3"], 0),
        case("check_J_2_1", &["check", "--jordan", "--pe", "J_2_1.json"], 0),
        case("check_thirds", &["check", "thirds.json"], 0),
        case("check_not_jordan", &["check", "--jordan", "--pe", "not_jordan.json"], 1),
        case("check_bad_form", &["check", "--pe", "J_2_1_bad_form.json"], 1),
        case("check_symplectic", &["check", "--pe", "--symplectic", "J_2_0_symp.json"], 0),
        case("check_manin", &["check", "--manin", "J_2_0_manin.json"], 0),
        case("analyze_index", &["analyze", "--index", "J_2_1.json"], 0),
        case("analyze_H_2", &["analyze", "H_2.json"], 0),
        case("analyze_NONASSOC_5", &["analyze", "--casimir", "--fitting", "NONASSOC_5.json"], 0),
        case("analyze_no_verify", &["analyze", "--index", "--no-verify", "not_jordan.json"], 0),
        case("bad_analyze_not_jordan", &["analyze", "--index", "not_jordan.json"], 2),
        case("construct_gde", &["construct", "gde", "--base", "J_3_0_1.json", "--pair", "gde_pair.json"], 0),
        case("construct_gde_to_file", &["construct", "gde", "--base", "J_3_0_1.json", "--pair", "gde_pair.json", "-o", &out], 0),
        case("check_gde_output", &["check", "--jordan", "--pe", &out], 0),
        case("construct_gsd", &["construct", "gsd", "--algebra", "UNIT_1.json", "--pair", "gsd_pair.json"], 0),
        case("construct_gsd_c5", &["construct", "gsd", "--algebra", "UNIT_1.json", "--pair", "gsd_bad_pair.json"], 1),
        case("construct_de", &["construct", "de", "--base", "UNIT_1.json", "--top", "UNIT_1.json", "--rep", "de_rep.json"], 0),
        case("construct_sympde", &["construct", "sympde", "--base", "J_2_0_symp.json", "--data", "sympde_data.json"], 0),
        case("construct_manin_de", &["construct", "manin-de", "--base", "J_2_0_manin.json", "--data", "manin_data.json"], 0),
        case("peel_gde", &["peel", "gde", "J_2_1.json", "--b", "b1"], 0),
        case("peel_gde_bad_direction", &["peel", "gde", "J_2_1.json", "--b", "a1"], 1),
        case("peel_de", &["peel", "de", "J_2_0_manin.json", "--ideal", "I"], 0),
        case("tkk_UNIT_1", &["tkk", "build", "UNIT_1.json"], 0),
        case("tkk_J_2_1", &["tkk", "build", "J_2_1.json"], 0),
        case("tkk_d1_fails", &["tkk", "build", "H_2.json", "--lift", "zero_derivation.json", "--check-d1"], 1),
        case("bad_unknown_label", &["check", "unknown_label.json"], 2),
        case("bad_unknown_field", &["check", "unknown_field.json"], 2),
        case("bad_scalar", &["check", "bad_scalar.json"], 2),
        case("bad_dim", &["check", "dim_mismatch.json"], 2),
        case("bad_json", &["check", "malformed.json"], 2),
        case("bad_missing_file", &["check", "no_such_file.json"], 2),
        case("bad_missing_omega", &["check", "--symplectic", "J_2_1.json"], 2),
        case("bad_catalog_name", &["catalog", "get", "NOPE"], 2),
        case("bad_peel_label", &["peel", "gde", "J_2_1.json", "--b", "zz"], 2),
    ];
    let mut big = case("bad_max_dim", &["check", "J_3_0_1.json"], 2);
    big.env.push(("JFORGE_MAX_DIM", "2"));
    v.push(big);
    v
}

pub struct Output {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

pub fn run_in(dir: &Path, args: &[String], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_jforge"));
    cmd.current_dir(dir).args(args).env_remove("JFORGE_MAX_DIM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let o = cmd.output().expect("run jforge");
    Output { code: o.status.code().unwrap_or(-1), stdout: o.stdout, stderr: o.stderr }
}

pub fn run(c: &Case) -> Output {
    run_in(&fixtures(), &c.args, &c.env)
}

/// Runs a case twice and checks the exit code, run-to-run equality and the golden file.
pub fn check_case(c: &Case) -> Result<(), String> {
    let first = run(c);
    let second = run(c);
    if first.code != c.exit {
        return Err(format!(
            "{}: exit {} (expected {}); stderr: {}",
            c.name,
            first.code,
            c.exit,
            String::from_utf8_lossy(&first.stderr)
        ));
    }
    if (first.code, &first.stdout, &first.stderr) != (second.code, &second.stdout, &second.stderr) {
        return Err(format!("{}: two runs differ", c.name));
    }
    let body = if c.exit == 2 { &first.stderr } else { &first.stdout };
    if body.is_empty() {
        return Err(format!("{}: empty output", c.name));
    }
    let path = manifest_dir().join("tests/golden").join(format!("{}.out", c.name));
    if std::env::var_os("JFORGE_BLESS").is_some() {
        std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let golden = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if &golden != body {
        return Err(format!("{}: output differs from {}", c.name, path.display()));
    }
    Ok(())
}
