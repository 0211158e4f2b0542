//! Acceptance matrix: one line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};

use lecalc::corpus::Corpus;
use lecalc::selftest;
use lecalc_core::config::DEFAULT_BUDGET;

/// Runs the binary twice on the same input and compares the bytes.
fn binary_double_run() -> Result<(), String> {
    let exe = env!("CARGO_BIN_EXE_lecalc");
    let args = ["family", "-e", "z1^2*z2^2 + z2^5 + z3^4 + t*z1*z2^2 + t^2*z1^2*z2^2", "--param", "t", "--format", "json"];
    let run = || Command::new(exe).args(args).output().map_err(|e| e.to_string());
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("exit {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr)));
    }
    if a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let corpus = Corpus::bundled().expect("bundled corpus parses");
    let report = match selftest::run(&corpus, 0, DEFAULT_BUDGET) {
        Ok(r) => r,
        Err(e) => {
            println!("acceptance aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut ok = report.pass;
    for c in &report.criteria {
        let mut detail = c.detail.clone();
        let mut pass = c.pass;
        if c.id == 10 {
            match binary_double_run() {
                Ok(()) => detail.push_str("; binary double-run identical"),
                Err(e) => {
                    pass = false;
                    detail.push_str(&format!("; binary double-run FAILED: {e}"));
                }
            }
        }
        ok &= pass;
        println!("criterion {:>2} {}: {} ({detail})", c.id, if pass { "PASS" } else { "FAIL" }, c.name);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
