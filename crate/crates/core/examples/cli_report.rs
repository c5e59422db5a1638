//! Runs the command-line analysis in process and replays its certificates.

use grumod::cli::run_command;

fn main() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/t2_gf2.json");
    let (code, report) = run_command(&["analyze", fixture, "--target", "K", "--checks", "projective,injective"]);
    println!("exit {code}\n{report}");
    let path = std::env::temp_dir().join("grumod-example-report.json");
    std::fs::write(&path, &report).expect("temp file is writable");
    let (code, verified) = run_command(&["verify-cert", path.to_str().expect("utf-8 path")]);
    println!("exit {code}\n{verified}");
}
