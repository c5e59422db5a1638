use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = grumod::cli::run_command(&args);
    let mut stdout = std::io::stdout().lock();
    // one write so the report lands whole
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}
