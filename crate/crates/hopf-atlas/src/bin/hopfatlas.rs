use std::io::Write;

fn main() {
    hopf_atlas::cli::init_threads();
    let (code, out, err) = hopf_atlas::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(code);
}
