use gammaverify::cli;
use gammaverify::registry::Registry;
use std::io::Write;

fn main() {
    let registry = Registry::builtin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = cli::run(std::env::args_os(), &registry, &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
