use std::io::Write;

fn main() {
    let code = dsl_spectra::cli::run(
        std::env::args(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    let _ = std::io::stdout().lock().flush();
    std::process::exit(code);
}
