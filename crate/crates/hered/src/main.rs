use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = hered::cli::run(&args);
    print!("{}", out.stdout);
    ExitCode::from(out.code as u8)
}
