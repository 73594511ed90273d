use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = match beurling_cli::parse_args(std::env::args_os()) {
        Ok(config) => beurling_cli::run(&config),
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                print!("{e}");
            } else {
                eprintln!("{}", e.to_string().trim_end());
            }
            code
        }
    };
    ExitCode::from(code as u8)
}
