//! Command-line front end for `suslin-core`.

use std::fmt;
use std::io::Write;

pub mod app;
pub mod json;
pub mod suites;

/// Exit status of a run that finished without panicking.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or malformed input files.
    Usage(String),
    /// The library rejected a well-formed request.
    Core(suslin_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use suslin_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(
                E::Parse { .. }
                | E::Invalid(_)
                | E::IndexOutOfRange { .. }
                | E::UnsupportedDimension { .. }
                | E::SizeMismatch { .. }
                | E::RingMismatch,
            ) => EXIT_USAGE,
            CliError::Core(_) => EXIT_FAIL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<suslin_core::Error> for CliError {
    fn from(e: suslin_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// Parses `args` (including the program name), writes JSON to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match app::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let seed_env = std::env::var("SUSLIN_SEED").ok();
    match app::dispatch(cli, seed_env.as_deref(), out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
