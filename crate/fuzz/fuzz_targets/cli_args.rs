#![no_main]

use clap::Parser;
use libfuzzer_sys::fuzz_target;
use poincare_cli::Cli;

// Argument parsing only; running arbitrary commands would time out on large
// degree lists rather than find bugs.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let args = std::iter::once("poincare").chain(text.split_whitespace());
        let _ = Cli::try_parse_from(args);
    }
});
