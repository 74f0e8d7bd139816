#![no_main]

use libfuzzer_sys::fuzz_target;
use poincare_cli::degrees::{parse_degrees, MAX_DEGREE};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let words: Vec<&str> = text.split_whitespace().collect();
        if let Ok(d) = parse_degrees(&words) {
            assert!(d.degrees().iter().all(|&k| (1..=MAX_DEGREE).contains(&k)));
        }
    }
});
