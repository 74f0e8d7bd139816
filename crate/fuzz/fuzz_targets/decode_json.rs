#![no_main]

use libfuzzer_sys::fuzz_target;
use poincare_cli::json;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = json::decode(text) {
            // Anything accepted must survive a round trip.
            let back = json::decode(&json::to_string(&f)).expect("re-encoded document decodes");
            assert!(back.equals(&f));
        }
    }
});
