#![no_main]

use artin::parse_word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Parsing never panics, and printing a parsed word parses back to it.
    if let Ok(w) = parse_word(text, 3) {
        let printed = w.to_string();
        assert_eq!(parse_word(&printed, 3).ok(), Some(w));
    }
});
