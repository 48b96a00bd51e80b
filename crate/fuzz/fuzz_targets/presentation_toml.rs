#![no_main]

use artin::CoxeterPresentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Accepted files round-trip through the writer.
    if let Ok(p) = CoxeterPresentation::from_toml_str(text) {
        let again = CoxeterPresentation::from_toml_str(&p.to_toml_string()).expect("writer output parses");
        assert_eq!(again.hash_hex(), p.hash_hex());
    }
});
