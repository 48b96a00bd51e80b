#![no_main]

use artin::oracle::cache;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Decoded balls re-encode to text that decodes to the same ball.
    if let Ok(ball) = cache::decode(text) {
        let again = cache::decode(&cache::encode(&ball)).expect("encoder output decodes");
        assert_eq!(again, ball);
    }
});
