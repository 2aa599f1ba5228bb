//! Fuzz the coefficient text grammar: parsing must never panic, and any
//! accepted input must round-trip through the canonical rendering.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qtorus::laurent::RatFunc;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = text.parse::<RatFunc>() {
        let canonical = value.to_string();
        let back: RatFunc = canonical
            .parse()
            .unwrap_or_else(|e| panic!("canonical text `{canonical}` failed to parse: {e}"));
        assert_eq!(back, value, "round trip changed the value of `{text}`");
        assert_eq!(back.to_string(), canonical, "canonical text is not a fixed point");
    }
});
