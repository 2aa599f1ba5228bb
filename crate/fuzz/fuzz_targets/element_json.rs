//! Fuzz the element wire format: no panics, and accepted documents
//! round-trip through canonical serialization.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qtorus::json;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = json::parse_element(text) {
        let canonical = json::element_to_string(&value);
        let back = json::parse_element(&canonical)
            .unwrap_or_else(|e| panic!("canonical document failed to parse: {e}"));
        assert_eq!(back, value);
        assert_eq!(json::element_to_string(&back), canonical);
    }
});
