//! Fuzz the derivation-table wire format.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qtorus::json;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = json::parse_table(text) {
        let canonical = json::table_to_string(&value);
        let back = json::parse_table(&canonical)
            .unwrap_or_else(|e| panic!("canonical document failed to parse: {e}"));
        assert_eq!(back, value);
        assert_eq!(json::table_to_string(&back), canonical);
    }
});
