#![no_main]

use libfuzzer_sys::fuzz_target;

use ecgraph::format::{parse_ecg, serialize_ecg};

// Parsing must never panic, and anything it accepts must round-trip
// byte-exactly through the canonical serialization.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_ecg(text) {
        let canonical = serialize_ecg(&g);
        let reparsed = parse_ecg(&canonical).expect("canonical form must reparse");
        assert_eq!(reparsed, g);
        assert_eq!(serialize_ecg(&reparsed), canonical);
    }
});
