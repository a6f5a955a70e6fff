#![no_main]

use libfuzzer_sys::fuzz_target;

use ecgraph::format::{parse_dcg, serialize_dcg};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = parse_dcg(text) {
        let canonical = serialize_dcg(&d);
        let reparsed = parse_dcg(&canonical).expect("canonical form must reparse");
        assert_eq!(reparsed, d);
        assert_eq!(serialize_dcg(&reparsed), canonical);
    }
});
