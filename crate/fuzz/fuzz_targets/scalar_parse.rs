//! Fuzz the exact scalar grammar: parsing must never panic, and anything
//! that parses must round-trip through the formatter.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(value) = antirb::Scalar::parse(text) {
        let formatted = value.to_string();
        let reparsed = antirb::Scalar::parse(&formatted).expect("formatter output parses");
        assert_eq!(reparsed, value, "round-trip mismatch for {text:?}");
    }
});
