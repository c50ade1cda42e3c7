#![no_main]

use libfuzzer_sys::fuzz_target;
use tdkernel::io::{parse_cnf, serialize_cnf};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_cnf(text) {
        assert_eq!(parse_cnf(&serialize_cnf(&f)).expect("canonical text parses"), f);
    }
});
