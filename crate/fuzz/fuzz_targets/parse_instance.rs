#![no_main]

use libfuzzer_sys::fuzz_target;
use tdkernel::io::{parse_instance, serialize_instance};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Anything accepted must survive a serialize/parse round trip.
    if let Ok(parsed) = parse_instance(text) {
        let canonical = serialize_instance(&parsed.instance);
        let again = parse_instance(&canonical).expect("canonical text parses");
        assert_eq!(again.instance, parsed.instance);
    }
});
