#![no_main]
use libfuzzer_sys::fuzz_target;
use smindy_core::Quiver;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = Quiver::parse_json(s);
    }
});
