#![no_main]
use libfuzzer_sys::fuzz_target;
use smindy_core::hom::parse_object_literal;
use smindy_core::{HomEngine, Quiver};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_object_literal(s);
        if let Ok(e) = HomEngine::new(&Quiver::linear_a(3)) {
            let _ = e.parse_object(s);
        }
    }
});
