#![no_main]

use artin_tate::parse::lefschetz_expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = lefschetz_expr(s) {
        // Parsed functions are in canonical form: f − f vanishes.
        assert!((&f - &f).is_zero());
        for m in 1..=3 {
            let _ = f.evaluate(m);
        }
    }
});
