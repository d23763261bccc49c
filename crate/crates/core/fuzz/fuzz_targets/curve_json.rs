#![no_main]

use artin_tate::geometry::CurveDatum;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = CurveDatum::from_json(s) {
        // Accepted data must round-trip and expose a well-formed J-polynomial.
        let back = CurveDatum::from_json(&c.to_json()).expect("round trip");
        assert_eq!(back, c);
        let _ = c.j_poly();
    }
});
