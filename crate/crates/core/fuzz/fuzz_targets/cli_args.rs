#![no_main]

use artin_tate::parse::{degree_list, group_arg, param, params};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = group_arg(s) {
        g.validate().expect("parsed groups are valid");
    }
    if let Ok(d) = degree_list(s) {
        assert!(d.iter().all(|&k| k > 0));
    }
    if let Ok(p) = params(s) {
        let _ = param::<u32>(&p, "r");
    }
});
