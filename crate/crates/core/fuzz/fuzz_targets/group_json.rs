#![no_main]

use artin_tate::motive::{motive_of, GroupSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 512 {
        return;
    }
    if let Ok(g) = GroupSpec::from_json(s) {
        assert_eq!(GroupSpec::from_json(&g.to_json()).expect("round trip"), g);
        if motive_dimension_is_small(&g) {
            let _ = motive_of(&g).fmt_det();
        }
    }
});

/// Ranks multiply under Res and add under Product; skip inputs whose motive
/// would be huge.
fn motive_dimension_is_small(g: &GroupSpec) -> bool {
    fn size(g: &GroupSpec) -> Option<u64> {
        match g {
            GroupSpec::GL(n) | GroupSpec::SL(n) | GroupSpec::U(n) | GroupSpec::Sp(n) | GroupSpec::SO(n) => Some(*n as u64),
            GroupSpec::Res(d, h) => size(h)?.checked_mul(*d as u64),
            GroupSpec::Product(v) => v.iter().try_fold(0u64, |acc, h| acc.checked_add(size(h)?)),
        }
    }
    size(g).is_some_and(|s| s <= 64)
}
