#![no_main]

use libfuzzer_sys::fuzz_target;
use prefdomain::AlternativeSet;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let alts = AlternativeSet::new(["a1", "a2", "a3", "a4", "a5"]).unwrap();
    if let Ok(p) = alts.parse_order(text) {
        let shown = p.display(&alts).to_string();
        assert_eq!(alts.parse_order(&shown).unwrap(), p);
    }
});
