#![no_main]

use libfuzzer_sys::fuzz_target;
use prefdomain::format::{domain_digest, domain_to_text, parse_domain};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(d) = parse_domain(text) else { return };
    // canonical text is a fixed point
    let canon = domain_to_text(&d);
    let back = parse_domain(&canon).expect("canonical text must parse");
    assert_eq!(back, d);
    assert_eq!(domain_to_text(&back), canon);
    assert_eq!(domain_digest(&back), domain_digest(&d));
});
