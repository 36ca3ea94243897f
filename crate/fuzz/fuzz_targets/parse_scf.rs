#![no_main]

use libfuzzer_sys::fuzz_target;
use prefdomain::fixtures::{fixture, FIXTURE_NAMES};
use prefdomain::format::{parse_scf, scf_to_text};

fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let d = fixture(FIXTURE_NAMES[pick as usize % FIXTURE_NAMES.len()]).unwrap();
    let Ok(file) = parse_scf(text, &d) else { return };
    let again = parse_scf(&scf_to_text(&file.table, &file.domain_ref), &d).expect("printed rule must parse");
    assert_eq!(again.table, file.table);
});
