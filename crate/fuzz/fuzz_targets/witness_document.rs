#![no_main]

use libfuzzer_sys::fuzz_target;
use prefdomain::witness::{Claim, WitnessDocument};

fuzz_target!(|data: &[u8]| {
    let Ok(mut doc) = serde_json::from_slice::<WitnessDocument>(data) else { return };
    // keep replayed searches short
    if let Claim::Exhausted { max_nodes, .. } = &mut doc.claim {
        *max_nodes = (*max_nodes).min(10_000);
    }
    let _ = doc.verify();
});
