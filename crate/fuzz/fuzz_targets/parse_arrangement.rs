#![no_main]

use arrlab::io::{parse_arrangement, Arrangement};
use arrlab::wiring::CellComplex;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(arr) = parse_arrangement(text) else { return };
    // Parsed wiring diagrams are valid, so the complex must build.
    if let Arrangement::Wiring(seq) = &arr {
        if seq.n() <= 64 && !seq.validate().unwrap().trivial {
            let cc = CellComplex::build(seq).expect("valid diagram builds");
            assert_eq!(cc.summary().euler_characteristic(), 1);
        }
    }
});
