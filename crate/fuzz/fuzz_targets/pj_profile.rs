#![no_main]

use arrlab::profiles::PjProfile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(pj) = PjProfile::from_json(text) {
        let _ = pj.vef();
        let back = PjProfile::from_json(&pj.to_json_value().to_string()).expect("round trip");
        assert_eq!(back, pj);
    }
});
