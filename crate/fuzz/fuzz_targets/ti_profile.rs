#![no_main]

use arrlab::profiles::TiProfile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(ti) = TiProfile::from_json(text) {
        let _ = ti.validate(false);
        let _ = ti.derive_vef();
        let back = TiProfile::from_json(&ti.to_json_value().to_string()).expect("round trip");
        assert_eq!(back, ti);
    }
});
