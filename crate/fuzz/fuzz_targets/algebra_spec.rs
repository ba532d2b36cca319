#![no_main]

use libfuzzer_sys::fuzz_target;
use sepdeform_core::algebra::AlgebraSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = AlgebraSpec::from_json(text) {
        assert_eq!(AlgebraSpec::from_json(&spec.to_json()).unwrap(), spec);
        let _ = spec.build();
    }
});
