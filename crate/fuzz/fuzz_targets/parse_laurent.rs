#![no_main]

use libfuzzer_sys::fuzz_target;
use sepdeform_scalar::{parse_laurent, Integer, Laurent};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_laurent::<Integer>(text) {
        let again: Laurent<Integer> = parse_laurent(&p.to_string()).expect("printed polynomials parse");
        assert_eq!(again, p);
    }
});
