#![no_main]

use libfuzzer_sys::fuzz_target;
use sepdeform_scalar::{parse_ratfunc, Integer, RationalFunction};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_ratfunc::<Integer>(text) {
        let again: RationalFunction<Integer> = parse_ratfunc(&f.to_string()).expect("printed fractions parse");
        assert_eq!(again, f);
    }
});
