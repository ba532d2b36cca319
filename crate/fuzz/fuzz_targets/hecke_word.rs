#![no_main]

use libfuzzer_sys::fuzz_target;
use sepdeform_core::hecke::Hecke;

// first byte picks the rank, the rest is a word or cycle
fuzz_target!(|data: &[u8]| {
    let Some((&tag, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if text.len() > 256 {
        return;
    }
    let h = Hecke::generic(tag as usize % 5 + 1).unwrap();
    let _ = h.parse(text);
});
