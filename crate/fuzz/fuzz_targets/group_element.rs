#![no_main]

use libfuzzer_sys::fuzz_target;
use sepdeform_core::group::GroupDescriptor;

// first byte picks the group, the rest is the element text
fuzz_target!(|data: &[u8]| {
    let Some((&tag, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = (tag as usize >> 3) % 8 + 1;
    let group = match tag % 5 {
        0 => GroupDescriptor::Cyclic(n as u32),
        1 => GroupDescriptor::Dihedral(n as u32),
        2 => GroupDescriptor::Symmetric(n),
        3 => GroupDescriptor::Hyperoctahedral(n),
        _ => GroupDescriptor::WeylD(n),
    };
    if let Ok(g) = group.parse_element(text) {
        let back = group.parse_element(&g.to_string()).expect("printed elements parse");
        assert_eq!(back, g);
        assert_eq!(group.mul(&g, &group.inverse(&g).unwrap()).unwrap(), group.identity());
    }
});
