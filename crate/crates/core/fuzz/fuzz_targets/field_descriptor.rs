#![no_main]
use amc_core::io::FieldDescriptor;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(d) = FieldDescriptor::parse(text) else { return };
    let Ok(f) = d.build() else { return };
    let back = FieldDescriptor::of(&f).build().unwrap();
    assert_eq!(f.modulus(), back.modulus());
});
