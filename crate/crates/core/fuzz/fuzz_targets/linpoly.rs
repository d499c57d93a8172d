#![no_main]
use amc_core::io::{FieldDescriptor, LinPolyRecord};
use libfuzzer_sys::fuzz_target;

// First byte picks the field, the rest is a linpoly record.
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let (p, d) = [(3, 1), (3, 2), (5, 1), (3, 3), (7, 2)][sel as usize % 5];
    let field = FieldDescriptor { p, degree: d, seed: 0, modulus: None }.build().unwrap();
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(rec) = LinPolyRecord::parse(text) else { return };
    let Ok(l) = rec.build(&field) else { return };
    let back = LinPolyRecord::of(&l).build(&field).unwrap();
    assert_eq!(back.coeffs(), l.coeffs());
});
