#![no_main]
use amc_core::io::{to_canonical_json, CurveFile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = CurveFile::parse(text) else { return };
    if let Ok(c) = file.build() {
        // a built curve writes out a file that parses back to the same curve
        let again = CurveFile::parse(&to_canonical_json(&CurveFile::of(&c, None))).unwrap();
        let c2 = again.build().unwrap();
        assert_eq!(c.tower(), c2.tower());
    }
});
