#![no_main]
use amc_core::io::{to_canonical_json, QuotientCurve, QuotientCurveFile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = QuotientCurveFile::parse(text) else { return };
    let out = match file.build() {
        Ok(QuotientCurve::Y(y)) => QuotientCurveFile::of_y(&y),
        Ok(QuotientCurve::Z(z)) => QuotientCurveFile::of_z(&z),
        Err(_) => return,
    };
    let text = to_canonical_json(&out);
    assert_eq!(QuotientCurveFile::parse(&text).unwrap(), out);
});
