#![no_main]
use amc_core::io::AutMapFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = AutMapFile::parse(text) else { return };
    if let Ok((field, maps)) = file.build() {
        let (_, again) = AutMapFile::of(&field, &maps).build().unwrap();
        assert_eq!(maps, again);
    }
});
