#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(a) = pluq::parse_matrix(text) {
            // round-trip: anything we accept must re-parse identically
            let again = pluq::parse_matrix(&pluq::write_matrix(&a)).unwrap();
            assert_eq!(a, again);
        }
    }
});
