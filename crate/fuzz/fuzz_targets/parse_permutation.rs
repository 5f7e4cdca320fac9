#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = pluq::parse_permutation(text) {
            let again = pluq::parse_permutation(&pluq::write_permutation(&p)).unwrap();
            assert_eq!(p, again);
        }
    }
});
