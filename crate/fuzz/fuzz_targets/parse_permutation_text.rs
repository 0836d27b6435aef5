#![no_main]

use entringer::perm::{format_entries, parse_entries};
use entringer::{Permutation, SignedPermutation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = parse_entries(text) {
        assert_eq!(parse_entries(&format_entries(&w)).unwrap(), w);
    }
    if let Ok(p) = text.parse::<Permutation>() {
        assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }
    if let Ok(p) = text.parse::<SignedPermutation>() {
        assert_eq!(p.to_string().parse::<SignedPermutation>().unwrap(), p);
    }
});
