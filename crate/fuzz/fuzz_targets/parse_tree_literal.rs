#![no_main]

use entringer::{IncreasingTree, OneTwoTree, SignedIncreasingTree};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = text.parse::<OneTwoTree>() {
        let again: OneTwoTree = t.to_literal().parse().expect("literal round trip");
        assert_eq!(again, t);
    }
    let _ = text.parse::<IncreasingTree>();
    let _ = text.parse::<SignedIncreasingTree>();
});
