#![no_main]

use entringer::tree::TreeJson;
use entringer::OneTwoTree;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(node) = serde_json::from_slice::<TreeJson>(data) else {
        return;
    };
    if let Ok(t) = OneTwoTree::from_json(&node) {
        assert_eq!(OneTwoTree::from_json(&t.to_json()).unwrap(), t);
    }
});
