//! Fuzz the JSON operator document decoder: arbitrary bytes must produce
//! either a usable operator or an error, never a panic. Operators that do
//! decode are applied to a few basis generators to exercise evaluation.

#![no_main]

use antirb::lie::{basis_list, Element};
use antirb_cli::parse_operator_document;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(op) = parse_operator_document(text) else {
        return;
    };
    for index in basis_list(op.algebra(), 3) {
        let _ = op.apply(&Element::basis(index));
    }
});
