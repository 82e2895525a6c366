#![no_main]

use braid_garside::{desugar_inverses, is_irreducible, normal_form_with_guard};
use libfuzzer_sys::fuzz_target;

// Parse, then push every accepted word through normalization with a small
// step guard. Whatever comes out must be a genuine fixed point of the
// rewriting system.
fuzz_target!(|data: &[u8]| {
    let Some((&rank_byte, text_bytes)) = data.split_first() else {
        return;
    };
    let rank = (rank_byte % 5) as u16 + 1;
    let Ok(text) = std::str::from_utf8(text_bytes) else {
        return;
    };
    let Ok(word) = braid_cli::parse_word(text, rank) else {
        return;
    };
    if word.len() > 64 {
        return;
    }
    if let Ok(nf) = normal_form_with_guard(&word, 1_000_000) {
        let spelled = desugar_inverses(&nf.to_signed_word());
        assert!(is_irreducible(&spelled));
    }
});
