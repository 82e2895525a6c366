#![no_main]

use braid_garside::NormalForm;
use libfuzzer_sys::fuzz_target;

// The D^k | tail reader must accept exactly the canonical forms and give
// errors on everything else. Anything it does accept must re-serialize to
// an equivalent form.
fuzz_target!(|data: &[u8]| {
    let Some((&rank_byte, text_bytes)) = data.split_first() else {
        return;
    };
    let rank = (rank_byte % 8) as u16 + 1;
    let Ok(text) = std::str::from_utf8(text_bytes) else {
        return;
    };
    if let Ok(nf) = NormalForm::from_text(text, rank) {
        let reparsed = NormalForm::from_text(&nf.to_string(), rank)
            .expect("serialized normal form must parse back");
        assert_eq!(reparsed, nf);
    }
});
