#![no_main]

use libfuzzer_sys::fuzz_target;

// First byte selects the rank, the rest is word text. The parser must
// reject garbage with an error, never panic.
fuzz_target!(|data: &[u8]| {
    let Some((&rank_byte, text_bytes)) = data.split_first() else {
        return;
    };
    let rank = (rank_byte % 8) as u16 + 1;
    if let Ok(text) = std::str::from_utf8(text_bytes) {
        let _ = braid_cli::parse_word(text, rank);
        let _ = braid_cli::parse_pair(text, rank);
    }
});
