#![no_main]

use libfuzzer_sys::fuzz_target;

use ehspec::emit::{parse_csv, to_csv};

// The CSV reader takes arbitrary files back in for round-trip checks. It
// must never panic, and anything it accepts must survive a write/reparse
// cycle unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((header, rows)) = parse_csv(text) else {
        return;
    };
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let emitted = to_csv(&header_refs, &rows);
    let (header2, rows2) = parse_csv(&emitted).expect("emitted CSV must parse");
    assert_eq!(header, header2);
    assert_eq!(rows, rows2);
});
