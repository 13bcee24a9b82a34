#![no_main]

use libfuzzer_sys::fuzz_target;

// Config files are user-supplied; parsing must never panic, whatever the
// bytes are.
fuzz_target!(|data: &[u8]| {
    let _ = ehspec::config::parse_config_bytes(data);
});
