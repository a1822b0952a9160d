//! Parser harness: arbitrary bytes must never panic, and any accepted
//! value must survive a display and reparse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

use fermat5::rational::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_rational(text) {
        let shown = value.to_string();
        let back = parse_rational(&shown).expect("canonical form reparses");
        assert_eq!(back, value);
    }
});
