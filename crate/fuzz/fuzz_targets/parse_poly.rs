//! Coefficient-list harness: arbitrary bytes must never panic, and any
//! accepted polynomial must survive a serialize and reparse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;

use fermat5::PolyQ;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(poly) = PolyQ::parse_coeff_list(text) {
        let listed = poly.coeff_strings().join(", ");
        let back = PolyQ::parse_coeff_list(&listed).expect("canonical form reparses");
        assert_eq!(back, poly);
    }
});
