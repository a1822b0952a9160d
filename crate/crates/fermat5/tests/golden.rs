//! End-to-end checks of exactly known values at hand-verified parameters.

use fermat5::certificate::Certificate;
use fermat5::params::{
    build_params, cyclotomic_remainder_closed_form, quad_kernel, r_polynomial,
};
use fermat5::rational::{parse_rational, rat, rat_int};
use fermat5::resultant::discriminant;
use fermat5::{PolyQ, Rational};
use num_bigint::BigInt;
use num_traits::Signed;

#[test]
fn golden_certificate_at_five_halves() {
    let cert = Certificate::build(&rat(5, 2), 4).unwrap();
    assert!(cert.passes());
    assert_eq!(cert.param.t, "5/2");
    assert_eq!(cert.param.u, "63/31");
    assert_eq!(cert.param.v, "-1149/961");
    assert_eq!(cert.param.w, "-4283/961");
    assert_eq!(cert.param.s, "-89/32");
    assert_eq!(
        cert.param.a,
        vec!["2639/89", "90989/2759", "-188718/2759", "-196815/2759", "2850/89", "2821/89"]
    );
    assert_eq!(
        cert.param.f_t,
        vec!["1", "63/31", "-1149/961", "-4283/961", "-1149/961", "63/31", "1"]
    );
    assert_eq!(cert.quad_kernel, "+753");
    assert!(cert.degenerate.is_none());
    assert_eq!(cert.irreducible.verdict, "irreducible");
    assert!(!cert.irreducible.witnesses.is_empty());
    assert_eq!(cert.six_roots_ok, Some(true));
    assert_eq!(cert.fermat_ok, Some(true));
    assert_eq!(cert.conic_ok, Some(true));
    assert!(cert.resultant_identity_ok);
    let tr = cert.totally_real.as_ref().unwrap();
    assert!(tr.verdict);
    assert_eq!(tr.sturm_count, 6);
    assert_eq!(cert.galois_s3, Some(true));
    assert_eq!(cert.points.len(), 6);
}

#[test]
fn golden_root_locations_at_five_halves() {
    let cert = Certificate::build(&rat(5, 2), 4).unwrap();
    let known = [
        rat(-13185, 10000),
        rat(-10595, 10000),
        rat(-9438, 10000),
        rat(-7585, 10000),
        rat(8036, 10000),
        rat(12444, 10000),
    ];
    for (point, expected) in cert.points.iter().zip(&known) {
        let mid = parse_rational(&point.x_mid).unwrap();
        let err = (&mid - expected).abs();
        assert!(err < rat(1, 1000), "midpoint {mid} too far from {expected}");
    }
}

#[test]
fn golden_degenerate_certificate_at_one() {
    let cert = Certificate::build(&rat_int(1), 4).unwrap();
    assert!(cert.passes());
    let degenerate = cert.degenerate.as_ref().unwrap();
    assert!(degenerate.cyclotomic_cube);
    assert!(degenerate.cyclotomic_remainder_zero);
    assert_eq!(cert.irreducible.verdict, "reducible");
    assert_eq!(cert.irreducible.factor, Some(vec!["1".into(), "1".into(), "1".into()]));
    assert_eq!(cert.quad_kernel, "-3");
    assert!(cert.six_roots_ok.is_none());
    assert!(cert.totally_real.is_none());
    assert!(cert.galois_s3.is_none());
    assert!(cert.resultant_identity_ok);
    assert!(cert.points.is_empty());
}

#[test]
fn golden_kernel_table() {
    let expected: [(Rational, i64); 8] = [
        (rat(5, 2), 753),
        (rat_int(0), -2),
        (rat_int(1), -3),
        (rat_int(-1), -3),
        (rat_int(3), -347),
        (rat(9, 4), 86473),
        (rat(7, 3), 17093),
        (rat(21, 10), 9781393),
    ];
    for (t, kernel) in expected {
        assert_eq!(quad_kernel(&t).unwrap(), BigInt::from(kernel), "kernel at t = {t}");
    }
}

#[test]
fn golden_cubic_discriminant_at_five_halves() {
    let pd = build_params(&rat(5, 2)).unwrap();
    assert_eq!(
        discriminant(&pd.g_t).unwrap(),
        Rational::new(BigInt::from(1342015425u64), BigInt::from(887503681u64))
    );
}

#[test]
fn golden_cyclotomic_remainders() {
    assert_eq!(cyclotomic_remainder_closed_form(&rat(5, 2)).unwrap(), rat(-3165, 961));
    assert_eq!(cyclotomic_remainder_closed_form(&rat_int(0)).unwrap(), rat(-5, 2));
    let pd = build_params(&rat(5, 2)).unwrap();
    let cyclotomic = PolyQ::from_ints(&[1, 1, 1]);
    let (_, remainder) = pd.f_t.divmod(&cyclotomic).unwrap();
    assert_eq!(remainder, PolyQ::constant(rat(-3165, 961)));
}

#[test]
fn golden_near_double_root_value() {
    let pd = build_params(&rat(5, 2)).unwrap();
    assert_eq!(pd.f_t.eval(&rat_int(-1)), rat(1, 961));
}

#[test]
fn golden_window_polynomial_has_one_real_root() {
    let poly = r_polynomial();
    let roots = fermat5::realroots::isolate_real_roots(&poly).unwrap();
    assert_eq!(roots.len(), 1);
    let refined = fermat5::realroots::refine(&roots[0], &rat(1, 10_000_000));
    assert!(*refined.lo() > rat(2558591, 1000000));
    assert!(*refined.hi() < rat(2558592, 1000000));
}
