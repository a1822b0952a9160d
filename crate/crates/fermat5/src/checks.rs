//! The verification layer: irreducibility certification by modular degree
//! patterns, the six-root factorization, point membership on the quintic and
//! the conic, tangency of the pencil, the bivariate resultant identity,
//! parameter recovery, the totally-real decision by two independent
//! routes, and the Galois group test.

use crate::numberfield::{eval_poly, product_of_linears, NfError, NFElement, NumberFieldCtx};
use crate::params::{delta_closed_form, quad_disc, ParamData, QuinticError};
use crate::poly::PolyQ;
use crate::polyfp::{degree_pattern, reduce_mod_p, DegreePattern};
use crate::rational::{is_prime, rat_int, Rational};
use crate::realroots::{rational_roots, sturm_count, Endpoint};
use crate::resultant::{discriminant, sylvester_resultant_polycoeff};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// One prime whose degree pattern narrowed the possible factor degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeWitness {
    pub prime: u64,
    pub pattern: DegreePattern,
}

#[derive(Debug, Clone, PartialEq)]
pub enum IrreducibilityVerdict {
    Irreducible { witnesses: Vec<PrimeWitness> },
    Reducible { factor: PolyQ },
    Inconclusive,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible { .. })
    }
}

const PRIME_SCAN_BOUND: u64 = 200;

/// Certifies irreducibility of f_t over Q.  Cheap reducibility detectors run
/// first: rational roots, then divisibility by X^2 + X + 1.  After that,
/// degree patterns modulo good primes are collected until every proper
/// factor degree is excluded by some pattern's subset sums.
pub fn certify_irreducible(pd: &ParamData) -> Result<IrreducibilityVerdict, QuinticError> {
    let f = &pd.f_t;
    let roots = rational_roots(f)?;
    if let Some(root) = roots.first() {
        let factor = PolyQ::new(vec![-root, Rational::one()]);
        return Ok(IrreducibilityVerdict::Reducible { factor });
    }
    let cyclotomic = PolyQ::from_ints(&[1, 1, 1]);
    let (_, rem) = f.divmod(&cyclotomic)?;
    if rem.is_zero() {
        return Ok(IrreducibilityVerdict::Reducible { factor: cyclotomic });
    }
    let degree = f.degree().expect("sextic is nonzero");
    let mut open_degrees: Vec<usize> = (1..=degree / 2).collect();
    let mut witnesses = Vec::new();
    for p in 2..=PRIME_SCAN_BOUND {
        if !is_prime(&BigInt::from(p)) {
            continue;
        }
        let Ok(reduced) = reduce_mod_p(f, p) else { continue };
        let Ok(pattern) = degree_pattern(&reduced) else { continue };
        let before = open_degrees.len();
        open_degrees.retain(|&k| pattern.admits_factor_degree(k));
        if open_degrees.len() < before {
            witnesses.push(PrimeWitness { prime: p, pattern });
        }
        if open_degrees.is_empty() {
            return Ok(IrreducibilityVerdict::Irreducible { witnesses });
        }
    }
    Ok(IrreducibilityVerdict::Inconclusive)
}

/// The second root of f_t, expressed through the first by the coefficient
/// vector a.
pub fn build_beta(
    pd: &ParamData,
    ctx: &Arc<NumberFieldCtx>,
) -> Result<NFElement, QuinticError> {
    if pd.t == rat_int(1) {
        return Err(QuinticError::DegenerateParameter);
    }
    if ctx.modulus() != &pd.f_t {
        return Err(NfError::ContextMismatch.into());
    }
    let a_poly = PolyQ::new(pd.a.to_vec());
    Ok(eval_poly(&a_poly, &ctx.generator()))
}

/// The six roots of f_t inside Q[X]/(f_t), in the fixed order
/// alpha, beta, beta/alpha, 1/alpha, 1/beta, alpha/beta.
pub fn six_roots(
    pd: &ParamData,
    ctx: &Arc<NumberFieldCtx>,
) -> Result<[NFElement; 6], QuinticError> {
    if pd.t == rat_int(1) {
        return Err(QuinticError::DegenerateParameter);
    }
    if !pd.f_t.is_squarefree() {
        return Err(QuinticError::SeparabilityFailure);
    }
    let alpha = ctx.generator();
    let beta = build_beta(pd, ctx)?;
    let alpha_inv = alpha.inverse()?;
    let beta_inv = beta.inverse()?;
    let beta_over_alpha = beta.mul(&alpha_inv)?;
    let alpha_over_beta = alpha.mul(&beta_inv)?;
    Ok([alpha, beta, beta_over_alpha, alpha_inv, beta_inv, alpha_over_beta])
}

/// Checks that the six elements are pairwise distinct roots whose monic
/// product reproduces f_t with every coefficient rational.
pub fn verify_six_roots(
    pd: &ParamData,
    ctx: &Arc<NumberFieldCtx>,
    roots: &[NFElement; 6],
) -> Result<bool, QuinticError> {
    for i in 0..6 {
        for j in (i + 1)..6 {
            if roots[i] == roots[j] {
                return Ok(false);
            }
        }
    }
    let coeffs = product_of_linears(ctx, roots)?;
    if coeffs.len() != 7 {
        return Ok(false);
    }
    for (k, c) in coeffs.iter().enumerate() {
        match c.as_rational() {
            Some(value) if value == pd.f_t.coeff(k) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// A point of the projective plane with coordinates in the field, kept in
/// the affine chart z = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePointNF {
    pub x: NFElement,
    pub y: NFElement,
    pub z: NFElement,
}

/// The full orbit of six intersection points: three base points and their
/// coordinate swaps.
pub fn orbit_points(
    pd: &ParamData,
    ctx: &Arc<NumberFieldCtx>,
) -> Result<Vec<ProjectivePointNF>, QuinticError> {
    let [alpha, beta, beta_over_alpha, alpha_inv, beta_inv, alpha_over_beta] =
        six_roots(pd, ctx)?;
    let pairs = [
        (alpha.clone(), beta.clone()),
        (alpha_inv.clone(), beta_over_alpha.clone()),
        (beta_inv.clone(), alpha_over_beta.clone()),
        (beta, alpha),
        (beta_over_alpha, alpha_inv),
        (alpha_over_beta, beta_inv),
    ];
    Ok(pairs
        .into_iter()
        .map(|(x, y)| ProjectivePointNF { x, y, z: ctx.one() })
        .collect())
}

/// True iff x^5 + y^5 + 1 = 0 exactly in the field.
pub fn verify_fermat_point(x: &NFElement, y: &NFElement) -> Result<bool, QuinticError> {
    let sum = x.pow(5).add(&y.pow(5))?.add(&x.ctx().one())?;
    Ok(sum.is_zero())
}

/// True iff x^2 + y^2 + 1 + t(xy + x + y) = 0 exactly in the field.
pub fn verify_conic_point(
    pd: &ParamData,
    x: &NFElement,
    y: &NFElement,
) -> Result<bool, QuinticError> {
    let ctx = x.ctx();
    let t = ctx.constant(pd.t.clone());
    let quadratic = x.pow(2).add(&y.pow(2))?.add(&ctx.one())?;
    let mixed = x.mul(y)?.add(x)?.add(y)?;
    let sum = quadratic.add(&t.mul(&mixed)?)?;
    Ok(sum.is_zero())
}

/// Reads the parameter back off a point in the z = 1 chart:
/// t = -(x^2 + y^2 + 1)/(xy + x + y).
pub fn recover_parameter(x: &NFElement, y: &NFElement) -> Result<Rational, QuinticError> {
    let ctx = x.ctx();
    let numerator = x.pow(2).add(&y.pow(2))?.add(&ctx.one())?;
    let denominator = x.mul(y)?.add(x)?.add(y)?;
    if denominator.is_zero() {
        return Err(QuinticError::PhiUndefined);
    }
    let quotient = numerator.div(&denominator)?.neg();
    quotient.as_rational().ok_or(QuinticError::NonRationalValue)
}

/// Decides tangency of a rational conic aX^2+bY^2+cZ^2+dXY+eXZ+fYZ to the
/// quintic at the base point, by the coefficient conditions and,
/// independently, by a gradient computation in Q[X]/(X^2+X+1); the two
/// routes must agree.
pub fn check_tangency_pencil(coeffs: &[Rational; 6]) -> Result<bool, QuinticError> {
    if coeffs.iter().all(Rational::is_zero) {
        return Err(QuinticError::ZeroConic);
    }
    let [a, b, c, d, e, f] = coeffs;
    let symmetric = a == b && b == c && d == e && e == f;
    let by_conditions = symmetric && *d != a + a;

    let ctx = NumberFieldCtx::new(PolyQ::from_ints(&[1, 1, 1]))?;
    let omega = ctx.generator();
    let omega2 = omega.pow(2);
    let lift = |q: &Rational| ctx.constant(q.clone());
    let x = omega.clone();
    let y = omega2.clone();
    let z = ctx.one();
    let on_conic = lift(a)
        .mul(&x.pow(2))?
        .add(&lift(b).mul(&y.pow(2))?)?
        .add(&lift(c).mul(&z.pow(2))?)?
        .add(&lift(d).mul(&x.mul(&y)?)?)?
        .add(&lift(e).mul(&x.mul(&z)?)?)?
        .add(&lift(f).mul(&y.mul(&z)?)?)?
        .is_zero();
    let two = |q: &Rational| lift(&(q + q));
    let gx = two(a).mul(&x)?.add(&lift(d).mul(&y)?)?.add(&lift(e).mul(&z)?)?;
    let gy = two(b).mul(&y)?.add(&lift(d).mul(&x)?)?.add(&lift(f).mul(&z)?)?;
    let gz = two(c).mul(&z)?.add(&lift(e).mul(&x)?)?.add(&lift(f).mul(&y)?)?;
    let minor_xy = gx.mul(&omega2)?.sub(&gy.mul(&omega)?)?;
    let minor_xz = gx.sub(&gz.mul(&omega)?)?;
    let minor_yz = gy.sub(&gz.mul(&omega2)?)?;
    let proportional = minor_xy.is_zero() && minor_xz.is_zero() && minor_yz.is_zero();
    let nonzero_gradient = !(gx.is_zero() && gy.is_zero() && gz.is_zero());
    let by_gradient = on_conic && proportional && nonzero_gradient;

    if by_conditions != by_gradient {
        return Err(QuinticError::OracleDisagreement(format!(
            "tangency: coefficient conditions say {by_conditions}, gradient says {by_gradient}"
        )));
    }
    Ok(by_conditions)
}

/// Verifies the eliminant identity: the resultant in Y of X^5 + Y^5 + 1 and
/// the conic equals (2-t)(t^2+t-1)^2 (X^2+X+1)^2 f_t exactly.
pub fn check_resultant_identity(pd: &ParamData) -> Result<bool, QuinticError> {
    let t = &pd.t;
    let quintic_in_y = [
        PolyQ::from_ints(&[1, 0, 0, 0, 0, 1]),
        PolyQ::zero(),
        PolyQ::zero(),
        PolyQ::zero(),
        PolyQ::zero(),
        PolyQ::one(),
    ];
    let conic_in_y = [
        PolyQ::new(vec![Rational::one(), t.clone(), Rational::one()]),
        PolyQ::new(vec![t.clone(), t.clone()]),
        PolyQ::one(),
    ];
    let lhs = sylvester_resultant_polycoeff(&quintic_in_y, &conic_in_y)?;
    let c = PolyQ::from_ints(&[-1, 1, 1]).eval(t);
    let scalar = (rat_int(2) - t) * &c * &c;
    let square = PolyQ::from_ints(&[1, 1, 1]).pow(2);
    let rhs = (&square * &pd.f_t).scale(&scalar);
    Ok(lhs == rhs)
}

/// The totally-real decision with both oracles exposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotallyRealVerdict {
    pub verdict: bool,
    pub sturm_count: usize,
    pub disc_sign_positive: bool,
    pub delta_matches_closed_form: bool,
}

/// Decides whether f_t splits over the reals, by Sturm count and by the
/// sign of the window indicator (2-t)(7t^5-10t^4-20t^3-4); the cubic
/// discriminant is also checked against its closed form.  Any disagreement
/// is an internal error.
pub fn totally_real_verdict(pd: &ParamData) -> Result<TotallyRealVerdict, QuinticError> {
    if pd.t == rat_int(1) {
        return Err(QuinticError::DegenerateParameter);
    }
    let count = sturm_count(&pd.f_t, &Endpoint::NegInf, &Endpoint::PosInf)?;
    let six_real = count == 6;
    let disc_sign_positive = quad_disc(&pd.t).is_positive();
    if six_real != disc_sign_positive {
        return Err(QuinticError::OracleDisagreement(format!(
            "totally real at t = {}: sturm count {count}, window indicator positive {disc_sign_positive}",
            pd.t
        )));
    }
    let delta_matches_closed_form =
        discriminant(&pd.g_t)? == delta_closed_form(&pd.t)?;
    if !delta_matches_closed_form {
        return Err(QuinticError::OracleDisagreement(format!(
            "cubic discriminant at t = {} differs from its closed form",
            pd.t
        )));
    }
    Ok(TotallyRealVerdict {
        verdict: six_real,
        sturm_count: count,
        disc_sign_positive,
        delta_matches_closed_form,
    })
}

fn is_rational_square(q: &Rational) -> bool {
    if q.is_negative() {
        return false;
    }
    let num_root = q.numer().sqrt();
    let den_root = q.denom().sqrt();
    &num_root * &num_root == *q.numer() && &den_root * &den_root == *q.denom()
}

/// Certifies the Galois group is the symmetric group on three letters:
/// given irreducibility and the six-root splitting, it remains to check the
/// trace cubic has no rational root and a non-square discriminant.
pub fn galois_s3_verdict(
    pd: &ParamData,
    irreducible_ok: bool,
    six_roots_ok: bool,
) -> Result<bool, QuinticError> {
    if pd.t == rat_int(1) {
        return Err(QuinticError::DegenerateParameter);
    }
    if !irreducible_ok {
        return Err(QuinticError::PrerequisiteMissing(
            "irreducibility was not certified".into(),
        ));
    }
    if !six_roots_ok {
        return Err(QuinticError::PrerequisiteMissing(
            "six-root factorization was not verified".into(),
        ));
    }
    let cubic_has_rational_root = !rational_roots(&pd.g_t)?.is_empty();
    let disc = discriminant(&pd.g_t)?;
    Ok(!cubic_has_rational_root && !is_rational_square(&disc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::build_params;
    use crate::rational::rat;

    fn field_for(pd: &ParamData) -> Arc<NumberFieldCtx> {
        NumberFieldCtx::new(pd.f_t.clone()).unwrap()
    }

    #[test]
    fn irreducibility_certified_with_witnesses() {
        for t in [rat(5, 2), rat_int(3), rat(9, 4)] {
            let pd = build_params(&t).unwrap();
            match certify_irreducible(&pd).unwrap() {
                IrreducibilityVerdict::Irreducible { witnesses } => {
                    assert!(!witnesses.is_empty());
                    for w in &witnesses {
                        assert!(w.prime <= PRIME_SCAN_BOUND);
                        let sum: usize = w.pattern.0.iter().sum();
                        assert_eq!(sum, 6);
                    }
                }
                other => panic!("expected irreducible at t = {t}, got {other:?}"),
            }
        }
    }

    #[test]
    fn cyclotomic_cube_detected_as_reducible() {
        let pd = build_params(&rat_int(1)).unwrap();
        match certify_irreducible(&pd).unwrap() {
            IrreducibilityVerdict::Reducible { factor } => {
                assert_eq!(factor, PolyQ::from_ints(&[1, 1, 1]));
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn beta_matches_coefficient_vector_and_is_root() {
        let pd = build_params(&rat(5, 2)).unwrap();
        let ctx = field_for(&pd);
        let beta = build_beta(&pd, &ctx).unwrap();
        assert_eq!(beta.rep(), &PolyQ::new(pd.a.to_vec()));
        assert!(eval_poly(&pd.f_t, &beta).is_zero());
        let alpha = ctx.generator();
        assert_ne!(beta, alpha);
        assert_ne!(beta, alpha.inverse().unwrap());
    }

    #[test]
    fn six_roots_product_and_distinctness() {
        for t in [rat(5, 2), rat_int(0), rat_int(3)] {
            let pd = build_params(&t).unwrap();
            let ctx = field_for(&pd);
            let roots = six_roots(&pd, &ctx).unwrap();
            assert!(verify_six_roots(&pd, &ctx, &roots).unwrap(), "at t = {t}");
            for r in &roots {
                assert!(eval_poly(&pd.f_t, r).is_zero());
            }
        }
    }

    #[test]
    fn six_roots_closed_under_reciprocal() {
        let pd = build_params(&rat(5, 2)).unwrap();
        let ctx = field_for(&pd);
        let roots = six_roots(&pd, &ctx).unwrap();
        for r in &roots {
            let inv = r.inverse().unwrap();
            assert!(roots.contains(&inv));
        }
    }

    #[test]
    fn degenerate_six_roots_rejected() {
        let pd = build_params(&rat_int(1)).unwrap();
        let ctx = NumberFieldCtx::new(PolyQ::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(
            six_roots(&pd, &ctx).unwrap_err(),
            QuinticError::DegenerateParameter
        );
    }

    #[test]
    fn orbit_points_lie_on_both_curves() {
        let pd = build_params(&rat(5, 2)).unwrap();
        let ctx = field_for(&pd);
        let points = orbit_points(&pd, &ctx).unwrap();
        assert_eq!(points.len(), 6);
        for (i, p) in points.iter().enumerate() {
            assert!(verify_fermat_point(&p.x, &p.y).unwrap(), "point {i}");
            assert!(verify_conic_point(&pd, &p.x, &p.y).unwrap(), "point {i}");
            assert!(!p.x.is_zero() && !p.y.is_zero());
            for q in &points[(i + 1)..] {
                assert!(p != q);
            }
        }
    }

    #[test]
    fn orbit_closed_under_coordinate_swap() {
        let pd = build_params(&rat(5, 2)).unwrap();
        let ctx = field_for(&pd);
        let points = orbit_points(&pd, &ctx).unwrap();
        for p in &points {
            let swapped = points
                .iter()
                .any(|q| q.x == p.y && q.y == p.x);
            assert!(swapped);
        }
    }

    #[test]
    fn non_points_rejected() {
        let pd = build_params(&rat(5, 2)).unwrap();
        let ctx = field_for(&pd);
        let alpha = ctx.generator();
        assert!(!verify_fermat_point(&alpha, &alpha).unwrap());
        assert!(!verify_conic_point(&pd, &alpha, &alpha).unwrap());
    }

    #[test]
    fn cyclotomic_base_point_is_fermat_point() {
        let ctx = NumberFieldCtx::new(PolyQ::from_ints(&[1, 1, 1])).unwrap();
        let omega = ctx.generator();
        let omega2 = omega.pow(2);
        assert!(verify_fermat_point(&omega, &omega2).unwrap());
        assert_eq!(
            recover_parameter(&omega, &omega2).unwrap_err(),
            QuinticError::PhiUndefined
        );
    }

    #[test]
    fn parameter_round_trip() {
        for t in [rat(5, 2), rat_int(3), rat(-7, 3)] {
            let pd = build_params(&t).unwrap();
            let ctx = field_for(&pd);
            for p in orbit_points(&pd, &ctx).unwrap() {
                assert_eq!(recover_parameter(&p.x, &p.y).unwrap(), t);
            }
        }
    }

    #[test]
    fn tangency_conditions() {
        let t = rat(5, 2);
        let pencil = [
            rat_int(1),
            rat_int(1),
            rat_int(1),
            t.clone(),
            t.clone(),
            t,
        ];
        assert!(check_tangency_pencil(&pencil).unwrap());
        let double_line = [
            rat_int(1),
            rat_int(1),
            rat_int(1),
            rat_int(2),
            rat_int(2),
            rat_int(2),
        ];
        assert!(!check_tangency_pencil(&double_line).unwrap());
        let asymmetric = [
            rat_int(1),
            rat_int(2),
            rat_int(1),
            rat_int(0),
            rat_int(0),
            rat_int(0),
        ];
        assert!(!check_tangency_pencil(&asymmetric).unwrap());
        let zero = [
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
        ];
        assert_eq!(
            check_tangency_pencil(&zero).unwrap_err(),
            QuinticError::ZeroConic
        );
    }

    #[test]
    fn resultant_identity_holds() {
        for t in [rat_int(0), rat_int(1), rat(5, 2), rat_int(3), rat(-7, 3)] {
            let pd = build_params(&t).unwrap();
            assert!(check_resultant_identity(&pd).unwrap(), "at t = {t}");
        }
    }

    #[test]
    fn totally_real_decision() {
        let inside = totally_real_verdict(&build_params(&rat(5, 2)).unwrap()).unwrap();
        assert!(inside.verdict);
        assert_eq!(inside.sturm_count, 6);
        assert!(inside.disc_sign_positive);
        assert!(inside.delta_matches_closed_form);
        let above = totally_real_verdict(&build_params(&rat_int(3)).unwrap()).unwrap();
        assert!(!above.verdict);
        assert_eq!(above.sturm_count, 0);
        let below = totally_real_verdict(&build_params(&rat_int(0)).unwrap()).unwrap();
        assert!(!below.verdict);
        assert_eq!(below.sturm_count, 0);
    }

    #[test]
    fn galois_group_is_symmetric() {
        for t in [rat(5, 2), rat_int(3)] {
            let pd = build_params(&t).unwrap();
            assert!(galois_s3_verdict(&pd, true, true).unwrap(), "at t = {t}");
        }
        let pd = build_params(&rat(5, 2)).unwrap();
        assert!(matches!(
            galois_s3_verdict(&pd, false, true),
            Err(QuinticError::PrerequisiteMissing(_))
        ));
        let degenerate = build_params(&rat_int(1)).unwrap();
        assert_eq!(
            galois_s3_verdict(&degenerate, true, true).unwrap_err(),
            QuinticError::DegenerateParameter
        );
    }

    #[test]
    fn square_detection() {
        assert!(is_rational_square(&rat(9, 4)));
        assert!(is_rational_square(&rat_int(0)));
        assert!(!is_rational_square(&rat(8, 4)));
        assert!(!is_rational_square(&rat_int(-4)));
    }
}
