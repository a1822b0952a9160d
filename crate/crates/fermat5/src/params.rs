//! The parametric family: for a rational t other than 2, builds the sextic
//! f_t, its trace cubic g_t, and the coefficients expressing a second root
//! of f_t in terms of a first one.
//!
//! All values are exact rational functions of t.  The only rational
//! parameter excluded is t = 2, where the shared denominators vanish.

use crate::poly::{PolyError, PolyQ};
use crate::polyfp::FpError;
use crate::numberfield::NfError;
use crate::rational::{squarefree_kernel, ArithError, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum QuinticError {
    #[error("parameter degenerates the construction")]
    DegenerateParameter,
    #[error("sextic is not separable at this parameter")]
    SeparabilityFailure,
    #[error("the window indicator vanishes")]
    ZeroDiscriminant,
    #[error("conic coefficients are all zero")]
    ZeroConic,
    #[error("parameter lies outside the totally real window")]
    NotTotallyReal,
    #[error("the parameter-recovery map is undefined at this point")]
    PhiUndefined,
    #[error("expected a rational value inside the field")]
    NonRationalValue,
    #[error("independent checks disagree: {0}")]
    OracleDisagreement(String),
    #[error("prerequisite check did not pass: {0}")]
    PrerequisiteMissing(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] NfError),
    #[error(transparent)]
    Modular(#[from] FpError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Everything derived from one parameter value: the sextic f_t, the trace
/// cubic g_t, and the coefficients a of the root map.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamData {
    pub t: Rational,
    pub u: Rational,
    pub v: Rational,
    pub w: Rational,
    pub s: Rational,
    pub a: [Rational; 6],
    pub f_t: PolyQ,
    pub g_t: PolyQ,
}

fn eval_ints(coeffs: &[i64], t: &Rational) -> Rational {
    PolyQ::from_ints(coeffs).eval(t)
}

/// Builds the full parameter package for a rational t, rejecting t = 2.
pub fn build_params(t: &Rational) -> Result<ParamData, QuinticError> {
    let two = Rational::from_integer(BigInt::from(2));
    if *t == two {
        return Err(QuinticError::DegenerateParameter);
    }
    let c = eval_ints(&[-1, 1, 1], t);
    let m2 = t - &two;
    let u = eval_ints(&[2, -2, 3], t) / &c;
    let den_vw = &m2 * &c * &c;
    let v = eval_ints(&[-7, 15, -20, 10, -5, 1], t) / &den_vw;
    let w = eval_ints(&[6, -20, 20, -20, 10, -3], t) / &den_vw;
    let s = eval_ints(&[1, 3, -1, -3, 1], t) * &m2;
    let shared = eval_ints(&[-3, 2, -1, 1], t);
    let a0 = -eval_ints(&[1, 0, 1], t) * &shared / &s;
    let a1 = -eval_ints(&[-7, 8, -11, 10, -15, 16, -9, 3], t) / (&c * &s);
    let a2 = eval_ints(&[13, -44, 38, -54, 100, -99, 52, -14, 2], t) / (&c * &m2 * &s);
    let a3 = eval_ints(&[-15, 32, -57, 78, -90, 65, -21, 1, 1], t) / (&c * &m2 * &s);
    let a4 = -eval_ints(&[-5, 7, -14, 13, -6, 2], t) / &s;
    let a5 = -&c * &shared / &s;
    let one = Rational::one();
    let f_t = PolyQ::new(vec![
        one.clone(),
        u.clone(),
        v.clone(),
        w.clone(),
        v.clone(),
        u.clone(),
        one.clone(),
    ]);
    debug_assert_eq!(f_t.reversed(), f_t);
    let three = Rational::from_integer(BigInt::from(3));
    let g_t = PolyQ::new(vec![&w - &u - &u, &v - three, u.clone(), one]);
    Ok(ParamData { t: t.clone(), u, v, w, s, a: [a0, a1, a2, a3, a4, a5], f_t, g_t })
}

/// The quintic whose unique real root bounds the totally real window from
/// above.
pub fn r_polynomial() -> PolyQ {
    PolyQ::from_ints(&[-4, 0, 0, -20, -10, 7])
}

/// (2 - t) times that quintic at t: positive exactly on the open window
/// where all six roots of f_t are real.
pub fn quad_disc(t: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    (two - t) * r_polynomial().eval(t)
}

/// Squarefree kernel of the window indicator, with its sign.  This integer
/// determines the real quadratic subfield of the splitting field.
pub fn quad_kernel(t: &Rational) -> Result<BigInt, QuinticError> {
    let two = Rational::from_integer(BigInt::from(2));
    if *t == two {
        return Err(QuinticError::DegenerateParameter);
    }
    let d = quad_disc(t);
    if d.is_zero() {
        return Err(QuinticError::ZeroDiscriminant);
    }
    let kernel = squarefree_kernel(&d)?;
    Ok(if d.is_negative() { -kernel } else { kernel })
}

/// True when t lies in the open interval where f_t is totally real.
pub fn in_totally_real_range(t: &Rational) -> bool {
    let two = Rational::from_integer(BigInt::from(2));
    *t > two && r_polynomial().eval(t).is_negative()
}

/// Discriminant of the trace cubic g_t, in closed form.
pub fn delta_closed_form(t: &Rational) -> Result<Rational, QuinticError> {
    let two = Rational::from_integer(BigInt::from(2));
    if *t == two {
        return Err(QuinticError::DegenerateParameter);
    }
    let a = eval_ints(&[1, 3, -1, -3, 1], t);
    let b = r_polynomial().eval(t);
    let c = eval_ints(&[-1, 1, 1], t);
    let t1 = t - Rational::one();
    let m2 = t - &two;
    let num = Rational::from_integer(BigInt::from(-25)) * &a * &a * b * &t1 * &t1;
    let den = &m2 * &m2 * &m2 * pow6(&c);
    Ok(num / den)
}

fn pow6(q: &Rational) -> Rational {
    let sq = q * q;
    &sq * &sq * &sq
}

/// Remainder term of dividing X^5 + Y^5 + 1 along the conic section, in
/// closed form: zero for no rational t other than the excluded t = 2.
pub fn cyclotomic_remainder_closed_form(t: &Rational) -> Result<Rational, QuinticError> {
    let two = Rational::from_integer(BigInt::from(2));
    if *t == two {
        return Err(QuinticError::DegenerateParameter);
    }
    let num = eval_ints(&[1, -2, 4, -3, 1], t)
        * (t - Rational::one())
        * Rational::from_integer(BigInt::from(5));
    let c = eval_ints(&[-1, 1, 1], t);
    let den = (two - t) * &c * &c;
    Ok(num / den)
}
