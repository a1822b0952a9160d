//! Resultants and discriminants: subresultant remainder sequences over the
//! integers for the scalar case, fraction-free Bareiss elimination on the
//! Sylvester matrix for resultants of polynomials with polynomial
//! coefficients.
//!
//! Convention: resultant(a, b) is the determinant of the Sylvester matrix
//! with deg(b) rows of a's coefficients on top, so resultant(X-a, X-b) = a-b
//! and resultant(a, b) = lc(a)^deg(b) * product of b over the roots of a.

use crate::poly::{PolyError, PolyQ};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Resultant of two rational polynomials via the subresultant PRS on their
/// primitive integer forms.
pub fn resultant(a: &PolyQ, b: &PolyQ) -> Result<Rational, PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::BothZero);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Rational::zero());
    }
    let (ca, ia) = a.primitive_int().expect("a is nonzero");
    let (cb, ib) = b.primitive_int().expect("b is nonzero");
    let deg_a = ia.len() - 1;
    let deg_b = ib.len() - 1;
    let scale = pow_rational(&ca, deg_b as u32) * pow_rational(&cb, deg_a as u32);
    Ok(scale * Rational::from_integer(int_resultant(ia, ib)))
}

fn pow_rational(q: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

/// disc(p) = (-1)^(d(d-1)/2) * resultant(p, p') / lc(p).
pub fn discriminant(p: &PolyQ) -> Result<Rational, PolyError> {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(PolyError::DegreeTooSmall),
    };
    let res = resultant(p, &p.derivative())?;
    let lead = p.leading().expect("degree >= 1").clone();
    let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / lead)
}

/// Subresultant polynomial remainder sequence over Z
/// (Cohen, Algorithm 3.3.7).  Inputs are nonzero integer polynomials,
/// lowest degree first.
fn int_resultant(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> BigInt {
    let mut sign = 1i8;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        let v = pow_int(&b[0], (a.len() - 1) as u32);
        return signed(v, sign);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let deg_a = a.len() - 1;
        let deg_b = b.len() - 1;
        let delta = (deg_a - deg_b) as u32;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        if r.iter().all(Zero::is_zero) {
            return BigInt::zero();
        }
        let div = &g * pow_int(&h, delta);
        b = r.into_iter().map(|c| exact_div(c, &div)).collect();
        trim_int(&mut b);
        g = a.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            exact_div(pow_int(&g, delta), &pow_int(&h, delta - 1))
        };
        if b.len() == 1 {
            let deg_a = (a.len() - 1) as u32;
            let v = exact_div(pow_int(&b[0], deg_a), &pow_int(&h, deg_a.saturating_sub(1)));
            return signed(v, sign);
        }
    }
}

fn signed(v: BigInt, sign: i8) -> BigInt {
    if sign < 0 {
        -v
    } else {
        v
    }
}

fn pow_int(b: &BigInt, e: u32) -> BigInt {
    b.pow(e)
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    assert!(r.is_zero(), "inexact division in a fraction-free step");
    q
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let deg_b = b.len() - 1;
    let lead_b = &b[deg_b];
    let mut r: Vec<BigInt> = a.to_vec();
    let mut scale_budget = a.len() - b.len() + 1;
    while r.len() > deg_b && !r.iter().all(Zero::is_zero) {
        if r.last().is_some_and(Zero::is_zero) {
            r.pop();
            continue;
        }
        let lead_r = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - deg_b;
        for c in r.iter_mut() {
            *c *= lead_b;
        }
        scale_budget -= 1;
        for i in 0..deg_b {
            r[shift + i] -= &lead_r * &b[i];
        }
        r.pop();
    }
    for _ in 0..scale_budget {
        for c in r.iter_mut() {
            *c *= lead_b;
        }
    }
    r
}

/// Resultant with respect to Y of two polynomials in Y whose coefficients
/// are rational polynomials in X (given lowest Y-degree first), computed as
/// a Sylvester determinant by fraction-free Bareiss elimination over Q[X].
pub fn sylvester_resultant_polycoeff(a: &[PolyQ], b: &[PolyQ]) -> Result<PolyQ, PolyError> {
    let a = trim_poly_coeffs(a);
    let b = trim_poly_coeffs(b);
    if a.is_empty() && b.is_empty() {
        return Err(PolyError::BothZero);
    }
    if a.is_empty() || b.is_empty() {
        return Ok(PolyQ::zero());
    }
    let m = a.len() - 1;
    let n = b.len() - 1;
    if n == 0 {
        return Ok(b[0].pow(m as u32));
    }
    if m == 0 {
        return Ok(a[0].pow(n as u32));
    }
    let size = m + n;
    let mut matrix = vec![vec![PolyQ::zero(); size]; size];
    for row in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            matrix[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            matrix[n + row][row + k] = c.clone();
        }
    }
    Ok(bareiss_determinant(matrix))
}

fn trim_poly_coeffs(coeffs: &[PolyQ]) -> Vec<PolyQ> {
    let mut v = coeffs.to_vec();
    while v.last().is_some_and(PolyQ::is_zero) {
        v.pop();
    }
    v
}

/// Fraction-free determinant over Q[X]; every division is exact.
fn bareiss_determinant(mut m: Vec<Vec<PolyQ>>) -> PolyQ {
    let n = m.len();
    let mut negate = false;
    let mut prev = PolyQ::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return PolyQ::zero();
            };
            m.swap(k, pivot_row);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                let (q, r) = num.divmod(&prev).expect("pivot is nonzero");
                assert!(r.is_zero(), "inexact division in a fraction-free step");
                m[i][j] = q;
            }
            m[i][k] = PolyQ::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        &PolyQ::zero() - &det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn resultant_of_linears_is_root_difference() {
        let p = PolyQ::new(vec![rat_int(-3), rat_int(1)]);
        let q = PolyQ::new(vec![rat_int(-7), rat_int(1)]);
        assert_eq!(resultant(&p, &q).unwrap(), rat_int(3 - 7));
        assert_eq!(resultant(&q, &p).unwrap(), rat_int(7 - 3));
    }

    #[test]
    fn resultant_evaluation_case() {
        let a = PolyQ::from_ints(&[-1, 0, 1]);
        let b = PolyQ::from_ints(&[-2, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), rat_int(3));
    }

    #[test]
    fn resultant_shared_root_vanishes() {
        let a = PolyQ::from_ints(&[-1, 0, 1]);
        let b = PolyQ::from_ints(&[-1, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), rat_int(0));
    }

    #[test]
    fn resultant_edge_cases() {
        assert_eq!(resultant(&PolyQ::zero(), &PolyQ::zero()), Err(PolyError::BothZero));
        assert_eq!(resultant(&PolyQ::zero(), &PolyQ::one()).unwrap(), rat_int(0));
        assert_eq!(
            resultant(&PolyQ::from_ints(&[3]), &PolyQ::from_ints(&[5])).unwrap(),
            rat_int(1)
        );
        assert_eq!(
            resultant(&PolyQ::from_ints(&[1, 0, 1]), &PolyQ::from_ints(&[5])).unwrap(),
            rat_int(25)
        );
    }

    #[test]
    fn resultant_swap_sign_rule() {
        let cubic = PolyQ::from_ints(&[1, 2, 0, 1]);
        let linear = PolyQ::from_ints(&[-2, 1]);
        let quadratic = PolyQ::from_ints(&[4, -1, 3]);
        let odd_odd = resultant(&cubic, &linear).unwrap();
        assert_eq!(odd_odd, rat_int(-13));
        assert_eq!(odd_odd, -resultant(&linear, &cubic).unwrap());
        let odd_even = resultant(&cubic, &quadratic).unwrap();
        assert_eq!(odd_even, rat_int(34));
        assert_eq!(odd_even, resultant(&quadratic, &cubic).unwrap());
    }

    #[test]
    fn resultant_with_rational_coefficients() {
        let a = PolyQ::new(vec![rat(1, 2), rat_int(0), rat_int(1)]);
        let b = PolyQ::new(vec![rat(-1, 3), rat_int(1)]);
        assert_eq!(resultant(&a, &b).unwrap(), rat(1, 2) + rat(1, 9));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&PolyQ::from_ints(&[-1, 0, 1])).unwrap(), rat_int(4));
        assert_eq!(discriminant(&PolyQ::from_ints(&[1, 1, 1])).unwrap(), rat_int(-3));
        let cubic = PolyQ::from_ints(&[-1, 0, 0, 1]);
        assert_eq!(discriminant(&cubic).unwrap(), rat_int(-27));
        assert_eq!(discriminant(&PolyQ::from_ints(&[5])), Err(PolyError::DegreeTooSmall));
        let double_root = PolyQ::from_ints(&[-1, 1]).pow(2);
        assert_eq!(discriminant(&double_root).unwrap(), rat_int(0));
    }

    #[test]
    fn sylvester_linear_case() {
        let a = vec![&PolyQ::zero() - &PolyQ::x(), PolyQ::one()];
        let b = vec![PolyQ::x(), PolyQ::one()];
        let res = sylvester_resultant_polycoeff(&a, &b).unwrap();
        assert_eq!(res, PolyQ::from_ints(&[0, 2]));
    }

    #[test]
    fn sylvester_matches_scalar_resultant_on_constants() {
        let a = [
            PolyQ::from_ints(&[1]),
            PolyQ::from_ints(&[2]),
            PolyQ::from_ints(&[0]),
            PolyQ::from_ints(&[1]),
        ];
        let b = [PolyQ::from_ints(&[4]), PolyQ::from_ints(&[-1]), PolyQ::from_ints(&[3])];
        let via_matrix = sylvester_resultant_polycoeff(&a, &b).unwrap();
        let scalar = resultant(&PolyQ::from_ints(&[1, 2, 0, 1]), &PolyQ::from_ints(&[4, -1, 3])).unwrap();
        assert_eq!(via_matrix, PolyQ::constant(scalar));
    }

    #[test]
    fn sylvester_edge_cases() {
        assert_eq!(sylvester_resultant_polycoeff(&[], &[]), Err(PolyError::BothZero));
        let b = vec![PolyQ::x(), PolyQ::one()];
        assert_eq!(sylvester_resultant_polycoeff(&[], &b).unwrap(), PolyQ::zero());
        let c = vec![PolyQ::from_ints(&[7])];
        let res = sylvester_resultant_polycoeff(&b, &c).unwrap();
        assert_eq!(res, PolyQ::from_ints(&[7]));
    }
}
