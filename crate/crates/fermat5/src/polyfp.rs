//! Polynomials over prime fields F_p: reduction from Q and distinct-degree
//! factorization, which yields the multiset of irreducible-factor degrees
//! without splitting equal-degree parts.
//!
//! Primes stay below 2^61 so every residue fits a machine word and products
//! fit u128.

use crate::poly::PolyQ;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FpError {
    #[error("prime divides a denominator or the leading numerator")]
    BadPrime,
    #[error("polynomial is not squarefree mod p")]
    NotSquarefreeModP,
}

/// A polynomial over F_p, coefficients reduced and trimmed, lowest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

/// Degrees of the irreducible factors, with multiplicity, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePattern(pub Vec<usize>);

impl DegreePattern {
    /// True when some sub-multiset sums to k (a necessary condition for a
    /// rational factor of degree k).
    pub fn admits_factor_degree(&self, k: usize) -> bool {
        let mut reachable = vec![false; k + 1];
        reachable[0] = true;
        for &d in &self.0 {
            for sum in (0..=k).rev() {
                if sum >= d && reachable[sum - d] {
                    reachable[sum] = true;
                }
            }
        }
        reachable[k]
    }
}

const MAX_PRIME: u64 = 1 << 61;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl PolyFp {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> PolyFp {
        assert!(p >= 2 && p < MAX_PRIME, "modulus out of range");
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn x(p: u64) -> PolyFp {
        PolyFp::new(p, vec![0, 1])
    }

    fn sub(&self, rhs: &PolyFp) -> PolyFp {
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(0);
                let b = rhs.coeffs.get(k).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        PolyFp::new(p, coeffs)
    }

    fn mul(&self, rhs: &PolyFp) -> PolyFp {
        if self.is_zero() || rhs.is_zero() {
            return PolyFp::new(self.p, vec![]);
        }
        let p = self.p;
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        PolyFp::new(p, coeffs)
    }

    fn rem(&self, divisor: &PolyFp) -> PolyFp {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let lead = *rem.last().expect("nonempty");
            if lead != 0 {
                let q = mul_mod(lead, lead_inv, p);
                let shift = rem.len() - 1 - dd;
                for i in 0..dd {
                    let delta = mul_mod(q, divisor.coeffs[i], p);
                    rem[shift + i] = (rem[shift + i] + p - delta) % p;
                }
            }
            rem.pop();
        }
        PolyFp::new(p, rem)
    }

    fn divide_exact(&self, divisor: &PolyFp) -> PolyFp {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            assert!(rem.iter().all(|&c| c == 0), "inexact division");
            return PolyFp::new(p, vec![]);
        }
        let mut quot = vec![0u64; rem.len() - dd];
        while rem.len() > dd {
            let lead = *rem.last().expect("nonempty");
            let k = rem.len() - 1 - dd;
            if lead != 0 {
                let q = mul_mod(lead, lead_inv, p);
                for i in 0..dd {
                    let delta = mul_mod(q, divisor.coeffs[i], p);
                    rem[k + i] = (rem[k + i] + p - delta) % p;
                }
                quot[k] = q;
            }
            rem.pop();
        }
        assert!(rem.iter().all(|&c| c == 0), "inexact division");
        PolyFp::new(p, quot)
    }

    fn monic(&self) -> PolyFp {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lead) => {
                let inv = inv_mod(lead, self.p);
                let coeffs = self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect();
                PolyFp::new(self.p, coeffs)
            }
        }
    }

    fn gcd(&self, other: &PolyFp) -> PolyFp {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> PolyFp {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mul_mod(c, (k as u64) % p, p))
            .collect();
        PolyFp::new(p, coeffs)
    }

    /// self^(p^count-th Frobenius step): raises to the p-th power mod f,
    /// by square-and-multiply on the exponent p.
    fn frobenius_mod(&self, f: &PolyFp) -> PolyFp {
        let p = self.p;
        let mut acc = PolyFp::new(p, vec![1]);
        let mut base = self.rem(f);
        let mut exp = p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            base = base.mul(&base).rem(f);
            exp >>= 1;
        }
        acc
    }
}

/// Reduces a rational polynomial mod p.  Fails when p divides a coefficient
/// denominator or the leading numerator (the degree would drop).
pub fn reduce_mod_p(poly: &PolyQ, p: u64) -> Result<PolyFp, FpError> {
    assert!(p >= 2 && p < MAX_PRIME, "modulus out of range");
    let big_p = num_bigint::BigInt::from(p);
    let mut coeffs = Vec::with_capacity(poly.coeffs().len());
    for c in poly.coeffs() {
        let den_red = (c.denom() % &big_p + &big_p) % &big_p;
        let den = den_red.to_u64().expect("residue fits u64");
        if den == 0 {
            return Err(FpError::BadPrime);
        }
        let num_red = (c.numer() % &big_p + &big_p) % &big_p;
        let num = num_red.to_u64().expect("residue fits u64");
        coeffs.push(mul_mod(num, inv_mod(den, p), p));
    }
    if !poly.is_zero() && coeffs.last() == Some(&0) {
        return Err(FpError::BadPrime);
    }
    Ok(PolyFp::new(p, coeffs))
}

/// Degrees of the irreducible factors of a squarefree polynomial over F_p,
/// via distinct-degree factorization with Frobenius powers.
pub fn degree_pattern(f: &PolyFp) -> Result<DegreePattern, FpError> {
    let Some(degree) = f.degree() else {
        return Err(FpError::NotSquarefreeModP);
    };
    if degree == 0 {
        return Ok(DegreePattern(vec![]));
    }
    let deriv = f.derivative();
    if deriv.is_zero() || f.gcd(&deriv).degree() != Some(0) {
        return Err(FpError::NotSquarefreeModP);
    }
    let p = f.modulus();
    let mut pattern = Vec::new();
    let mut remaining = f.monic();
    let mut h = PolyFp::x(p).rem(&remaining);
    let mut i = 0;
    while remaining.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = h.frobenius_mod(&remaining);
        let g = remaining.gcd(&h.sub(&PolyFp::x(p)));
        if let Some(d) = g.degree() {
            if d > 0 {
                pattern.extend(std::iter::repeat(i).take(d / i));
                remaining = remaining.divide_exact(&g);
                h = h.rem(&remaining);
            }
        }
    }
    if let Some(d) = remaining.degree() {
        if d > 0 {
            pattern.push(d);
        }
    }
    pattern.sort();
    Ok(DegreePattern(pattern))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pattern(p: u64, coeffs: &[i64]) -> DegreePattern {
        let f = reduce_mod_p(&PolyQ::from_ints(coeffs), p).unwrap();
        degree_pattern(&f).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let f = reduce_mod_p(&PolyQ::from_ints(&[-1, 0, 1]), 7).unwrap();
        assert_eq!(f.coeffs(), &[6, 0, 1]);
        let g = reduce_mod_p(&PolyQ::new(vec![rat(1, 3), rat(1, 1)]), 5).unwrap();
        assert_eq!(g.coeffs(), &[2, 1]);
    }

    #[test]
    fn reduction_rejects_denominator_and_degree_drop() {
        let third = PolyQ::new(vec![rat(1, 3), rat(1, 1)]);
        assert_eq!(reduce_mod_p(&third, 3), Err(FpError::BadPrime));
        let drop = PolyQ::from_ints(&[1, 7]);
        assert_eq!(reduce_mod_p(&drop, 7), Err(FpError::BadPrime));
    }

    #[test]
    fn patterns_of_known_factorizations() {
        assert_eq!(pattern(2, &[1, 1, 1]), DegreePattern(vec![2]));
        assert_eq!(pattern(7, &[-1, 0, 1]), DegreePattern(vec![1, 1]));
        assert_eq!(pattern(2, &[1, 1, 0, 0, 1]), DegreePattern(vec![4]));
        assert_eq!(pattern(5, &[2, 0, 1]), DegreePattern(vec![2]));
        assert_eq!(pattern(13, &[-3, 0, 1]), DegreePattern(vec![1, 1]));
        assert_eq!(pattern(2, &[1, 1, 0, 0, 0, 1]), DegreePattern(vec![2, 3]));
    }

    #[test]
    fn seeded_product_roundtrip() {
        let p = 11;
        let quad = PolyFp::new(p, vec![1, 0, 1]);
        let cubic = PolyFp::new(p, vec![4, 1, 0, 1]);
        let linear = PolyFp::new(p, vec![5, 1]);
        let product = quad.mul(&cubic).mul(&linear);
        let poly = PolyQ::from_ints(
            &product.coeffs().iter().map(|&c| c as i64).collect::<Vec<_>>(),
        );
        let reduced = reduce_mod_p(&poly, p).unwrap();
        let got = degree_pattern(&reduced).unwrap();
        assert_eq!(got, DegreePattern(vec![1, 2, 3]));
    }

    #[test]
    fn pattern_scale_invariance() {
        let p = 13;
        let f = reduce_mod_p(&PolyQ::from_ints(&[1, 1, 0, 0, 1]), p).unwrap();
        let scaled = reduce_mod_p(&PolyQ::from_ints(&[4, 4, 0, 0, 4]), p).unwrap();
        assert_eq!(degree_pattern(&f).unwrap(), degree_pattern(&scaled).unwrap());
    }

    #[test]
    fn non_squarefree_rejected() {
        let sq = PolyQ::from_ints(&[1, 2, 1]);
        let f = reduce_mod_p(&sq, 7).unwrap();
        assert_eq!(degree_pattern(&f), Err(FpError::NotSquarefreeModP));
        let frob = reduce_mod_p(&PolyQ::from_ints(&[1, 0, 1]), 2).unwrap();
        assert_eq!(degree_pattern(&frob), Err(FpError::NotSquarefreeModP));
    }

    #[test]
    fn subset_sums() {
        let p33 = DegreePattern(vec![3, 3]);
        assert!(!p33.admits_factor_degree(1));
        assert!(!p33.admits_factor_degree(2));
        assert!(p33.admits_factor_degree(3));
        let p222 = DegreePattern(vec![2, 2, 2]);
        assert!(p222.admits_factor_degree(2));
        assert!(!p222.admits_factor_degree(3));
        let ones = DegreePattern(vec![1, 1, 1, 1, 1, 1]);
        assert!(ones.admits_factor_degree(5));
    }
}
