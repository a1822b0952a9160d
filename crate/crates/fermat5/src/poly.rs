//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first and kept trimmed: the leading
//! coefficient is nonzero unless the polynomial is zero (the empty vector).

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("both polynomials are zero")]
    BothZero,
    #[error("degree too small")]
    DegreeTooSmall,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("not an isolating interval")]
    InvalidInterval,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("empty coefficient list")]
    Empty,
    #[error("coefficient {index}: {source}")]
    BadCoefficient {
        index: usize,
        source: crate::rational::ParseRationalError,
    },
}

/// A polynomial in one variable with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<Rational>) -> PolyQ {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> PolyQ {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> PolyQ {
        PolyQ::constant(Rational::one())
    }

    /// The monomial X.
    pub fn x() -> PolyQ {
        PolyQ::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> PolyQ {
        PolyQ::new(vec![c])
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> PolyQ {
        PolyQ::new(coeffs.iter().map(|&c| crate::rational::rat_int(c)).collect())
    }

    /// The monomial c * X^k.
    pub fn monomial(k: usize, c: Rational) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        PolyQ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of X^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> PolyQ {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        PolyQ::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients in reverse order: X^deg * p(1/X).
    pub fn reversed(&self) -> PolyQ {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        PolyQ::new(coeffs)
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    pub fn divmod(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZeroPoly);
        }
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().expect("nonempty") * &lead_inv;
            if !q.is_zero() {
                for i in 0..dd {
                    let delta = &divisor.coeffs[i] * &q;
                    rem[k + i] -= delta;
                }
            }
            quot[k] = q;
            rem.pop();
            while rem.len() > dd && rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((PolyQ::new(quot), PolyQ::new(rem)))
    }

    /// Monic greatest common divisor (constant 1 for coprime inputs).
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Extended Euclid over Q[X]: returns (g, s, t) with s*self + t*other = g,
    /// g the monic gcd (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &PolyQ) -> (PolyQ, PolyQ, PolyQ) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = PolyQ::one();
        let mut s1 = PolyQ::zero();
        let mut t0 = PolyQ::zero();
        let mut t1 = PolyQ::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("r1 is nonzero");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading().expect("nonzero").clone();
        let inv = lead.recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    fn into_monic(self) -> PolyQ {
        match self.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = lead.clone().recip();
                self.scale(&inv)
            }
            _ => self,
        }
    }

    /// True when gcd(p, p') is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.coeffs.len() <= 2 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Positive content and primitive integer coefficients: the polynomial
    /// equals content * (integer polynomial), sign carried by the integers.
    /// None for the zero polynomial.
    pub fn primitive_int(&self) -> Option<(Rational, Vec<BigInt>)> {
        if self.is_zero() {
            return None;
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut num_gcd = BigInt::zero();
        for c in &ints {
            num_gcd = num_gcd.gcd(c);
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &num_gcd).collect();
        Some((Rational::new(num_gcd, den_lcm), prim))
    }

    /// Coefficients as canonical "p/q" strings, lowest degree first.
    /// The zero polynomial renders as a single "0" so every polynomial
    /// has a nonempty, parseable form.
    pub fn coeff_strings(&self) -> Vec<String> {
        if self.coeffs.is_empty() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Parses a comma-separated coefficient list, lowest degree first.
    /// The inverse of joining `coeff_strings` with ", ".
    pub fn parse_coeff_list(input: &str) -> Result<PolyQ, ParsePolyError> {
        if input.trim().is_empty() {
            return Err(ParsePolyError::Empty);
        }
        let mut coeffs = Vec::new();
        for (index, piece) in input.split(',').enumerate() {
            let c = crate::rational::parse_rational(piece)
                .map_err(|source| ParsePolyError::BadCoefficient { index, source })?;
            coeffs.push(c);
        }
        Ok(PolyQ::new(coeffs))
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ[{}]", self.coeff_strings().join(", "))
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        PolyQ::new(coeffs)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        PolyQ::new(coeffs)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::new(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
