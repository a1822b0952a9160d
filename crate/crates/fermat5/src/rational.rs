//! Exact rational arithmetic, integer factorization, and squarefree kernels.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in
//! canonical form (reduced, positive denominator) and prints as `p/q`, or
//! `p` when the denominator is 1.  Factorization is trial division up to
//! 10^6 followed by Brent's variant of Pollard rho, with a deterministic
//! Miller-Rabin primality test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Builds a rational from machine integers; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("input is zero")]
    ZeroInput,
    #[error("input must be at least 2")]
    InputTooSmall,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal")]
    Malformed,
    #[error("denominator is zero")]
    ZeroDenominator,
}

/// Parses `p`, `p/q`, or signed variants into a canonical rational.
///
/// Surrounding ASCII whitespace is tolerated; whitespace inside the literal
/// is not.  Never panics, in particular not on a zero denominator.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            BigInt::from_str(n).map_err(|_| ParseRationalError::Malformed)?,
            BigInt::from_str(d).map_err(|_| ParseRationalError::Malformed)?,
        ),
        None => (
            BigInt::from_str(s).map_err(|_| ParseRationalError::Malformed)?,
            BigInt::one(),
        ),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// A complete prime factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Reassembles the factored integer.
    pub fn value(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }
}

/// Deterministic Miller-Rabin, exact for all inputs below 3.3 * 10^24.
pub fn is_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for w in WITNESSES {
        if n == &BigInt::from(w) {
            return true;
        }
        if (n % BigInt::from(w)).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n - 1 is nonzero");
    let d = &n_minus_1 >> s;
    'witness: for w in WITNESSES {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Completely factors `n >= 2`: trial division to 10^6, then Pollard rho
/// with Brent cycle detection on any remaining cofactor.  Deterministic.
pub fn factor_integer(n: &BigInt) -> Result<Factorization, ArithError> {
    if n < &BigInt::from(2) {
        return Err(ArithError::InputTooSmall);
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let divide_out = |cand: u64, m: &mut BigInt, factors: &mut Vec<(BigInt, u32)>| {
        let p = BigInt::from(cand);
        let mut e = 0;
        while (&*m % &p).is_zero() {
            *m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    divide_out(2, &mut m, &mut factors);
    divide_out(3, &mut m, &mut factors);
    let mut d: u64 = 5;
    while d <= TRIAL_DIVISION_BOUND {
        if let Some(small) = m.to_u64() {
            if d.saturating_mul(d) > small {
                break;
            }
        }
        divide_out(d, &mut m, &mut factors);
        divide_out(d + 2, &mut m, &mut factors);
        d += 6;
    }
    if !m.is_one() {
        let mut stack = vec![m];
        while let Some(x) = stack.pop() {
            if is_prime(&x) {
                match factors.iter_mut().find(|(p, _)| *p == x) {
                    Some((_, e)) => *e += 1,
                    None => factors.push((x, 1)),
                }
            } else {
                let g = pollard_brent(&x);
                stack.push(&x / &g);
                stack.push(g);
            }
        }
    }
    factors.sort_by(|(p, _), (q, _)| p.cmp(q));
    Ok(Factorization { factors })
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of an odd composite.
fn pollard_brent(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = (&y * &y + &c) % n;
                    q = q * (&x - &y).abs() % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = (&ys * &ys + &c) % n;
                g = (&x - &ys).abs().gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
    unreachable!("every composite has a factor")
}

/// The unique squarefree positive integer k with |q| = k * (rational square).
pub fn squarefree_kernel(q: &Rational) -> Result<BigInt, ArithError> {
    if q.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let mut kernel = BigInt::one();
    for part in [q.numer().abs(), q.denom().abs()] {
        if part.is_one() {
            continue;
        }
        let factorization = factor_integer(&part)?;
        for (p, e) in factorization.factors {
            if e % 2 == 1 {
                kernel *= p;
            }
        }
    }
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_rational("5/2").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-5/2").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational(" 5/2 ").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("+3/9").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert_eq!(parse_rational("   "), Err(ParseRationalError::Empty));
        assert_eq!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator));
        assert_eq!(parse_rational("-1/0"), Err(ParseRationalError::ZeroDenominator));
        assert_eq!(parse_rational("abc"), Err(ParseRationalError::Malformed));
        assert_eq!(parse_rational("1/2/3"), Err(ParseRationalError::Malformed));
        assert_eq!(parse_rational("1 / 2"), Err(ParseRationalError::Malformed));
        assert_eq!(parse_rational("/2"), Err(ParseRationalError::Malformed));
        assert_eq!(parse_rational("2/"), Err(ParseRationalError::Malformed));
        assert_eq!(parse_rational("-"), Err(ParseRationalError::Malformed));
        assert_eq!(parse_rational("1.5"), Err(ParseRationalError::Malformed));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(rat(5, 2).to_string(), "5/2");
        assert_eq!(rat(-10, 4).to_string(), "-5/2");
        assert_eq!(rat(14, 2).to_string(), "7");
    }

    #[test]
    fn primality_small_and_carmichael() {
        assert!(is_prime(&big(2)));
        assert!(is_prime(&big(3)));
        assert!(is_prime(&big(251)));
        assert!(is_prime(&big(17093)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(0)));
        assert!(!is_prime(&big(25)));
        assert!(!is_prime(&big(561)));
        assert!(!is_prime(&big(251 * 251)));
        assert!(is_prime(&BigInt::from(2305843009213693951u64)));
    }

    #[test]
    fn factor_examples() {
        let f = factor_integer(&big(12)).unwrap();
        assert_eq!(f.factors, vec![(big(2), 2), (big(3), 1)]);
        let f = factor_integer(&big(961)).unwrap();
        assert_eq!(f.factors, vec![(big(31), 2)]);
        let f = factor_integer(&big(753)).unwrap();
        assert_eq!(f.factors, vec![(big(3), 1), (big(251), 1)]);
        assert_eq!(f.value(), big(753));
    }

    #[test]
    fn factor_rejects_small_input() {
        assert_eq!(factor_integer(&big(1)), Err(ArithError::InputTooSmall));
        assert_eq!(factor_integer(&big(0)), Err(ArithError::InputTooSmall));
        assert_eq!(factor_integer(&big(-6)), Err(ArithError::InputTooSmall));
    }

    #[test]
    fn factor_large_semiprime_via_rho() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let f = factor_integer(&(&p * &q)).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn squarefree_kernel_examples() {
        assert_eq!(squarefree_kernel(&rat_int(64)).unwrap(), big(1));
        assert_eq!(squarefree_kernel(&rat_int(12)).unwrap(), big(3));
        assert_eq!(squarefree_kernel(&rat(753, 64)).unwrap(), big(753));
        assert_eq!(squarefree_kernel(&rat(-27, 1)).unwrap(), big(3));
        assert_eq!(squarefree_kernel(&rat(9781393, 1000000)).unwrap(), big(9781393));
        assert_eq!(squarefree_kernel(&rat_int(0)), Err(ArithError::ZeroInput));
    }

    #[test]
    fn kernel_invariant_under_square_scaling() {
        for (q, s) in [(rat(7, 5), rat(3, 2)), (rat(-12, 49), rat(-5, 11)), (rat(753, 64), rat(89, 32))] {
            let scaled = &q * &s * &s;
            assert_eq!(squarefree_kernel(&q).unwrap(), squarefree_kernel(&scaled).unwrap());
        }
    }
}
