//! Exact real-root machinery: Sturm chains, root counting with infinite
//! endpoints, isolation into rational intervals, bisection refinement, and
//! rational root enumeration.
//!
//! Chains are computed on primitive integer forms with content stripped at
//! every step; each entry is a positive multiple of the textbook signed
//! remainder, which leaves every sign sequence unchanged.

use crate::poly::{PolyError, PolyQ};
use crate::rational::{factor_integer, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// The signed remainder sequence of p and p'.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<PolyQ>,
}

impl SturmChain {
    /// Builds the chain for a squarefree polynomial.
    pub fn build(p: &PolyQ) -> Result<SturmChain, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if p.degree() == Some(0) {
            return Ok(SturmChain { chain: vec![p.clone()] });
        }
        let mut chain = vec![p.clone(), p.derivative()];
        let mut ints: Vec<Vec<BigInt>> = chain
            .iter()
            .map(|q| q.primitive_int().expect("nonzero").1)
            .collect();
        while ints.last().expect("nonempty").len() > 1 {
            let a = &ints[ints.len() - 2];
            let b = &ints[ints.len() - 1];
            let delta = (a.len() - b.len()) as u32 + 1;
            let mut r = int_pseudo_rem(a, b);
            if r.iter().all(Zero::is_zero) {
                break;
            }
            let negate_back = b.last().expect("nonzero").is_negative() && delta % 2 == 1;
            if !negate_back {
                for c in r.iter_mut() {
                    *c = -std::mem::take(c);
                }
            }
            let prim = strip_content(r);
            chain.push(int_to_poly(&prim));
            ints.push(prim);
        }
        let gcd_degree = ints.last().expect("nonempty").len() - 1;
        if gcd_degree > 0 {
            return Err(PolyError::NotSquarefree);
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[PolyQ] {
        &self.chain
    }

    /// Sign variations of the chain at an endpoint.
    fn variations(&self, at: &Endpoint) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let sign = match at {
                Endpoint::Finite(x) => match p.eval(x) {
                    v if v.is_zero() => continue,
                    v => v.is_positive(),
                },
                Endpoint::PosInf => p.leading().expect("nonzero chain entry").is_positive(),
                Endpoint::NegInf => {
                    let lead_positive = p.leading().expect("nonzero chain entry").is_positive();
                    let odd_degree = p.degree().unwrap_or(0) % 2 == 1;
                    lead_positive != odd_degree
                }
            };
            if let Some(prev) = last {
                if prev != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }
}

fn int_to_poly(coeffs: &[BigInt]) -> PolyQ {
    PolyQ::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn strip_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = num_integer::Integer::gcd(&g, c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let deg_b = b.len() - 1;
    let lead_b = &b[deg_b];
    let mut r: Vec<BigInt> = a.to_vec();
    let mut budget = a.len() - b.len() + 1;
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
        budget -= 1;
        for i in 0..deg_b {
            r[shift + i] -= &lead_r * &b[i];
        }
        r.pop();
    }
    for _ in 0..budget {
        for c in r.iter_mut() {
            *c *= lead_b;
        }
    }
    r
}

/// Exact number of real roots of a squarefree polynomial in (lo, hi].
pub fn sturm_count(p: &PolyQ, lo: &Endpoint, hi: &Endpoint) -> Result<usize, PolyError> {
    assert!(endpoint_lt(lo, hi), "interval endpoints out of order");
    let chain = SturmChain::build(p)?;
    Ok(chain.variations(lo) - chain.variations(hi))
}

fn endpoint_lt(lo: &Endpoint, hi: &Endpoint) -> bool {
    match (lo, hi) {
        (Endpoint::NegInf, Endpoint::NegInf) | (Endpoint::PosInf, Endpoint::PosInf) => false,
        (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => true,
        (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
        _ => false,
    }
}

/// A rational interval (lo, hi] containing exactly one real root of target.
#[derive(Debug, Clone)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
    target: PolyQ,
}

impl IsolatingInterval {
    /// Validates the isolation invariant before constructing.
    pub fn new(lo: Rational, hi: Rational, target: PolyQ) -> Result<IsolatingInterval, PolyError> {
        if lo >= hi {
            return Err(PolyError::InvalidInterval);
        }
        let count = sturm_count(
            &target,
            &Endpoint::Finite(lo.clone()),
            &Endpoint::Finite(hi.clone()),
        )?;
        let lo_root = target.eval(&lo).is_zero();
        let hi_root = target.eval(&hi).is_zero();
        if count != 1 || (lo_root && hi_root) {
            return Err(PolyError::InvalidInterval);
        }
        Ok(IsolatingInterval { lo, hi, target })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn target(&self) -> &PolyQ {
        &self.target
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }
}

/// Cauchy bound: every real root lies strictly inside (-M, M).
fn cauchy_bound(p: &PolyQ) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let mut max = Rational::zero();
    let coeffs = p.coeffs();
    for c in &coeffs[..coeffs.len() - 1] {
        let ratio = c.abs() / &lead;
        if ratio > max {
            max = ratio;
        }
    }
    max + Rational::one()
}

/// Isolates every real root of a squarefree polynomial into pairwise
/// disjoint intervals, ordered by position.
pub fn isolate_real_roots(p: &PolyQ) -> Result<Vec<IsolatingInterval>, PolyError> {
    let chain = SturmChain::build(p)?;
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(p);
    let lo = -&bound;
    let hi = bound;
    let total = chain.variations(&Endpoint::Finite(lo.clone()))
        - chain.variations(&Endpoint::Finite(hi.clone()));
    let mut out = Vec::with_capacity(total);
    split(p, &chain, lo, hi, total, &mut out);
    Ok(out)
}

fn split(
    p: &PolyQ,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<IsolatingInterval>,
) {
    match count {
        0 => {}
        1 => out.push(IsolatingInterval { lo, hi, target: p.clone() }),
        _ => {
            let cut = nonroot_cut(p, &lo, &hi);
            let left = chain.variations(&Endpoint::Finite(lo.clone()))
                - chain.variations(&Endpoint::Finite(cut.clone()));
            split(p, chain, lo, cut.clone(), left, out);
            split(p, chain, cut, hi, count - left, out);
        }
    }
}

/// A point strictly inside (lo, hi) that is not a root of p: p has at most
/// deg p roots, so one of deg p + 1 equally spaced candidates is free.
fn nonroot_cut(p: &PolyQ, lo: &Rational, hi: &Rational) -> Rational {
    let d = p.degree().expect("nonconstant");
    let span = hi - lo;
    let denom = Rational::from_integer(BigInt::from(d as i64 + 2));
    let mut best: Option<Rational> = None;
    for k in 1..=d + 1 {
        let cut = lo + &(&span * Rational::from_integer(BigInt::from(k as i64)) / &denom);
        if !p.eval(&cut).is_zero() {
            match &best {
                Some(b) => {
                    let mid = (lo + hi) / Rational::from_integer(BigInt::from(2));
                    if (&cut - &mid).abs() < (b - &mid).abs() {
                        best = Some(cut);
                    }
                }
                None => best = Some(cut),
            }
        }
    }
    best.expect("some candidate avoids every root")
}

/// Bisects an isolating interval until its width is at most the requested
/// width; returns the interval unchanged when already narrow enough.
pub fn refine(interval: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    assert!(width.is_positive(), "width must be positive");
    let p = &interval.target;
    let mut lo = interval.lo.clone();
    let mut hi = interval.hi.clone();
    let two = Rational::from_integer(BigInt::from(2));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let v_mid = p.eval(&mid);
        if v_mid.is_zero() {
            lo = (&lo + &mid) / &two;
            hi = mid;
            continue;
        }
        let v_hi = p.eval(&hi);
        let root_in_right = v_hi.is_zero() || (v_mid.is_positive() != v_hi.is_positive());
        if root_in_right {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    IsolatingInterval { lo, hi, target: p.clone() }
}

/// Truncates a non-negative rational to the given number of decimal places.
pub fn truncate_decimal(q: &Rational, digits: u32) -> String {
    assert!(!q.is_negative(), "decimal truncation expects a non-negative value");
    let scale = BigInt::from(10).pow(digits);
    let scaled = (q * Rational::from_integer(scale)).floor();
    let digits_str = format!("{:0>width$}", scaled.numer(), width = digits as usize + 1);
    let split = digits_str.len() - digits as usize;
    if digits == 0 {
        digits_str
    } else {
        format!("{}.{}", &digits_str[..split], &digits_str[split..])
    }
}

/// All rational roots with multiplicity, ascending, via divisor candidates
/// of the primitive integer form.
pub fn rational_roots(p: &PolyQ) -> Result<Vec<Rational>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut q = p.clone();
    let mut zero_mult = 0;
    while q.coeff(0).is_zero() && q.degree() > Some(0) {
        let (quot, rem) = q.divmod(&PolyQ::x()).expect("X is nonzero");
        debug_assert!(rem.is_zero());
        q = quot;
        zero_mult += 1;
    }
    roots.extend(std::iter::repeat_with(Rational::zero).take(zero_mult));
    if q.degree() == Some(0) {
        roots.sort();
        return Ok(roots);
    }
    let (_, ints) = q.primitive_int().expect("nonzero");
    let lead_divisors = positive_divisors(ints.last().expect("nonzero"));
    let const_divisors = positive_divisors(&ints[0]);
    let mut candidates = Vec::new();
    for n in &const_divisors {
        for d in &lead_divisors {
            let c = Rational::new(n.clone(), d.clone());
            if !candidates.contains(&c) {
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
    }
    for cand in candidates {
        while q.eval(&cand).is_zero() {
            roots.push(cand.clone());
            let linear = PolyQ::new(vec![-cand.clone(), Rational::one()]);
            let (quot, rem) = q.divmod(&linear).expect("linear is nonzero");
            debug_assert!(rem.is_zero());
            q = quot;
        }
    }
    roots.sort();
    Ok(roots)
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_one() {
        return vec![BigInt::one()];
    }
    let factorization = factor_integer(&n).expect("n >= 2");
    let mut divisors = vec![BigInt::one()];
    for (p, e) in factorization.factors {
        let mut extended = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut power = BigInt::one();
            for _ in 0..=e {
                extended.push(d * &power);
                power *= &p;
            }
        }
        divisors = extended;
    }
    divisors.sort();
    divisors
}
