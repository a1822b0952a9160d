//! Enumeration of the rational parameters inside the totally real window,
//! ordered ascending, with certification and grouping by quadratic kernel.
//! Distinct kernels witness pairwise distinct sextic fields.

use crate::certificate::Certificate;
use crate::params::{in_totally_real_range, quad_kernel, QuinticError};
use crate::rational::{rat, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use std::collections::BTreeSet;

/// One certified window parameter.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub t: Rational,
    pub kernel: BigInt,
    pub certificate: Certificate,
}

/// All reduced fractions p/q with q up to the height bound that lie in the
/// open window, ascending.  The upper endpoint is irrational, so membership
/// is decided by the exact sign of the window polynomial.  Bounds below 3
/// come back empty: the enumeration contract starts at height 3.
pub fn admissible_parameters(height: u32) -> Vec<Rational> {
    let mut out = Vec::new();
    if height < 3 {
        return out;
    }
    for q in 1..=i64::from(height) {
        let lo = 2 * q + 1;
        let hi = (26 * q) / 10 + 1;
        for p in lo..=hi {
            if p.gcd(&q) != 1 {
                continue;
            }
            let t = rat(p, q);
            if in_totally_real_range(&t) {
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

/// Certifies every admissible parameter up to the height bound.  Hits come
/// back ascending by t; numeric points use the given precision exponent.
pub fn search_distinct_fields(
    height: u32,
    precision_exponent: u32,
) -> Result<Vec<SearchHit>, QuinticError> {
    let mut hits = Vec::new();
    for t in admissible_parameters(height) {
        let kernel = quad_kernel(&t)?;
        let certificate = Certificate::build(&t, precision_exponent)?;
        hits.push(SearchHit { t, kernel, certificate });
    }
    Ok(hits)
}

/// The first hit for each kernel value, in ascending t order.  Parameters
/// listed here generate pairwise distinct fields.
pub fn distinct_kernel_representatives(hits: &[SearchHit]) -> Vec<&SearchHit> {
    let mut seen = BTreeSet::new();
    hits.iter().filter(|h| seen.insert(h.kernel.clone())).collect()
}
