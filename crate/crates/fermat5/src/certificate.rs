//! Assembly and serialization of the verification record for one parameter.
//! Every number is rendered as an exact "p/q" string; polynomials as
//! coefficient lists, lowest degree first.  Serialization is deterministic:
//! identical inputs give byte-identical documents.

use crate::checks::{
    certify_irreducible, check_resultant_identity, orbit_points, six_roots,
    totally_real_verdict, verify_conic_point, verify_fermat_point, verify_six_roots,
    galois_s3_verdict, IrreducibilityVerdict,
};
use crate::numberfield::NumberFieldCtx;
use crate::params::{build_params, quad_kernel, ParamData, QuinticError};
use crate::points::{numeric_points, NumericPoint};
use crate::poly::PolyQ;
use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ParamBlock {
    pub t: String,
    pub u: String,
    pub v: String,
    pub w: String,
    pub s: String,
    pub a: Vec<String>,
    pub f_t: Vec<String>,
    pub g_t: Vec<String>,
}

/// Present only at t = 1, where the sextic collapses to the cube of
/// X^2 + X + 1 and most checks do not apply.
#[derive(Debug, Clone, Serialize)]
pub struct DegenerateBlock {
    pub cyclotomic_cube: bool,
    pub cyclotomic_remainder_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessBlock {
    pub prime: u64,
    pub pattern: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IrreducibleBlock {
    pub verdict: String,
    pub witnesses: Vec<WitnessBlock>,
    pub factor: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TotallyRealBlock {
    pub verdict: bool,
    pub sturm_count: usize,
    pub disc_sign_positive: bool,
    pub delta_matches_closed_form: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointBlock {
    pub root_index: usize,
    pub x_lo: String,
    pub x_hi: String,
    pub x_mid: String,
    pub y_mid: String,
    pub fermat_residual: String,
    pub conic_residual: String,
    pub error_bound: String,
}

/// The full verification record for one parameter.  Checks that do not
/// apply at a degenerate parameter are null rather than absent.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub param: ParamBlock,
    pub degenerate: Option<DegenerateBlock>,
    pub irreducible: IrreducibleBlock,
    pub six_roots_ok: Option<bool>,
    pub fermat_ok: Option<bool>,
    pub conic_ok: Option<bool>,
    pub resultant_identity_ok: bool,
    pub totally_real: Option<TotallyRealBlock>,
    pub galois_s3: Option<bool>,
    pub quad_kernel: String,
    pub points: Vec<PointBlock>,
}

fn poly_strings(p: &PolyQ) -> Vec<String> {
    p.coeff_strings()
}

fn param_block(pd: &ParamData) -> ParamBlock {
    ParamBlock {
        t: pd.t.to_string(),
        u: pd.u.to_string(),
        v: pd.v.to_string(),
        w: pd.w.to_string(),
        s: pd.s.to_string(),
        a: pd.a.iter().map(Rational::to_string).collect(),
        f_t: poly_strings(&pd.f_t),
        g_t: poly_strings(&pd.g_t),
    }
}

fn signed_kernel_string(k: &BigInt) -> String {
    if k.is_negative() {
        k.to_string()
    } else {
        format!("+{k}")
    }
}

fn irreducible_block(verdict: &IrreducibilityVerdict) -> IrreducibleBlock {
    match verdict {
        IrreducibilityVerdict::Irreducible { witnesses } => IrreducibleBlock {
            verdict: "irreducible".into(),
            witnesses: witnesses
                .iter()
                .map(|w| WitnessBlock { prime: w.prime, pattern: w.pattern.0.clone() })
                .collect(),
            factor: None,
        },
        IrreducibilityVerdict::Reducible { factor } => IrreducibleBlock {
            verdict: "reducible".into(),
            witnesses: Vec::new(),
            factor: Some(poly_strings(factor)),
        },
        IrreducibilityVerdict::Inconclusive => IrreducibleBlock {
            verdict: "inconclusive".into(),
            witnesses: Vec::new(),
            factor: None,
        },
    }
}

fn point_block(p: &NumericPoint) -> PointBlock {
    PointBlock {
        root_index: p.root_index,
        x_lo: p.x_lo.to_string(),
        x_hi: p.x_hi.to_string(),
        x_mid: p.x_mid.to_string(),
        y_mid: p.y_mid.to_string(),
        fermat_residual: p.fermat_residual.to_string(),
        conic_residual: p.conic_residual.to_string(),
        error_bound: p.error_bound.to_string(),
    }
}

impl Certificate {
    /// Runs the full pipeline at t.  Numeric points are included when the
    /// parameter is totally real, refined to width 10^-precision_exponent.
    /// A failing mathematical check surfaces as an error, not as a silently
    /// failed record.
    pub fn build(t: &Rational, precision_exponent: u32) -> Result<Certificate, QuinticError> {
        let pd = build_params(t)?;
        let kernel = quad_kernel(t)?;
        let verdict = certify_irreducible(&pd)?;
        let irreducible = irreducible_block(&verdict);
        let param = param_block(&pd);
        let quad_kernel_str = signed_kernel_string(&kernel);

        if pd.t == rat_int(1) {
            let cyclotomic = PolyQ::from_ints(&[1, 1, 1]);
            let cyclotomic_cube = cyclotomic.pow(3) == pd.f_t;
            let (_, rem) = pd.f_t.divmod(&cyclotomic)?;
            return Ok(Certificate {
                param,
                degenerate: Some(DegenerateBlock {
                    cyclotomic_cube,
                    cyclotomic_remainder_zero: rem.is_zero(),
                }),
                irreducible,
                six_roots_ok: None,
                fermat_ok: None,
                conic_ok: None,
                resultant_identity_ok: check_resultant_identity(&pd)?,
                totally_real: None,
                galois_s3: None,
                quad_kernel: quad_kernel_str,
                points: Vec::new(),
            });
        }

        let ctx = NumberFieldCtx::new(pd.f_t.clone())?;
        let roots = six_roots(&pd, &ctx)?;
        let six_ok = verify_six_roots(&pd, &ctx, &roots)?;
        let orbit = orbit_points(&pd, &ctx)?;
        let mut fermat_ok = true;
        let mut conic_ok = true;
        for p in &orbit {
            fermat_ok &= verify_fermat_point(&p.x, &p.y)?;
            conic_ok &= verify_conic_point(&pd, &p.x, &p.y)?;
        }
        let resultant_identity_ok = check_resultant_identity(&pd)?;
        let tr = totally_real_verdict(&pd)?;
        let galois = galois_s3_verdict(&pd, verdict.is_irreducible(), six_ok)?;
        let points = if tr.verdict {
            let precision = Rational::new(BigInt::from(1), BigInt::from(10).pow(precision_exponent));
            numeric_points(&pd, &precision)?
                .iter()
                .map(point_block)
                .collect()
        } else {
            Vec::new()
        };
        Ok(Certificate {
            param,
            degenerate: None,
            irreducible,
            six_roots_ok: Some(six_ok),
            fermat_ok: Some(fermat_ok),
            conic_ok: Some(conic_ok),
            resultant_identity_ok,
            totally_real: Some(TotallyRealBlock {
                verdict: tr.verdict,
                sturm_count: tr.sturm_count,
                disc_sign_positive: tr.disc_sign_positive,
                delta_matches_closed_form: tr.delta_matches_closed_form,
            }),
            galois_s3: Some(galois),
            quad_kernel: quad_kernel_str,
            points,
        })
    }

    /// True when every applicable check passed.  A false totally-real
    /// verdict is a finding, not a failure.
    pub fn passes(&self) -> bool {
        if let Some(deg) = &self.degenerate {
            return deg.cyclotomic_cube
                && deg.cyclotomic_remainder_zero
                && self.irreducible.verdict == "reducible"
                && self.resultant_identity_ok;
        }
        self.irreducible.verdict == "irreducible"
            && self.six_roots_ok == Some(true)
            && self.fermat_ok == Some(true)
            && self.conic_ok == Some(true)
            && self.resultant_identity_ok
            && self.galois_s3 == Some(true)
            && self
                .totally_real
                .as_ref()
                .is_some_and(|tr| tr.delta_matches_closed_form)
    }

    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable record");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn window_parameter_certificate() {
        let cert = Certificate::build(&rat(5, 2), 4).unwrap();
        assert!(cert.passes());
        assert_eq!(cert.quad_kernel, "+753");
        assert_eq!(cert.irreducible.verdict, "irreducible");
        assert!(cert.degenerate.is_none());
        assert_eq!(cert.points.len(), 6);
        let tr = cert.totally_real.as_ref().unwrap();
        assert!(tr.verdict && tr.sturm_count == 6);
        assert_eq!(cert.param.u, "63/31");
        assert_eq!(cert.param.f_t.len(), 7);
    }

    #[test]
    fn outside_window_certificate() {
        let cert = Certificate::build(&rat_int(3), 4).unwrap();
        assert!(cert.passes());
        assert_eq!(cert.quad_kernel, "-347");
        let tr = cert.totally_real.as_ref().unwrap();
        assert!(!tr.verdict);
        assert_eq!(tr.sturm_count, 0);
        assert!(cert.points.is_empty());
    }

    #[test]
    fn degenerate_certificate() {
        let cert = Certificate::build(&rat_int(1), 4).unwrap();
        assert!(cert.passes());
        let deg = cert.degenerate.as_ref().unwrap();
        assert!(deg.cyclotomic_cube && deg.cyclotomic_remainder_zero);
        assert_eq!(cert.irreducible.verdict, "reducible");
        assert_eq!(cert.quad_kernel, "-3");
        assert!(cert.six_roots_ok.is_none());
        assert!(cert.galois_s3.is_none());
    }

    #[test]
    fn excluded_parameter_errors() {
        assert_eq!(
            Certificate::build(&rat_int(2), 4).unwrap_err(),
            QuinticError::DegenerateParameter
        );
    }

    #[test]
    fn serialization_is_deterministic() {
        let a = Certificate::build(&rat(9, 4), 3).unwrap().to_json_string();
        let b = Certificate::build(&rat(9, 4), 3).unwrap().to_json_string();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed["quad_kernel"], "+86473");
    }
}
