//! Arithmetic in Q[X]/(m) for a monic squarefree modulus m.  Elements carry
//! a shared context so operations can reject operands from different fields.
//!
//! The quotient ring is a field only when m is irreducible; inversion
//! reports the offending gcd otherwise, which callers use as a certificate
//! that some construction step failed.

use crate::poly::PolyQ;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NfError {
    #[error("modulus must have degree at least 1")]
    InvalidModulus,
    #[error("modulus is not squarefree")]
    ModulusNotSquarefree,
    #[error("operands belong to different number fields")]
    ContextMismatch,
    #[error("element shares the factor {witness} with the modulus")]
    NotInvertible { witness: PolyQ },
}

/// A fixed quotient ring Q[X]/(m), m monic and squarefree.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberFieldCtx {
    modulus: PolyQ,
}

impl NumberFieldCtx {
    /// Normalizes the modulus to monic form and checks it is squarefree of
    /// degree at least 1.
    pub fn new(modulus: PolyQ) -> Result<Arc<NumberFieldCtx>, NfError> {
        let Some(degree) = modulus.degree() else {
            return Err(NfError::InvalidModulus);
        };
        if degree < 1 {
            return Err(NfError::InvalidModulus);
        }
        let lead_inv = Rational::one() / modulus.leading().expect("degree checked");
        let modulus = modulus.scale(&lead_inv);
        if !modulus.is_squarefree() {
            return Err(NfError::ModulusNotSquarefree);
        }
        Ok(Arc::new(NumberFieldCtx { modulus }))
    }

    pub fn modulus(&self) -> &PolyQ {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("validated at construction")
    }

    /// The class of X, the generator adjoined to Q.
    pub fn generator(self: &Arc<Self>) -> NFElement {
        NFElement::new(self, PolyQ::x())
    }

    pub fn constant(self: &Arc<Self>, value: Rational) -> NFElement {
        NFElement::new(self, PolyQ::constant(value))
    }

    pub fn zero(self: &Arc<Self>) -> NFElement {
        self.constant(Rational::zero())
    }

    pub fn one(self: &Arc<Self>) -> NFElement {
        self.constant(Rational::one())
    }
}

fn same_field(a: &Arc<NumberFieldCtx>, b: &Arc<NumberFieldCtx>) -> bool {
    Arc::ptr_eq(a, b) || a.modulus == b.modulus
}

/// An element of Q[X]/(m), stored as its reduced representative.
#[derive(Debug, Clone)]
pub struct NFElement {
    ctx: Arc<NumberFieldCtx>,
    rep: PolyQ,
}

impl PartialEq for NFElement {
    fn eq(&self, other: &NFElement) -> bool {
        same_field(&self.ctx, &other.ctx) && self.rep == other.rep
    }
}

impl Eq for NFElement {}

impl NFElement {
    /// Wraps a polynomial, reducing it modulo the field's modulus.
    pub fn new(ctx: &Arc<NumberFieldCtx>, rep: PolyQ) -> NFElement {
        let (_, rem) = rep.divmod(&ctx.modulus).expect("modulus is nonzero");
        NFElement { ctx: Arc::clone(ctx), rep: rem }
    }

    pub fn ctx(&self) -> &Arc<NumberFieldCtx> {
        &self.ctx
    }

    pub fn rep(&self) -> &PolyQ {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The element as a rational number, when it lies in the base field.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            Some(_) => None,
        }
    }

    fn check(&self, other: &NFElement) -> Result<(), NfError> {
        if same_field(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(NfError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &NFElement) -> Result<NFElement, NfError> {
        self.check(other)?;
        Ok(NFElement::new(&self.ctx, &self.rep + &other.rep))
    }

    pub fn sub(&self, other: &NFElement) -> Result<NFElement, NfError> {
        self.check(other)?;
        Ok(NFElement::new(&self.ctx, &self.rep - &other.rep))
    }

    pub fn mul(&self, other: &NFElement) -> Result<NFElement, NfError> {
        self.check(other)?;
        Ok(NFElement::new(&self.ctx, &self.rep * &other.rep))
    }

    pub fn neg(&self) -> NFElement {
        NFElement { ctx: Arc::clone(&self.ctx), rep: -&self.rep }
    }

    /// Multiplicative inverse via the extended gcd with the modulus.  When
    /// the representative shares a factor with the modulus, that gcd is
    /// returned as the witness.
    pub fn inverse(&self) -> Result<NFElement, NfError> {
        if self.is_zero() {
            return Err(NfError::NotInvertible { witness: self.ctx.modulus.clone() });
        }
        let (g, s, _) = self.rep.extended_gcd(&self.ctx.modulus);
        if g.degree() != Some(0) {
            return Err(NfError::NotInvertible { witness: g });
        }
        let scale = Rational::one() / g.coeff(0);
        Ok(NFElement::new(&self.ctx, s.scale(&scale)))
    }

    pub fn div(&self, other: &NFElement) -> Result<NFElement, NfError> {
        self.check(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> NFElement {
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            exp >>= 1;
        }
        acc
    }
}

/// Evaluates a rational polynomial at a field element by Horner's rule.
pub fn eval_poly(poly: &PolyQ, x: &NFElement) -> NFElement {
    let mut acc = x.ctx().zero();
    for c in poly.coeffs().iter().rev() {
        acc = acc.mul(x).expect("same field");
        acc = acc.add(&x.ctx().constant(c.clone())).expect("same field");
    }
    acc
}

/// Coefficients of the monic polynomial with the given roots, lowest first,
/// computed inside the field.
pub fn product_of_linears(
    ctx: &Arc<NumberFieldCtx>,
    roots: &[NFElement],
) -> Result<Vec<NFElement>, NfError> {
    let mut coeffs = vec![ctx.one()];
    for root in roots {
        if !same_field(ctx, root.ctx()) {
            return Err(NfError::ContextMismatch);
        }
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        for k in 0..=coeffs.len() {
            let shifted = if k > 0 { coeffs[k - 1].clone() } else { ctx.zero() };
            let scaled = if k < coeffs.len() {
                coeffs[k].mul(root)?
            } else {
                ctx.zero()
            };
            next.push(shifted.sub(&scaled)?);
        }
        coeffs = next;
    }
    Ok(coeffs)
}
