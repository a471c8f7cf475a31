//! Rédei polynomial slices and p-th power structure.
//!
//! For a point set `U` and a slope `y0`, the slice
//! `R(x, y0) = ∏_{(a,b) ∈ U} (x + a·y0 - b)` has a repeated root exactly
//! when two points of `U` determine the direction `y0`. Otherwise it splits
//! into distinct linear factors over GF(q) and divides `x^q - x`.

use serde::Serialize;

use crate::directions::PointSet;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::{Poly, PolyRing};

pub fn redei_slice(field: &Field, u: &PointSet, y0: FieldElement) -> Poly {
    let ring = PolyRing::new(field);
    u.points().iter().fold(Poly::one(), |acc, &(a, b)| {
        ring.mul_linear(&acc, field.sub(field.mul(a, y0), b))
    })
}

/// Whether `f` divides `x^q - x`, via `gcd(f, x^q mod f - x)`.
pub fn divides_xq_minus_x(field: &Field, f: &Poly) -> bool {
    let Some(deg) = f.degree() else {
        return false;
    };
    if deg == 0 {
        return true;
    }
    let ring = PolyRing::new(field);
    let xq = ring.pow_mod(&Poly::x(), field.q(), f).expect("f is nonzero");
    let h = ring.sub(&xq, &Poly::x());
    ring.gcd(f, &h) == ring.monic(f)
}

/// `(x^q - x) / R(x, y0)`, defined when `y0` is not a determined direction.
pub fn szonyi_quotient(field: &Field, u: &PointSet, y0: FieldElement) -> Result<Poly> {
    let ring = PolyRing::new(field);
    ring.div_exact(&ring.x_q_minus_x(), &redei_slice(field, u, y0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PthPowerDecomposition {
    pub is_deriv_zero: bool,
    pub g: Option<Poly>,
}

/// Decides whether `f' = 0` and, if so, returns the `g` with `g^p = f`.
///
/// The coefficient at exponent `i·p` maps to its Frobenius preimage
/// `c^(q/p)` at exponent `i`.
pub fn pth_power_decompose(field: &Field, f: &Poly) -> Result<PthPowerDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = field.p() as usize;
    let is_deriv_zero = f.coeffs().iter().enumerate().all(|(i, c)| c.is_zero() || i % p == 0);
    if !is_deriv_zero {
        return Ok(PthPowerDecomposition { is_deriv_zero, g: None });
    }
    let root_exp = field.q() / field.p();
    let g = Poly::from_coeffs(f.coeffs().iter().step_by(p).map(|&c| field.pow(c, root_exp)).collect());
    Ok(PthPowerDecomposition { is_deriv_zero, g: Some(g) })
}
