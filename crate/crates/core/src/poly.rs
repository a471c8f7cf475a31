//! Dense univariate polynomials over a [`Field`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Little-endian coefficient vector without trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![FieldElement::ONE] }
    }

    /// The monomial `x`.
    pub fn x() -> Poly {
        Poly { coeffs: vec![FieldElement::ZERO, FieldElement::ONE] }
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_values(values: &[u32]) -> Poly {
        Poly::from_coeffs(values.iter().map(|&v| FieldElement::new(v)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    pub fn to_values(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Clone, Copy)]
pub struct PolyRing<'f> {
    field: &'f Field,
}

impl<'f> PolyRing<'f> {
    pub fn new(field: &'f Field) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    /// `x - a`.
    pub fn linear(&self, root: FieldElement) -> Poly {
        Poly::from_coeffs(vec![self.field.neg(root), FieldElement::ONE])
    }

    /// `x^q - x`.
    pub fn x_q_minus_x(&self) -> Poly {
        let q = self.field.q() as usize;
        let mut coeffs = vec![FieldElement::ZERO; q + 1];
        coeffs[q] = FieldElement::ONE;
        coeffs[1] = self.field.neg(FieldElement::ONE);
        Poly::from_coeffs(coeffs)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.field.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly, c: FieldElement) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = self.field;
        let mut out = vec![FieldElement::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiplies in place by the monic linear factor `x + c`.
    pub fn mul_linear(&self, a: &Poly, c: FieldElement) -> Poly {
        let f = self.field;
        let mut out = vec![FieldElement::ZERO; a.coeffs.len() + 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            out[i + 1] = f.add(out[i + 1], x);
            out[i] = f.add(out[i], f.mul(x, c));
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, a: &Poly, mut k: u64) -> Poly {
        let mut acc = Poly::one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Quotient and remainder of `a / b`.
    pub fn div_rem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        let f = self.field;
        let lead_inv = f.inv(b.coeffs[db])?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - db] = c;
            for (i, &bi) in b.coeffs.iter().enumerate() {
                let idx = k - db + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, bi));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.div_rem(a, b)?.1)
    }

    /// Exact division; fails when the remainder is nonzero.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (quot, rem) = self.div_rem(a, b)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(a, self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn mul_mod(&self, a: &Poly, b: &Poly, m: &Poly) -> Result<Poly> {
        self.rem(&self.mul(a, b), m)
    }

    /// `base^k mod m` by square-and-multiply.
    pub fn pow_mod(&self, base: &Poly, mut k: u64, m: &Poly) -> Result<Poly> {
        let mut acc = self.rem(&Poly::one(), m)?;
        let mut base = self.rem(base, m)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_mod(&base, &base, m)?;
            }
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self, a: &Poly) -> Poly {
        let f = self.field;
        Poly::from_coeffs(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as u64), c))
                .collect(),
        )
    }

    pub fn eval(&self, a: &Poly, x: FieldElement) -> FieldElement {
        let f = self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }
}
