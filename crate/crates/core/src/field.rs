//! Arithmetic in GF(p^e) for odd primes p.
//!
//! Elements are encoded as integers in `[0, q)` whose base-p digits are the
//! coefficients of the polynomial representative, lowest degree first. The
//! modulus is the first monic irreducible polynomial in a fixed enumeration
//! order, so a given `(p, e)` always produces the same field, the same
//! encoding and the same primitive root.
//!
//! Fields up to [`DEFAULT_TABLE_THRESHOLD`] elements carry discrete
//! log/exp tables and multiply in O(1); larger ones fall back to schoolbook
//! polynomial multiplication with square-and-multiply exponentiation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::{self, factorize};
use crate::error::{Error, Result};

/// Largest field order that gets log/exp tables by default.
pub const DEFAULT_TABLE_THRESHOLD: u64 = 1 << 22;

/// Largest field order [`Field::new`] accepts by default.
pub const DEFAULT_SIZE_LIMIT: u64 = 1 << 31;

// p >= 3 and q < 2^32 bound the degree well below this
const MAX_DEGREE: usize = 32;

/// An element of some GF(q), encoded as `Σ c_i p^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw encoding without range checking; see [`Field::element`].
    pub const fn new(value: u32) -> Self {
        FieldElement(value)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<FieldElement> for u32 {
    fn from(a: FieldElement) -> u32 {
        a.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// Little-endian coefficients of the monic modulus, length `e + 1`.
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldConfig {
    pub table_threshold: u64,
    pub size_limit: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            table_threshold: DEFAULT_TABLE_THRESHOLD,
            size_limit: DEFAULT_SIZE_LIMIT,
        }
    }
}

/// JSON description of a constructed field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub modulus: Vec<u64>,
    pub primitive_root: u32,
}

#[derive(Debug, Clone)]
struct LogTables {
    /// `exp[k] = g^k` for `k < q - 1`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Field {
    spec: FieldSpec,
    primitive_root: FieldElement,
    tables: Option<LogTables>,
    /// Prime factors of q - 1.
    order_factors: Vec<u64>,
}

/// Builds GF(p^e) with the default configuration.
pub fn build_field(p: u64, e: u32) -> Result<Field> {
    Field::new(p, e)
}

impl Field {
    pub fn new(p: u64, e: u32) -> Result<Field> {
        Field::with_config(p, e, FieldConfig::default())
    }

    pub fn with_config(p: u64, e: u32, config: FieldConfig) -> Result<Field> {
        if p % 2 == 0 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let limit = config.size_limit.min(u32::MAX as u64);
        let q = match arith::checked_pow(p, e) {
            Some(q) if q <= limit => q,
            _ => return Err(Error::FieldTooLarge { p, e, limit }),
        };
        let modulus = find_modulus(p, e as usize);
        let spec = FieldSpec { p, e, q, modulus };
        let order_factors = factorize(q - 1)?.into_iter().map(|(f, _)| f).collect();
        let mut field = Field {
            spec,
            primitive_root: FieldElement::ONE,
            tables: None,
            order_factors,
        };
        field.primitive_root = field.search_primitive_root();
        if q <= config.table_threshold {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn e(&self) -> u32 {
        self.spec.e
    }

    pub fn q(&self) -> u64 {
        self.spec.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.spec.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn primitive_root(&self) -> FieldElement {
        self.primitive_root
    }

    pub fn describe(&self) -> FieldDescription {
        FieldDescription {
            p: self.spec.p,
            e: self.spec.e,
            q: self.spec.q,
            modulus: self.spec.modulus.clone(),
            primitive_root: self.primitive_root.value(),
        }
    }

    /// Range-checked element constructor.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.spec.q {
            Ok(FieldElement(value as u32))
        } else {
            Err(Error::NotAnElement { value, q: self.spec.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.spec.q as u32).map(FieldElement)
    }

    /// The prime-field element `n mod p`.
    pub fn from_int(&self, n: u64) -> FieldElement {
        FieldElement((n % self.spec.p) as u32)
    }

    pub fn bind(&self, a: FieldElement) -> Elem<'_> {
        Elem { field: self, value: a }
    }

    pub fn digits(&self, a: FieldElement) -> Vec<u64> {
        let p = self.spec.p;
        let mut v = a.0 as u64;
        (0..self.spec.e)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> FieldElement {
        let p = self.spec.p;
        let v = digits.iter().rev().fold(0u64, |acc, &d| acc * p + d % p);
        FieldElement(v as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.spec.p as u32;
        if self.spec.e == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= p { s - p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 || y != 0 {
            let s = x % p + y % p;
            out += (if s >= p { s - p } else { s }) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.spec.p as u32;
        if self.spec.e == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 {
            let d = x % p;
            if d != 0 {
                out += (p - d) * place;
            }
            x /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = t.exp.len() as u32;
                let s = t.log[a.index()] + t.log[b.index()];
                FieldElement(t.exp[(if s >= n { s - n } else { s }) as usize])
            }
            None => self.mul_poly(a, b),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => {
                let n = t.exp.len() as u32;
                let l = t.log[a.index()];
                FieldElement(t.exp[((n - l) % n) as usize])
            }
            None => self.pow(a, self.spec.q - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`, with `0^0 = 1`. Nonzero bases reduce the exponent mod `q - 1`.
    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if a.is_zero() {
            return if k == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let order = self.spec.q - 1;
        let k = k % order;
        match &self.tables {
            Some(t) => {
                let l = t.log[a.index()] as u128 * k as u128 % order as u128;
                FieldElement(t.exp[l as usize])
            }
            None => self.pow_poly(a, k),
        }
    }

    /// Discrete logarithm base the primitive root.
    ///
    /// Without tables this is a linear scan over the powers of `g`.
    pub fn log(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroPowerTest);
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[a.index()] as u64);
        }
        let mut cur = FieldElement::ONE;
        for k in 0..self.spec.q - 1 {
            if cur == a {
                return Ok(k);
            }
            cur = self.mul_poly(cur, self.primitive_root);
        }
        unreachable!("primitive root generates the multiplicative group")
    }

    /// `g^k` for the primitive root `g`.
    pub fn exp(&self, k: u64) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.exp[(k % t.exp.len() as u64) as usize]),
            None => self.pow(self.primitive_root, k),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroPowerTest);
        }
        let mut order = self.spec.q - 1;
        for &f in &self.order_factors {
            while order % f == 0 && self.pow(a, order / f) == FieldElement::ONE {
                order /= f;
            }
        }
        Ok(order)
    }

    /// Whether `a` lies in the subgroup of d-th powers of `GF(q)*`.
    pub fn is_dth_power(&self, a: FieldElement, d: u64) -> Result<bool> {
        let order = self.spec.q - 1;
        if d == 0 || order % d != 0 {
            return Err(Error::NotDivisor { d, m: order });
        }
        if a.is_zero() {
            return Err(Error::ZeroPowerTest);
        }
        Ok(match &self.tables {
            Some(t) => t.log[a.index()] as u64 % d == 0,
            None => self.pow(a, order / d) == FieldElement::ONE,
        })
    }

    /// The subfield of order `p^sub_degree`, sorted by encoding.
    pub fn subfield_elements(&self, sub_degree: u32) -> Result<Vec<FieldElement>> {
        if sub_degree == 0 || self.spec.e % sub_degree != 0 {
            return Err(Error::NotDivisor { d: sub_degree as u64, m: self.spec.e as u64 });
        }
        let sub_order = self.spec.p.pow(sub_degree);
        let step = (self.spec.q - 1) / (sub_order - 1);
        let generator = self.exp(step);
        let mut out = Vec::with_capacity(sub_order as usize);
        out.push(FieldElement::ZERO);
        let mut cur = FieldElement::ONE;
        for _ in 0..sub_order - 1 {
            out.push(cur);
            cur = self.mul(cur, generator);
        }
        out.sort_unstable();
        Ok(out)
    }

    fn search_primitive_root(&self) -> FieldElement {
        let order = self.spec.q - 1;
        (1..self.spec.q as u32)
            .map(FieldElement)
            .find(|&a| {
                self.order_factors
                    .iter()
                    .all(|&f| self.pow_poly(a, order / f) != FieldElement::ONE)
            })
            .expect("GF(q)* is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.spec.q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u32; self.spec.q as usize];
        let mut cur = FieldElement::ONE;
        for k in 0..n {
            exp.push(cur.0);
            log[cur.index()] = k as u32;
            cur = self.mul_poly(cur, self.primitive_root);
        }
        LogTables { exp, log }
    }

    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.spec.p;
        let e = self.spec.e as usize;
        if e == 1 {
            return FieldElement((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        let mut da = [0u64; MAX_DEGREE];
        let mut db = [0u64; MAX_DEGREE];
        unpack(a.0 as u64, p, &mut da[..e]);
        unpack(b.0 as u64, p, &mut db[..e]);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let modulus = &self.spec.modulus;
        for k in (e..2 * e - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // x^k = x^(k-e) * x^e and x^e = -(lower terms of the modulus)
            for (i, &m) in modulus[..e].iter().enumerate() {
                prod[k - e + i] = (prod[k - e + i] + (p - m) * c) % p;
            }
        }
        FieldElement(pack(&prod[..e], p) as u32)
    }

    fn pow_poly(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            k >>= 1;
        }
        acc
    }
}

fn unpack(mut v: u64, p: u64, out: &mut [u64]) {
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
}

fn pack(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// First monic irreducible polynomial of degree `e` over GF(p), scanning the
/// non-leading coefficient vectors in increasing base-p value.
fn find_modulus(p: u64, e: usize) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = p.pow(e as u32);
    for v in 0..count {
        let mut f = vec![0u64; e + 1];
        unpack(v, p, &mut f[..e]);
        f[e] = 1;
        if fp_poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Dense polynomials over the prime field, used only to pick the modulus.
mod fp_poly {
    fn trim(mut f: Vec<u64>) -> Vec<u64> {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    fn inv(a: u64, p: u64) -> u64 {
        // Fermat
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p);
        while r.len() > dm {
            let k = r.len() - 1;
            let c = r[k] * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                let idx = k - dm + i;
                r[idx] = (r[idx] + p - c * mi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    /// `x^(p^k) mod m`.
    fn frobenius_x(m: &[u64], p: u64, k: usize) -> Vec<u64> {
        let mut cur = rem(&[0, 1], m, p);
        for _ in 0..k {
            // raise to the p-th power by square-and-multiply
            let (mut base, mut exp, mut acc) = (cur.clone(), p, vec![1u64]);
            while exp > 0 {
                if exp & 1 == 1 {
                    acc = mul_mod(&acc, &base, m, p);
                }
                base = mul_mod(&base, &base, m, p);
                exp >>= 1;
            }
            cur = acc;
        }
        cur
    }

    fn gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a), trim(b));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub_x(f: &[u64], p: u64) -> Vec<u64> {
        let mut out = f.to_vec();
        if out.len() < 2 {
            out.resize(2, 0);
        }
        out[1] = (out[1] + p - 1) % p;
        trim(out)
    }

    /// Rabin's test: `f | x^(p^e) - x` and `gcd(f, x^(p^(e/l)) - x) = 1` for
    /// every prime `l | e`.
    pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
        let e = f.len() - 1;
        if !sub_x(&frobenius_x(f, p, e), p).is_empty() {
            return false;
        }
        let mut n = e;
        let mut l = 2;
        while n > 1 {
            if n % l == 0 {
                while n % l == 0 {
                    n /= l;
                }
                let g = gcd(f.to_vec(), sub_x(&frobenius_x(f, p, e / l), p), p);
                if g.len() > 1 {
                    return false;
                }
            }
            l += 1;
        }
        true
    }
}

/// A field element bound to its field, for operator-style arithmetic.
///
/// The `try_*` methods reject operands from different fields; the operator
/// impls panic on the same condition.
#[derive(Clone, Copy)]
pub struct Elem<'f> {
    field: &'f Field,
    value: FieldElement,
}

impl<'f> Elem<'f> {
    pub fn value(self) -> FieldElement {
        self.value
    }

    pub fn field(self) -> &'f Field {
        self.field
    }

    fn same_field(self, other: Elem<'_>) -> Result<()> {
        let (a, b) = (self.field.spec(), other.field.spec());
        if a.p == b.p && a.e == b.e {
            Ok(())
        } else {
            Err(Error::CrossField { left: a.q, right: b.q })
        }
    }

    pub fn try_add(self, other: Elem<'_>) -> Result<Elem<'f>> {
        self.same_field(other)?;
        Ok(self.field.bind(self.field.add(self.value, other.value)))
    }

    pub fn try_sub(self, other: Elem<'_>) -> Result<Elem<'f>> {
        self.same_field(other)?;
        Ok(self.field.bind(self.field.sub(self.value, other.value)))
    }

    pub fn try_mul(self, other: Elem<'_>) -> Result<Elem<'f>> {
        self.same_field(other)?;
        Ok(self.field.bind(self.field.mul(self.value, other.value)))
    }

    pub fn inv(self) -> Result<Elem<'f>> {
        Ok(self.field.bind(self.field.inv(self.value)?))
    }

    pub fn pow(self, k: u64) -> Elem<'f> {
        self.field.bind(self.field.pow(self.value, k))
    }
}

impl fmt::Debug for Elem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in GF({})", self.value, self.field.q())
    }
}

impl PartialEq for Elem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(*other).is_ok() && self.value == other.value
    }
}

impl<'f> Add for Elem<'f> {
    type Output = Elem<'f>;
    fn add(self, rhs: Self) -> Elem<'f> {
        self.try_add(rhs).expect("operands from different fields")
    }
}

impl<'f> Sub for Elem<'f> {
    type Output = Elem<'f>;
    fn sub(self, rhs: Self) -> Elem<'f> {
        self.try_sub(rhs).expect("operands from different fields")
    }
}

impl<'f> Mul for Elem<'f> {
    type Output = Elem<'f>;
    fn mul(self, rhs: Self) -> Elem<'f> {
        self.try_mul(rhs).expect("operands from different fields")
    }
}

impl<'f> Neg for Elem<'f> {
    type Output = Elem<'f>;
    fn neg(self) -> Elem<'f> {
        self.field.bind(self.field.neg(self.value))
    }
}
