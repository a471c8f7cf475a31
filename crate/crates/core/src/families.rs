//! Explicit families of generalized Paley graphs whose clique number is a
//! subfield order, and the two instances showing that the hypotheses of the
//! subfield criterion cannot be dropped.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{base_digits, checked_pow, gcd, is_prime};
use crate::bounds::{best_bounds, prop41_certify, thm14_certify, BoundBundle, Certificate};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{build_paley_graph, is_clique, max_clique, DEFAULT_TIME_LIMIT};

/// Largest `q` for instances that are only certified.
pub const DEFAULT_CERTIFY_LIMIT: u64 = 1_000_000;
/// Largest `q` for instances that also run an exact clique search.
pub const DEFAULT_SEARCH_LIMIT: u64 = 2500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    Ex42,
    Ex43,
    Ex44,
    Ex45,
    Ex46,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub parameters: BTreeMap<&'static str, u64>,
    pub q: u64,
    pub d: u64,
    pub k_order: u64,
    pub certificate: Certificate,
    pub notes: Vec<String>,
}

impl FamilyInstance {
    /// Recomputes the certificate from `(q, k_order, d)` alone and compares.
    pub fn revalidate(&self) -> Result<bool> {
        let fresh = prop41_certify(self.q, self.k_order, self.d)?;
        Ok(fresh.applicable
            && fresh.value == self.certificate.value
            && fresh.conditions == self.certificate.conditions
            && self.certificate.applicable)
    }
}

fn prime_power_within(p: u64, exp: u32, limit: u64) -> Result<u64> {
    match checked_pow(p, exp) {
        Some(q) if q <= limit => Ok(q),
        _ => Err(Error::FieldTooLarge { p, e: exp, limit }),
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// `q = p^{3m}`, `K = F_{p^m}`, `d = (p^{2m} + p^m + 1)/3` for `p ≡ 1 (mod 3)`.
pub fn family_ex42(p: u64, m: u32) -> Result<FamilyInstance> {
    family_ex42_with_limit(p, m, DEFAULT_CERTIFY_LIMIT)
}

pub fn family_ex42_with_limit(p: u64, m: u32, limit: u64) -> Result<FamilyInstance> {
    require_odd_prime(p)?;
    if p % 3 != 1 {
        return Err(Error::InvalidParameter(format!("need p = 1 mod 3, got p = {p}")));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = prime_power_within(p, 3 * m, limit)?;
    let k = p.pow(m);
    let d = (k * k + k + 1) / 3;
    let certificate = prop41_certify(q, k, d)?;
    let notes = vec![format!("(q-1)/d = {} = 3(|K|-1)", (q - 1) / d)];
    Ok(FamilyInstance {
        family: FamilyId::Ex42,
        parameters: BTreeMap::from([("p", p), ("m", m as u64)]),
        q,
        d,
        k_order: k,
        certificate,
        notes,
    })
}

/// `q = p^{st}`, `K = F_{p^s}`, `d = (q-1)(p-1)/((p^s-1)(p^t-1))` for coprime
/// `s > t ≥ 1`. Both `K` and `F_{p^t}` are cliques.
pub fn family_ex43(p: u64, s: u32, t: u32) -> Result<FamilyInstance> {
    family_ex43_with_limit(p, s, t, DEFAULT_CERTIFY_LIMIT)
}

pub fn family_ex43_with_limit(p: u64, s: u32, t: u32, limit: u64) -> Result<FamilyInstance> {
    require_odd_prime(p)?;
    if t == 0 || s <= t || gcd(s as u64, t as u64) != 1 {
        return Err(Error::InvalidParameter(format!("need coprime s > t >= 1, got s = {s}, t = {t}")));
    }
    let q = prime_power_within(p, s * t, limit)?;
    let (ks, kt) = (p.pow(s), p.pow(t));
    let num = (q as u128 - 1) * (p as u128 - 1);
    let den = (ks as u128 - 1) * (kt as u128 - 1);
    if num % den != 0 {
        return Err(Error::NotDivisor { d: den as u64, m: num as u64 });
    }
    let d = (num / den) as u64;
    if d < 2 {
        return Err(Error::InvalidParameter(format!("degenerate instance: d = {d}")));
    }
    let certificate = prop41_certify(q, ks, d)?;
    let small_is_clique = ((q - 1) / (kt - 1)) % d == 0;
    let notes = vec![
        format!("F_{kt} is {}a clique", if small_is_clique { "" } else { "not " }),
        format!("r = {}", certificate.remainder_r.map_or("undefined".into(), |r| r.to_string())),
    ];
    Ok(FamilyInstance {
        family: FamilyId::Ex43,
        parameters: BTreeMap::from([("p", p), ("s", s as u64), ("t", t as u64)]),
        q,
        d,
        k_order: ks,
        certificate,
        notes,
    })
}

/// `(4x^2 + 3)(x^2 + x + 1) = p^2 + p + 1` with `p = 2x^2 + x + 1`, evaluated
/// exactly.
pub fn ex44_identity_holds(x: u64) -> bool {
    let x = x as u128;
    let p = 2 * x * x + x + 1;
    (4 * x * x + 3) * (x * x + x + 1) == p * p + p + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Ex44Outcome {
    Instance(FamilyInstance),
    Rejected { x: u64, p: u64, reason: String },
}

/// `p = 2x^2 + x + 1`, `d = 4x^2 + 3`, `q = p^3` when `p` is prime.
pub fn family_ex44(x: u64) -> Result<Ex44Outcome> {
    family_ex44_with_limit(x, DEFAULT_CERTIFY_LIMIT)
}

pub fn family_ex44_with_limit(x: u64, limit: u64) -> Result<Ex44Outcome> {
    if x == 0 {
        return Err(Error::InvalidParameter("x must be at least 1".into()));
    }
    let p = x
        .checked_mul(x)
        .and_then(|xx| xx.checked_mul(2))
        .and_then(|v| v.checked_add(x + 1))
        .ok_or_else(|| Error::InvalidParameter(format!("x = {x} too large")))?;
    if !ex44_identity_holds(x) {
        return Err(Error::InvalidParameter(format!("identity fails at x = {x}")));
    }
    if !is_prime(p) {
        return Ok(Ex44Outcome::Rejected { x, p, reason: format!("p = {p} is composite") });
    }
    let q = prime_power_within(p, 3, limit)?;
    let d = 4 * x * x + 3;
    let certificate = thm14_certify(p, d)?;
    let notes = vec![format!("d = {d} > p = {p}; d * (x^2+x+1) = {}", p * p + p + 1)];
    Ok(Ex44Outcome::Instance(FamilyInstance {
        family: FamilyId::Ex44,
        parameters: BTreeMap::from([("x", x)]),
        q,
        d,
        k_order: p,
        certificate,
        notes,
    }))
}

/// `(x, p, d)` for every `x` in the range with `p = 2x^2 + x + 1` prime.
pub fn ex44_hits(xs: std::ops::RangeInclusive<u64>) -> Vec<(u64, u64, u64)> {
    xs.filter(|&x| x >= 1)
        .map(|x| (x, 2 * x * x + x + 1, 4 * x * x + 3))
        .filter(|&(_, p, _)| is_prime(p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ex45Report {
    pub p: u64,
    pub q: u64,
    /// `2(p^2 + 1)`: clique number `p`.
    pub d_half: u64,
    /// `p^2 + 1`: clique number `p^2`.
    pub d_full: u64,
    pub half_certificate: Certificate,
    pub full_bundle: BoundBundle,
    pub full_prop41: Certificate,
    pub failed_condition: String,
    pub remainder_r: u64,
    pub threshold: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_half_search: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_full_search: Option<u64>,
}

impl Ex45Report {
    pub fn consistent(&self) -> bool {
        let searches_agree = self.omega_half_search.is_none_or(|w| w == self.p)
            && self.omega_full_search.is_none_or(|w| w == self.p * self.p);
        self.half_certificate.applicable
            && self.half_certificate.value == self.p
            && self.full_bundle.exact
            && self.full_bundle.best_lower == self.p * self.p
            && !self.full_prop41.applicable
            && self.failed_condition == "iii"
            && searches_agree
    }
}

/// `q = p^4`: the criterion gives `ω(GP(q, 2(p^2+1))) = p`, while
/// `GP(q, p^2+1)` has the clique `F_{p^2}` and fails only `r < (p-1)|K|`.
///
/// With `search`, both clique numbers are also computed exactly (needs
/// `q ≤` [`DEFAULT_SEARCH_LIMIT`]).
pub fn counterexample_ex45(p: u64, search: bool) -> Result<Ex45Report> {
    require_odd_prime(p)?;
    let limit = if search { DEFAULT_SEARCH_LIMIT } else { DEFAULT_CERTIFY_LIMIT };
    let q = prime_power_within(p, 4, limit)?;
    let d_full = p * p + 1;
    let d_half = 2 * d_full;
    let half_certificate = prop41_certify(q, p, d_half)?;
    let full_bundle = best_bounds(q, d_full)?;
    let full_prop41 = prop41_certify(q, p, d_full)?;
    let failed: Vec<&str> = full_prop41.failed_conditions().iter().map(|c| c.name).collect();
    let (omega_half_search, omega_full_search) = if search {
        let field = Arc::new(Field::new(p, 4)?);
        let omega = |d| -> Result<u64> {
            let res = max_clique(&build_paley_graph(field.clone(), d)?, Some(DEFAULT_TIME_LIMIT));
            if res.optimal {
                Ok(res.size as u64)
            } else {
                Err(Error::Timeout)
            }
        };
        (Some(omega(d_half)?), Some(omega(d_full)?))
    } else {
        (None, None)
    };
    Ok(Ex45Report {
        p,
        q,
        d_half,
        d_full,
        remainder_r: full_prop41.remainder_r.unwrap_or(0),
        threshold: (p - 1) * p,
        failed_condition: failed.join(","),
        half_certificate,
        full_bundle,
        full_prop41,
        omega_half_search,
        omega_full_search,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ex46Report {
    pub q: u64,
    pub d: u64,
    pub k_order: u64,
    pub certificate: Certificate,
    pub failed_condition: String,
    /// `(q-1)/d` in base 5, most significant digit first.
    pub m_digits: Vec<u64>,
    /// `F_125` checked through the graph's connection set.
    pub subfield_clique_by_graph: bool,
    /// `F_125` checked through cube tests on all differences.
    pub subfield_clique_by_powers: bool,
    pub bundle: BoundBundle,
    pub omega: u64,
}

impl Ex46Report {
    pub fn consistent(&self) -> bool {
        !self.certificate.applicable
            && self.failed_condition == "ii"
            && self.subfield_clique_by_graph
            && self.subfield_clique_by_powers
            && self.bundle.exact
            && self.omega == 125
    }
}

/// `q = 5^6`, `d = 3`, `K = F_25`: only `q < d|K|(|K|+1)` fails, and the
/// clique number is 125, not 25.
pub fn counterexample_ex46() -> Result<Ex46Report> {
    let (p, e, d, k_order) = (5u64, 6u32, 3u64, 25u64);
    let field = Arc::new(Field::new(p, e)?);
    let q = field.q();
    let certificate = prop41_certify(q, k_order, d)?;
    let failed: Vec<&str> = certificate.failed_conditions().iter().map(|c| c.name).collect();
    let f125 = field.subfield_elements(3)?;
    let graph = build_paley_graph(field.clone(), d)?;
    let by_graph = is_clique(&graph, &f125);
    let mut by_powers = true;
    for (i, &a) in f125.iter().enumerate() {
        for &b in &f125[i + 1..] {
            by_powers &= field.is_dth_power(field.sub(b, a), d)?;
        }
    }
    let bundle = best_bounds(q, d)?;
    let omega = if bundle.exact { bundle.best_upper } else { 0 };
    Ok(Ex46Report {
        q,
        d,
        k_order,
        failed_condition: failed.join(","),
        certificate,
        m_digits: base_digits((q - 1) / d, p).most_significant_first(),
        subfield_clique_by_graph: by_graph,
        subfield_clique_by_powers: by_powers,
        bundle,
        omega,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ex42_examples() {
        let inst = family_ex42(7, 1).unwrap();
        assert_eq!((inst.q, inst.d, inst.k_order, inst.certificate.value), (343, 19, 7, 7));
        assert!(inst.certificate.applicable);
        assert!(inst.revalidate().unwrap());
        let inst = family_ex42(13, 1).unwrap();
        assert_eq!((inst.q, inst.d, inst.certificate.value), (2197, 61, 13));
        assert!(inst.revalidate().unwrap());
        assert!(family_ex42(5, 1).is_err());
        assert!(family_ex42(13, 2).is_err());
        let inst = family_ex42(7, 2).unwrap();
        assert_eq!((inst.q, inst.d), (117_649, 817));
        assert!(inst.revalidate().unwrap());
    }

    #[test]
    fn ex43_examples() {
        let inst = family_ex43(3, 3, 2).unwrap();
        assert_eq!((inst.q, inst.d, inst.k_order), (729, 7, 27));
        assert_eq!(inst.certificate.remainder_r, Some(23));
        assert!(inst.revalidate().unwrap());
        assert!(inst.notes[0].starts_with("F_9 is a clique"));

        assert!(family_ex43(3, 2, 1).is_err());
        assert!(family_ex43(3, 4, 2).is_err());
        assert!(family_ex43(3, 1, 2).is_err());

        let inst = family_ex43(5, 3, 2).unwrap();
        assert_eq!((inst.q, inst.d, inst.certificate.value), (15625, 21, 125));
        assert!(inst.revalidate().unwrap());
    }

    #[test]
    fn ex43_construction_invariants() {
        for &(p, s, t) in &[(3u64, 2u32, 1u32), (3, 3, 1), (3, 3, 2), (3, 4, 1), (3, 4, 3), (3, 5, 2), (5, 2, 1), (5, 3, 1), (7, 2, 1), (7, 3, 2), (11, 2, 1)] {
            let Ok(inst) = family_ex43(p, s, t) else { continue };
            let (q, k, d) = (inst.q as u128, inst.k_order as u128, inst.d as u128);
            assert_eq!(((q - 1) / (k - 1)) % d, 0);
            assert!(q < d * k * (k + 1));
            assert!(inst.revalidate().unwrap(), "{p} {s} {t}");
        }
    }

    #[test]
    fn ex44_examples() {
        let Ex44Outcome::Instance(inst) = family_ex44(2).unwrap() else { panic!() };
        assert_eq!((inst.k_order, inst.d, inst.q, inst.certificate.value), (11, 19, 1331, 11));
        assert!(inst.revalidate().unwrap());
        assert_eq!(
            family_ex44(1).unwrap(),
            Ex44Outcome::Rejected { x: 1, p: 4, reason: "p = 4 is composite".into() }
        );
        let Ex44Outcome::Instance(inst) = family_ex44(4).unwrap() else { panic!() };
        assert_eq!((inst.k_order, inst.d, inst.q, inst.certificate.value), (37, 67, 50653, 37));
        assert_eq!(ex44_hits(1..=4), vec![(2, 11, 19), (4, 37, 67)]);
    }

    #[test]
    fn ex44_identity_up_to_a_million() {
        assert!((1..=1_000_000).all(ex44_identity_holds));
    }

    #[test]
    fn ex45_reports() {
        let r = counterexample_ex45(3, true).unwrap();
        assert!(r.consistent(), "{r:?}");
        assert_eq!((r.remainder_r, r.threshold, r.failed_condition.as_str()), (8, 6, "iii"));
        assert_eq!((r.omega_half_search, r.omega_full_search), (Some(3), Some(9)));
        let r = counterexample_ex45(5, false).unwrap();
        assert!(r.consistent());
        assert_eq!((r.d_half, r.d_full, r.full_bundle.best_upper), (52, 26, 25));
        assert_eq!((r.remainder_r, r.threshold), (24, 20));
    }

    #[test]
    fn ex46_report() {
        let r = counterexample_ex46().unwrap();
        assert!(r.consistent(), "{r:?}");
        assert_eq!(r.m_digits, vec![1, 3, 1, 3, 1, 3]);
        assert_eq!(r.certificate.remainder_r, Some(83));
    }

    #[test]
    fn instance_json_embeds_certificate() {
        let inst = family_ex42(7, 1).unwrap();
        let v = serde_json::to_value(&inst).unwrap();
        assert_eq!(v["family"], "ex42");
        assert_eq!(v["certificate"]["kind"], "exact");
        assert_eq!(v["parameters"]["p"], 7);
    }
}
