//! Upper and lower bounds on the clique number of `GP(q, d)` and of
//! cyclotomic graphs, each packaged as a [`Certificate`].
//!
//! All calculators are exact integer computations. Throughout, `M` denotes
//! `(q - 1) / d`, the size of the connection set.

use serde::Serialize;

use crate::arith::{binom_nonzero_mod_p, isqrt_u64, odd_prime_power};
use crate::error::{Error, Result};
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Upper,
    Lower,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateInputs {
    pub q: u64,
    pub d: u64,
    pub p: u64,
    pub e: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_order: Option<u64>,
    #[serde(rename = "I", skip_serializing_if = "Option::is_none")]
    pub index_set: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// The subfield of order `p^degree`, which is a clique.
    Subfield { degree: u32, order: u64 },
    Clique { vertices: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub bound: String,
    pub inputs: CertificateInputs,
    pub value: u64,
    pub kind: CertificateKind,
    pub applicable: bool,
    pub reason: String,
    /// False when the calculator fell back to a weaker bound because its own
    /// argument gave nothing.
    pub informative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<Condition>,
    /// `r` in `q = p^(2r+1)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent_r: Option<u32>,
    /// `M mod p|K|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder_r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<&'static str>,
}

impl Certificate {
    fn new(bound: impl Into<String>, inputs: CertificateInputs, value: u64, kind: CertificateKind) -> Certificate {
        Certificate {
            bound: bound.into(),
            inputs,
            value,
            kind,
            applicable: true,
            reason: String::new(),
            informative: true,
            witness: None,
            conditions: Vec::new(),
            exponent_r: None,
            remainder_r: None,
            provenance: None,
        }
    }

    pub fn is_upper(&self) -> bool {
        self.applicable && matches!(self.kind, CertificateKind::Upper | CertificateKind::Exact)
    }

    pub fn is_lower(&self) -> bool {
        self.applicable && matches!(self.kind, CertificateKind::Lower | CertificateKind::Exact)
    }

    pub fn failed_conditions(&self) -> Vec<&Condition> {
        self.conditions.iter().filter(|c| !c.holds).collect()
    }
}

/// Validated `GP(q, d)` parameters.
#[derive(Debug, Clone, Copy)]
struct Params {
    q: u64,
    d: u64,
    p: u64,
    e: u32,
    m: u64,
}

impl Params {
    fn new(q: u64, d: u64) -> Result<Params> {
        let (p, e) = odd_prime_power(q)?;
        if d < 2 {
            return Err(Error::InvalidParameter(format!("d must be at least 2, got {d}")));
        }
        if (q - 1) % (2 * d) != 0 {
            return Err(Error::NotDivisor { d, m: (q - 1) / 2 });
        }
        Ok(Params { q, d, p, e, m: (q - 1) / d })
    }

    fn inputs(&self) -> CertificateInputs {
        CertificateInputs { q: self.q, d: self.d, p: self.p, e: self.e, k_order: None, index_set: None }
    }

    /// `(p^r, r)` for `q = p^(2r+1)`.
    fn odd_exponent(&self) -> Result<(u64, u32)> {
        if self.e % 2 == 0 {
            return Err(Error::SquareOrder(self.q));
        }
        let r = (self.e - 1) / 2;
        Ok((self.p.pow(r), r))
    }
}

/// `⌊√q⌋`.
pub fn trivial_bound(q: u64) -> u64 {
    isqrt_u64(q)
}

pub fn trivial_certificate(q: u64, d: u64) -> Result<Certificate> {
    let params = Params::new(q, d)?;
    let mut cert = Certificate::new("trivial", params.inputs(), trivial_bound(q), CertificateKind::Upper);
    cert.reason = format!("omega <= isqrt({q})");
    Ok(cert)
}

/// For every `n` with `C(n - 1 + M, M) ≢ 0 (mod p)`, a clique of size
/// `N ≥ n` satisfies `(N - 1) n ≤ M`, so `N ≤ max(n - 1, ⌊M/n⌋ + 1)`.
/// Minimizes over admissible `n ∈ [2, ⌊√q⌋ + 1]`.
pub fn thm11_bound(q: u64, d: u64) -> Result<u64> {
    Ok(thm11_certificate(q, d)?.value)
}

pub fn thm11_certificate(q: u64, d: u64) -> Result<Certificate> {
    let params = Params::new(q, d)?;
    let m = params.m;
    let best = (2..=isqrt_u64(q) + 1)
        .filter(|&n| binom_nonzero_mod_p(n - 1, m, params.p))
        .map(|n| ((n - 1).max(m / n + 1), n))
        .min();
    Ok(match best {
        Some((value, n)) => {
            let mut cert = Certificate::new("thm11", params.inputs(), value, CertificateKind::Upper);
            cert.reason = format!("n = {n} admissible: no carries adding {} and {m} in base {}", n - 1, params.p);
            cert
        }
        None => {
            let mut cert = Certificate::new("thm11", params.inputs(), trivial_bound(q), CertificateKind::Upper);
            cert.informative = false;
            cert.reason = "no admissible n; theorem gives no information, trivial bound returned".into();
            cert
        }
    })
}

/// Largest `n` with `n ≤ P` or `n^2 - P(n - 1) + 1 ≤ budget + 2`.
///
/// For `n ≥ P/2` the left side is increasing in `n`, so the second set is
/// an interval ending at the value found by binary search.
fn direction_budget_bound(pr: u64, budget: u64) -> u64 {
    let fits = |n: u64| {
        let (n, pr) = (n as u128, pr as u128);
        n * n + pr + 1 <= budget as u128 + 2 + pr * n
    };
    let mut lo = pr.div_ceil(2).max(1);
    if !fits(lo) {
        return pr;
    }
    let mut hi = lo.max(2);
    while fits(hi) {
        hi *= 2;
    }
    // fits(lo) and !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo.max(pr)
}

/// Bound for non-square `q = p^(2r+1)` from comparing the direction count
/// of `C × C` with the number of available slopes, `M + 2`.
pub fn thm13_bound(q: u64, d: u64) -> Result<u64> {
    Ok(thm13_certificate(q, d)?.value)
}

pub fn thm13_certificate(q: u64, d: u64) -> Result<Certificate> {
    let params = Params::new(q, d)?;
    let (pr, r) = params.odd_exponent()?;
    let value = direction_budget_bound(pr, params.m);
    let mut cert = Certificate::new("thm13", params.inputs(), value, CertificateKind::Upper);
    cert.exponent_r = Some(r);
    cert.reason = format!("largest n with n <= {pr} or n^2 - {pr}(n-1) + 1 <= {} + 2", params.m);
    Ok(cert)
}

/// Same argument for the cyclotomic graph with index set `I`: the slopes of
/// `C × C` lie in `⋃_{k ∈ I-I} g^k H ∪ {0, ∞}`, a set of `|I-I| M + 2`.
pub fn remark32_bound(q: u64, d: u64, index_set: &[u64]) -> Result<u64> {
    Ok(remark32_certificate(q, d, index_set)?.value)
}

pub fn remark32_certificate(q: u64, d: u64, index_set: &[u64]) -> Result<Certificate> {
    let (p, e) = odd_prime_power(q)?;
    if d < 2 || (q - 1) % d != 0 {
        return Err(Error::NotDivisor { d, m: q - 1 });
    }
    if e % 2 == 0 {
        return Err(Error::SquareOrder(q));
    }
    if index_set.is_empty() {
        return Err(Error::InvalidParameter("index set must be nonempty".into()));
    }
    let mut index: Vec<u64> = index_set.iter().map(|i| i % d).collect();
    index.sort_unstable();
    index.dedup();
    // -1 = g^((q-1)/2) lies in the class of index (q-1)/2 mod d
    let shift = ((q - 1) / 2) % d;
    if index.iter().any(|i| index.binary_search(&((i + shift) % d)).is_err()) {
        return Err(Error::NotSymmetric);
    }
    let mut diffs = vec![false; d as usize];
    for &a in &index {
        for &b in &index {
            diffs[((a + d - b) % d) as usize] = true;
        }
    }
    let diff_size = diffs.iter().filter(|&&x| x).count() as u64;
    if diff_size == d {
        return Err(Error::VacuousIndexSet(d));
    }
    let r = (e - 1) / 2;
    let pr = p.pow(r);
    let budget = diff_size * ((q - 1) / d);
    let inputs = CertificateInputs { q, d, p, e, k_order: None, index_set: Some(index) };
    let mut cert = Certificate::new("remark32", inputs, direction_budget_bound(pr, budget), CertificateKind::Upper);
    cert.exponent_r = Some(r);
    cert.provenance = Some("derived-from-proof");
    cert.reason = format!("|I-I| = {diff_size}; largest n with n <= {pr} or n^2 - {pr}(n-1) + 1 <= {budget} + 2");
    Ok(cert)
}

/// Degree `m` of a proper subfield of order `k_order` in GF(p^e).
fn subfield_degree(p: u64, e: u32, k_order: u64) -> Option<u32> {
    (1..e).filter(|m| e % m == 0).find(|&m| p.pow(m) == k_order)
}

/// Checks the three hypotheses under which `ω(GP(q, d)) = |K|`:
/// (i) `d | (q-1)/(|K|-1)`, (ii) `q < d|K|(|K|+1)`,
/// (iii) `M mod p|K| < (p-1)|K|`.
pub fn prop41_certify(q: u64, k_order: u64, d: u64) -> Result<Certificate> {
    let (p, e) = odd_prime_power(q)?;
    let degree = subfield_degree(p, e, k_order).ok_or(Error::NotSubfieldOrder { order: k_order, q })?;
    let inputs = CertificateInputs { q, d, p, e, k_order: Some(k_order), index_set: None };
    let name = format!("prop41[K={k_order}]");
    let mut cert = Certificate::new(name, inputs, k_order, CertificateKind::Exact);
    cert.witness = Some(Witness::Subfield { degree, order: k_order });
    if d < 2 {
        cert.applicable = false;
        cert.kind = CertificateKind::Lower;
        cert.value = 1;
        cert.witness = None;
        cert.reason = format!("d must be at least 2, got {d}");
        return Ok(cert);
    }

    let cofactor = (q - 1) / (k_order - 1);
    let cond_i = cofactor % d == 0;
    let product = d as u128 * k_order as u128 * (k_order as u128 + 1);
    let cond_ii = (q as u128) < product;
    let remainder = ((q - 1) % d == 0).then(|| ((q - 1) / d) % (p * k_order));
    let threshold = (p - 1) * k_order;
    let cond_iii = remainder.is_some_and(|r| r < threshold);
    cert.remainder_r = remainder;
    cert.conditions = vec![
        Condition { name: "i", statement: format!("{d} | {cofactor}"), holds: cond_i },
        Condition {
            name: "ii",
            statement: format!("{q} {} {product}", if cond_ii { "<" } else { ">=" }),
            holds: cond_ii,
        },
        Condition {
            name: "iii",
            statement: match remainder {
                Some(r) => format!("r = {r} {} {threshold}", if cond_iii { "<" } else { ">=" }),
                None => format!("r undefined: {d} does not divide {}", q - 1),
            },
            holds: cond_iii,
        },
    ];
    if cond_i && cond_ii && cond_iii {
        cert.reason = format!("all conditions hold; F_{k_order} is a maximum clique");
        return Ok(cert);
    }
    cert.applicable = false;
    let failed: Vec<&str> = cert.conditions.iter().filter(|c| !c.holds).map(|c| c.name).collect();
    cert.reason = format!("failed condition(s): {}", failed.join(", "));
    if cond_i {
        // the subfield is still a clique
        cert.kind = CertificateKind::Lower;
    } else {
        cert.kind = CertificateKind::Lower;
        cert.value = 1;
        cert.witness = None;
    }
    Ok(cert)
}

/// `ω(GP(p^3, d)) = p` for `d > p` dividing `p^2 + p + 1`, re-derived through
/// [`prop41_certify`] with `K = F_p`.
pub fn thm14_certify(p: u64, d: u64) -> Result<Certificate> {
    let q = p.checked_pow(3).ok_or_else(|| Error::InvalidParameter(format!("p^3 overflows for p = {p}")))?;
    if !matches!(odd_prime_power(q), Ok((base, 3)) if base == p) {
        return Err(Error::NotOddPrime(p));
    }
    if d <= 1 || d <= p {
        return Err(Error::InvalidParameter(format!("need d > p and d > 1, got d = {d}, p = {p}")));
    }
    let norm = p * p + p + 1;
    if norm % d != 0 {
        return Err(Error::NotDivisor { d, m: norm });
    }
    let mut cert = prop41_certify(q, p, d)?;
    cert.bound = "thm14".into();
    if cert.applicable {
        cert.reason = format!("{d} > {p} divides {norm}; {}", cert.reason);
    }
    Ok(cert)
}

/// Largest subfield `F_{p^m}` (proper) that is a clique, i.e. with
/// `d | (q-1)/(p^m-1)`.
pub fn subfield_lower_bound(q: u64, d: u64) -> Result<Option<Certificate>> {
    let params = Params::new(q, d)?;
    let (p, e) = (params.p, params.e);
    let best = (1..e)
        .rev()
        .filter(|m| e % m == 0)
        .find(|&m| ((q - 1) / (p.pow(m) - 1)) % d == 0);
    Ok(best.map(|m| {
        let order = p.pow(m);
        let mut inputs = params.inputs();
        inputs.k_order = Some(order);
        let mut cert = Certificate::new("subfield", inputs, order, CertificateKind::Lower);
        cert.witness = Some(Witness::Subfield { degree: m, order });
        cert.reason = format!("{d} | (q-1)/({order}-1) = {}", (q - 1) / (order - 1));
        cert
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundBundle {
    pub schema: u32,
    pub q: u64,
    pub d: u64,
    pub certificates: Vec<Certificate>,
    pub best_upper: u64,
    pub best_upper_source: String,
    pub best_lower: u64,
    pub best_lower_source: String,
    pub exact: bool,
}

impl BoundBundle {
    pub fn get(&self, bound: &str) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.bound == bound)
    }
}

/// Evaluates every applicable calculator for `GP(q, d)`.
pub fn best_bounds(q: u64, d: u64) -> Result<BoundBundle> {
    let params = Params::new(q, d)?;
    let mut certs = vec![trivial_certificate(q, d)?, thm11_certificate(q, d)?];
    if params.e % 2 == 1 {
        certs.push(thm13_certificate(q, d)?);
    }
    for m in (1..params.e).filter(|m| params.e % m == 0) {
        certs.push(prop41_certify(q, params.p.pow(m), d)?);
    }
    if let Some(cert) = subfield_lower_bound(q, d)? {
        certs.push(cert);
    }
    let mut edge = Certificate::new("edge", params.inputs(), 2, CertificateKind::Lower);
    edge.reason = "the connection set is nonempty".into();
    edge.witness = Some(Witness::Clique { vertices: vec![0, 1] });
    certs.push(edge);
    certs.sort_by(|a, b| a.bound.cmp(&b.bound));

    let upper = certs
        .iter()
        .filter(|c| c.is_upper())
        .min_by_key(|c| c.value)
        .expect("trivial bound always present");
    let lower = certs
        .iter()
        .filter(|c| c.is_lower())
        .max_by_key(|c| c.value)
        .expect("edge bound always present");
    let (best_upper, best_upper_source) = (upper.value, upper.bound.clone());
    let (best_lower, best_lower_source) = (lower.value, lower.bound.clone());
    Ok(BoundBundle {
        schema: SCHEMA_VERSION,
        q,
        d,
        certificates: certs,
        best_upper,
        best_upper_source,
        best_lower,
        best_lower_source,
        exact: best_upper == best_lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::isqrt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_examples() {
        assert_eq!(trivial_bound(81), 9);
        assert_eq!(trivial_bound(27), 5);
        assert_eq!(trivial_bound(15625), 125);
    }

    #[test]
    fn thm11_examples() {
        assert_eq!(thm11_bound(13, 2).unwrap(), 3);
        assert_eq!(thm11_bound(27, 13).unwrap(), 3);
        assert_eq!(thm11_bound(9, 2).unwrap(), 3);
        assert!(thm11_bound(13, 1).is_err());
        assert!(thm11_bound(13, 4).is_err());
        assert!(thm11_bound(15, 7).is_err());
    }

    #[test]
    fn thm13_examples() {
        assert_eq!(thm13_bound(27, 13).unwrap(), 3);
        assert_eq!(thm13_bound(243, 11).unwrap(), 10);
        assert_eq!(thm13_bound(243, 121).unwrap(), 9);
        assert_eq!(thm13_bound(81, 2).unwrap_err(), Error::SquareOrder(81));
        assert_eq!(thm13_certificate(243, 11).unwrap().exponent_r, Some(2));
    }

    /// The quadratic solved in closed form: `max(P, ⌊(P + √((P-2)^2 + 4M))/2⌋)`.
    fn closed_form(pr: u64, m: u64) -> u64 {
        let gap = (pr as i128 - 2).unsigned_abs();
        let root = isqrt(gap * gap + 4 * m as u128);
        (((pr as u128 + root) / 2) as u64).max(pr)
    }

    fn closed_form_f64(pr: u64, m: u64) -> u64 {
        let pr_f = pr as f64;
        let v = pr_f / 2.0 + (m as f64 + (pr_f / 2.0 - 1.0).powi(2)).sqrt();
        (v.floor() as u64).max(pr)
    }

    #[test]
    fn thm13_matches_closed_form_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let cases: Vec<(u64, u32)> = vec![(3, 1), (3, 3), (3, 5), (3, 7), (3, 9), (5, 1), (5, 3), (5, 5), (7, 3), (11, 3), (13, 1), (101, 1), (1009, 1)];
        let mut checked = 0;
        while checked < 1000 {
            let (p, e) = cases[rng.gen_range(0..cases.len())];
            let q = p.pow(e);
            let half = (q - 1) / 2;
            let d = rng.gen_range(1..=half.min(10_000));
            if half % d != 0 || d < 2 {
                continue;
            }
            let pr = p.pow((e - 1) / 2);
            let m = (q - 1) / d;
            let value = thm13_bound(q, d).unwrap();
            assert_eq!(value, closed_form(pr, m), "q={q} d={d}");
            assert_eq!(value, closed_form_f64(pr, m), "q={q} d={d}");
            checked += 1;
        }
    }

    #[test]
    fn remark32_examples() {
        assert_eq!(remark32_bound(27, 13, &[0]).unwrap(), 3);
        assert_eq!(remark32_bound(27, 13, &[0, 1]).unwrap(), 4);
        assert_eq!(remark32_bound(243, 11, &[0]).unwrap(), 10);
        assert_eq!(remark32_bound(243, 11, &[0]).unwrap(), thm13_bound(243, 11).unwrap());
        assert_eq!(remark32_bound(27, 2, &[0]).unwrap_err(), Error::NotSymmetric);
        assert_eq!(remark32_bound(27, 13, &(0..13).collect::<Vec<_>>()).unwrap_err(), Error::VacuousIndexSet(13));
        assert_eq!(remark32_bound(81, 5, &[0]).unwrap_err(), Error::SquareOrder(81));
        let c = remark32_certificate(27, 13, &[13, 1]).unwrap();
        assert_eq!(c.inputs.index_set, Some(vec![0, 1]));
        assert_eq!(c.provenance, Some("derived-from-proof"));
    }

    #[test]
    fn prop41_examples() {
        let c = prop41_certify(81, 3, 20).unwrap();
        assert!(c.applicable);
        assert_eq!((c.kind, c.value), (CertificateKind::Exact, 3));

        let c = prop41_certify(81, 3, 10).unwrap();
        assert!(!c.applicable);
        assert_eq!(c.remainder_r, Some(8));
        let failed = c.failed_conditions();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, "iii");
        assert_eq!(failed[0].statement, "r = 8 >= 6");

        let c = prop41_certify(343, 7, 19).unwrap();
        assert!(c.applicable);
        assert_eq!((c.value, c.remainder_r), (7, Some(18)));

        let c = prop41_certify(15625, 25, 3).unwrap();
        assert!(!c.applicable);
        let names: Vec<_> = c.conditions.iter().map(|c| (c.name, c.holds)).collect();
        assert_eq!(names, vec![("i", true), ("ii", false), ("iii", true)]);
        assert_eq!(c.conditions[1].statement, "15625 >= 1950");
        assert_eq!(c.conditions[2].statement, "r = 83 < 100");

        assert_eq!(prop41_certify(81, 81, 2).unwrap_err(), Error::NotSubfieldOrder { order: 81, q: 81 });
        assert_eq!(prop41_certify(81, 27, 2).unwrap_err(), Error::NotSubfieldOrder { order: 27, q: 81 });
        assert!(!prop41_certify(81, 3, 1).unwrap().applicable);
    }

    #[test]
    fn thm14_examples() {
        let c = thm14_certify(3, 13).unwrap();
        assert!(c.applicable);
        assert_eq!((c.kind, c.value, c.bound.as_str()), (CertificateKind::Exact, 3, "thm14"));
        let c = thm14_certify(11, 19).unwrap();
        assert!(c.applicable);
        assert_eq!(c.value, 11);
        assert!(thm14_certify(3, 1).is_err());
        assert!(thm14_certify(7, 3).is_err());
        assert!(thm14_certify(5, 7).is_err());
        assert!(thm14_certify(9, 13).is_err());
    }

    #[test]
    fn thm14_agrees_with_prop41() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let norm = p * p + p + 1;
            for d in (p + 1..=norm).filter(|d| norm % d == 0) {
                let a = thm14_certify(p, d).unwrap();
                let b = prop41_certify(p * p * p, p, d).unwrap();
                assert!(a.applicable && b.applicable, "p={p} d={d}");
                assert_eq!((a.value, a.kind), (b.value, b.kind));
                assert_eq!(a.conditions, b.conditions);
            }
        }
    }

    #[test]
    fn best_bounds_examples() {
        let b = best_bounds(27, 13).unwrap();
        assert!(b.exact);
        assert_eq!((b.best_lower, b.best_upper), (3, 3));
        assert_eq!(b.get("thm13").unwrap().value, 3);
        assert_eq!(b.get("thm11").unwrap().value, 3);

        let b = best_bounds(81, 10).unwrap();
        assert!(b.exact);
        assert_eq!(b.best_upper, 9);
        assert_eq!(b.best_lower_source, "subfield");

        let b = best_bounds(15625, 3).unwrap();
        assert!(b.exact);
        assert_eq!(b.best_lower, 125);
        assert_eq!(b.best_upper, 125);

        let names: Vec<_> = b.certificates.iter().map(|c| c.bound.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn certificate_json_shape() {
        let c = prop41_certify(81, 3, 20).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["bound"], "prop41[K=3]");
        assert_eq!(v["kind"], "exact");
        assert_eq!(v["inputs"]["k_order"], 3);
        assert_eq!(v["witness"]["type"], "subfield");
        assert!(v.get("exponent_r").is_none());
    }
}
