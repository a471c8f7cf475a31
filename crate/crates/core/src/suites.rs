//! Batch invariant sweeps behind `paley verify`.
//!
//! Each suite runs a list of named checks. A check counts its cases and its
//! violations; a violation is a case where a computed object contradicts a
//! proven property, never a precondition failure.

use std::str::FromStr;
use std::sync::Arc;
use std::thread;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{base_digits, binom_nonzero_mod_p, divisors, isqrt, odd_prime_power};
use crate::bounds::{best_bounds, prop41_certify, thm13_bound, thm14_certify};
use crate::directions::{
    cor15_check, cor23_check, cor24_check, direction_set, direction_set_all_pairs, prime_field_bound,
    thm16_lower_bound, PointSet,
};
use crate::error::{Error, Result};
use crate::families::{counterexample_ex45, counterexample_ex46, ex44_identity_holds, family_ex42, family_ex43, family_ex44, Ex44Outcome};
use crate::field::{Field, FieldElement};
use crate::graph::{build_paley_graph, is_clique, max_clique, DEFAULT_TIME_LIMIT};
use crate::poly::{Poly, PolyRing};
use crate::redei::{divides_xq_minus_x, pth_power_decompose, redei_slice, szonyi_quotient};
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Field,
    Arith,
    Graph,
    Directions,
    Redei,
    Bounds,
    Families,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 7] =
        [Suite::Field, Suite::Arith, Suite::Graph, Suite::Directions, Suite::Redei, Suite::Bounds, Suite::Families];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Field => "field",
            Suite::Arith => "arith",
            Suite::Graph => "graph",
            Suite::Directions => "directions",
            Suite::Redei => "redei",
            Suite::Bounds => "bounds",
            Suite::Families => "families",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::MODULES
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub exhaustive: bool,
    /// Restricts field-parametrized checks to this order.
    pub q: Option<u64>,
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, exhaustive: false, q: None, workers: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: u64,
    pub violations: u64,
    pub passed: bool,
    /// First violation, if any.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: &'static str,
    pub seed: u64,
    pub exhaustive: bool,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

/// Tally for one check.
#[derive(Default)]
struct Tally {
    cases: u64,
    violations: u64,
    detail: String,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if self.violations == 0 {
                self.detail = what();
            }
            self.violations += 1;
        }
    }

    fn merge(&mut self, other: Tally) {
        if self.violations == 0 && other.violations > 0 {
            self.detail = other.detail;
        }
        self.cases += other.cases;
        self.violations += other.violations;
    }

    fn finish(self, suite: &'static str, name: &'static str) -> CheckResult {
        CheckResult { suite, name, cases: self.cases, violations: self.violations, passed: self.violations == 0, detail: self.detail }
    }
}

/// Maps `f` over `items` on up to `workers` threads, preserving order.
fn sharded<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                s.spawn(move || part.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn random_subset(rng: &mut ChaCha8Rng, q: u64, k: usize) -> Vec<FieldElement> {
    let mut v: Vec<FieldElement> = sample(rng, q as usize, k).into_iter().map(|i| FieldElement::new(i as u32)).collect();
    v.sort_unstable();
    v
}

/// All subsets of `0..q` with size in `sizes`, as sorted element lists.
fn subsets(q: u64, sizes: std::ops::RangeInclusive<usize>) -> Vec<Vec<FieldElement>> {
    fn rec(q: u32, start: u32, k: usize, cur: &mut Vec<FieldElement>, out: &mut Vec<Vec<FieldElement>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..q {
            cur.push(FieldElement::new(v));
            rec(q, v + 1, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in sizes {
        rec(q as u32, 0, k, &mut Vec::new(), &mut out);
    }
    out
}

fn field_for(q: u64) -> Result<Field> {
    let (p, e) = odd_prime_power(q)?;
    Field::new(p, e)
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::MODULES {
                all.extend(run_suite(s, config)?.checks);
            }
            all
        }
        Suite::Field => field_suite(config)?,
        Suite::Arith => arith_suite(config)?,
        Suite::Graph => graph_suite(config)?,
        Suite::Directions => directions_suite(config)?,
        Suite::Redei => redei_suite(config)?,
        Suite::Bounds => bounds_suite(config)?,
        Suite::Families => families_suite(config)?,
    };
    Ok(SuiteReport {
        schema: SCHEMA_VERSION,
        suite: suite.name(),
        seed: config.seed,
        exhaustive: config.exhaustive,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn field_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "field";
    let orders = config.q.map_or(vec![9, 25, 27, 49, 81, 125, 243, 343, 729], |q| vec![q]);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (mut axioms, mut dth, mut subgroup, mut minus_one) = (Tally::default(), Tally::default(), Tally::default(), Tally::default());
    for &q in &orders {
        let f = field_for(q)?;
        let els: Vec<FieldElement> = f.elements().collect();
        let triple = |a: FieldElement, b: FieldElement, c: FieldElement, t: &mut Tally| {
            let ok = f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
                && f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
                && f.add(a, b) == f.add(b, a)
                && f.mul(a, b) == f.mul(b, a)
                && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
            t.record(ok, || format!("GF({q}): axioms fail at ({a:?}, {b:?}, {c:?})"));
        };
        if q <= 81 && (config.exhaustive || q <= 27) {
            for &a in &els {
                for &b in &els {
                    for &c in &els {
                        triple(a, b, c, &mut axioms);
                    }
                }
            }
        } else {
            for _ in 0..20_000 {
                let [a, b, c] = [0; 3].map(|_| FieldElement::new(rng.gen_range(0..q as u32)));
                triple(a, b, c, &mut axioms);
            }
        }
        for &a in &els {
            let ok = f.pow(a, q) == a && (a.is_zero() || f.pow(a, q - 1) == FieldElement::ONE);
            axioms.record(ok, || format!("GF({q}): Frobenius fails at {a:?}"));
        }

        if q > 729 {
            continue;
        }
        for d in divisors(q - 1)? {
            let mut count = 0u64;
            for &a in &els[1..] {
                let by_log = f.log(a)? % d == 0;
                let power = f.is_dth_power(a, d)?;
                count += power as u64;
                dth.record(by_log == power, || format!("GF({q}), d = {d}: disagreement at {a:?}"));
            }
            let powers: Vec<FieldElement> = els[1..].iter().copied().filter(|&a| f.is_dth_power(a, d).unwrap()).collect();
            let closed = (0..50).all(|_| {
                let a = powers[rng.gen_range(0..powers.len())];
                let b = powers[rng.gen_range(0..powers.len())];
                f.is_dth_power(f.mul(a, b), d).unwrap()
            });
            subgroup.record(count == (q - 1) / d && closed, || format!("GF({q}), d = {d}: {count} powers"));
            if (q - 1) % (2 * d) == 0 {
                let m1 = f.neg(FieldElement::ONE);
                minus_one.record(f.is_dth_power(m1, d)?, || format!("GF({q}): -1 not a {d}-th power"));
            }
        }
    }
    Ok(vec![
        axioms.finish(S, "axioms_and_frobenius"),
        dth.finish(S, "dth_power_matches_log"),
        subgroup.finish(S, "dth_powers_form_subgroup"),
        minus_one.finish(S, "minus_one_is_dth_power"),
    ])
}

/// `C(n, k) mod p` as a product of base-`p` digit binomials.
fn lucas_binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut table = vec![vec![0u64; p as usize]; p as usize];
    for i in 0..p as usize {
        table[i][0] = 1;
        for j in 1..=i {
            table[i][j] = (table[i - 1][j - 1] + if j < i { table[i - 1][j] } else { 0 }) % p;
        }
    }
    let mut acc = 1;
    while n > 0 || k > 0 {
        let (ni, ki) = ((n % p) as usize, (k % p) as usize);
        if ki > ni {
            return 0;
        }
        acc = acc * table[ni][ki] % p;
        n /= p;
        k /= p;
    }
    acc
}

fn arith_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "arith";
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut kummer = Tally::default();
    let step = if config.exhaustive { 1 } else { 7 };
    for p in [3u64, 5, 7, 13] {
        for a in 0..=3000u64 {
            for b in (0..=3000u64).step_by(step) {
                let oracle = lucas_binom_mod(a + b, b, p) != 0;
                kummer.record(binom_nonzero_mod_p(a, b, p) == oracle, || format!("a = {a}, b = {b}, p = {p}"));
            }
        }
    }
    let mut roots = Tally::default();
    let samples = if config.exhaustive { 1_000_000 } else { 100_000 };
    for _ in 0..samples {
        let m: u128 = rng.gen_range(0..1u128 << 80);
        let s = isqrt(m);
        roots.record(s * s <= m && m < (s + 1) * (s + 1), || format!("isqrt({m}) = {s}"));
    }
    let mut digits = Tally::default();
    for _ in 0..10_000 {
        let m: u64 = rng.gen();
        let p = [3u64, 5, 7, 11, 13, 1009][rng.gen_range(0..6)];
        let v = base_digits(m, p);
        digits.record(v.value() == m as u128 && v.digits().iter().all(|&d| d < p), || format!("{m} base {p}"));
    }
    Ok(vec![kummer.finish(S, "kummer_matches_lucas"), roots.finish(S, "isqrt_brackets"), digits.finish(S, "digit_round_trip")])
}

/// Maximum clique size by Bron–Kerbosch with pivoting on a boolean matrix
/// built from d-th power tests.
fn bron_kerbosch_omega(field: &Field, d: u64) -> usize {
    let q = field.q() as usize;
    let els: Vec<FieldElement> = field.elements().collect();
    let adj: Vec<Vec<bool>> = els
        .iter()
        .map(|&u| els.iter().map(|&v| u != v && field.is_dth_power(field.sub(u, v), d).unwrap()).collect())
        .collect();
    fn bk(adj: &[Vec<bool>], r: usize, p: Vec<usize>, x: Vec<usize>, best: &mut usize) {
        if p.is_empty() && x.is_empty() {
            *best = (*best).max(r);
            return;
        }
        if r + p.len() <= *best {
            return;
        }
        let pivot = p.iter().chain(&x).copied().max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        for v in branch {
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            bk(adj, r + 1, np, nx, best);
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut best = 0;
    bk(&adj, 0, (0..q).collect(), Vec::new(), &mut best);
    best
}

/// `(q, d)` with `q` an odd prime power in `range`, `d ≥ 2` and `2d | q - 1`.
fn paley_parameters(range: std::ops::RangeInclusive<u64>) -> Vec<(u64, u64)> {
    range
        .filter(|&q| odd_prime_power(q).is_ok())
        .flat_map(|q| {
            divisors((q - 1) / 2).unwrap().into_iter().filter(|&d| d >= 2).map(move |d| (q, d))
        })
        .collect()
}

fn graph_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "graph";
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let params: Vec<(u64, u64)> = match config.q {
        Some(q) => paley_parameters(q..=q),
        None => paley_parameters(3..=125),
    };
    let (mut sym, mut trans, mut scale) = (Tally::default(), Tally::default(), Tally::default());
    for &(q, d) in &params {
        let f = Arc::new(field_for(q)?);
        let g = build_paley_graph(f.clone(), d)?;
        let els: Vec<FieldElement> = f.elements().collect();
        for &u in &els {
            for &v in &els {
                sym.record(g.adjacent(u, v) == g.adjacent(v, u), || format!("GP({q},{d}): ({u:?},{v:?})"));
            }
        }
        let shifts: Vec<FieldElement> = if q <= 81 { els.clone() } else { (0..8).map(|_| els[rng.gen_range(0..els.len())]).collect() };
        for &w in &shifts {
            for _ in 0..if q <= 81 { q * q } else { 2000 } {
                let (u, v) = (els[rng.gen_range(0..els.len())], els[rng.gen_range(0..els.len())]);
                let ok = g.adjacent(u, v) == g.adjacent(f.add(u, w), f.add(v, w));
                trans.record(ok, || format!("GP({q},{d}): shift {w:?}"));
            }
        }
        for &c in g.connection_set() {
            for _ in 0..4 {
                let s = f.pow(f.primitive_root(), d * rng.gen_range(0..q));
                let ok = g.adjacent(FieldElement::ZERO, f.mul(s, c));
                scale.record(ok, || format!("GP({q},{d}): {c:?} scaled by {s:?}"));
            }
        }
    }
    let results = sharded(&params, config.workers, |&(q, d)| -> Result<(Tally, Tally)> {
        let f = Arc::new(field_for(q)?);
        let g = build_paley_graph(f.clone(), d)?;
        let res = max_clique(&g, Some(DEFAULT_TIME_LIMIT));
        let mut bk = Tally::default();
        let oracle = bron_kerbosch_omega(&f, d);
        bk.record(res.optimal && res.size == oracle && is_clique(&g, &res.witness), || {
            format!("GP({q},{d}): search {} vs oracle {oracle}", res.size)
        });
        let mut sub = Tally::default();
        for m in (1..f.e()).filter(|m| f.e() % m == 0) {
            let km = f.p().pow(m);
            if ((q - 1) / (km - 1)) % d == 0 {
                let k = f.subfield_elements(m)?;
                sub.record(is_clique(&g, &k) && res.size as u64 >= km, || format!("GP({q},{d}): subfield {km}"));
            }
        }
        Ok((bk, sub))
    });
    let (mut bk, mut sub) = (Tally::default(), Tally::default());
    for r in results {
        let (a, b) = r?;
        bk.merge(a);
        sub.merge(b);
    }
    Ok(vec![
        sym.finish(S, "adjacency_symmetric"),
        trans.finish(S, "translation_invariant"),
        scale.finish(S, "scaling_invariant"),
        bk.finish(S, "max_clique_matches_bron_kerbosch"),
        sub.finish(S, "subfield_cliques"),
    ])
}

fn check_product(f: &Field, a: &[FieldElement], b: &[FieldElement], shortcut: &mut Tally, bound: &mut Tally) -> Result<()> {
    let q = f.q();
    let u = PointSet::cartesian(a, b);
    let fast = direction_set(f, &u)?;
    let slow = direction_set_all_pairs(f, &PointSet::new(u.points().iter().copied()))?;
    shortcut.record(fast == slow, || format!("GF({q}): A = {a:?}, B = {b:?}"));
    let lb = thm16_lower_bound(a.len() as u64, b.len() as u64, q, f.p())?;
    bound.record(fast.len() as i64 >= lb, || format!("GF({q}): |D| = {} < {lb} for A = {a:?}, B = {b:?}", fast.len()));
    Ok(())
}

fn directions_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "directions";
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (mut shortcut, mut bound) = (Tally::default(), Tally::default());

    let exhaustive_q = config.q.unwrap_or(9);
    let fe = field_for(exhaustive_q)?;
    if config.exhaustive || exhaustive_q == 9 {
        let small = subsets(exhaustive_q, 2..=3);
        for a in &small {
            for b in small.iter().filter(|b| (a.len() * b.len()) as u64 <= exhaustive_q) {
                check_product(&fe, a, b, &mut shortcut, &mut bound)?;
            }
        }
    }
    let random_fields: Vec<u64> = if config.q.is_some() { vec![exhaustive_q] } else { vec![27, 25] };
    for &q in &random_fields {
        let f = field_for(q)?;
        for _ in 0..500 {
            let m = rng.gen_range(2..=q as usize / 2);
            let n = rng.gen_range(2..=q as usize / m);
            let (a, b) = (random_subset(&mut rng, q, m), random_subset(&mut rng, q, n));
            check_product(&f, &a, &b, &mut shortcut, &mut bound)?;
        }
    }

    let mut sharp = Tally::default();
    for q in [9u64, 25] {
        let f = field_for(q)?;
        let k = f.subfield_elements(f.e() / 2)?;
        let d = direction_set(&f, &PointSet::cartesian(&k, &k))?;
        let lb = thm16_lower_bound(k.len() as u64, k.len() as u64, q, f.p())?;
        sharp.record(d.len() as i64 == lb, || format!("GF({q}): {} vs {lb}", d.len()));
    }
    for (q, sub_degree) in [(27u64, 1u32), (81, 1), (81, 2), (125, 1)] {
        let f = field_for(q)?;
        let b = f.subfield_elements(sub_degree)?;
        // an F_b-subspace spanned by the first coordinate directions of the digit basis
        let dim = f.e() / sub_degree - 1;
        let basis: Vec<FieldElement> = (0..dim).map(|i| f.from_digits(&unit_digits(f.e(), (i * sub_degree) as usize))).collect();
        let mut a = vec![FieldElement::ZERO];
        for &v in &basis {
            a = a.iter().flat_map(|&x| b.iter().map(move |&c| (x, c))).map(|(x, c)| f.add(x, f.mul(c, v))).collect();
        }
        a.sort_unstable();
        a.dedup();
        let d = direction_set(&f, &PointSet::cartesian(&a, &b))?;
        let lb = thm16_lower_bound(a.len() as u64, b.len() as u64, q, f.p())?;
        sharp.record(d.len() as i64 == lb, || format!("GF({q}): subspace product gives {} vs {lb}", d.len()));
    }

    let mut prime = Tally::default();
    for p in [13u64, 17] {
        let f = field_for(p)?;
        for _ in 0..100 {
            let m = rng.gen_range(2..p as usize / 2);
            let n = rng.gen_range(2..=((p as usize - 1) / m).max(2));
            if m * n >= p as usize {
                continue;
            }
            let (a, b) = (random_subset(&mut rng, p, m), random_subset(&mut rng, p, n));
            let lb = thm16_lower_bound(m as u64, n as u64, p, p)?;
            let d = direction_set(&f, &PointSet::cartesian(&a, &b))?;
            prime.record(lb == prime_field_bound(m as u64, n as u64) && d.len() as i64 >= lb, || {
                format!("GF({p}): m = {m}, n = {n}, bound {lb}, |D| = {}", d.len())
            });
        }
    }

    let mut rows = Tally::default();
    for q in [9u64, 27] {
        let f = field_for(q)?;
        for _ in 0..200 {
            let m = rng.gen_range(2..=(q as usize / 3).max(2));
            let n = rng.gen_range(2..=(q as usize / m));
            let ys = random_subset(&mut rng, q, n);
            let parts: Vec<(Vec<FieldElement>, FieldElement)> = ys.iter().map(|&y| (random_subset(&mut rng, q, m), y)).collect();
            let u = PointSet::rows(&parts);
            let d = direction_set(&f, &u)?;
            let lb = thm16_lower_bound(m as u64, n as u64, q, f.p())? - !d.has_infinity() as i64;
            rows.record(d.len() as i64 >= lb, || format!("GF({q}): rows m = {m}, n = {n}: {} < {lb}", d.len()));
        }
    }

    let mut cor = Tally::default();
    let f9 = field_for(9)?;
    for a in subsets(9, 4..=4) {
        let r = cor23_check(&f9, &a);
        cor.record(r.consistent() && r.lhs >= 5, || format!("cor23 {a:?}: {}", r.lhs));
    }
    let f125 = field_for(125)?;
    for _ in 0..100 {
        let a = random_subset(&mut rng, 125, 11);
        let r = cor15_check(&f125, &a)?;
        cor.record(r.applicable && r.holds, || format!("cor15 {a:?}: {}", r.lhs));
    }
    let f27 = field_for(27)?;
    for _ in 0..100 {
        let a = random_subset(&mut rng, 27, 10);
        let r = cor24_check(&f27, 1, &a)?;
        cor.record(r.applicable && r.holds, || format!("cor24 {a:?}: {}", r.lhs));
    }

    Ok(vec![
        shortcut.finish(S, "shortcut_matches_all_pairs"),
        bound.finish(S, "product_lower_bound"),
        sharp.finish(S, "sharpness"),
        prime.finish(S, "prime_field_bound"),
        rows.finish(S, "row_union_bound"),
        cor.finish(S, "corollaries"),
    ])
}

fn unit_digits(e: u32, i: usize) -> Vec<u64> {
    let mut v = vec![0; e as usize];
    v[i] = 1;
    v
}

fn redei_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "redei";
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (mut divides, mut quotient) = (Tally::default(), Tally::default());
    let check_u = |f: &Field, u: &PointSet, divides: &mut Tally, quotient: &mut Tally| -> Result<()> {
        let ring = PolyRing::new(f);
        let dirs = direction_set(f, u)?;
        for y in f.elements() {
            let r = redei_slice(f, u, y);
            let expected = !dirs.contains_slope(y);
            divides.record(divides_xq_minus_x(f, &r) == expected, || format!("GF({}): y0 = {y:?}, U = {:?}", f.q(), u.points()));
            if expected {
                let ok = szonyi_quotient(f, u, y).is_ok_and(|quo| ring.mul(&quo, &r) == ring.x_q_minus_x());
                quotient.record(ok, || format!("GF({}): quotient at y0 = {y:?}", f.q()));
            }
        }
        Ok(())
    };
    let q = config.q.unwrap_or(27);
    let f = field_for(q)?;
    for _ in 0..200 {
        let size = rng.gen_range(4..=9.min(q as usize * q as usize));
        let pts: Vec<_> = sample(&mut rng, (q * q) as usize, size)
            .into_iter()
            .map(|i| (FieldElement::new((i as u64 / q) as u32), FieldElement::new((i as u64 % q) as u32)))
            .collect();
        check_u(&f, &PointSet::new(pts), &mut divides, &mut quotient)?;
    }
    if config.exhaustive {
        let f9 = field_for(9)?;
        let pts: Vec<_> = f9.elements().flat_map(|a| f9.elements().map(move |b| (a, b))).skip(1).collect();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let u = PointSet::new([(FieldElement::ZERO, FieldElement::ZERO), pts[i], pts[j]]);
                check_u(&f9, &u, &mut divides, &mut quotient)?;
            }
        }
    }

    let mut roots = Tally::default();
    let ring = PolyRing::new(&f);
    for _ in 0..1000 {
        let deg = rng.gen_range(0..8);
        let mut coeffs: Vec<FieldElement> = (0..deg).map(|_| FieldElement::new(rng.gen_range(0..q as u32))).collect();
        coeffs.push(FieldElement::new(rng.gen_range(1..q as u32)));
        let g = Poly::from_coeffs(coeffs);
        let fp = ring.pow(&g, f.p());
        let dec = pth_power_decompose(&f, &fp)?;
        let ok = dec.is_deriv_zero && ring.derivative(&fp).is_zero() && dec.g.as_ref() == Some(&g);
        roots.record(ok, || format!("GF({q}): round trip failed for {:?}", g.to_values()));
    }
    Ok(vec![
        divides.finish(S, "divisibility_iff_undetermined"),
        quotient.finish(S, "quotient_identity"),
        roots.finish(S, "pth_root_round_trip"),
    ])
}

fn bounds_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "bounds";
    let limit = config.q.unwrap_or(361);
    let params = paley_parameters(3..=limit);
    let results = sharded(&params, config.workers, |&(q, d)| -> Result<Tally> {
        let mut t = Tally::default();
        let g = build_paley_graph(Arc::new(field_for(q)?), d)?;
        let res = max_clique(&g, Some(DEFAULT_TIME_LIMIT));
        if !res.optimal {
            return Err(Error::Timeout);
        }
        let omega = res.size as u64;
        for c in best_bounds(q, d)?.certificates {
            if c.is_upper() {
                t.record(omega <= c.value, || format!("GP({q},{d}): omega {omega} > {} {}", c.bound, c.value));
            }
            if c.is_lower() {
                t.record(omega >= c.value, || format!("GP({q},{d}): omega {omega} < {} {}", c.bound, c.value));
            }
        }
        Ok(t)
    });
    let mut sound = Tally::default();
    for r in results {
        sound.merge(r?);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut closed = Tally::default();
    let shapes: [(u64, u32); 10] = [(3, 1), (3, 3), (3, 5), (3, 7), (5, 3), (5, 5), (7, 3), (11, 3), (13, 1), (101, 1)];
    while closed.cases < 1000 {
        let (p, e) = shapes[rng.gen_range(0..shapes.len())];
        let q = p.pow(e);
        let ds: Vec<u64> = divisors((q - 1) / 2)?.into_iter().filter(|&d| d >= 2).collect();
        if ds.is_empty() {
            continue;
        }
        let d = ds[rng.gen_range(0..ds.len())];
        let (pr, m) = (p.pow((e - 1) / 2), (q - 1) / d);
        let gap = (pr as i128 - 2).unsigned_abs();
        let formula = (((pr as u128 + isqrt(gap * gap + 4 * m as u128)) / 2) as u64).max(pr);
        let value = thm13_bound(q, d)?;
        closed.record(value == formula, || format!("({q},{d}): search {value}, closed form {formula}"));
    }

    let mut thm14 = Tally::default();
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let norm = p * p + p + 1;
        for d in (p + 1..=norm).filter(|d| norm % d == 0) {
            let a = thm14_certify(p, d)?;
            let b = prop41_certify(p * p * p, p, d)?;
            thm14.record(a.applicable && b.applicable && a.value == b.value, || format!("p = {p}, d = {d}"));
        }
    }

    let mut witness = Tally::default();
    for &(q, d) in params.iter().filter(|(q, _)| *q <= 729) {
        let f = Arc::new(field_for(q)?);
        for m in (1..f.e()).filter(|m| f.e() % m == 0) {
            let k = f.p().pow(m);
            let c = prop41_certify(q, k, d)?;
            if c.applicable && c.value == k {
                let g = build_paley_graph(f.clone(), d)?;
                witness.record(is_clique(&g, &f.subfield_elements(m)?), || format!("GP({q},{d}): F_{k} not a clique"));
            }
        }
    }
    Ok(vec![
        sound.finish(S, "soundness_sweep"),
        closed.finish(S, "thm13_closed_form"),
        thm14.finish(S, "thm14_matches_prop41"),
        witness.finish(S, "prop41_witness_is_clique"),
    ])
}

fn families_suite(_config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    const S: &str = "families";
    let mut inst = Tally::default();
    for (p, m) in [(7u64, 1u32), (13, 1), (19, 1), (7, 2)] {
        let i = family_ex42(p, m)?;
        inst.record(i.revalidate()?, || format!("ex42({p},{m})"));
    }
    for (p, s, t) in [(3u64, 3u32, 2u32), (5, 3, 2), (3, 2, 1), (3, 3, 1), (3, 4, 1), (3, 4, 3), (5, 2, 1), (7, 2, 1), (7, 3, 1)] {
        match family_ex43(p, s, t) {
            Ok(i) => inst.record(i.revalidate()?, || format!("ex43({p},{s},{t})")),
            Err(Error::InvalidParameter(_)) => {}
            Err(e) => return Err(e),
        }
    }
    for x in 1..=4u64 {
        if let Ex44Outcome::Instance(i) = family_ex44(x)? {
            inst.record(i.revalidate()?, || format!("ex44({x})"));
        }
    }
    let mut identity = Tally::default();
    for x in 1..=1_000_000u64 {
        identity.record(ex44_identity_holds(x), || format!("x = {x}"));
    }
    let mut counter = Tally::default();
    let r = counterexample_ex45(3, true)?;
    counter.record(r.consistent(), || "ex45(3)".into());
    let r = counterexample_ex45(5, false)?;
    counter.record(r.consistent(), || "ex45(5)".into());
    let r = counterexample_ex46()?;
    counter.record(r.consistent(), || "ex46".into());
    Ok(vec![inst.finish(S, "instances_revalidate"), identity.finish(S, "ex44_identity"), counter.finish(S, "counterexamples")])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_oracle_small_values() {
        assert_eq!(lucas_binom_mod(8, 6, 13), 2);
        assert_eq!(lucas_binom_mod(6, 2, 3), 0);
        assert_eq!(lucas_binom_mod(5, 4, 3), 2);
    }

    #[test]
    fn bron_kerbosch_small_values() {
        assert_eq!(bron_kerbosch_omega(&Field::new(13, 1).unwrap(), 2), 3);
        assert_eq!(bron_kerbosch_omega(&Field::new(3, 2).unwrap(), 2), 3);
    }

    #[test]
    fn sharding_preserves_order() {
        let items: Vec<u64> = (0..100).collect();
        assert_eq!(sharded(&items, 3, |x| x * 2), items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::MODULES {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn directions_suite_passes_on_gf9() {
        let r = run_suite(Suite::Directions, &SuiteConfig { q: Some(9), exhaustive: true, ..Default::default() }).unwrap();
        assert!(r.passed, "{r:?}");
    }
}
