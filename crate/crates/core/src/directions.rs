//! Directions determined by point sets in the affine plane AG(2, q).
//!
//! The direction of two points `(x_i, y_i)`, `(x_j, y_j)` is the slope
//! `(y_j - y_i) / (x_j - x_i)`, or the vertical direction when the x
//! coordinates agree. The vertical direction is carried as a flag next to
//! the finite slopes, never as a sentinel field value.

use serde::Serialize;

use crate::arith::odd_prime_power;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub type Point = (FieldElement, FieldElement);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Direction {
    Finite(FieldElement),
    Infinity,
}

/// A deduplicated set of points, optionally known to be a product `A × B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    factorization: Option<(Vec<FieldElement>, Vec<FieldElement>)>,
}

fn sorted_unique(v: &[FieldElement]) -> Vec<FieldElement> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

impl PointSet {
    pub fn new(points: impl IntoIterator<Item = Point>) -> PointSet {
        let mut points: Vec<Point> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        PointSet { points, factorization: None }
    }

    /// The product `A × B` with `A` on the x axis.
    pub fn cartesian(a: &[FieldElement], b: &[FieldElement]) -> PointSet {
        let a = sorted_unique(a);
        let b = sorted_unique(b);
        let points = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect();
        PointSet { points, factorization: Some((a, b)) }
    }

    /// `⋃_i A_i × {b_i}`: horizontal rows with their own x sets.
    pub fn rows(rows: &[(Vec<FieldElement>, FieldElement)]) -> PointSet {
        PointSet::new(rows.iter().flat_map(|(xs, y)| xs.iter().map(move |&x| (x, *y))))
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn factorization(&self) -> Option<(&[FieldElement], &[FieldElement])> {
        self.factorization.as_ref().map(|(a, b)| (a.as_slice(), b.as_slice()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectionSet {
    #[serde(rename = "directions")]
    finite: Vec<FieldElement>,
    #[serde(rename = "infinity")]
    has_infinity: bool,
}

impl DirectionSet {
    fn from_bits(bits: &BitSet, has_infinity: bool) -> DirectionSet {
        DirectionSet {
            finite: bits.iter().map(|i| FieldElement::new(i as u32)).collect(),
            has_infinity,
        }
    }

    pub fn finite_part(&self) -> &[FieldElement] {
        &self.finite
    }

    pub fn has_infinity(&self) -> bool {
        self.has_infinity
    }

    pub fn len(&self) -> usize {
        self.finite.len() + self.has_infinity as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, dir: Direction) -> bool {
        match dir {
            Direction::Infinity => self.has_infinity,
            Direction::Finite(s) => self.finite.binary_search(&s).is_ok(),
        }
    }

    pub fn contains_slope(&self, s: FieldElement) -> bool {
        self.contains(Direction::Finite(s))
    }
}

/// Directions determined by `u`. Product sets go through the difference-set
/// shortcut, everything else through all pairs.
pub fn direction_set(field: &Field, u: &PointSet) -> Result<DirectionSet> {
    if u.len() < 2 {
        return Err(Error::TooFewPoints(u.len()));
    }
    match u.factorization() {
        Some((a, b)) if a.len() >= 2 && b.len() >= 2 => Ok(cartesian_directions(field, a, b)),
        _ => direction_set_all_pairs(field, u),
    }
}

pub fn direction_set_all_pairs(field: &Field, u: &PointSet) -> Result<DirectionSet> {
    if u.len() < 2 {
        return Err(Error::TooFewPoints(u.len()));
    }
    let mut bits = BitSet::new(field.q() as usize);
    let mut vertical = false;
    let pts = u.points();
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        for &(xj, yj) in &pts[i + 1..] {
            let dx = field.sub(xj, xi);
            if dx.is_zero() {
                vertical = true;
            } else {
                let slope = field.div(field.sub(yj, yi), dx).expect("dx is nonzero");
                bits.insert(slope.index());
            }
        }
    }
    Ok(DirectionSet::from_bits(&bits, vertical))
}

/// `D(A × B) = (B - B)* · ((A - A)*)^{-1} ∪ {0, ∞}` for `|A|, |B| ≥ 2`.
pub fn cartesian_directions(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> DirectionSet {
    let da = difference_set(field, a);
    let db = difference_set(field, b);
    let mut bits = BitSet::new(field.q() as usize);
    bits.insert(0);
    for &x in da.iter().filter(|x| !x.is_zero()) {
        let inv = field.inv(x).expect("nonzero difference");
        for &y in db.iter().filter(|y| !y.is_zero()) {
            bits.insert(field.mul(y, inv).index());
        }
    }
    DirectionSet::from_bits(&bits, true)
}

/// `A - A`, sorted.
pub fn difference_set(field: &Field, a: &[FieldElement]) -> Vec<FieldElement> {
    let mut bits = BitSet::new(field.q() as usize);
    for &x in a {
        for &y in a {
            bits.insert(field.sub(x, y).index());
        }
    }
    bits.iter().map(|i| FieldElement::new(i as u32)).collect()
}

/// Lower bound on `|D(A × B)|` for `|A| = m`, `|B| = n`, `mn ≤ q`:
/// `mn - min{p^s1 (n - 1), p^s2 (m - 1)} + 1`, with `s1` (resp. `s2`) the
/// largest exponent such that `p^s1 n ≤ q` (resp. `p^s2 m ≤ q`).
///
/// The value can be negative (and is then vacuous) for small products in
/// large fields.
pub fn thm16_lower_bound(m: u64, n: u64, q: u64, p: u64) -> Result<i64> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!("|A| and |B| must be at least 2, got {m} and {n}")));
    }
    let (base, _) = odd_prime_power(q)?;
    if base != p {
        return Err(Error::InvalidParameter(format!("{q} is not a power of {p}")));
    }
    if m.checked_mul(n).is_none_or(|mn| mn > q) {
        return Err(Error::InvalidParameter(format!("|A||B| = {m}*{n} exceeds q = {q}")));
    }
    let largest_power = |k: u64| {
        let mut pw = 1u64;
        while pw * p * k <= q {
            pw *= p;
        }
        pw
    };
    let (ps1, ps2) = (largest_power(n), largest_power(m));
    let loss = (ps1 * (n - 1)).min(ps2 * (m - 1));
    Ok((m * n) as i64 - loss as i64 + 1)
}

/// The prime-field bound `mn - min{m, n} + 2`.
pub fn prime_field_bound(m: u64, n: u64) -> i64 {
    (m * n) as i64 - m.min(n) as i64 + 2
}

/// Outcome of checking one of the set-size inequalities on a concrete set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SetBoundReport {
    pub check: &'static str,
    pub q: u64,
    pub set_size: usize,
    pub lhs: u64,
    /// Right-hand side; half-integers are exact in binary floating point.
    pub rhs: f64,
    pub relation: &'static str,
    pub holds: bool,
    pub applicable: bool,
    pub reason: String,
}

impl SetBoundReport {
    /// True unless the inequality was applicable and failed.
    pub fn consistent(&self) -> bool {
        !self.applicable || self.holds
    }
}

/// `|(A - A)/(A - A)| > |A|^2 / 2` when `q = p^(2r+1)` and `2p^r < |A| < √q`.
///
/// The left side is the quotient set with zero denominators dropped, i.e.
/// the finite part of `D(A × A)`.
pub fn cor15_check(field: &Field, a: &[FieldElement]) -> Result<SetBoundReport> {
    let (p, e, q) = (field.p(), field.e(), field.q());
    if e % 2 == 0 {
        return Err(Error::SquareOrder(q));
    }
    let a = sorted_unique(a);
    let m = a.len() as u64;
    let lhs = if a.len() >= 2 { cartesian_directions(field, &a, &a).finite_part().len() as u64 } else { 0 };
    let pr = p.pow((e - 1) / 2);
    let applicable = 2 * pr < m && m * m < q;
    let reason = if applicable {
        format!("2p^r = {} < |A| = {m} < sqrt({q})", 2 * pr)
    } else {
        format!("needs 2p^r = {} < |A| = {m} and |A|^2 < {q}", 2 * pr)
    };
    Ok(SetBoundReport {
        check: "cor15",
        q,
        set_size: a.len(),
        lhs,
        rhs: (m * m) as f64 / 2.0,
        relation: ">",
        holds: 2 * lhs > m * m,
        applicable,
        reason,
    })
}

/// `|A - A| ≥ min{2|A| - q/p, q}` when `|A| > q/p`.
pub fn cor23_check(field: &Field, a: &[FieldElement]) -> SetBoundReport {
    let (p, q) = (field.p(), field.q());
    let a = sorted_unique(a);
    let m = a.len() as i64;
    let lhs = difference_set(field, &a).len() as u64;
    let rhs = (2 * m - (q / p) as i64).min(q as i64);
    let applicable = m as u64 > q / p;
    SetBoundReport {
        check: "cor23",
        q,
        set_size: a.len(),
        lhs,
        rhs: rhs as f64,
        relation: ">=",
        holds: lhs as i64 >= rhs,
        applicable,
        reason: format!("needs |A| = {m} > q/p = {}", q / p),
    }
}

/// `|(A - A)K| > |A|(|K| - |K|/p - 1)` for a proper subfield `K` and
/// `|A| = q/|K| + 1`.
pub fn cor24_check(field: &Field, k_degree: u32, a: &[FieldElement]) -> Result<SetBoundReport> {
    let (p, e, q) = (field.p(), field.e(), field.q());
    if k_degree == 0 || k_degree >= e || e % k_degree != 0 {
        return Err(Error::NotSubfieldOrder { order: p.saturating_pow(k_degree), q });
    }
    let k = field.subfield_elements(k_degree)?;
    let k_order = k.len() as u64;
    let a = sorted_unique(a);
    let m = a.len() as u64;
    let mut bits = BitSet::new(q as usize);
    for delta in difference_set(field, &a) {
        for &c in &k {
            bits.insert(field.mul(delta, c).index());
        }
    }
    let lhs = bits.count() as u64;
    let rhs = m as i64 * (k_order - k_order / p - 1) as i64;
    let applicable = m == q / k_order + 1;
    Ok(SetBoundReport {
        check: "cor24",
        q,
        set_size: a.len(),
        lhs,
        rhs: rhs as f64,
        relation: ">",
        holds: lhs as i64 > rhs,
        applicable,
        reason: format!("needs |A| = q/|K| + 1 = {}, got {m}", q / k_order + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn els(v: &[u32]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement::new(x)).collect()
    }

    #[test]
    fn direction_examples() {
        let f = Field::new(3, 2).unwrap();
        let f3 = els(&[0, 1, 2]);
        let d = direction_set(&f, &PointSet::cartesian(&f3, &f3)).unwrap();
        assert_eq!(d.finite_part(), els(&[0, 1, 2]).as_slice());
        assert!(d.has_infinity());
        assert_eq!(d.len(), 4);

        let d = direction_set(&f, &PointSet::cartesian(&els(&[0, 1]), &els(&[0, 1]))).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.contains(Direction::Finite(FieldElement::new(2))));
        assert!(d.contains(Direction::Infinity));

        let row = PointSet::cartesian(&els(&[0, 3, 7]), &els(&[5]));
        let d = direction_set(&f, &row).unwrap();
        assert_eq!((d.len(), d.finite_part()), (1, els(&[0]).as_slice()));

        assert_eq!(direction_set(&f, &PointSet::new([(FieldElement::ZERO, FieldElement::ZERO)])).unwrap_err(), Error::TooFewPoints(1));
    }

    #[test]
    fn shortcut_matches_all_pairs_exhaustively_in_gf9() {
        let f = Field::new(3, 2).unwrap();
        let subsets: Vec<Vec<FieldElement>> = (0u32..512)
            .filter(|m| (2..=3).contains(&m.count_ones()))
            .map(|m| (0..9).filter(|i| m >> i & 1 == 1).map(FieldElement::new).collect())
            .collect();
        for a in &subsets {
            for b in &subsets {
                let u = PointSet::cartesian(a, b);
                let plain = PointSet::new(u.points().iter().copied());
                assert_eq!(direction_set(&f, &u).unwrap(), direction_set_all_pairs(&f, &plain).unwrap());
            }
        }
    }

    #[test]
    fn thm16_examples() {
        assert_eq!(thm16_lower_bound(3, 3, 9, 3).unwrap(), 4);
        assert_eq!(thm16_lower_bound(3, 3, 13, 13).unwrap(), 8);
        assert_eq!(prime_field_bound(3, 3), 8);
        assert_eq!(thm16_lower_bound(2, 2, 9, 3).unwrap(), 2);
        assert!(thm16_lower_bound(4, 3, 9, 3).is_err());
        assert!(thm16_lower_bound(1, 3, 9, 3).is_err());
        assert!(thm16_lower_bound(2, 2, 9, 5).is_err());
    }

    #[test]
    fn cor15_examples() {
        let f13 = Field::new(13, 1).unwrap();
        let r = cor15_check(&f13, &els(&[0, 1, 4, 9])).unwrap();
        assert!(!r.applicable);
        let f101 = Field::new(101, 1).unwrap();
        let squares: Vec<_> = (1..=10u64).map(|i| f101.from_int(i * i)).collect();
        let r = cor15_check(&f101, &squares).unwrap();
        assert!(r.applicable && r.holds, "{r:?}");
        assert_eq!(r.rhs, 50.0);
        assert!(cor15_check(&Field::new(3, 2).unwrap(), &els(&[0, 1])).is_err());
    }

    #[test]
    fn cor23_examples() {
        let f = Field::new(3, 2).unwrap();
        let all: Vec<_> = f.elements().collect();
        let r = cor23_check(&f, &all);
        assert_eq!((r.lhs, r.rhs, r.holds, r.applicable), (9, 9.0, true, true));
        // A = {0,1} x F_3 in the (c0, c1) digit picture: c0 ∈ {0,1}
        let layered = els(&[0, 1, 3, 4, 6, 7]);
        let r = cor23_check(&f, &layered);
        assert_eq!((r.lhs, r.rhs, r.holds), (9, 9.0, true));
        let r = cor23_check(&f, &els(&[0, 1]));
        assert!(!r.applicable);
    }

    #[test]
    fn cor24_examples() {
        let f = Field::new(3, 3).unwrap();
        let a: Vec<_> = (0..10).map(FieldElement::new).collect();
        let r = cor24_check(&f, 1, &a).unwrap();
        assert_eq!(r.rhs, 10.0);
        assert!(r.applicable && r.holds);
        // a K-subspace of size 9 is outside the hypothesis
        let sub: Vec<_> = (0..9).map(FieldElement::new).collect();
        let r = cor24_check(&f, 1, &sub).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.lhs, 9);
        assert!(cor24_check(&f, 3, &a).is_err());
        assert!(cor24_check(&f, 2, &a).is_err());

        let f81 = Field::new(3, 4).unwrap();
        let a: Vec<_> = (0..10).map(|i| FieldElement::new(i * 7)).collect();
        let r = cor24_check(&f81, 2, &a).unwrap();
        assert_eq!(r.rhs, 50.0);
        assert!(r.applicable && r.holds, "{r:?}");
    }

    #[test]
    fn sharp_for_subfield_products() {
        for &(p, e) in &[(3u64, 2u32), (5, 2)] {
            let f = Field::new(p, e).unwrap();
            let k = f.subfield_elements(1).unwrap();
            let d = direction_set(&f, &PointSet::cartesian(&k, &k)).unwrap();
            let bound = thm16_lower_bound(p, p, f.q(), p).unwrap();
            assert_eq!(d.len() as i64, bound);
            assert_eq!(bound, p as i64 + 1);
        }
        // B = F_3, A an F_3-subspace of GF(27) with |A||B| = 27
        let f = Field::new(3, 3).unwrap();
        let k = f.subfield_elements(1).unwrap();
        let a: Vec<_> = (0..9).map(FieldElement::new).collect();
        let d = direction_set(&f, &PointSet::cartesian(&a, &k)).unwrap();
        assert_eq!(d.len() as i64, thm16_lower_bound(9, 3, 27, 3).unwrap());
    }

    #[test]
    fn serializes_with_infinity_flag() {
        let f = Field::new(3, 2).unwrap();
        let d = direction_set(&f, &PointSet::cartesian(&els(&[0, 1, 2]), &els(&[0, 1, 2]))).unwrap();
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"directions":[0,1,2],"infinity":true}"#);
    }
}
