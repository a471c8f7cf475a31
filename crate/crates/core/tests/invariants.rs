use std::collections::BTreeSet;
use std::sync::Arc;

use paley_core::arith::{divisors, odd_prime_power};
use paley_core::bounds::{best_bounds, thm11_bound, thm13_bound, trivial_bound};
use paley_core::directions::{direction_set, direction_set_all_pairs, PointSet};
use paley_core::field::{Field, FieldElement};
use paley_core::graph::{build_cyclotomic_graph, build_paley_graph, is_clique, max_clique};
use proptest::prelude::*;

const SMALL_FIELDS: [(u64, u32); 8] = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2), (3, 4)];

fn field_strategy() -> impl Strategy<Value = Arc<Field>> {
    prop::sample::select(SMALL_FIELDS.to_vec()).prop_map(|(p, e)| Arc::new(Field::new(p, e).unwrap()))
}

/// Plain Bron-Kerbosch with pivoting over an adjacency matrix built from `is_dth_power`.
fn bk_omega(f: &Field, d: u64) -> usize {
    let q = f.q() as usize;
    let adj: Vec<Vec<bool>> = (0..q)
        .map(|u| {
            (0..q)
                .map(|v| u != v && f.is_dth_power(f.sub(FieldElement::new(v as u32), FieldElement::new(u as u32)), d).unwrap())
                .collect()
        })
        .collect();
    fn go(adj: &[Vec<bool>], r: usize, p: Vec<usize>, mut x: Vec<usize>, best: &mut usize) {
        if p.is_empty() && x.is_empty() {
            *best = (*best).max(r);
            return;
        }
        if r + p.len() <= *best {
            return;
        }
        let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
        let mut p = p;
        for v in p.clone().into_iter().filter(|&v| !adj[pivot][v]) {
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            go(adj, r + 1, np, nx, best);
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut best = 0;
    go(&adj, 0, (0..q).collect(), Vec::new(), &mut best);
    best
}

#[test]
fn max_clique_matches_bron_kerbosch_up_to_125() {
    for q in 3..=125u64 {
        let Ok((p, e)) = odd_prime_power(q) else { continue };
        let f = Arc::new(Field::new(p, e).unwrap());
        for d in divisors((q - 1) / 2).unwrap().into_iter().filter(|&d| d >= 2) {
            let g = build_paley_graph(f.clone(), d).unwrap();
            let r = max_clique(&g, None);
            assert!(r.optimal);
            assert_eq!(r.size, bk_omega(&f, d), "GP({q},{d})");
        }
    }
}

#[test]
fn bounds_sandwich_search_up_to_125() {
    for q in 3..=125u64 {
        let Ok((p, e)) = odd_prime_power(q) else { continue };
        let f = Arc::new(Field::new(p, e).unwrap());
        for d in divisors((q - 1) / 2).unwrap().into_iter().filter(|&d| d >= 2) {
            let w = max_clique(&build_paley_graph(f.clone(), d).unwrap(), None).size as u64;
            let b = best_bounds(q, d).unwrap();
            assert!(b.best_lower <= w && w <= b.best_upper, "GP({q},{d})");
            assert!(thm11_bound(q, d).unwrap() >= w);
            assert!(trivial_bound(q) >= w);
            if e % 2 == 1 {
                assert!(thm13_bound(q, d).unwrap() >= w);
            }
            if b.exact {
                assert_eq!(b.best_upper, w);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_digits_round_trip(f in field_strategy(), raw in any::<u64>()) {
        let a = FieldElement::new((raw % f.q()) as u32);
        let digits = f.digits(a);
        prop_assert_eq!(digits.len(), f.e() as usize);
        prop_assert_eq!(f.from_digits(&digits), a);
    }

    #[test]
    fn field_ring_axioms(f in field_strategy(), raw in prop::array::uniform3(any::<u64>())) {
        let [a, b, c] = raw.map(|r| FieldElement::new((r % f.q()) as u32));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            prop_assert_eq!(f.exp(f.log(a).unwrap()), a);
        }
        if !a.is_zero() && !b.is_zero() {
            let (la, lb, lab) = (f.log(a).unwrap(), f.log(b).unwrap(), f.log(f.mul(a, b)).unwrap());
            prop_assert_eq!((la + lb) % (f.q() - 1), lab);
        }
        prop_assert_eq!(f.pow(a, f.q()), a);
    }

    #[test]
    fn primitive_root_has_full_order(f in field_strategy()) {
        prop_assert_eq!(f.order(f.primitive_root()).unwrap(), f.q() - 1);
        let again = Field::new(f.p(), f.e()).unwrap();
        prop_assert_eq!(again.modulus(), f.modulus());
        prop_assert_eq!(again.primitive_root(), f.primitive_root());
    }

    #[test]
    fn cyclotomic_graph_invariants(f in field_strategy(), pick in any::<prop::sample::Index>(), mask in any::<u16>()) {
        let q = f.q();
        let ds: Vec<u64> = divisors((q - 1) / 2).unwrap().into_iter().filter(|&d| d >= 2).collect();
        prop_assume!(!ds.is_empty());
        let d = ds[pick.index(ds.len())];
        let index: Vec<u64> = (0..d).filter(|i| mask >> (i % 16) & 1 == 1).collect();
        prop_assume!(!index.is_empty() && index.len() < d as usize);
        let g = build_cyclotomic_graph(f.clone(), d, &index).unwrap();
        let s: BTreeSet<FieldElement> = g.connection_set().iter().copied().collect();
        prop_assert!(!s.contains(&FieldElement::ZERO));
        prop_assert_eq!(s.len() as u64, index.len() as u64 * (q - 1) / d);
        for &x in &s {
            prop_assert!(s.contains(&f.neg(x)));
        }
        for u in f.elements() {
            for v in f.elements() {
                prop_assert_eq!(g.adjacent(u, v), s.contains(&f.sub(v, u)));
            }
        }
        let r = max_clique(&g, None);
        prop_assert!(r.optimal && r.witness.len() == r.size && is_clique(&g, &r.witness));
    }

    #[test]
    fn direction_set_cardinality_and_shortcut(
        f in field_strategy(),
        a in prop::collection::btree_set(0u64..81, 1..6),
        b in prop::collection::btree_set(0u64..81, 1..6),
    ) {
        let q = f.q();
        let a: Vec<FieldElement> = a.into_iter().filter(|&x| x < q).map(|x| FieldElement::new(x as u32)).collect();
        let b: Vec<FieldElement> = b.into_iter().filter(|&x| x < q).map(|x| FieldElement::new(x as u32)).collect();
        prop_assume!(!a.is_empty() && !b.is_empty());
        let u = PointSet::cartesian(&a, &b);
        prop_assert_eq!(u.len(), a.len() * b.len());
        prop_assume!(u.len() >= 2);
        let fast = direction_set(&f, &u).unwrap();
        let slow = direction_set_all_pairs(&f, &u).unwrap();
        prop_assert_eq!(&fast, &slow);
        prop_assert_eq!(fast.len(), fast.finite_part().len() + fast.has_infinity() as usize);
        for y in f.elements() {
            prop_assert_eq!(fast.contains_slope(y), fast.finite_part().contains(&y));
        }
    }
}
