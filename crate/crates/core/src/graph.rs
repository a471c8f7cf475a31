//! Generalized Paley graphs `GP(q, d)` and cyclotomic Cayley graphs on
//! GF(q), with exact maximum-clique search.
//!
//! Vertices are field element encodings `0..q`. The connection set is
//! `S = ⋃_{i ∈ I} g^i H` where `H` is the subgroup of d-th powers and `g`
//! the field's primitive root; `u ~ v` iff `v - u ∈ S`.
//!
//! The clique search exploits the symmetry of the graph. Translations are
//! automorphisms, so some maximum clique contains 0. When `I` is a subgroup
//! of `Z/dZ` (in particular `I = {0}`), `S` is a multiplicative subgroup and
//! `x ↦ (x - u) / (v - u)` maps any edge `{u, v}` onto `{0, 1}`, so the
//! search only has to explore the common neighbourhood of 0 and 1.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(60);

#[derive(Debug)]
pub struct Graph {
    field: Arc<Field>,
    d: u64,
    index_set: Vec<u64>,
    connection: BitSet,
    connection_list: Vec<FieldElement>,
    scaling_invariant: bool,
    adjacency: OnceLock<Vec<BitSet>>,
}

/// JSON summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDescription {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub d: u64,
    #[serde(rename = "I")]
    pub index_set: Vec<u64>,
    pub degree: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Wall-clock time. Kept out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<FieldElement>,
    pub optimal: bool,
    pub search_stats: SearchStats,
}

/// `GP(q, d)`: vertices adjacent iff their difference is a nonzero d-th power.
pub fn build_paley_graph(field: Arc<Field>, d: u64) -> Result<Graph> {
    let q = field.q();
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d must be at least 2, got {d}")));
    }
    if (q - 1) % (2 * d) != 0 {
        return Err(Error::NotDivisor { d, m: (q - 1) / 2 });
    }
    build_cyclotomic_graph(field, d, &[0])
}

/// Cayley graph with connection set `⋃_{i ∈ I} g^i (F_q*)^d`.
///
/// Indices are taken mod `d`; the resulting set must satisfy `S = -S`.
pub fn build_cyclotomic_graph(field: Arc<Field>, d: u64, index_set: &[u64]) -> Result<Graph> {
    let q = field.q();
    if d == 0 || (q - 1) % d != 0 {
        return Err(Error::NotDivisor { d, m: q - 1 });
    }
    if index_set.is_empty() {
        return Err(Error::InvalidParameter("index set must be nonempty".into()));
    }
    let mut index: Vec<u64> = index_set.iter().map(|i| i % d).collect();
    index.sort_unstable();
    index.dedup();

    let mut in_index = vec![false; d as usize];
    for &i in &index {
        in_index[i as usize] = true;
    }
    let mut connection = BitSet::new(q as usize);
    let g = field.primitive_root();
    let mut power = FieldElement::ONE;
    for k in 0..q - 1 {
        if in_index[(k % d) as usize] {
            connection.insert(power.index());
        }
        power = field.mul(power, g);
    }
    let connection_list: Vec<FieldElement> =
        connection.iter().map(|i| FieldElement::new(i as u32)).collect();
    if connection_list
        .iter()
        .any(|&s| !connection.contains(field.neg(s).index()))
    {
        return Err(Error::NotSymmetric);
    }
    let scaling_invariant = index.contains(&0)
        && index
            .iter()
            .all(|&a| index.iter().all(|&b| in_index[((a + d - b) % d) as usize]));

    Ok(Graph {
        field,
        d,
        index_set: index,
        connection,
        connection_list,
        scaling_invariant,
        adjacency: OnceLock::new(),
    })
}

impl Graph {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn index_set(&self) -> &[u64] {
        &self.index_set
    }

    pub fn degree(&self) -> usize {
        self.connection_list.len()
    }

    pub fn connection_set(&self) -> &[FieldElement] {
        &self.connection_list
    }

    /// Whether multiplication by elements of `S` preserves `S`, which allows
    /// normalizing any edge to `{0, 1}`.
    pub fn is_scaling_invariant(&self) -> bool {
        self.scaling_invariant
    }

    pub fn adjacent(&self, u: FieldElement, v: FieldElement) -> bool {
        self.connection.contains(self.field.sub(v, u).index())
    }

    pub fn describe(&self) -> GraphDescription {
        GraphDescription {
            p: self.field.p(),
            e: self.field.e(),
            q: self.field.q(),
            d: self.d,
            index_set: self.index_set.clone(),
            degree: self.degree(),
        }
    }

    /// Adjacency rows, built on first use.
    pub fn adjacency(&self) -> &[BitSet] {
        self.adjacency.get_or_init(|| {
            let q = self.q() as usize;
            let mut rows = vec![BitSet::new(q); q];
            for (u, row) in rows.iter_mut().enumerate() {
                let u = FieldElement::new(u as u32);
                for &s in &self.connection_list {
                    row.insert(self.field.add(u, s).index());
                }
            }
            rows
        })
    }

    pub fn neighbors(&self, u: FieldElement) -> impl Iterator<Item = FieldElement> + '_ {
        self.connection_list.iter().map(move |&s| self.field.add(u, s))
    }
}

/// Pairwise adjacency check; repeated vertices are ignored.
pub fn is_clique(graph: &Graph, vertices: &[FieldElement]) -> bool {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.iter().any(|v| v.value() as u64 >= graph.q()) {
        return false;
    }
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| graph.adjacent(u, v)))
}

/// Induced subgraph on a list of global vertices, relabelled `0..n` in list
/// order.
struct Subgraph {
    labels: Vec<usize>,
    adj: Vec<BitSet>,
}

impl Subgraph {
    fn induced(rows: &[BitSet], labels: Vec<usize>) -> Subgraph {
        let n = labels.len();
        let adj = labels
            .iter()
            .map(|&u| {
                let mut row = BitSet::new(n);
                for (j, &v) in labels.iter().enumerate() {
                    if rows[u].contains(v) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Subgraph { labels, adj }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Greedy sequential colouring of `cand`: vertices in colour order with
    /// their (1-based) colour numbers.
    fn color_sort(&self, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.first() {
                uncolored.remove(v);
                class.remove(v);
                class.difference_with(&self.adj[v]);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn color_bound(&self, cand: &BitSet) -> usize {
        self.color_sort(cand).1.last().copied().unwrap_or(0)
    }
}

struct Search<'a> {
    sub: &'a Subgraph,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(sub: &'a Subgraph, deadline: Option<Instant>) -> Self {
        Search { sub, nodes: 0, deadline, timed_out: false }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Branch and bound with a colouring bound (BBMC style).
    fn maximum(&mut self, clique: &mut Vec<usize>, mut cand: BitSet, best: &mut Vec<usize>) {
        if self.tick() {
            return;
        }
        let (order, colors) = self.sub.color_sort(&cand);
        for i in (0..order.len()).rev() {
            if clique.len() + colors[i] <= best.len() {
                return;
            }
            let v = order[i];
            clique.push(v);
            let next = cand.intersection(&self.sub.adj[v]);
            if next.is_empty() {
                if clique.len() > best.len() {
                    *best = clique.clone();
                }
            } else {
                self.maximum(clique, next, best);
            }
            clique.pop();
            cand.remove(v);
            if self.timed_out {
                return;
            }
        }
    }

    /// Cliques of exactly `k` vertices extending `clique`, visiting
    /// candidates in ascending label order. Stops after the first hit
    /// unless `all` is set. Returns true when the search should stop.
    fn fixed_size(
        &mut self,
        clique: &mut Vec<usize>,
        cand: BitSet,
        k: usize,
        all: bool,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if clique.len() == k {
            out.push(clique.clone());
            return !all;
        }
        if self.tick() {
            return true;
        }
        if clique.len() + cand.count() < k || clique.len() + self.sub.color_bound(&cand) < k {
            return false;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            cand.remove(v);
            clique.push(v);
            let next = cand.intersection(&self.sub.adj[v]);
            if self.fixed_size(clique, next, k, all, out) {
                clique.pop();
                return true;
            }
            clique.pop();
            if clique.len() + cand.count() < k {
                break;
            }
        }
        false
    }
}

/// Vertices every clique search may assume present, and the candidates
/// adjacent to all of them.
fn normalized_start(graph: &Graph) -> (Vec<usize>, Vec<usize>) {
    let rows = graph.adjacency();
    let fixed: Vec<usize> = if graph.scaling_invariant && graph.degree() > 0 { vec![0, 1] } else { vec![0] };
    let candidates = common_neighbourhood(rows, &fixed, graph.q() as usize);
    (fixed, candidates)
}

fn common_neighbourhood(rows: &[BitSet], fixed: &[usize], n: usize) -> Vec<usize> {
    let mut cand = BitSet::full(n);
    for &v in fixed {
        cand.intersect_with(&rows[v]);
    }
    cand.iter().collect()
}

fn to_elements(labels: impl IntoIterator<Item = usize>) -> Vec<FieldElement> {
    let mut out: Vec<FieldElement> = labels.into_iter().map(|v| FieldElement::new(v as u32)).collect();
    out.sort_unstable();
    out
}

/// Exact clique number with the lexicographically least maximum clique as
/// witness.
///
/// When the time limit runs out the best clique found so far is returned
/// with `optimal == false`.
pub fn max_clique(graph: &Graph, time_limit: Option<Duration>) -> CliqueResult {
    let start = Instant::now();
    let deadline = time_limit.map(|t| start + t);
    let (fixed, candidates) = normalized_start(graph);

    // phase 1: clique number, high-degree vertices first for tighter colourings
    let mut by_degree = Subgraph::induced(graph.adjacency(), candidates.clone());
    let mut order: Vec<usize> = (0..by_degree.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(by_degree.degree(v)));
    let labels = order.iter().map(|&v| by_degree.labels[v]).collect();
    by_degree = Subgraph::induced(graph.adjacency(), labels);

    let mut search = Search::new(&by_degree, deadline);
    let mut best = Vec::new();
    search.maximum(&mut Vec::new(), BitSet::full(by_degree.len()), &mut best);
    let mut nodes = search.nodes;
    let optimal = !search.timed_out;
    let mut witness: Vec<usize> = best.iter().map(|&v| by_degree.labels[v]).collect();

    // phase 2: lexicographically first clique of that size
    if optimal {
        let ascending = Subgraph::induced(graph.adjacency(), candidates);
        let mut search = Search::new(&ascending, deadline);
        let mut found = Vec::new();
        search.fixed_size(&mut Vec::new(), BitSet::full(ascending.len()), best.len(), false, &mut found);
        nodes += search.nodes;
        if let Some(first) = found.into_iter().next() {
            witness = first.into_iter().map(|v| ascending.labels[v]).collect();
        }
    }
    witness.extend(&fixed);

    CliqueResult {
        size: witness.len(),
        witness: to_elements(witness),
        optimal,
        search_stats: SearchStats { nodes, elapsed: start.elapsed() },
    }
}

/// All maximum cliques of the graph containing `required`, each sorted,
/// in lexicographic order.
pub fn enumerate_max_cliques(graph: &Graph, required: &[FieldElement]) -> Result<Vec<Vec<FieldElement>>> {
    let mut req: Vec<usize> = required.iter().map(|v| v.index()).collect();
    req.sort_unstable();
    req.dedup();
    if let Some(&v) = req.iter().find(|&&v| v as u64 >= graph.q()) {
        return Err(Error::VertexOutOfRange(v as u64));
    }
    if !is_clique(graph, required) {
        return Err(Error::NotAClique);
    }
    let omega = max_clique(graph, Some(DEFAULT_TIME_LIMIT));
    if !omega.optimal {
        return Err(Error::Timeout);
    }
    if req.len() > omega.size {
        return Ok(Vec::new());
    }
    let rows = graph.adjacency();
    let mut cand: Vec<usize> = common_neighbourhood(rows, &req, graph.q() as usize);
    cand.retain(|v| !req.contains(v));
    let sub = Subgraph::induced(rows, cand);
    let mut search = Search::new(&sub, None);
    let mut found = Vec::new();
    search.fixed_size(&mut Vec::new(), BitSet::full(sub.len()), omega.size - req.len(), true, &mut found);

    let mut cliques: Vec<Vec<FieldElement>> = found
        .into_iter()
        .map(|c| to_elements(c.into_iter().map(|v| sub.labels[v]).chain(req.iter().copied())))
        .collect();
    cliques.sort();
    Ok(cliques)
}
