//! Instance supply: a configuration-model regular sampler, a random
//! minimum-degree model, and named fixtures (including one gadget per
//! structural move rule, each with a documented seed set).

use crate::graph::{Graph, GraphError};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Regular,
    MinDegree,
    Named,
}

#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub model: Model,
    pub n: usize,
    pub d: usize,
    pub seed: u64,
    pub name: Option<String>,
}

impl GeneratorSpec {
    pub fn regular(n: usize, d: usize, seed: u64) -> Self {
        GeneratorSpec {
            model: Model::Regular,
            n,
            d,
            seed,
            name: None,
        }
    }

    pub fn min_degree(n: usize, d: usize, seed: u64) -> Self {
        GeneratorSpec {
            model: Model::MinDegree,
            n,
            d,
            seed,
            name: None,
        }
    }

    pub fn named(name: &str) -> Self {
        GeneratorSpec {
            model: Model::Named,
            n: 0,
            d: 0,
            seed: 0,
            name: Some(name.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    Infeasible { reason: String },
    UnknownFixture { name: String },
    DidNotConverge,
    Graph(GraphError),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::Infeasible { reason } => write!(f, "infeasible generator spec: {reason}"),
            GenError::UnknownFixture { name } => write!(f, "unknown fixture name `{name}`"),
            GenError::DidNotConverge => write!(f, "regular sampler did not converge"),
            GenError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GenError {}

impl From<GraphError> for GenError {
    fn from(e: GraphError) -> Self {
        GenError::Graph(e)
    }
}

/// splitmix64; self-contained so that generated instances are byte-identical
/// across runs and toolchains.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound`; the modulo bias is irrelevant at the
    /// bounds used here.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GenError> {
    match spec.model {
        Model::Regular => {
            if spec.d >= spec.n {
                return Err(GenError::Infeasible {
                    reason: format!("regular model needs d < n, got d={} n={}", spec.d, spec.n),
                });
            }
            if !(spec.n * spec.d).is_multiple_of(2) {
                return Err(GenError::Infeasible {
                    reason: format!("n*d must be even, got n={} d={}", spec.n, spec.d),
                });
            }
            regular_configuration_model(spec.n, spec.d, spec.seed)
        }
        Model::MinDegree => {
            if spec.d >= spec.n {
                return Err(GenError::Infeasible {
                    reason: format!(
                        "min-degree model needs d < n, got d={} n={}",
                        spec.d, spec.n
                    ),
                });
            }
            Ok(min_degree_model(spec.n, spec.d, spec.seed))
        }
        Model::Named => {
            let name = spec.name.as_deref().unwrap_or("");
            named_fixture(name)
        }
    }
}

/// Pairs degree stubs uniformly; any loop or multi-edge rejects the whole
/// pairing and the sampler starts over.
fn regular_configuration_model(n: usize, d: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Ok(Graph::from_edges(0, &[])?);
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<usize> = Vec::with_capacity(n * d);
    for v in 0..n {
        stubs.extend(std::iter::repeat_n(v, d));
    }
    'attempt: for _ in 0..1_000_000 {
        rng.shuffle(&mut stubs);
        let mut seen = std::collections::HashSet::with_capacity(n * d / 2);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'attempt;
            }
            if !seen.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Ok(Graph::from_edges(n, &edges)?);
    }
    Err(GenError::DidNotConverge)
}

/// Sparse Bernoulli base with expected degree about `d`, then random edges to
/// the lowest-id deficient vertex until every degree reaches the floor.
fn min_degree_model(n: usize, d: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.below(n - 1) < d {
                    adj[u].push(v);
                    adj[v].push(u);
                    edges.push((u, v));
                }
            }
        }
    }
    loop {
        let deficient = (0..n).find(|&v| adj[v].len() < d);
        let Some(u) = deficient else { break };
        let candidates: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u].contains(&v)).collect();
        let v = candidates[rng.below(candidates.len())];
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u.min(v), u.max(v)));
    }
    Graph::from_edges(n, &edges).expect("min-degree model produces simple graphs")
}

pub const FIXTURE_NAMES: &[&str] = &[
    "k6",
    "k55",
    "pendant_k6",
    "pendant_k5",
    "icosahedron",
    "circulant_9_12",
    "gadget_c",
    "gadget_d",
    "gadget_e4",
    "gadget_e7",
    "gadget_f",
    "gadget_i",
    "gadget_j",
    "gadget_k4",
    "gadget_k7",
    "gadget_l",
];

pub fn named_fixture(name: &str) -> Result<Graph, GenError> {
    let g = match name {
        "k6" => complete(6),
        "k55" => complete_bipartite(5, 5),
        "pendant_k6" => pendant_clique(6),
        "pendant_k5" => pendant_clique(5),
        "icosahedron" => icosahedron(),
        "circulant_9_12" => circulant(9, &[1, 2]),
        "gadget_c" => gadget_b3_isolated_white(5),
        "gadget_i" => gadget_b3_isolated_white(4),
        "gadget_d" => gadget_double_isolated_special(5),
        "gadget_j" => gadget_double_isolated_special(4),
        "gadget_e4" => gadget_special_on_cycle(5, 4),
        "gadget_k4" => gadget_special_on_cycle(4, 4),
        "gadget_e7" => gadget_special_on_cycle(5, 7),
        "gadget_k7" => gadget_special_on_cycle(4, 7),
        "gadget_f" => gadget_double_special_pair(5),
        "gadget_l" => gadget_double_special_pair(4),
        _ => {
            return Err(GenError::UnknownFixture {
                name: name.to_string(),
            })
        }
    };
    Ok(g)
}

/// Documented seed set for fixtures that come with one: the gadgets are built
/// around an auxiliary dominated clique whose hub is the seed, and the
/// pendant cliques are meant to be explored from their clique apex.
pub fn fixture_seed(name: &str) -> Option<Vec<usize>> {
    let gadget_floor = |name: &str| match name {
        "gadget_c" | "gadget_d" | "gadget_e4" | "gadget_e7" | "gadget_f" => Some(5),
        "gadget_i" | "gadget_j" | "gadget_k4" | "gadget_k7" | "gadget_l" => Some(4),
        _ => None,
    };
    match name {
        "pendant_k6" | "pendant_k5" => Some(vec![0]),
        _ => {
            let floor = gadget_floor(name)?;
            let g = named_fixture(name).expect("known fixture");
            // the padding clique occupies the last floor+1 ids, hub first
            Some(vec![g.vertex_count() - floor - 1])
        }
    }
}

fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    Graph::from_edges(k, &edges).unwrap()
}

/// Sides `0..a` and `a..a+b`.
fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..(a + b) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Clique `{0, 1..k-1}` plus a pendant vertex `k` adjacent to `1..k-1`.
/// Vertex 0 is the apex whose choice leaves the pendant vertex isolated
/// white.
fn pendant_clique(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    for b in 1..k {
        edges.push((b, k));
    }
    Graph::from_edges(k + 1, &edges).unwrap()
}

/// Poles 0 and 11, rings 1..=5 and 6..=10 forming a pentagonal antiprism.
fn icosahedron() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
    for i in 0..5 {
        edges.push((1 + i, 1 + (i + 1) % 5)); // top ring
        edges.push((6 + i, 6 + (i + 1) % 5)); // bottom ring
        edges.push((1 + i, 6 + i));
        edges.push((1 + i, 6 + (i + 1) % 5));
        edges.push((11, 6 + i));
    }
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edges(12, &edges).unwrap()
}

fn circulant(n: usize, chords: &[usize]) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 0..n {
        for &c in chords {
            let w = (v + c) % n;
            edges.insert((v.min(w), v.max(w)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Incremental gadget assembly. The hub plus its clique are appended last so
/// the hub is always the unique maximum-degree vertex.
struct GadgetBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
    floor: usize,
    blues: Vec<usize>,
}

impl GadgetBuilder {
    fn new(floor: usize) -> Self {
        GadgetBuilder {
            n: 0,
            edges: Vec::new(),
            floor,
            blues: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        let v = self.n;
        self.n += 1;
        v
    }

    fn vertices(&mut self, k: usize) -> Vec<usize> {
        (0..k).map(|_| self.vertex()).collect()
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
    }

    /// Registers a blue vertex; it will be wired to the hub and padded with
    /// clique members up to the degree floor.
    fn blue(&mut self, v: usize) {
        self.blues.push(v);
    }

    /// A fresh leaf-class blue adjacent to exactly one white vertex.
    fn leaf_blue(&mut self, white: usize) -> usize {
        let b = self.vertex();
        self.edge(b, white);
        self.blue(b);
        b
    }

    fn leaf_blues(&mut self, white: usize, k: usize) {
        for _ in 0..k {
            self.leaf_blue(white);
        }
    }

    /// Appends the dominated padding clique, wires every registered blue to
    /// the hub and to clique members until it reaches the degree floor, and
    /// returns `(graph, seed)` where seed = `{hub}`.
    fn finish(mut self) -> (Graph, Vec<usize>) {
        let degree = |edges: &[(usize, usize)], v: usize| {
            edges.iter().filter(|&&(a, b)| a == v || b == v).count()
        };
        let clique = self.vertices(self.floor + 1);
        let hub = clique[0];
        for i in 0..clique.len() {
            for j in (i + 1)..clique.len() {
                self.edge(clique[i], clique[j]);
            }
        }
        for b in self.blues.clone() {
            self.edge(b, hub);
            let mut pad = 1;
            while degree(&self.edges, b) < self.floor {
                self.edge(b, clique[pad]);
                pad += 1;
            }
        }
        let g = Graph::from_edges(self.n, &self.edges).expect("gadget is simple");
        (g, vec![hub])
    }
}

/// Three isolated whites hanging off one three-white blue; seeding the hub
/// leaves that blue as the only move trigger.
fn gadget_b3_isolated_white(floor: usize) -> Graph {
    let mut b = GadgetBuilder::new(floor);
    let whites = b.vertices(3);
    let trigger = b.vertex();
    for &w in &whites {
        b.edge(trigger, w);
        b.leaf_blues(w, floor - 1);
    }
    b.blue(trigger);
    b.finish().0
}

/// One two-white blue adjacent to two isolated whites.
fn gadget_double_isolated_special(floor: usize) -> Graph {
    let mut b = GadgetBuilder::new(floor);
    let whites = b.vertices(2);
    let trigger = b.vertex();
    for &w in &whites {
        b.edge(trigger, w);
        b.leaf_blues(w, floor - 1);
    }
    b.blue(trigger);
    b.finish().0
}

/// A special blue bridging an isolated white and a white cycle of the given
/// length.
fn gadget_special_on_cycle(floor: usize, cycle_len: usize) -> Graph {
    let mut b = GadgetBuilder::new(floor);
    let isolated = b.vertex();
    let cycle = b.vertices(cycle_len);
    for i in 0..cycle_len {
        b.edge(cycle[i], cycle[(i + 1) % cycle_len]);
    }
    let trigger = b.vertex();
    b.edge(trigger, isolated);
    b.edge(trigger, cycle[0]);
    b.blue(trigger);
    b.leaf_blues(isolated, floor - 1);
    b.leaf_blues(cycle[0], floor - 3);
    for &c in &cycle[1..] {
        b.leaf_blues(c, floor - 2);
    }
    b.finish().0
}

/// An adjacent white pair whose two endpoints each carry a special blue
/// neighbor pointing at distinct isolated whites.
fn gadget_double_special_pair(floor: usize) -> Graph {
    let mut b = GadgetBuilder::new(floor);
    let isolated = b.vertices(2);
    let pair = b.vertices(2);
    b.edge(pair[0], pair[1]);
    let mut specials = Vec::new();
    for i in 0..2 {
        let s = b.vertex();
        b.edge(s, isolated[i]);
        b.edge(s, pair[i]);
        b.blue(s);
        specials.push(s);
        b.leaf_blues(isolated[i], floor - 1);
        b.leaf_blues(pair[i], floor - 2);
    }
    b.finish().0
}
