//! Seeded instance generators and the split-graph reduction from vertex cover.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (ChaCha with
//! 8 rounds; the 64-bit seed is expanded to a 256-bit key by `rand_core`'s
//! PCG32-based `seed_from_u64`). Draws are consumed in the order documented
//! on each function, so a given `(parameters, seed)` pair produces the same
//! graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{find_induced, PatternGraph};
use crate::set::VertexSet;
use crate::validity::{Instance, Problem};

pub const REJECTION_BUDGET: usize = 10_000;
pub const REJECTION_MAX_ORDER: usize = 40;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`: one `gen_bool(p)` per pair `(u, v)`, `u < v`, in
/// lexicographic order.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    gnp(n, p, &mut rng_from_seed(seed))
}

/// Each vertex joins the set independently with probability `p`.
pub fn random_subset(n: usize, p: f64, seed: u64) -> VertexSet {
    let mut rng = rng_from_seed(seed);
    VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(p)))
}

/// A random cograph on `n >= 1` vertices.
///
/// Starts from `n` single-vertex pieces and repeatedly merges two pieces
/// chosen uniformly at random, joining them with probability 1/2 and
/// taking their disjoint union otherwise. The merge history is a random
/// full binary tree with `n` leaves.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "a cograph needs at least one vertex");
    let mut rng = rng_from_seed(seed);
    let mut pieces: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut edges = Vec::new();
    while pieces.len() > 1 {
        let i = rng.gen_range(0..pieces.len());
        let a = pieces.swap_remove(i);
        let j = rng.gen_range(0..pieces.len());
        let b = pieces.swap_remove(j);
        if rng.gen_bool(0.5) {
            for &u in &a {
                for &v in &b {
                    edges.push((u, v));
                }
            }
        }
        let mut merged = a;
        merged.extend(b);
        pieces.push(merged);
    }
    Graph::from_edges(n, edges).expect("cograph edges")
}

/// A random `(sP1+P3)`-free graph.
///
/// For `s >= 1` and `n <= 40`, draws `G(n, p)` repeatedly from one seeded
/// stream and returns the first draw without an induced `sP1+P3`, giving up
/// after [`REJECTION_BUDGET`] draws. `P3`-free graphs (`s = 0`) are exactly
/// disjoint unions of cliques, so those are sampled directly. Larger `n`
/// uses [`structured_in_class`]. Every result is re-checked before return.
pub fn random_in_class(n: usize, s: usize, p: f64, seed: u64) -> Result<Graph> {
    if s == 0 || n > REJECTION_MAX_ORDER {
        return structured_in_class(n, s, p, seed);
    }
    let pattern = PatternGraph::sp1_p3(s);
    let mut rng = rng_from_seed(seed);
    for _ in 0..REJECTION_BUDGET {
        let g = gnp(n, p, &mut rng);
        if find_induced(&g, &pattern).is_none() {
            return Ok(g);
        }
    }
    Err(Error::GiveUp {
        draws: REJECTION_BUDGET,
        diagnostics: format!(
            "no {}-free draw of G({n}, {p}); denser p accepts more often",
            pattern.name()
        ),
    })
}

/// Constructions that are `(sP1+P3)`-free by design, verified before return.
///
/// `s = 0`: a disjoint union of cliques, each vertex placed uniformly into
/// one of `k` buckets with `k` uniform in `1..=n`. `s >= 1`: the complement
/// of a random bipartite graph (halves split at a uniform point, each cross
/// pair an edge with probability `1 - p`). A bipartite graph has no
/// triangle, so its complement has no induced `P1+P3`.
pub fn structured_in_class(n: usize, s: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    let g = if s == 0 {
        let k = rng.gen_range(1..=n.max(1));
        let bucket: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if bucket[u] == bucket[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("cluster edges")
    } else {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let cut = rng.gen_range(0..=n);
        let (left, right) = order.split_at(cut);
        let mut edges = Vec::new();
        for &u in left {
            for &v in right {
                if rng.gen_bool(1.0 - p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
            .expect("bipartite edges")
            .complement()
    };
    let pattern = PatternGraph::sp1_p3(s);
    match find_induced(&g, &pattern) {
        None => Ok(g),
        Some(witness) => Err(Error::GiveUp {
            draws: 1,
            diagnostics: format!(
                "structured graph contains {} at {witness:?}",
                pattern.name()
            ),
        }),
    }
}

/// Builds the split graph whose minimum odd T-cycle transversal equals the
/// minimum vertex cover of `graph`.
///
/// Vertices `0..n` are the original vertices, made into a clique. Vertex
/// `n + i` stands for the `i`-th edge of `graph` in sorted order and is
/// adjacent to its two endpoints. The edge vertices are the terminals.
pub fn reduce_vc_to_soct_split(graph: &Graph) -> Instance {
    let n = graph.order();
    let original: Vec<(usize, usize)> = graph.edges().collect();
    let total = n + original.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for (i, &(u, v)) in original.iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    let g = Graph::from_edges(total, edges).expect("reduction edges");
    let terminals = VertexSet::from_vertices(total, n..total);
    Instance::new(g, terminals, Problem::Soct).expect("reduction terminals")
}

/// Maps a transversal of [`reduce_vc_to_soct_split`]`(graph)` to a vertex
/// cover of `graph` of no larger size: each edge vertex is replaced by one
/// of its endpoints.
pub fn project_soct_to_vc(graph: &Graph, transversal: &VertexSet) -> VertexSet {
    let n = graph.order();
    let original: Vec<(usize, usize)> = graph.edges().collect();
    let mut cover = VertexSet::new(n);
    for v in transversal.iter() {
        if v < n {
            cover.insert(v);
        } else {
            cover.insert(original[v - n].0);
        }
    }
    cover
}
