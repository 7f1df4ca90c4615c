//! Seeded families of small instances for cross-checking solvers against
//! the oracle. Instance `i` of a suite depends only on `(seed, i)`.

use rand::Rng;

use crate::generators::{gnp, random_cograph, random_in_class, rng_from_seed, structured_in_class};
use crate::graph::Graph;
use crate::recognition::{find_induced, PatternGraph};
use crate::set::VertexSet;
use crate::validity::{Instance, Problem};

fn instance_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (index as u64).wrapping_add(1)
}

fn random_terminals<R: Rng>(n: usize, rng: &mut R) -> VertexSet {
    let q = rng.gen_range(0.2..=0.9);
    VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(q)))
}

fn instance(graph: Graph, terminals: VertexSet, problem: Problem, s: Option<usize>) -> Instance {
    let mut inst = Instance::new(graph, terminals, problem).expect("suite terminals in range");
    inst.s = s;
    inst
}

/// Random cographs on `1..=max_n` vertices with random terminals.
pub fn cograph_instance(index: usize, max_n: usize, problem: Problem, seed: u64) -> Instance {
    let mut rng = rng_from_seed(instance_seed(seed, index));
    let n = rng.gen_range(1..=max_n);
    let g = random_cograph(n, rng.gen());
    let t = random_terminals(n, &mut rng);
    instance(g, t, problem, Some(0))
}

/// A star with `leaves` pendant vertices and `arms` paths of length two,
/// centre `0`.
fn spider(leaves: usize, arms: usize) -> Graph {
    let n = 1 + leaves + 2 * arms;
    let mut edges: Vec<(usize, usize)> = (1..=leaves + arms).map(|v| (0, v)).collect();
    for a in 0..arms {
        edges.push((1 + leaves + a, 1 + leaves + arms + a));
    }
    Graph::from_edges(n, edges).expect("spider edges")
}

/// Adds each non-edge independently with probability `p`.
fn perturb<R: Rng>(g: &Graph, p: f64, rng: &mut R) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(g.order(), edges).expect("perturbed edges")
}

/// Random `(sP1+P3)`-free graphs on `4..=max_n` vertices with random
/// terminals, mixing three sources: rejection-sampled `G(n, p)`, the
/// structured construction, and lightly perturbed spiders (large terminal
/// trees are otherwise rare).
pub fn sp1p3_instance(
    index: usize,
    s: usize,
    max_n: usize,
    problem: Problem,
    seed: u64,
) -> Instance {
    let mut rng = rng_from_seed(instance_seed(seed ^ (s as u64) << 32, index));
    let n = rng.gen_range(4..=max_n);
    let pattern = PatternGraph::sp1_p3(s);
    let graph = match rng.gen_range(0..10) {
        0..=4 if s > 0 => {
            let p = rng.gen_range(0.35..=0.95);
            random_in_class(n, s, p, rng.gen()).ok()
        }
        0..=6 => structured_in_class(n, s, rng.gen_range(0.1..=0.9), rng.gen()).ok(),
        _ => (0..50).find_map(|_| {
            let arms = rng.gen_range(0..=s.saturating_sub(1));
            let leaves = n.saturating_sub(1 + 2 * arms).max(1);
            let g = perturb(&spider(leaves, arms), rng.gen_range(0.0..0.15), &mut rng);
            find_induced(&g, &pattern).is_none().then_some(g)
        }),
    };
    let graph = graph.unwrap_or_else(|| {
        structured_in_class(n, s, 0.5, rng.gen()).expect("structured graphs are in class")
    });
    let n = graph.order();
    let t = random_terminals(n, &mut rng);
    instance(graph, t, problem, Some(s))
}

/// Random `(sP1+P4)`-free graphs on `4..=max_n` vertices (rejection-sampled
/// `G(n, p)`, falling back to cographs) with random terminals.
pub fn sp1p4_instance(
    index: usize,
    s: usize,
    max_n: usize,
    problem: Problem,
    seed: u64,
) -> Instance {
    let mut rng = rng_from_seed(instance_seed(seed ^ (s as u64) << 40, index));
    let n = rng.gen_range(4..=max_n);
    let pattern = PatternGraph::sp1_p4(s);
    let p = rng.gen_range(0.2..=0.9);
    let graph = (0..2000)
        .map(|_| gnp(n, p, &mut rng))
        .find(|g| find_induced(g, &pattern).is_none())
        .unwrap_or_else(|| random_cograph(n, rng.gen()));
    let t = random_terminals(n, &mut rng);
    instance(graph, t, problem, Some(s))
}

/// Arbitrary random graphs on `1..=max_n` vertices with random terminals.
pub fn gnp_instance(index: usize, max_n: usize, problem: Problem, seed: u64) -> Instance {
    let mut rng = rng_from_seed(instance_seed(seed, index));
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..=0.8);
    let g = gnp(n, p, &mut rng);
    let t = random_terminals(n, &mut rng);
    instance(g, t, problem, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic_and_in_class() {
        for i in 0..30 {
            for s in 0..3 {
                let a = sp1p3_instance(i, s, 12, Problem::Sfvs, 1);
                assert_eq!(a, sp1p3_instance(i, s, 12, Problem::Sfvs, 1));
                assert!(find_induced(&a.graph, &PatternGraph::sp1_p3(s)).is_none());
            }
            let c = sp1p4_instance(i, 1, 10, Problem::Svc, 2);
            assert!(find_induced(&c.graph, &PatternGraph::sp1_p4(1)).is_none());
        }
    }
}
