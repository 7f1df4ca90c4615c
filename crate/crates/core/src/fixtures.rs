//! Small named instances with known answers.
//!
//! Every fixture is tagged as an odd-cycle-transversal instance. Use
//! [`Instance::with_problem`] to ask a different question of the same graph.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::reduce_vc_to_soct_split;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::validity::{Instance, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    House,
    Petersen,
    Fig5P4,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::House, Fixture::Petersen, Fixture::Fig5P4];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::House => "house",
            Fixture::Petersen => "petersen",
            Fixture::Fig5P4 => "fig5_p4",
        }
    }

    pub fn instance(self) -> Instance {
        match self {
            Fixture::House => house(),
            Fixture::Petersen => petersen(),
            Fixture::Fig5P4 => fig5_p4(),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

pub fn fixture(name: &str) -> Result<Instance> {
    Ok(name.parse::<Fixture>()?.instance())
}

/// The house: a square `0-2-4-3` with apex `1` over the edge `0-2`.
/// The single terminal is the bottom-right corner `4`, which lies on the
/// odd 5-cycle through every vertex but on no triangle.
pub fn house() -> Instance {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (2, 4)])
        .expect("house edges");
    Instance::new(g, VertexSet::singleton(5, 4), Problem::Soct).expect("house terminals")
}

/// The Petersen graph. Outer cycle `0-1-2-3-4`, inner pentagram on
/// `5..10` with `i ~ i+2 (mod 5)`, spokes `k ~ k+5`. Terminals are the
/// four square vertices `{2, 3, 4, 5}`.
pub fn petersen() -> Instance {
    let mut edges = Vec::with_capacity(15);
    for k in 0..5 {
        edges.push((k, (k + 1) % 5));
        edges.push((5 + k, 5 + (k + 2) % 5));
        edges.push((k, k + 5));
    }
    let g = Graph::from_edges(10, edges).expect("petersen edges");
    Instance::new(g, VertexSet::from_vertices(10, [2, 3, 4, 5]), Problem::Soct)
        .expect("petersen terminals")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PetersenVariant {
    /// Uses one non-terminal.
    Left,
    /// Uses terminals only.
    Right,
}

/// The two three-vertex transversals drawn for [`petersen`]. Both leave a
/// spanning tree on the remaining seven vertices.
pub fn petersen_black_set(variant: PetersenVariant) -> VertexSet {
    match variant {
        PetersenVariant::Left => VertexSet::from_vertices(10, [1, 3, 5]),
        PetersenVariant::Right => VertexSet::from_vertices(10, [2, 4, 5]),
    }
}

/// The split-graph reduction applied to the path `0-1-2-3`: a 4-clique
/// `0..4` plus terminals `4, 5, 6` standing for the path's edges.
pub fn fig5_p4() -> Instance {
    reduce_vc_to_soct_split(&Graph::path(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let h = house();
        assert_eq!(
            (h.graph.order(), h.graph.size(), h.terminals.len()),
            (5, 6, 1)
        );
        let p = petersen();
        assert_eq!(
            (p.graph.order(), p.graph.size(), p.terminals.len()),
            (10, 15, 4)
        );
        assert!(p.graph.vertices().all(|v| p.graph.degree(v) == 3));
        let f = fig5_p4();
        assert_eq!(f.graph.order(), 7);
        assert!(f.graph.is_clique(&VertexSet::from_vertices(7, 0..4)));
        assert_eq!(f.terminals.to_vec(), vec![4, 5, 6]);
        assert!(f.terminals.iter().all(|t| f.graph.degree(t) == 2));
    }

    #[test]
    fn petersen_variants_match_drawing() {
        let p = petersen();
        let left = petersen_black_set(PetersenVariant::Left);
        let right = petersen_black_set(PetersenVariant::Right);
        assert!(!left.difference(&p.terminals).is_empty());
        assert!(right.is_subset(&p.terminals));
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(fixture("house").unwrap(), house());
        assert!(matches!(fixture("castle"), Err(Error::UnknownFixture(_))));
    }
}
