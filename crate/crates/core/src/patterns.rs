//! The fixed catalog of small patterns the recognizer searches for.
//!
//! Each pattern has one reference labeling; a witness is an ordered tuple of
//! host vertices matching that labeling position by position (induced: edges
//! and non-edges both must agree).

use crate::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternName {
    P2,
    P3,
    P4,
    P5,
    P6,
    /// Disjoint union of an edge and a path on three vertices.
    P2uP3,
    C4,
    C5,
    C6,
    K3,
    K4,
    /// K4 minus one edge; positions 0 and 2 are the nonadjacent pair.
    Diamond,
    /// Triangle 1-2-4 with pendants 0 on 1 and 3 on 2.
    Bull,
}

pub const ALL_PATTERNS: [PatternName; 13] = [
    PatternName::P2,
    PatternName::P3,
    PatternName::P4,
    PatternName::P5,
    PatternName::P6,
    PatternName::P2uP3,
    PatternName::C4,
    PatternName::C5,
    PatternName::C6,
    PatternName::K3,
    PatternName::K4,
    PatternName::Diamond,
    PatternName::Bull,
];

impl PatternName {
    pub fn order(self) -> usize {
        use PatternName::*;
        match self {
            P2 => 2,
            P3 | K3 => 3,
            P4 | C4 | K4 | Diamond => 4,
            P5 | P2uP3 | C5 | Bull => 5,
            P6 | C6 => 6,
        }
    }

    /// The reference labeling as a concrete graph.
    pub fn reference(self) -> Graph {
        use PatternName::*;
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            P2 => (2, &[(0, 1)]),
            P3 => (3, &[(0, 1), (1, 2)]),
            P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            P5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            P6 => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
            P2uP3 => (5, &[(0, 1), (2, 3), (3, 4)]),
            C4 => (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            C5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            C6 => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
            K3 => (3, &[(0, 1), (1, 2), (2, 0)]),
            K4 => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            Diamond => (4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]),
            Bull => (5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
        };
        Graph::from_edges(n, edges).expect("reference patterns are valid")
    }

    pub fn as_str(self) -> &'static str {
        use PatternName::*;
        match self {
            P2 => "P2",
            P3 => "P3",
            P4 => "P4",
            P5 => "P5",
            P6 => "P6",
            P2uP3 => "P2uP3",
            C4 => "C4",
            C5 => "C5",
            C6 => "C6",
            K3 => "K3",
            K4 => "K4",
            Diamond => "diamond",
            Bull => "bull",
        }
    }
}

impl std::fmt::Display for PatternName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An induced copy of `pattern`: `vertices[i]` plays reference position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pattern: PatternName,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Checks the tuple against the reference labeling of its pattern.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let pat = self.pattern.reference();
        let vs = &self.vertices;
        if vs.len() != pat.n() {
            return false;
        }
        for i in 0..vs.len() {
            if vs[i] >= g.n() {
                return false;
            }
            for j in i + 1..vs.len() {
                if vs[i] == vs[j] || g.has_edge(vs[i], vs[j]) != pat.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}
