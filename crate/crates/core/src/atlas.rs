//! Named graphs used as fixtures, counterexample checks, and corpus seeds.

use crate::graph::Graph;
use crate::patterns::PatternName;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AtlasError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("{name}({n}) is out of range; {name} needs n >= {min}")]
    InvalidOrder {
        name: &'static str,
        n: usize,
        min: usize,
    },
    #[error("`{0}` is malformed; expected `name` or `name(n)`")]
    BadSyntax(String),
}

pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete edges are valid")
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are valid")
}

/// Vertices are the 16 vectors of F_2^4; u ~ v iff u xor v is one of the
/// four unit vectors or the all-ones vector. Triangle-free, 5-regular,
/// chromatic number 4.
pub fn clebsch() -> Graph {
    let mut edges = Vec::new();
    for u in 0..16usize {
        for v in u + 1..16 {
            if matches!(u ^ v, 1 | 2 | 4 | 8 | 15) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(16, &edges).expect("clebsch edges are valid")
}

/// Mycielskian of the 5-cycle: the smallest triangle-free graph with
/// chromatic number 4.
pub fn grotzsch() -> Graph {
    cycle(5).mycielskian()
}

/// Intersection graph of the 27 lines on a cubic surface: vertices
/// a_1..a_6 (ids 0..5), b_1..b_6 (ids 6..11), c_{ij} for i < j (ids
/// 12..26 in lexicographic pair order). Two lines are adjacent iff they
/// meet: a_i ~ b_j for i != j, a_i ~ c_jk and b_i ~ c_jk for i in {j, k},
/// and c_ij ~ c_kl for disjoint pairs. Strongly regular (27, 10, 1, 5);
/// every edge lies in exactly one triangle, so the graph is diamond-free
/// and K4-free, yet it needs 6 colors.
pub fn schlafli_complement() -> Graph {
    let mut pair_id = [[0usize; 6]; 6];
    let mut next = 12;
    for i in 0..6 {
        for j in i + 1..6 {
            pair_id[i][j] = next;
            next += 1;
        }
    }
    let a = |i: usize| i;
    let b = |i: usize| 6 + i;
    let c = |i: usize, j: usize| pair_id[i.min(j)][i.max(j)];

    let mut edges = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                continue;
            }
            edges.push((a(i), b(j)));
            edges.push((a(i), c(i, j)));
            edges.push((b(i), c(i, j)));
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for k in 0..6 {
                for l in k + 1..6 {
                    if (i, j) < (k, l) && i != k && i != l && j != k && j != l {
                        edges.push((c(i, j), c(k, l)));
                    }
                }
            }
        }
    }
    Graph::from_edges(27, &edges).expect("line intersection edges are valid")
}

/// Looks up a graph by name, e.g. `bull`, `path(6)`, `schlafli_complement`.
pub fn named_graph(name: &str) -> Result<Graph, AtlasError> {
    let name = name.trim();
    let (base, arg) = match name.find('(') {
        Some(open) => {
            let Some(inner) = name[open + 1..].strip_suffix(')') else {
                return Err(AtlasError::BadSyntax(name.to_string()));
            };
            let n: usize = inner
                .trim()
                .parse()
                .map_err(|_| AtlasError::BadSyntax(name.to_string()))?;
            (&name[..open], Some(n))
        }
        None => (name, None),
    };
    let need = |min: usize, build: fn(usize) -> Graph, label: &'static str| match arg {
        Some(n) if n >= min => Ok(build(n)),
        Some(n) => Err(AtlasError::InvalidOrder {
            name: label,
            n,
            min,
        }),
        None => Err(AtlasError::BadSyntax(name.to_string())),
    };
    match base {
        "path" => need(1, path, "path"),
        "cycle" => need(3, cycle, "cycle"),
        "complete" => need(1, complete, "complete"),
        _ if arg.is_some() => Err(AtlasError::UnknownName(name.to_string())),
        "diamond" => Ok(PatternName::Diamond.reference()),
        "bull" => Ok(PatternName::Bull.reference()),
        "p2up3" => Ok(PatternName::P2uP3.reference()),
        "petersen" => Ok(petersen()),
        "clebsch" => Ok(clebsch()),
        "grotzsch" => Ok(grotzsch()),
        "schlafli_complement" => Ok(schlafli_complement()),
        _ => Err(AtlasError::UnknownName(name.to_string())),
    }
}

/// Names accepted by [`named_graph`]; parameterized families shown with a
/// placeholder.
pub const NAMED_GRAPHS: [&str; 10] = [
    "path(n)",
    "cycle(n)",
    "complete(n)",
    "diamond",
    "bull",
    "p2up3",
    "petersen",
    "clebsch",
    "grotzsch",
    "schlafli_complement",
];
