//! Induced-pattern search and class recognition.
//!
//! Every finder enumerates ordered tuples in lexicographic order and stops
//! at the first match, so the returned witness is the lexicographically
//! smallest one and `None` is a proof that no induced copy exists. Each
//! pattern family gets its own search: candidate sets are built from
//! neighborhood bit masks, so the non-adjacency constraints prune before
//! branching.

use crate::graph::{Graph, VertexSet};
use crate::patterns::{PatternName, Witness};
use thiserror::Error;

/// Lexicographically smallest induced copy of `pattern` in `g`, if any.
pub fn find_induced(g: &Graph, pattern: PatternName) -> Option<Witness> {
    use PatternName::*;
    let vertices = match pattern {
        P2 => find_path(g, 2),
        P3 => find_path(g, 3),
        P4 => find_path(g, 4),
        P5 => find_path(g, 5),
        P6 => find_path(g, 6),
        C4 => find_cycle(g, 4),
        C5 => find_cycle(g, 5),
        C6 => find_cycle(g, 6),
        K3 => find_clique(g, 3),
        K4 => find_clique(g, 4),
        Diamond => find_diamond(g),
        Bull => find_bulls(g).next().map(|b| b.to_vec()),
        P2uP3 => find_p2up3(g),
    }?;
    let w = Witness { pattern, vertices };
    debug_assert!(w.holds_in(g));
    Some(w)
}

/// Candidates for the next tuple position: neighbors of everything in
/// `adjacent`, non-neighbors of everything in `nonadjacent`, skipping
/// vertices already used.
fn candidates(g: &Graph, used: &[usize], adjacent: &[usize], nonadjacent: &[usize]) -> VertexSet {
    let mut cand = match adjacent.first() {
        Some(&v) => g.neighbors(v).clone(),
        None => VertexSet::full(g.n()),
    };
    for &v in adjacent.iter().skip(1) {
        cand.intersect_with(g.neighbors(v));
    }
    for &v in nonadjacent {
        cand.subtract(g.neighbors(v));
        cand.remove(v);
    }
    for &v in used {
        cand.remove(v);
    }
    cand
}

fn find_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, tuple: &mut Vec<usize>, k: usize) -> bool {
        if tuple.len() == k {
            return true;
        }
        let last = tuple.len() - 1;
        let cand = candidates(g, tuple, &tuple[last..], &tuple[..last]);
        for v in cand.iter() {
            tuple.push(v);
            if extend(g, tuple, k) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    for v0 in 0..g.n() {
        let mut tuple = vec![v0];
        if extend(g, &mut tuple, k) {
            return Some(tuple);
        }
    }
    None
}

fn find_cycle(g: &Graph, k: usize) -> Option<Vec<usize>> {
    debug_assert!(k >= 4);
    fn extend(g: &Graph, tuple: &mut Vec<usize>, k: usize) -> bool {
        let i = tuple.len();
        if i == k {
            return true;
        }
        let cand = if i < k - 1 {
            // interior position: adjacent to the previous vertex only
            candidates(g, tuple, &tuple[i - 1..], &tuple[..i - 1])
        } else {
            // closing position: adjacent to both ends, nothing in between
            candidates(g, tuple, &[tuple[i - 1], tuple[0]], &tuple[1..i - 1])
        };
        for v in cand.iter() {
            tuple.push(v);
            if extend(g, tuple, k) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    for v0 in 0..g.n() {
        let mut tuple = vec![v0];
        if extend(g, &mut tuple, k) {
            return Some(tuple);
        }
    }
    None
}

fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    // the smallest witness of a clique is sorted, so only extend upward
    fn extend(g: &Graph, tuple: &mut Vec<usize>, common: &VertexSet, k: usize) -> bool {
        if tuple.len() == k {
            return true;
        }
        for v in common.iter() {
            if v <= *tuple.last().unwrap() {
                continue;
            }
            tuple.push(v);
            let next = common.intersection(g.neighbors(v));
            if extend(g, tuple, &next, k) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    for v0 in 0..g.n() {
        let mut tuple = vec![v0];
        if extend(g, &mut tuple, g.neighbors(v0), k) {
            return Some(tuple);
        }
    }
    None
}

/// Diamond positions (a, b, c, d): edges ab, bc, cd, da, bd; a and c
/// nonadjacent. d is a common neighbor of all three earlier picks.
fn find_diamond(g: &Graph) -> Option<Vec<usize>> {
    for a in 0..g.n() {
        for b in g.neighbors(a).iter() {
            let c_cand = candidates(g, &[a, b], &[b], &[a]);
            for c in c_cand.iter() {
                let mut d_cand = g.neighbors(a).intersection(g.neighbors(b));
                d_cand.intersect_with(g.neighbors(c));
                if let Some(d) = d_cand.first() {
                    return Some(vec![a, b, c, d]);
                }
            }
        }
    }
    None
}

fn find_p2up3(g: &Graph) -> Option<Vec<usize>> {
    for a in 0..g.n() {
        for b in g.neighbors(a).iter() {
            // the path lives outside N[a] and N[b]
            let mut allowed = VertexSet::full(g.n());
            allowed.subtract(g.neighbors(a));
            allowed.subtract(g.neighbors(b));
            allowed.remove(a);
            allowed.remove(b);
            for c in allowed.iter() {
                let d_cand = allowed.intersection(g.neighbors(c));
                for d in d_cand.iter() {
                    let mut e_cand = allowed.intersection(g.neighbors(d));
                    e_cand.subtract(g.neighbors(c));
                    e_cand.remove(c);
                    if let Some(e) = e_cand.first() {
                        return Some(vec![a, b, c, d, e]);
                    }
                }
            }
        }
    }
    None
}

/// All induced bulls, one tuple per copy, in lexicographic order.
///
/// Positions: pendant, hinge, hinge, pendant, horn tip; the bull's only
/// nontrivial automorphism reverses the tuple's first four entries, so
/// requiring `tuple[0] < tuple[3]` keeps exactly one labeling per copy.
/// The first yielded tuple is the lexicographically smallest witness.
pub fn find_bulls(g: &Graph) -> impl Iterator<Item = [usize; 5]> + '_ {
    let mut out = Vec::new();
    for v1 in 0..g.n() {
        for v2 in g.neighbors(v1).iter() {
            let v3_cand = candidates(g, &[v1, v2], &[v2], &[v1]);
            for v3 in v3_cand.iter() {
                let v4_cand = candidates(g, &[v1, v2, v3], &[v3], &[v1, v2]);
                for v4 in v4_cand.iter() {
                    if v4 < v1 {
                        continue;
                    }
                    let mut v5_cand = g.neighbors(v2).intersection(g.neighbors(v3));
                    v5_cand.subtract(g.neighbors(v1));
                    v5_cand.subtract(g.neighbors(v4));
                    v5_cand.remove(v1);
                    v5_cand.remove(v4);
                    for v5 in v5_cand.iter() {
                        out.push([v1, v2, v3, v4, v5]);
                    }
                }
            }
        }
    }
    out.into_iter()
}

/// Triangles as sorted triples, in lexicographic order.
pub fn find_triangles(g: &Graph) -> impl Iterator<Item = [usize; 3]> + '_ {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in g.neighbors(a).iter() {
            if b <= a {
                continue;
            }
            let common = g.neighbors(a).intersection(g.neighbors(b));
            for c in common.iter() {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out.into_iter()
}

/// First triangle (in lexicographic order) whose closed neighborhood does
/// not cover the whole graph.
pub fn find_nondominating_triangle(g: &Graph) -> Option<[usize; 3]> {
    find_triangles(g).find(|t| !g.dominates(&VertexSet::from_slice(g.n(), t)))
}

pub fn find_c5(g: &Graph) -> Option<Witness> {
    find_induced(g, PatternName::C5)
}

/// Freeness summary for the pattern set the coloring routines care about.
#[derive(Debug, Clone)]
pub struct ClassifyReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub p6: Option<Witness>,
    pub p2up3: Option<Witness>,
    pub diamond: Option<Witness>,
    pub k4: Option<Witness>,
    pub bull: Option<Witness>,
    pub c5: Option<Witness>,
}

impl ClassifyReport {
    pub fn p6_free(&self) -> bool {
        self.p6.is_none()
    }
    pub fn p2up3_free(&self) -> bool {
        self.p2up3.is_none()
    }
    pub fn diamond_free(&self) -> bool {
        self.diamond.is_none()
    }
    pub fn k4_free(&self) -> bool {
        self.k4.is_none()
    }
    pub fn bull_free(&self) -> bool {
        self.bull.is_none()
    }
    pub fn c5_free(&self) -> bool {
        self.c5.is_none()
    }

    /// Input class of the six-color pipeline.
    pub fn is_p6_diamond_k4_free(&self) -> bool {
        self.p6_free() && self.diamond_free() && self.k4_free()
    }

    /// Input class of the four-color pipeline.
    pub fn is_p2up3_diamond_k4_free(&self) -> bool {
        self.p2up3_free() && self.diamond_free() && self.k4_free()
    }

    /// First violated pattern among the six-color class requirements.
    pub fn p6_class_violation(&self) -> Option<&Witness> {
        [&self.p6, &self.diamond, &self.k4]
            .into_iter()
            .find_map(|w| w.as_ref())
    }

    pub fn p2up3_class_violation(&self) -> Option<&Witness> {
        [&self.p2up3, &self.diamond, &self.k4]
            .into_iter()
            .find_map(|w| w.as_ref())
    }
}

pub fn classify(g: &Graph) -> ClassifyReport {
    ClassifyReport {
        n: g.n(),
        m: g.edge_count(),
        connected: g.is_connected(),
        p6: find_induced(g, PatternName::P6),
        p2up3: find_induced(g, PatternName::P2uP3),
        diamond: find_induced(g, PatternName::Diamond),
        k4: find_induced(g, PatternName::K4),
        bull: find_induced(g, PatternName::Bull),
        c5: find_induced(g, PatternName::C5),
    }
}

/// One broken neighborhood rule, with the vertices that break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleViolation {
    pub rule: &'static str,
    pub vertices: Vec<usize>,
}

/// Checks the four neighborhood facts that hold in every (diamond, K4)-free
/// graph. The list is empty exactly when the graph is (diamond, K4)-free:
/// a diamond or K4 always makes two adjacent vertices share two neighbors,
/// and every rule here follows from freeness. One violation is reported per
/// offending site (per triangle and outside vertex, per vertex and
/// neighbor, per vertex pair).
pub fn neighborhood_rule_violations(g: &Graph) -> Vec<RuleViolation> {
    let mut out = Vec::new();
    for t in find_triangles(g) {
        let ts = VertexSet::from_slice(g.n(), &t);
        for x in 0..g.n() {
            if ts.contains(x) {
                continue;
            }
            if g.neighbors(x).intersection(&ts).len() >= 2 {
                let mut vertices = vec![x];
                vertices.extend(t);
                out.push(RuleViolation {
                    rule: "a vertex outside a triangle must have at most one neighbor in it",
                    vertices,
                });
            }
        }
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for a in nb.iter() {
            let within = g.neighbors(a).intersection(nb);
            if within.len() >= 2 {
                let mut vertices = vec![v, a];
                vertices.extend(within.iter().take(2));
                out.push(RuleViolation {
                    rule: "a neighborhood must induce only disjoint edges and isolated vertices",
                    vertices,
                });
            }
        }
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if g.has_edge(u, v) {
                if common.len() >= 2 {
                    let mut vertices = vec![u, v];
                    vertices.extend(common.iter().take(2));
                    out.push(RuleViolation {
                        rule: "adjacent vertices must share at most one neighbor",
                        vertices,
                    });
                }
            } else if let Some(a) = common
                .iter()
                .find(|&a| !g.neighbors(a).intersection(&common).is_empty())
            {
                let b = g
                    .neighbors(a)
                    .intersection(&common)
                    .first()
                    .expect("checked nonempty");
                out.push(RuleViolation {
                    rule: "nonadjacent vertices must share an independent set of neighbors",
                    vertices: vec![u, v, a.min(b), a.max(b)],
                });
            }
        }
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LevelsError {
    #[error("level decomposition needs a nonempty base")]
    EmptyBase,
    #[error("base capacity {cap} does not match graph order {n}")]
    CapacityMismatch { cap: usize, n: usize },
    #[error("vertex {v} is unreachable from the base")]
    Unreachable { v: usize },
}

/// Distance layers around a base set: `layers[j]` holds the vertices at
/// distance `j + 1` from the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub base: VertexSet,
    pub layers: Vec<VertexSet>,
}

impl LevelDecomposition {
    /// Number of the layer containing `v`, or `None` for base vertices.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(v))
    }
}

/// BFS layers from `base`. Errs if any vertex of the graph is unreachable,
/// naming the smallest such vertex.
pub fn bfs_levels(g: &Graph, base: &VertexSet) -> Result<LevelDecomposition, LevelsError> {
    if base.capacity() != g.n() {
        return Err(LevelsError::CapacityMismatch {
            cap: base.capacity(),
            n: g.n(),
        });
    }
    if base.is_empty() {
        return Err(LevelsError::EmptyBase);
    }
    let mut reached = base.clone();
    let mut frontier = base.clone();
    let mut layers = Vec::new();
    loop {
        let mut next = g.neighborhood_of_set(&frontier);
        next.subtract(&reached);
        if next.is_empty() {
            break;
        }
        reached.union_with(&next);
        layers.push(next.clone());
        frontier = next;
    }
    if reached.len() != g.n() {
        let v = VertexSet::full(g.n())
            .difference(&reached)
            .first()
            .expect("some vertex is missing");
        return Err(LevelsError::Unreachable { v });
    }
    Ok(LevelDecomposition {
        base: base.clone(),
        layers,
    })
}
