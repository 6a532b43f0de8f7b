//! Exhaustive enumeration of graphs up to isomorphism, and the canonical
//! certificate backing it.
//!
//! The certificate is the lexicographically largest packing of the upper
//! adjacency triangle (column-major) over all vertex orderings. It is found
//! by a frontier search: orderings are grown one position at a time, only
//! orderings achieving the maximal next column survive, and prefixes that
//! look identical to every unplaced vertex are merged. Two graphs on the
//! same number of vertices are isomorphic iff their certificates match.
//!
//! Enumeration walks orders upward: every graph on n+1 vertices is some
//! graph on n vertices plus one vertex with an arbitrary neighborhood, so
//! extending each canonical n-graph in all 2^n ways and re-canonicalizing
//! visits every isomorphism class.

use crate::graph::Graph;
use std::collections::{BTreeSet, HashSet};

const MAX_CERT_VERTICES: usize = 16;

fn rows_of(g: &Graph) -> Vec<u16> {
    assert!(
        g.n() <= MAX_CERT_VERTICES,
        "certificates support at most {MAX_CERT_VERTICES} vertices"
    );
    (0..g.n())
        .map(|v| {
            let mut row = 0u16;
            for w in g.neighbors(v).iter() {
                row |= 1 << w;
            }
            row
        })
        .collect()
}

fn cert_of_rows(n: usize, rows: &[u16]) -> u128 {
    let mut cert: u128 = 0;
    // orderings still in play, as position -> original vertex
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for k in 0..n {
        let mut best_seg: u32 = 0;
        let mut have_seg = false;
        let mut next: Vec<Vec<u8>> = Vec::new();
        let mut seen: HashSet<(u16, [u16; MAX_CERT_VERTICES])> = HashSet::new();
        for perm in &frontier {
            let used: u16 = perm.iter().fold(0, |m, &v| m | 1 << v);
            for v in 0..n as u8 {
                if used >> v & 1 == 1 {
                    continue;
                }
                let mut seg: u32 = 0;
                for &p in perm.iter() {
                    seg = seg << 1 | u32::from(rows[v as usize] >> p & 1 == 1);
                }
                if !have_seg || seg > best_seg {
                    have_seg = true;
                    best_seg = seg;
                    next.clear();
                    seen.clear();
                } else if seg < best_seg {
                    continue;
                }
                let mut new_perm = perm.clone();
                new_perm.push(v);
                let new_used = used | 1 << v;
                // prefixes are interchangeable when every unplaced vertex
                // attaches to them identically
                let mut profile = [0u16; MAX_CERT_VERTICES];
                for w in 0..n as u8 {
                    if new_used >> w & 1 == 1 {
                        continue;
                    }
                    let mut bits = 0u16;
                    for &p in &new_perm {
                        bits = bits << 1 | u16::from(rows[w as usize] >> p & 1 == 1);
                    }
                    profile[w as usize] = bits;
                }
                if seen.insert((new_used, profile)) {
                    next.push(new_perm);
                }
            }
        }
        cert = cert << k | u128::from(best_seg);
        frontier = next;
    }
    cert
}

/// Canonical certificate; equal iff isomorphic (among graphs of equal
/// order). Supports n <= 16.
pub fn canonical_id(g: &Graph) -> u128 {
    cert_of_rows(g.n(), &rows_of(g))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_id(a) == canonical_id(b)
}

fn graph_from_cert(n: usize, cert: u128) -> Graph {
    let mut g = Graph::empty(n);
    let mut shift = n * (n - 1) / 2;
    for k in 1..n {
        shift -= k;
        let seg = (cert >> shift) as u64 & ((1u64 << k) - 1);
        for i in 0..k {
            if seg >> (k - 1 - i) & 1 == 1 {
                g.add_edge(i, k);
            }
        }
    }
    g
}

/// All graphs on exactly `n` vertices, one per isomorphism class, in
/// certificate order. Intended for n <= 8.
pub fn enumerate_all(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "enumeration starts at one vertex");
    let mut certs: BTreeSet<u128> = BTreeSet::new();
    certs.insert(0); // the one-vertex graph
    for order in 2..=n {
        let mut next: BTreeSet<u128> = BTreeSet::new();
        for &cert in &certs {
            let parent = graph_from_cert(order - 1, cert);
            let mut rows = rows_of(&parent);
            rows.push(0);
            let new = order - 1;
            for mask in 0u16..1 << new {
                rows[new] = mask;
                for v in 0..new {
                    if mask >> v & 1 == 1 {
                        rows[v] |= 1 << new;
                    } else {
                        rows[v] &= !(1 << new);
                    }
                }
                next.insert(cert_of_rows(order, &rows));
            }
        }
        certs = next;
    }
    certs
        .into_iter()
        .map(|cert| graph_from_cert(n, cert))
        .collect()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Vec<Graph> {
    enumerate_all(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::PatternName;

    #[test]
    fn certificate_is_label_invariant() {
        // C5 drawn two ways
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(isomorphic(&a, &b));
        let p5 = PatternName::P5.reference();
        assert!(!isomorphic(&a, &p5));
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        let c5 = PatternName::C5.reference();
        assert!(isomorphic(&c5, &c5.complement()));
        let c6 = PatternName::C6.reference();
        assert!(!isomorphic(&c6, &c6.complement()));
    }

    #[test]
    fn mycielskian_of_an_edge_is_the_five_cycle() {
        let m = PatternName::P2.reference().mycielskian();
        assert!(isomorphic(&m, &PatternName::C5.reference()));
    }

    #[test]
    fn counts_match_the_catalog() {
        // graphs on n vertices up to isomorphism, and connected ones
        let all: Vec<usize> = (1..=7).map(|n| enumerate_all(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7).map(|n| enumerate_connected(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn order_eight_counts() {
        let all = enumerate_all(8);
        assert_eq!(all.len(), 12346);
        assert_eq!(
            all.iter().filter(|g| g.is_connected()).count(),
            11117
        );
    }

    #[test]
    fn enumerated_graphs_are_pairwise_nonisomorphic() {
        let graphs = enumerate_all(5);
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(!isomorphic(a, b));
            }
        }
    }
}
