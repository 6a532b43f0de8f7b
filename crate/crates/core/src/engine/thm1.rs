//! Four-coloring around a non-dominating triangle.
//!
//! The graph is layered by distance from the anchor triangle. In this class
//! every first-layer vertex attaches to exactly one triangle corner, nothing
//! lies beyond the second layer, and the second layer is nonempty. The case
//! split is on whether the second layer contains an edge.

use super::{
    assert_independent, assert_no_edges, hv, require_connected, require_triangle,
    split_matching_cell, ClassBuilder, ColoringOutcome, EngineError, TheoremId,
};
use crate::graph::{Graph, VertexSet};
use crate::recognition::bfs_levels;

/// Finds the lexicographically first edge inside `[s]`.
fn first_internal_edge(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    for u in s.iter() {
        if let Some(v) = g.neighbors(u).intersection(s).iter().find(|&v| v > u) {
            return Some((u, v));
        }
    }
    None
}

pub fn color_thm1(g: &Graph, t: [usize; 3]) -> Result<ColoringOutcome, EngineError> {
    require_connected(g)?;
    require_triangle(g, t)?;
    let n = g.n();
    let base = VertexSet::from_slice(n, &t);
    if g.dominates(&base) {
        return Err(EngineError::Precondition(format!(
            "the anchor triangle {t:?} must not dominate the graph"
        )));
    }

    let levels = bfs_levels(g, &base).map_err(|e| EngineError::Precondition(e.to_string()))?;
    if levels.layers.len() > 2 {
        let v = levels.layers[2].first().expect("layers are nonempty");
        return Err(hv(
            "no vertex may lie at distance three or more from the anchor triangle",
            vec![v],
        ));
    }
    let n1 = &levels.layers[0];
    // A non-dominated vertex sits at distance two or more, so the second
    // layer exists once domination has been ruled out.
    let n2 = levels
        .layers
        .get(1)
        .cloned()
        .expect("a non-dominating anchor leaves a second layer");

    let mut cells = [
        VertexSet::empty(n),
        VertexSet::empty(n),
        VertexSet::empty(n),
    ];
    for x in n1.iter() {
        let att = g.neighbors(x).intersection(&base);
        if att.len() != 1 {
            let mut vertices = vec![x];
            vertices.extend(att.iter());
            return Err(hv(
                "a first-layer vertex must have exactly one neighbor in the anchor triangle",
                vertices,
            ));
        }
        let corner = att.first().expect("attachment is nonempty");
        let idx = t.iter().position(|&c| c == corner).expect("corner is in t");
        cells[idx].insert(x);
    }

    // Rotate the triangle so the distinguished first-layer vertex lands in
    // the cell of the first corner, then relabel cells to match.
    let rotate = |r: usize| -> ([usize; 3], [VertexSet; 3]) {
        (
            [t[r], t[(r + 1) % 3], t[(r + 2) % 3]],
            [
                cells[r].clone(),
                cells[(r + 1) % 3].clone(),
                cells[(r + 2) % 3].clone(),
            ],
        )
    };

    let mut builder;
    let anchor;
    let case;
    if let Some(edge) = first_internal_edge(g, &n2) {
        let x = n1
            .iter()
            .find(|&x| first_internal_edge(g, &g.neighbors(x).intersection(&n2)).is_some())
            .ok_or_else(|| {
                hv(
                    "some first-layer vertex must see both endpoints of a second-layer edge",
                    vec![edge.0, edge.1],
                )
            })?;
        let r = (0..3).find(|&i| cells[i].contains(x)).expect("x is in a cell");
        let (tt, a) = rotate(r);
        for other in [&a[1], &a[2]] {
            if let Some(y) = other.first() {
                return Err(hv(
                    "every first-layer vertex must attach at the anchor corner that reaches the second-layer edge",
                    vec![y, x],
                ));
            }
        }
        let a1 = split_matching_cell(g, &a[0], "A1")?;
        let n2s = split_matching_cell(g, &n2, "N2")?;
        let v = [
            VertexSet::singleton(n, tt[0]),
            VertexSet::singleton(n, tt[1]),
            VertexSet::singleton(n, tt[2]),
        ];
        builder = ClassBuilder::new(g);
        builder.class(&[("v1", &v[0]), ("N2'", &n2s.primed)]);
        builder.class(&[("v2", &v[1]), ("A1'", &a1.primed)]);
        builder.class(&[("v3", &v[2]), ("A1''", &a1.double_primed)]);
        builder.class(&[("N2''", &n2s.double_primed)]);
        anchor = tt;
        case = "n2-edge";
    } else {
        let x = n1
            .iter()
            .find(|&x| !g.neighbors(x).intersection(&n2).is_empty())
            .expect("every second-layer vertex has a first-layer neighbor");
        let r = (0..3).find(|&i| cells[i].contains(x)).expect("x is in a cell");
        let (tt, a) = rotate(r);
        let away_rule =
            "a first-layer cell away from the second-layer attachment must be independent";
        assert_independent(g, &a[1], away_rule)?;
        assert_independent(g, &a[2], away_rule)?;
        let a1 = split_matching_cell(g, &a[0], "A1")?;
        assert_no_edges(
            g,
            &a1.double_primed,
            &n2,
            "a first-layer vertex matched inside its cell must not reach the second layer",
        )?;
        let v = [
            VertexSet::singleton(n, tt[0]),
            VertexSet::singleton(n, tt[1]),
            VertexSet::singleton(n, tt[2]),
        ];
        builder = ClassBuilder::new(g);
        builder.class(&[("v1", &v[0]), ("A2", &a[1])]);
        builder.class(&[("v2", &v[1]), ("A1'", &a1.primed)]);
        builder.class(&[("v3", &v[2]), ("A1''", &a1.double_primed), ("N2", &n2)]);
        builder.class(&[("A3", &a[2])]);
        anchor = tt;
        case = "n2-independent";
    }

    let (coloring, trace) = builder.finish(TheoremId::Thm1, case, Some(anchor.to_vec()))?;
    Ok(ColoringOutcome {
        coloring,
        bound: 4,
        components: vec![trace],
    })
}
