//! Six-coloring around a dominating triangle.
//!
//! When every triangle of a component dominates it, each outside vertex has
//! exactly one neighbor on the anchor triangle. The three attachment cells
//! each induce a matching; splitting every cell and pairing each corner with
//! the primed side of the preceding cell yields six classes.

use super::{
    require_connected, require_triangle, split_matching_cell, ClassBuilder, ColoringOutcome,
    EngineError, TheoremId, hv,
};
use crate::graph::{Graph, VertexSet};

pub fn color_thm2(g: &Graph, t: [usize; 3]) -> Result<ColoringOutcome, EngineError> {
    require_connected(g)?;
    require_triangle(g, t)?;
    let n = g.n();
    let base = VertexSet::from_slice(n, &t);

    let mut cells = [
        VertexSet::empty(n),
        VertexSet::empty(n),
        VertexSet::empty(n),
    ];
    let mut outside = VertexSet::full(n);
    outside.subtract(&base);
    for x in outside.iter() {
        let att = g.neighbors(x).intersection(&base);
        if att.len() != 1 {
            let mut vertices = vec![x];
            vertices.extend(att.iter());
            return Err(hv(
                "every vertex outside the anchor triangle must have exactly one neighbor in it",
                vertices,
            ));
        }
        let corner = att.first().expect("attachment is nonempty");
        let idx = t.iter().position(|&c| c == corner).expect("corner is in t");
        cells[idx].insert(x);
    }

    let a1 = split_matching_cell(g, &cells[0], "A1")?;
    let a2 = split_matching_cell(g, &cells[1], "A2")?;
    let a3 = split_matching_cell(g, &cells[2], "A3")?;
    let x1 = VertexSet::singleton(n, t[0]);
    let x2 = VertexSet::singleton(n, t[1]);
    let x3 = VertexSet::singleton(n, t[2]);

    let mut builder = ClassBuilder::new(g);
    builder.class(&[("A1'", &a1.primed), ("x3", &x3)]);
    builder.class(&[("A1''", &a1.double_primed)]);
    builder.class(&[("A2'", &a2.primed), ("x1", &x1)]);
    builder.class(&[("A2''", &a2.double_primed)]);
    builder.class(&[("A3'", &a3.primed), ("x2", &x2)]);
    builder.class(&[("A3''", &a3.double_primed)]);
    let (coloring, trace) = builder.finish(TheoremId::Thm2, "dominating", Some(t.to_vec()))?;
    Ok(ColoringOutcome {
        coloring,
        bound: 6,
        components: vec![trace],
    })
}
