//! Pipeline entry points.
//!
//! The public functions here pick the right construction per connected
//! component and stitch the results back together in the input graph's
//! vertex ids. The checked variants reject inputs outside the certified
//! class up front; the trusted variants skip that scan and rely on the
//! constructions' own hypothesis checks.

use super::{
    color_thm1, color_thm2, color_thm4, color_thm5, hv, oracle_trace, ColoringOutcome,
    ComponentTrace, EngineError, TheoremId,
};
use crate::graph::Graph;
use crate::oracle::{is_k_colorable, Budget, Coloring};
use crate::recognition::{classify, find_bulls, find_nondominating_triangle, find_triangles};

fn lift(vertices: &mut [usize], map: &[usize]) {
    for v in vertices.iter_mut() {
        *v = map[*v];
    }
}

fn lift_error(err: EngineError, map: &[usize]) -> EngineError {
    match err {
        EngineError::ClassViolation(mut w) => {
            lift(&mut w.vertices, map);
            EngineError::ClassViolation(w)
        }
        EngineError::HypothesisViolation { rule, mut vertices } => {
            lift(&mut vertices, map);
            EngineError::HypothesisViolation { rule, vertices }
        }
        other => other,
    }
}

fn lift_trace(trace: &mut ComponentTrace, map: &[usize]) {
    lift(&mut trace.vertices, map);
    if let Some(anchor) = trace.anchor.as_mut() {
        lift(anchor, map);
    }
    for class in trace.classes.iter_mut() {
        lift(&mut class.vertices, map);
    }
}

/// Runs `f` on every connected component. Colors are shared across
/// components, the bound is the worst component's bound, and every error
/// witness and trace is translated back to the input graph's vertex ids.
fn per_component(
    g: &Graph,
    f: impl Fn(&Graph) -> Result<ColoringOutcome, EngineError>,
) -> Result<ColoringOutcome, EngineError> {
    let comps = g.components();
    if comps.len() == 1 {
        return f(g);
    }
    let mut assignment = vec![0u32; g.n()];
    let mut k = 0u32;
    let mut bound = 0usize;
    let mut components = Vec::with_capacity(comps.len());
    for comp in &comps {
        let map = comp.to_vec();
        let sub = g.induced_subgraph(comp).expect("component of this graph");
        let out = f(&sub).map_err(|e| lift_error(e, &map))?;
        for (i, &v) in map.iter().enumerate() {
            assignment[v] = out.coloring.assignment[i];
        }
        k = k.max(out.coloring.k);
        bound = bound.max(out.bound);
        for mut trace in out.components {
            lift_trace(&mut trace, &map);
            components.push(trace);
        }
    }
    Ok(ColoringOutcome {
        coloring: Coloring { k, assignment },
        bound,
        components,
    })
}

/// Exact search restricted to four colors, for components with no triangle
/// at all. Failure is reported as a hypothesis violation because such a
/// component outside four colors cannot lie in the certified class.
fn triangle_free_oracle(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    for k in 1..=4 {
        if let Some(coloring) = is_k_colorable(g, k, budget)? {
            let trace = oracle_trace(g, &coloring, TheoremId::TriangleFreeOracle, "triangle-free");
            return Ok(ColoringOutcome {
                coloring,
                bound: 4,
                components: vec![trace],
            });
        }
    }
    Err(hv(
        "a triangle-free member must admit a proper four-coloring",
        (0..g.n()).collect(),
    ))
}

fn color_component_six(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    if find_bulls(g).next().is_some() {
        color_thm5(g)
    } else {
        color_thm4(g, budget)
    }
}

fn color_component_four(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    if let Some(t) = find_nondominating_triangle(g) {
        return color_thm1(g, t);
    }
    if let Some(t) = find_triangles(g).next() {
        return color_thm2(g, t);
    }
    triangle_free_oracle(g, budget)
}

/// Six-coloring pipeline with the class check up front.
pub fn color_p6(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    let report = classify(g);
    if let Some(w) = report.p6_class_violation() {
        return Err(EngineError::ClassViolation(w.clone()));
    }
    color_p6_trusted(g, budget)
}

/// Six-coloring pipeline without the up-front class check.
pub fn color_p6_trusted(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    per_component(g, |c| color_component_six(c, budget))
}

/// Four-coloring pipeline with the class check up front.
pub fn color_p2p3(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    let report = classify(g);
    if let Some(w) = report.p2up3_class_violation() {
        return Err(EngineError::ClassViolation(w.clone()));
    }
    color_p2p3_trusted(g, budget)
}

/// Four-coloring pipeline without the up-front class check.
pub fn color_p2p3_trusted(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    per_component(g, |c| color_component_four(c, budget))
}

/// Applies the bull-free construction to every component.
pub fn color_thm4_components(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    per_component(g, |c| color_thm4(c, budget))
}

/// Applies the bull construction to every component.
pub fn color_thm5_components(g: &Graph) -> Result<ColoringOutcome, EngineError> {
    per_component(g, color_thm5)
}
