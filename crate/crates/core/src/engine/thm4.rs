//! Four-coloring of bull-free members.
//!
//! Without a five-hole the graph is perfect here, so an exhaustive search at
//! the clique number settles it in at most three colors. With a five-hole as
//! anchor, the first layer splits into point cells `W_i` (one hole neighbor)
//! and wing cells `Y_i` (two nonadjacent hole neighbors), nothing lies past
//! the second layer, and three case analyses on which point cells are
//! occupied each produce four explicit classes.

use super::{
    assert_complete, assert_independent, assert_no_edges, hv, oracle_trace, require_connected,
    split_matching_cell, Bipartition, ClassBuilder, ColoringOutcome, EngineError, TheoremId,
};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{is_k_colorable, max_clique, Budget};
use crate::recognition::find_c5;

struct HolePartition {
    anchor: [usize; 5],
    /// `w[i]`: first-layer vertices seeing exactly hole vertex `i`.
    w: [VertexSet; 5],
    /// `y[i]`: first-layer vertices seeing exactly hole vertices `i - 1`
    /// and `i + 1` (indices mod 5).
    y: [VertexSet; 5],
    /// Everything outside the hole and its neighborhood.
    n2: VertexSet,
}

fn partition_around_hole(g: &Graph, anchor: [usize; 5]) -> Result<HolePartition, EngineError> {
    let n = g.n();
    let base = VertexSet::from_slice(n, &anchor);
    let mut n1 = g.neighborhood_of_set(&base);
    n1.subtract(&base);
    let mut w = std::array::from_fn(|_| VertexSet::empty(n));
    let mut y: [VertexSet; 5] = std::array::from_fn(|_| VertexSet::empty(n));
    for x in n1.iter() {
        let positions: Vec<usize> = (0..5).filter(|&i| g.has_edge(x, anchor[i])).collect();
        match positions[..] {
            [i] => w[i].insert(x),
            [a, b] if b - a == 2 || b - a == 3 => {
                let iy = if b - a == 2 { a + 1 } else { (b + 1) % 5 };
                y[iy].insert(x);
            }
            _ => {
                let mut vertices = vec![x];
                vertices.extend(positions.iter().map(|&i| anchor[i]));
                return Err(hv(
                    "a neighbor of the five-hole must see exactly one hole vertex or two nonadjacent hole vertices",
                    vertices,
                ));
            }
        }
    }
    let mut n2 = VertexSet::full(n);
    n2.subtract(&base);
    n2.subtract(&n1);
    Ok(HolePartition { anchor, w, y, n2 })
}

struct VerifiedHole {
    p: HolePartition,
    wsplit: [Bipartition; 5],
    n2split: Bipartition,
}

/// Runs every structural assertion the case analyses rely on.
fn verify_hole(g: &Graph, p: HolePartition) -> Result<VerifiedHole, EngineError> {
    let w_labels = ["W1", "W2", "W3", "W4", "W5"];
    let mut wsplit = Vec::with_capacity(5);
    for i in 0..5 {
        wsplit.push(split_matching_cell(g, &p.w[i], w_labels[i])?);
    }
    let wsplit: [Bipartition; 5] = wsplit.try_into().expect("five splits");

    for i in 0..5 {
        assert_no_edges(
            g,
            &p.w[i],
            &p.w[(i + 1) % 5],
            "point cells at adjacent hole corners admit no edges",
        )?;
        assert_complete(
            g,
            &p.w[i],
            &p.w[(i + 2) % 5],
            "point cells two apart on the hole must be completely joined",
        )?;
        if !p.w[i].is_empty() {
            let rule = "a point cell two apart from an occupied point cell must be independent";
            assert_independent(g, &p.w[(i + 2) % 5], rule)?;
            assert_independent(g, &p.w[(i + 3) % 5], rule)?;
        }
        assert_independent(
            g,
            &p.y[i].union(&p.y[(i + 2) % 5]),
            "wing cells two apart must together form an independent set",
        )?;
        let wing_rule = "a point cell admits no edges to wing cells attaching at its corner";
        assert_no_edges(g, &p.w[i], &p.y[(i + 1) % 5], wing_rule)?;
        assert_no_edges(g, &p.w[i], &p.y[(i + 4) % 5], wing_rule)?;
    }

    let mut w_all = VertexSet::empty(g.n());
    for cell in &p.w {
        w_all.union_with(cell);
    }
    let mut y_all = VertexSet::empty(g.n());
    for cell in &p.y {
        y_all.union_with(cell);
    }
    assert_no_edges(
        g,
        &w_all,
        &p.n2,
        "point cells admit no edges into the second layer",
    )?;

    let n1_all = w_all.union(&y_all);
    for u in p.n2.iter() {
        for v in g.neighbors(u).intersection(&p.n2).iter() {
            if v <= u {
                continue;
            }
            let nu = g.neighbors(u).intersection(&n1_all);
            let nv = g.neighbors(v).intersection(&n1_all);
            if nu != nv {
                return Err(hv(
                    "endpoints of a second-layer edge must share their first-layer neighborhood",
                    vec![u, v],
                ));
            }
            if nu.len() != 1 {
                let mut vertices = vec![u];
                vertices.extend(nu.iter());
                return Err(hv(
                    "a second-layer edge endpoint must have exactly one first-layer neighbor",
                    vertices,
                ));
            }
        }
    }

    let mut unseen = p.n2.clone();
    while let Some(s) = unseen.first() {
        let mut comp = VertexSet::singleton(g.n(), s);
        let mut frontier = comp.clone();
        loop {
            let mut next = g.neighborhood_of_set(&frontier);
            next.intersect_with(&p.n2);
            next.subtract(&comp);
            if next.is_empty() {
                break;
            }
            comp.union_with(&next);
            frontier = next;
        }
        if !y_all.iter().any(|yv| comp.is_subset(g.neighbors(yv))) {
            return Err(hv(
                "each component beyond the first layer must attach completely to one wing vertex",
                vec![s],
            ));
        }
        unseen.subtract(&comp);
    }

    let n2split = split_matching_cell(g, &p.n2, "N2")?;

    for i in 0..5 {
        let rule = "wing cells admit no edges to second-layer vertices reached from complementary wings";
        let own = p.y[i].union(&p.y[(i + 2) % 5]);
        let rest = p.y[(i + 1) % 5]
            .union(&p.y[(i + 3) % 5])
            .union(&p.y[(i + 4) % 5]);
        let mut reached = g.neighborhood_of_set(&rest);
        reached.intersect_with(&n2split.double_primed);
        assert_no_edges(g, &own, &reached, rule)?;
        let mut reached_own = g.neighborhood_of_set(&own);
        reached_own.intersect_with(&n2split.double_primed);
        assert_no_edges(
            g,
            &p.y[(i + 1) % 5].union(&p.y[(i + 3) % 5]),
            &reached_own,
            rule,
        )?;
    }

    Ok(VerifiedHole { p, wsplit, n2split })
}

pub fn color_thm4(g: &Graph, budget: &Budget) -> Result<ColoringOutcome, EngineError> {
    require_connected(g)?;

    let Some(witness) = find_c5(g) else {
        // No five-hole makes the member perfect, so its chromatic number is
        // its clique number, which sits at three or below in this class.
        let clique = max_clique(g, budget)?;
        let omega = clique.len() as u32;
        for k in omega..=3 {
            if let Some(coloring) = is_k_colorable(g, k, budget)? {
                let trace = oracle_trace(g, &coloring, TheoremId::Thm4, "perfect");
                return Ok(ColoringOutcome {
                    coloring,
                    bound: 4,
                    components: vec![trace],
                });
            }
        }
        return Err(hv(
            "a member with no five-hole must be three-colorable",
            clique.to_vec(),
        ));
    };
    let first: [usize; 5] = witness.vertices.try_into().expect("a five-hole has five vertices");

    let p0 = partition_around_hole(g, first)?;
    let occupied: Vec<bool> = p0.w.iter().map(|c| !c.is_empty()).collect();
    let p = if occupied.iter().all(|&b| b) || occupied.iter().all(|&b| !b) {
        p0
    } else {
        // Rotate the hole so the first corner's point cell is occupied and
        // the preceding one is empty, then rebuild the cells.
        let r = (0..5)
            .find(|&i| occupied[i] && !occupied[(i + 4) % 5])
            .expect("a mixed occupancy pattern has a boundary");
        let rotated: [usize; 5] = std::array::from_fn(|j| first[(r + j) % 5]);
        partition_around_hole(g, rotated)?
    };
    let VerifiedHole { p, wsplit, n2split } = verify_hole(g, p)?;

    let n = g.n();
    let hole: [VertexSet; 5] = std::array::from_fn(|i| VertexSet::singleton(n, p.anchor[i]));
    // Second-layer vertices routed next to the wings that do not reach them.
    let reach = |targets: &[usize]| -> (String, VertexSet) {
        let mut union = VertexSet::empty(n);
        let mut names = Vec::new();
        for &t in targets {
            union.union_with(&p.y[t]);
            names.push(format!("Y{}", t + 1));
        }
        let mut set = g.neighborhood_of_set(&union);
        set.intersect_with(&n2split.double_primed);
        (format!("N2''&N({})", names.join("+")), set)
    };

    let mut builder = ClassBuilder::new(g);
    let case;
    if p.w.iter().all(|c| c.is_empty()) {
        case = "case1";
        let (fa, sa) = reach(&[1, 3, 4]);
        let (fb, sb) = reach(&[0, 2]);
        builder.class(&[
            ("v1", &hole[0]),
            ("v3", &hole[2]),
            ("Y1", &p.y[0]),
            ("Y3", &p.y[2]),
            (fa.as_str(), &sa),
        ]);
        builder.class(&[
            ("v2", &hole[1]),
            ("v4", &hole[3]),
            ("Y2", &p.y[1]),
            ("Y4", &p.y[3]),
            (fb.as_str(), &sb),
        ]);
        builder.class(&[("v5", &hole[4]), ("Y5", &p.y[4])]);
        builder.class(&[("N2'", &n2split.primed)]);
    } else if p.w.iter().all(|c| !c.is_empty()) {
        case = "case2";
        let (fa, sa) = reach(&[1, 3, 4]);
        let (fb, sb) = reach(&[0, 2]);
        builder.class(&[
            ("v1", &hole[0]),
            ("v3", &hole[2]),
            ("W2", &p.w[1]),
            ("Y1", &p.y[0]),
            ("Y3", &p.y[2]),
            (fa.as_str(), &sa),
        ]);
        builder.class(&[
            ("v2", &hole[1]),
            ("v4", &hole[3]),
            ("W3", &p.w[2]),
            ("Y2", &p.y[1]),
            ("Y4", &p.y[3]),
            (fb.as_str(), &sb),
        ]);
        builder.class(&[("v5", &hole[4]), ("W1", &p.w[0]), ("Y5", &p.y[4])]);
        builder.class(&[("W4", &p.w[3]), ("W5", &p.w[4]), ("N2'", &n2split.primed)]);
    } else {
        // Rotation holds here: the first point cell is occupied, the fifth
        // is empty, and the third and fourth are independent sets.
        let (fa, sa) = reach(&[1, 4]);
        let (fb, sb) = reach(&[0, 2, 3]);
        if p.w[3].is_empty() {
            case = "case3a";
            builder.class(&[
                ("v1", &hole[0]),
                ("v3", &hole[2]),
                ("W2'", &wsplit[1].primed),
                ("Y1", &p.y[0]),
                ("Y3", &p.y[2]),
                (fa.as_str(), &sa),
            ]);
            builder.class(&[
                ("v2", &hole[1]),
                ("v5", &hole[4]),
                ("W1'", &wsplit[0].primed),
                ("Y2", &p.y[1]),
                ("Y5", &p.y[4]),
                (fb.as_str(), &sb),
            ]);
            builder.class(&[
                ("v4", &hole[3]),
                ("W1''", &wsplit[0].double_primed),
                ("W2''", &wsplit[1].double_primed),
                ("N2'", &n2split.primed),
            ]);
            builder.class(&[("W3", &p.w[2]), ("Y4", &p.y[3])]);
        } else {
            case = "case3b";
            builder.class(&[
                ("v1", &hole[0]),
                ("v3", &hole[2]),
                ("W2", &p.w[1]),
                ("Y1", &p.y[0]),
                ("Y3", &p.y[2]),
                (fa.as_str(), &sa),
            ]);
            builder.class(&[
                ("v2", &hole[1]),
                ("v5", &hole[4]),
                ("W1", &p.w[0]),
                ("Y2", &p.y[1]),
                ("Y5", &p.y[4]),
                (fb.as_str(), &sb),
            ]);
            builder.class(&[("v4", &hole[3]), ("W3", &p.w[2]), ("Y4", &p.y[3])]);
            builder.class(&[("W4", &p.w[3]), ("N2'", &n2split.primed)]);
        }
    }

    let (coloring, trace) = builder.finish(TheoremId::Thm4, case, Some(p.anchor.to_vec()))?;
    Ok(ColoringOutcome {
        coloring,
        bound: 4,
        components: vec![trace],
    })
}
