//! Six-coloring around an induced bull.
//!
//! The bull anchor is `(v1, v2, v3, v4, v5)` with edges v1v2, v2v3, v3v4,
//! v2v5, v3v5: a triangle on the hinges v2, v3 and the apex v5, with horn
//! tips v1 and v4. First-layer vertices attach at one corner (`A_i`), at an
//! admissible pair of corners, or at a tip-tip-apex triple; every other
//! attachment is impossible in this class. At most one horn-tip cell is
//! occupied, which splits the construction into two cases sharing the first
//! two color classes.

use super::{
    assert_complete, assert_independent, assert_no_edges, hv, require_connected,
    split_matching_cell, Bipartition, ClassBuilder, ColoringOutcome, EngineError, TheoremId,
};
use crate::graph::{Graph, VertexSet};
use crate::recognition::find_bulls;

const A12: usize = 0;
const A13: usize = 1;
const A14: usize = 2;
const A15: usize = 3;
const A24: usize = 4;
const A34: usize = 5;
const A45: usize = 6;
const PAIR_KEYS: [[usize; 2]; 7] = [[0, 1], [0, 2], [0, 3], [0, 4], [1, 3], [2, 3], [3, 4]];
const PAIR_LABELS: [&str; 7] = ["A12", "A13", "A14", "A15", "A24", "A34", "A45"];

const A124: usize = 0;
const A134: usize = 1;
const A145: usize = 2;
const TRIPLE_KEYS: [[usize; 3]; 3] = [[0, 1, 3], [0, 2, 3], [0, 3, 4]];
const TRIPLE_LABELS: [&str; 3] = ["A124", "A134", "A145"];

struct BullPartition {
    anchor: [usize; 5],
    /// `a[i]`: first-layer vertices seeing exactly corner `i`.
    a: [VertexSet; 5],
    /// Pair-attachment cells in `PAIR_KEYS` order.
    pairs: [VertexSet; 7],
    /// Triple-attachment cells in `TRIPLE_KEYS` order.
    triples: [VertexSet; 3],
    /// Everything outside the bull and its neighborhood.
    n2: VertexSet,
}

fn partition_around_bull(g: &Graph, anchor: [usize; 5]) -> Result<BullPartition, EngineError> {
    let n = g.n();
    let base = VertexSet::from_slice(n, &anchor);
    let mut n1 = g.neighborhood_of_set(&base);
    n1.subtract(&base);
    let mut a: [VertexSet; 5] = std::array::from_fn(|_| VertexSet::empty(n));
    let mut pairs: [VertexSet; 7] = std::array::from_fn(|_| VertexSet::empty(n));
    let mut triples: [VertexSet; 3] = std::array::from_fn(|_| VertexSet::empty(n));
    for x in n1.iter() {
        let positions: Vec<usize> = (0..5).filter(|&i| g.has_edge(x, anchor[i])).collect();
        let placed = match positions[..] {
            [i] => {
                a[i].insert(x);
                true
            }
            [i, j] => match PAIR_KEYS.iter().position(|k| k == &[i, j]) {
                Some(idx) => {
                    pairs[idx].insert(x);
                    true
                }
                None => false,
            },
            [i, j, k] => match TRIPLE_KEYS.iter().position(|t| t == &[i, j, k]) {
                Some(idx) => {
                    triples[idx].insert(x);
                    true
                }
                None => false,
            },
            _ => false,
        };
        if !placed {
            let mut vertices = vec![x];
            vertices.extend(positions.iter().map(|&i| anchor[i]));
            return Err(hv(
                "a neighbor of the anchor bull must attach at one of the admissible corner sets",
                vertices,
            ));
        }
    }
    let mut n2 = VertexSet::full(n);
    n2.subtract(&base);
    n2.subtract(&n1);
    Ok(BullPartition {
        anchor,
        a,
        pairs,
        triples,
        n2,
    })
}

struct VerifiedBull {
    p: BullPartition,
    asplit: [Bipartition; 5],
    n2split: Bipartition,
}

/// Runs the structural assertions shared by both cases.
fn verify_bull(g: &Graph, p: BullPartition) -> Result<VerifiedBull, EngineError> {
    let a_labels = ["A1", "A2", "A3", "A4", "A5"];
    let mut asplit = Vec::with_capacity(5);
    for i in 0..5 {
        asplit.push(split_matching_cell(g, &p.a[i], a_labels[i])?);
    }
    let asplit: [Bipartition; 5] = asplit.try_into().expect("five splits");
    for (idx, cell) in p.pairs.iter().enumerate() {
        assert_independent(
            g,
            cell,
            &format!("attachment cell {} must be independent", PAIR_LABELS[idx]),
        )?;
    }
    for (idx, cell) in p.triples.iter().enumerate() {
        assert_independent(
            g,
            cell,
            &format!("attachment cell {} must be independent", TRIPLE_LABELS[idx]),
        )?;
    }

    let outer = p.pairs[A14].union(&p.pairs[A15]).union(&p.pairs[A45]);
    assert_complete(
        g,
        &p.a[0],
        &outer,
        "the first horn-tip cell must be completely joined to the tip-apex attachments",
    )?;
    assert_no_edges(
        g,
        &p.a[4],
        &p.pairs[A15].union(&p.pairs[A45]),
        "the apex cell admits no edges to attachments that include the apex",
    )?;
    let hinge_rule = "a matched hinge vertex admits no edges to attachments at its hinge";
    let first_hinge = p.pairs[A12].union(&p.pairs[A24]).union(&p.triples[A124]);
    let second_hinge = p.pairs[A13].union(&p.pairs[A34]).union(&p.triples[A134]);
    assert_no_edges(g, &asplit[1].double_primed, &first_hinge, hinge_rule)?;
    assert_no_edges(g, &asplit[2].double_primed, &second_hinge, hinge_rule)?;
    let hinge_class_rule =
        "a hinge's matched vertices and its attachments must form an independent set";
    assert_independent(
        g,
        &asplit[1].double_primed.union(&first_hinge),
        hinge_class_rule,
    )?;
    assert_independent(
        g,
        &asplit[2].double_primed.union(&second_hinge),
        hinge_class_rule,
    )?;
    assert_no_edges(
        g,
        &asplit[4].double_primed,
        &p.pairs[A14].union(&p.triples[A145]),
        "a matched apex vertex admits no edges to attachments spanning both horn tips",
    )?;
    assert_no_edges(
        g,
        &outer,
        &p.triples[A145],
        "tip-apex attachments admit no edges to three-corner attachments",
    )?;

    let mut n1_all = VertexSet::empty(g.n());
    for cell in p.a.iter().chain(p.pairs.iter()).chain(p.triples.iter()) {
        n1_all.union_with(cell);
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
        if !n1_all.iter().any(|x| comp.is_subset(g.neighbors(x))) {
            return Err(hv(
                "each component beyond the first layer must attach completely to one first-layer vertex",
                vec![s],
            ));
        }
        unseen.subtract(&comp);
    }
    let n2split = split_matching_cell(g, &p.n2, "N2")?;

    assert_no_edges(
        g,
        &p.a[0].union(&p.a[3]).union(&p.pairs[A15]).union(&p.pairs[A45]),
        &p.n2,
        "horn-tip cells and tip-apex attachments admit no edges into the second layer",
    )?;

    Ok(VerifiedBull { p, asplit, n2split })
}

pub fn color_thm5(g: &Graph) -> Result<ColoringOutcome, EngineError> {
    require_connected(g)?;
    let bulls: Vec<[usize; 5]> = find_bulls(g).collect();
    if bulls.is_empty() {
        return Err(EngineError::Precondition(
            "the graph contains no induced bull".to_string(),
        ));
    }

    // Scan for an orientation with an occupied horn-tip cell; flip the bull
    // when only the second tip's cell is occupied so the occupied one comes
    // first. A graph where some bull has both tip cells occupied is outside
    // the class.
    let mut chosen = None;
    for b in &bulls {
        let p = partition_around_bull(g, *b)?;
        let first_tip = !p.a[0].is_empty();
        let second_tip = !p.a[3].is_empty();
        if first_tip && second_tip {
            let u = p.a[0].first().expect("occupied cell");
            let v = p.a[3].first().expect("occupied cell");
            return Err(hv(
                "the two horn-tip cells cannot both be occupied",
                vec![u, v],
            ));
        }
        if first_tip {
            chosen = Some(p);
            break;
        }
        if second_tip {
            let flipped = [b[3], b[2], b[1], b[0], b[4]];
            chosen = Some(partition_around_bull(g, flipped)?);
            break;
        }
    }

    let occupied_tip = chosen.is_some();
    let p = match chosen {
        Some(p) => p,
        None => partition_around_bull(g, bulls[0])?,
    };
    let VerifiedBull { p, asplit, n2split } = verify_bull(g, p)?;
    let n = g.n();
    let corner: [VertexSet; 5] = std::array::from_fn(|i| VertexSet::singleton(n, p.anchor[i]));

    let mut builder = ClassBuilder::new(g);
    builder.class(&[
        ("A2''", &asplit[1].double_primed),
        ("A12", &p.pairs[A12]),
        ("A24", &p.pairs[A24]),
        ("A124", &p.triples[A124]),
    ]);
    builder.class(&[
        ("A3''", &asplit[2].double_primed),
        ("A13", &p.pairs[A13]),
        ("A34", &p.pairs[A34]),
        ("A134", &p.triples[A134]),
    ]);

    let case;
    if occupied_tip {
        case = "case1";
        assert_no_edges(
            g,
            &p.a[0],
            &p.a[4],
            "the first horn-tip cell admits no edges to the apex cell",
        )?;
        let outer = p.pairs[A14].union(&p.pairs[A15]).union(&p.pairs[A45]);
        assert_independent(
            g,
            &outer,
            "the tip-apex attachments must together form an independent set when a horn-tip cell is occupied",
        )?;
        let far_rule = "the far hinge and apex cells admit no edges into the second layer";
        assert_no_edges(g, &p.a[2], &p.n2, far_rule)?;
        assert_no_edges(g, &p.a[4], &p.n2, far_rule)?;

        builder.class(&[("A2'", &asplit[1].primed), ("v1", &corner[0]), ("v5", &corner[4])]);
        builder.class(&[
            ("A3'", &asplit[2].primed),
            ("N2'", &n2split.primed),
            ("v2", &corner[1]),
            ("v4", &corner[3]),
        ]);
        builder.class(&[
            ("A1'", &asplit[0].primed),
            ("A5'", &asplit[4].primed),
            ("N2''", &n2split.double_primed),
            ("v3", &corner[2]),
        ]);
        builder.class(&[
            ("A1''", &asplit[0].double_primed),
            ("A5''", &asplit[4].double_primed),
            ("A14", &p.pairs[A14]),
            ("A15", &p.pairs[A15]),
            ("A45", &p.pairs[A45]),
            ("A145", &p.triples[A145]),
        ]);
    } else {
        case = "case2";
        assert_no_edges(
            g,
            &p.a[1].union(&p.a[2]).union(&p.a[4]),
            &p.n2,
            "hinge and apex cells admit no edges into the second layer when both horn-tip cells are empty",
        )?;
        let join_rule =
            "attachments spanning both horn tips must be completely joined to the tip-apex attachments";
        assert_complete(g, &p.pairs[A14], &p.pairs[A15], join_rule)?;
        assert_complete(g, &p.pairs[A14], &p.pairs[A45], join_rule)?;
        if !p.pairs[A14].is_empty() && !p.pairs[A15].is_empty() && !p.pairs[A45].is_empty() {
            let vertices = vec![
                p.pairs[A14].first().expect("occupied cell"),
                p.pairs[A15].first().expect("occupied cell"),
                p.pairs[A45].first().expect("occupied cell"),
            ];
            return Err(hv(
                "some tip-apex attachment cell must be empty",
                vertices,
            ));
        }

        builder.class(&[
            ("N2'", &n2split.primed),
            ("A2'", &asplit[1].primed),
            ("v1", &corner[0]),
            ("v5", &corner[4]),
        ]);
        builder.class(&[
            ("N2''", &n2split.double_primed),
            ("A3'", &asplit[2].primed),
            ("v2", &corner[1]),
            ("v4", &corner[3]),
        ]);
        if p.pairs[A14].is_empty() || p.pairs[A45].is_empty() {
            builder.class(&[("A5'", &asplit[4].primed), ("A15", &p.pairs[A15]), ("v3", &corner[2])]);
            builder.class(&[
                ("A5''", &asplit[4].double_primed),
                ("A14", &p.pairs[A14]),
                ("A45", &p.pairs[A45]),
                ("A145", &p.triples[A145]),
            ]);
        } else {
            builder.class(&[("A5'", &asplit[4].primed), ("A45", &p.pairs[A45]), ("v3", &corner[2])]);
            builder.class(&[
                ("A5''", &asplit[4].double_primed),
                ("A14", &p.pairs[A14]),
                ("A145", &p.triples[A145]),
            ]);
        }
    }

    let (coloring, trace) = builder.finish(TheoremId::Thm5, case, Some(p.anchor.to_vec()))?;
    Ok(ColoringOutcome {
        coloring,
        bound: 6,
        components: vec![trace],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::oracle::verify_coloring;
    use crate::recognition::classify;

    fn bull() -> Vec<(usize, usize)> {
        vec![(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]
    }

    fn check(g: &Graph) -> ColoringOutcome {
        let report = classify(g);
        assert!(report.is_p6_diamond_k4_free(), "fixture must be a member");
        assert!(!report.bull_free(), "fixture must contain a bull");
        let out = color_thm5(g).unwrap();
        verify_coloring(g, &out.coloring).unwrap();
        assert_eq!(out.bound, 6);
        assert!(out.coloring.k as usize <= out.bound);
        out
    }

    #[test]
    fn bare_bull_takes_three_middle_colors() {
        let g = Graph::from_edges(5, &bull()).unwrap();
        let out = check(&g);
        let trace = &out.components[0];
        assert_eq!(trace.case, "case2");
        assert_eq!(trace.anchor, Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(out.coloring.assignment, vec![3, 4, 5, 4, 3]);
        assert_eq!(out.coloring.colors_used(), 3);
    }

    #[test]
    fn occupied_first_tip_selects_case_one() {
        let mut edges = bull();
        edges.push((5, 0));
        let g = Graph::from_edges(6, &edges).unwrap();
        let out = check(&g);
        let trace = &out.components[0];
        assert_eq!(trace.case, "case1");
        assert_eq!(trace.anchor, Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(out.coloring.assignment, vec![3, 4, 5, 4, 3, 5]);
    }

    #[test]
    fn occupied_second_tip_flips_the_bull() {
        let mut edges = bull();
        edges.push((5, 3));
        let g = Graph::from_edges(6, &edges).unwrap();
        let out = check(&g);
        let trace = &out.components[0];
        assert_eq!(trace.case, "case1");
        assert_eq!(trace.anchor, Some(vec![3, 2, 1, 0, 4]));
        assert_eq!(out.coloring.assignment, vec![4, 5, 4, 3, 3, 5]);
    }

    #[test]
    fn tip_spanning_attachment_lands_in_the_last_class() {
        let mut edges = bull();
        edges.push((5, 0));
        edges.push((5, 3));
        let g = Graph::from_edges(6, &edges).unwrap();
        let out = check(&g);
        let trace = &out.components[0];
        assert_eq!(trace.case, "case2");
        assert_eq!(out.coloring.assignment, vec![3, 4, 5, 4, 3, 6]);
        assert_eq!(out.coloring.colors_used(), 4);
    }

    #[test]
    fn joined_tip_attachments_use_the_second_branch() {
        let mut edges = bull();
        edges.extend([(5, 0), (5, 3), (6, 3), (6, 4), (5, 6)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let out = check(&g);
        let trace = &out.components[0];
        assert_eq!(trace.case, "case2");
        assert_eq!(trace.classes[4].cells, "A5' + A45 + v3");
        assert_eq!(out.coloring.assignment, vec![3, 4, 5, 4, 3, 6, 5]);
    }

    #[test]
    fn second_layer_splits_between_colors_four_and_five() {
        let mut edges = bull();
        edges.extend([(5, 0), (6, 1), (7, 6)]);
        let g = Graph::from_edges(8, &edges).unwrap();
        let out = check(&g);
        let trace = &out.components[0];
        assert_eq!(trace.case, "case1");
        assert_eq!(out.coloring.assignment, vec![3, 4, 5, 4, 3, 5, 3, 4]);
    }

    #[test]
    fn schlafli_complement_is_six_colored() {
        let g = atlas::schlafli_complement();
        let out = check(&g);
        assert_eq!(out.coloring.k, 6);
    }

    #[test]
    fn bull_free_input_is_a_precondition_error() {
        let err = color_thm5(&atlas::cycle(5)).unwrap_err();
        assert!(matches!(err, EngineError::Precondition(_)));
    }

    #[test]
    fn both_tips_occupied_is_reported() {
        let mut edges = bull();
        edges.extend([(5, 0), (6, 3)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let err = color_thm5(&g).unwrap_err();
        match err {
            EngineError::HypothesisViolation { rule, vertices } => {
                assert!(rule.contains("horn-tip"));
                assert_eq!(vertices, vec![5, 6]);
            }
            other => panic!("expected a hypothesis violation, got {other:?}"),
        }
    }

    #[test]
    fn the_scan_can_rescue_a_graph_outside_the_class() {
        // joining all three tip-apex attachments to one another creates
        // fresh triangles, and one of the bulls they spawn has an occupied
        // horn-tip cell, so the scan lands in the first case and colors the
        // graph properly even though it holds an induced six-vertex path
        let mut edges = bull();
        edges.extend([(5, 0), (5, 3), (6, 0), (6, 4), (7, 3), (7, 4), (5, 6), (5, 7)]);
        let g = Graph::from_edges(8, &edges).unwrap();
        assert!(!classify(&g).p6_free());
        let out = color_thm5(&g).unwrap();
        verify_coloring(&g, &out.coloring).unwrap();
        let trace = &out.components[0];
        assert_eq!(trace.case, "case1");
        assert_eq!(trace.anchor, Some(vec![1, 0, 5, 7, 6]));
        assert_eq!(out.coloring.assignment, vec![4, 3, 5, 2, 6, 5, 3, 4]);
    }
}
