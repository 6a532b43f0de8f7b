//! Exact chromatic oracle: slow, trusted, exhaustive.
//!
//! `is_k_colorable` runs DSATUR-ordered branch and bound seeded with a
//! maximum clique (the clique's colors are fixed up front, and a branch may
//! open at most one fresh color, which kills color-permutation symmetry).
//! The search is deterministic: saturation-degree vertex order with ties
//! going to the smallest vertex id, colors tried ascending. A `None` answer
//! is therefore a proof of non-colorability, never a guess.
//!
//! All search entry points take a [`Budget`]; running out yields
//! [`OracleError::Undecided`], a distinguished outcome that callers must
//! not conflate with either yes or no.

use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Environment variable read by [`Budget::from_env`], in milliseconds.
pub const BUDGET_ENV: &str = "HEXACHROME_BUDGET_MS";
pub const DEFAULT_BUDGET_MS: u64 = 120_000;

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    millis: u64,
    deadline: Option<Instant>,
}

impl Budget {
    pub fn millis(ms: u64) -> Self {
        Budget {
            millis: ms,
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            millis: u64::MAX,
            deadline: None,
        }
    }

    /// Budget from `HEXACHROME_BUDGET_MS`, defaulting to two minutes.
    pub fn from_env() -> Self {
        let ms = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET_MS);
        Budget::millis(ms)
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn check(&self) -> Result<(), OracleError> {
        if self.expired() {
            Err(OracleError::Undecided {
                budget_ms: self.millis,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("undecided: search budget of {budget_ms} ms exhausted")]
    Undecided { budget_ms: u64 },
}

/// Total color assignment; colors run 1..=k and need not all appear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub k: u32,
    pub assignment: Vec<u32>,
}

impl Coloring {
    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> u32 {
        let mut seen = 0u64;
        for &c in &self.assignment {
            seen |= 1 << (c - 1).min(63);
        }
        seen.count_ones()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("assignment covers {got} vertices, graph has {n}")]
    LengthMismatch { got: usize, n: usize },
    #[error("vertex {v} has color {color}, outside 1..={k}")]
    ColorOutOfRange { v: usize, color: u32, k: u32 },
    #[error("edge ({u}, {v}) has both endpoints colored {color}")]
    ImproperEdge { u: usize, v: usize, color: u32 },
}

/// Checks a coloring; on failure reports the first violating edge in
/// lexicographic edge order.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<(), VerifyError> {
    if c.assignment.len() != g.n() {
        return Err(VerifyError::LengthMismatch {
            got: c.assignment.len(),
            n: g.n(),
        });
    }
    for (v, &color) in c.assignment.iter().enumerate() {
        if color == 0 || color > c.k {
            return Err(VerifyError::ColorOutOfRange { v, color, k: c.k });
        }
    }
    for (u, v) in g.edges() {
        if c.assignment[u] == c.assignment[v] {
            return Err(VerifyError::ImproperEdge {
                u,
                v,
                color: c.assignment[u],
            });
        }
    }
    Ok(())
}

/// A maximum clique, found by branch and bound with pivoting. Deterministic
/// for a fixed graph.
pub fn max_clique(g: &Graph, budget: &Budget) -> Result<VertexSet, OracleError> {
    budget.check()?;
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    expand(
        g,
        &mut current,
        VertexSet::full(n),
        &mut best,
        &mut nodes,
        budget,
    )?;
    Ok(VertexSet::from_slice(n, &best))
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut cand: VertexSet,
    best: &mut Vec<usize>,
    nodes: &mut u64,
    budget: &Budget,
) -> Result<(), OracleError> {
    *nodes += 1;
    if *nodes & 1023 == 0 {
        budget.check()?;
    }
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return Ok(());
    }
    if current.len() + cand.len() <= best.len() {
        return Ok(());
    }
    // pivot on the candidate with the most candidate-neighbors; only
    // non-neighbors of the pivot need a branch of their own
    let pivot = cand
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(&cand).len())
        .expect("cand nonempty");
    let branch = cand.difference(g.neighbors(pivot));
    for v in branch.iter() {
        current.push(v);
        expand(
            g,
            current,
            cand.intersection(g.neighbors(v)),
            best,
            nodes,
            budget,
        )?;
        current.pop();
        cand.remove(v);
        if current.len() + cand.len() <= best.len() {
            break;
        }
    }
    Ok(())
}

struct Dsatur<'g> {
    g: &'g Graph,
    k: u32,
    colors: Vec<u32>,
    // bit c-1 set = some neighbor has color c
    masks: Vec<u64>,
    uncolored: usize,
    max_used: u32,
    nodes: u64,
    budget: Budget,
}

impl Dsatur<'_> {
    fn pick_vertex(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_sat = 0;
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            let sat = self.masks[v].count_ones();
            if best == usize::MAX || sat > best_sat {
                best = v;
                best_sat = sat;
            }
        }
        best
    }

    fn solve(&mut self) -> Result<bool, OracleError> {
        self.nodes += 1;
        if self.nodes & 1023 == 0 {
            self.budget.check()?;
        }
        if self.uncolored == 0 {
            return Ok(true);
        }
        let v = self.pick_vertex();
        // opening more than one fresh color only permutes color names
        let limit = self.k.min(self.max_used + 1);
        for c in 1..=limit {
            if self.masks[v] >> (c - 1) & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            self.uncolored -= 1;
            let saved_max = self.max_used;
            self.max_used = self.max_used.max(c);
            let mut touched = Vec::new();
            for w in self.g.neighbors(v).iter() {
                if self.colors[w] == 0 && self.masks[w] >> (c - 1) & 1 == 0 {
                    self.masks[w] |= 1 << (c - 1);
                    touched.push(w);
                }
            }
            if self.solve()? {
                return Ok(true);
            }
            for w in touched {
                self.masks[w] &= !(1 << (c - 1));
            }
            self.max_used = saved_max;
            self.uncolored += 1;
            self.colors[v] = 0;
        }
        Ok(false)
    }
}

/// Decides k-colorability exactly. `Ok(Some(c))` is a verified witness,
/// `Ok(None)` a proof of impossibility.
pub fn is_k_colorable(
    g: &Graph,
    k: u32,
    budget: &Budget,
) -> Result<Option<Coloring>, OracleError> {
    assert!(k <= 64, "oracle supports at most 64 colors");
    budget.check()?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring {
            k,
            assignment: Vec::new(),
        }));
    }
    if k == 0 {
        return Ok(None);
    }
    let clique = max_clique(g, budget)?;
    if clique.len() as u32 > k {
        return Ok(None);
    }
    let mut solver = Dsatur {
        g,
        k,
        colors: vec![0; n],
        masks: vec![0; n],
        uncolored: n,
        max_used: clique.len() as u32,
        nodes: 0,
        budget: *budget,
    };
    for (i, v) in clique.iter().enumerate() {
        solver.colors[v] = i as u32 + 1;
        solver.uncolored -= 1;
        for w in g.neighbors(v).iter() {
            solver.masks[w] |= 1 << i;
        }
    }
    if solver.solve()? {
        debug_assert!(verify_coloring(
            g,
            &Coloring {
                k,
                assignment: solver.colors.clone()
            }
        )
        .is_ok());
        Ok(Some(Coloring {
            k,
            assignment: solver.colors,
        }))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number with a witness coloring on exactly that many
/// colors. The budget covers the whole query, not each trial k.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<Coloring, OracleError> {
    if g.n() == 0 {
        return Ok(Coloring {
            k: 0,
            assignment: Vec::new(),
        });
    }
    let omega = max_clique(g, budget)?.len() as u32;
    let mut k = omega.max(1);
    loop {
        if let Some(c) = is_k_colorable(g, k, budget)? {
            return Ok(c);
        }
        k += 1;
        assert!(k as usize <= g.n(), "every graph is n-colorable");
    }
}
