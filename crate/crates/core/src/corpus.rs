//! Deterministic graph stream for fuzzing and the end-to-end suites.
//!
//! The stream has three lanes. First come all connected graphs up to eight
//! vertices (one per isomorphism class, unfiltered, so consumers see the
//! whole landscape and filter on the attached report). After that, even
//! offsets carry rejection-sampled random graphs kept only when they lie in
//! the certified class, and odd offsets carry duplications of small named
//! graphs, which stay in the class because only vertices with independent
//! neighborhoods are duplicated. Every item is derived from the seed and its
//! index alone, so the stream is random-access and identical across runs.

use crate::atlas;
use crate::enumerate::enumerate_connected;
use crate::graph::Graph;
use crate::patterns::PatternName;
use crate::recognition::{classify, find_induced, ClassifyReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXHAUSTIVE_CAP: usize = 8;
const SAMPLE_CAP: usize = 12;
const SAMPLE_ATTEMPTS: usize = 64;
const INDEX_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

pub struct Corpus {
    seed: u64,
    n_max: usize,
    exhaustive: Vec<Graph>,
}

#[derive(Clone)]
pub struct CorpusItem {
    pub index: usize,
    /// Which lane produced the graph: `"enumerated"`, `"sampled"`, or
    /// `"duplicated(<base>)"`.
    pub label: String,
    pub graph: Graph,
    pub report: ClassifyReport,
}

fn in_class(g: &Graph) -> bool {
    find_induced(g, PatternName::P6).is_none()
        && find_induced(g, PatternName::Diamond).is_none()
        && find_induced(g, PatternName::K4).is_none()
}

fn independent_neighborhood(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    nb.iter().all(|u| g.neighbors(u).intersection(nb).is_empty())
}

impl Corpus {
    pub fn new(seed: u64, n_max: usize) -> Self {
        assert!(n_max >= 1, "corpus needs room for at least one vertex");
        let mut exhaustive = Vec::new();
        for n in 1..=n_max.min(EXHAUSTIVE_CAP) {
            exhaustive.extend(enumerate_connected(n));
        }
        Corpus {
            seed,
            n_max,
            exhaustive,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Number of leading enumerated items before the random lanes begin.
    pub fn exhaustive_len(&self) -> usize {
        self.exhaustive.len()
    }

    pub fn item(&self, index: usize) -> CorpusItem {
        let (graph, label) = if index < self.exhaustive.len() {
            (self.exhaustive[index].clone(), "enumerated".to_string())
        } else {
            let offset = index - self.exhaustive.len();
            let mut rng = ChaCha8Rng::seed_from_u64(
                self.seed ^ (index as u64).wrapping_mul(INDEX_STRIDE),
            );
            if offset % 2 == 0 {
                self.sample(&mut rng)
            } else {
                self.duplicate(&mut rng)
            }
        };
        let report = classify(&graph);
        CorpusItem {
            index,
            label,
            graph,
            report,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = CorpusItem> + '_ {
        (0..).map(move |i| self.item(i))
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> (Graph, String) {
        let hi = self.n_max.min(SAMPLE_CAP);
        let lo = hi.min(5);
        for _ in 0..SAMPLE_ATTEMPTS {
            let n = rng.gen_range(lo..=hi);
            let p = match rng.gen_range(0..4) {
                0 => 0.15,
                1 => 0.25,
                2 => 0.35,
                _ => 2.0 / n as f64,
            };
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            if in_class(&g) {
                return (g, "sampled".to_string());
            }
        }
        // all attempts rejected; fall back to a path, which always fits
        (atlas::path(lo), "sampled".to_string())
    }

    fn duplicate(&self, rng: &mut ChaCha8Rng) -> (Graph, String) {
        let bases: [(&str, Graph); 9] = [
            ("c5", atlas::cycle(5)),
            ("bull", PatternName::Bull.reference()),
            ("p2up3", PatternName::P2uP3.reference()),
            ("k3", atlas::complete(3)),
            ("path4", atlas::path(4)),
            ("c6", atlas::cycle(6)),
            ("grotzsch", atlas::grotzsch()),
            ("clebsch", atlas::clebsch()),
            ("petersen", atlas::petersen()),
        ];
        let fits: Vec<&(&str, Graph)> =
            bases.iter().filter(|(_, g)| g.n() <= self.n_max).collect();
        let Some((name, base)) = fits.get(rng.gen_range(0..fits.len().max(1))) else {
            return (atlas::complete(1), "duplicated(k1)".to_string());
        };
        let mut mult = vec![1usize; base.n()];
        let mut total = base.n();
        for v in 0..base.n() {
            if !independent_neighborhood(base, v) {
                continue;
            }
            let extra = rng.gen_range(0..=2usize).min(self.n_max - total);
            mult[v] += extra;
            total += extra;
        }
        let g = base
            .substitute_independent_sets(&mult)
            .expect("multiplicities stay positive");
        (g, format!("duplicated({name})"))
    }
}
