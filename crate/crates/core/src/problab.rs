//! Random orientations of semi-complete digraphs, edge expansion, expander
//! extraction, the t-gap sampler and Monte Carlo estimators.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{circulant_isomorphism, is_prime, q5_member};
use crate::digraph::{Digraph, SemiCompleteDigraph, Tournament};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ordering::UndirectedOrderedGraph;
use crate::reduce::clamped_log2;
use crate::rng::{generator, trial_generator};
use crate::search::contains_subdigraph;

/// Two-sided 99% normal quantile.
pub const Z99: f64 = 2.5758293035489;

/// Hard limit for exhaustive cut enumeration regardless of [`Limits`].
const EXHAUSTIVE_MAX: usize = 32;
const SAMPLED_CUTS: usize = 512;
const SAMPLED_CUT_SEED: u64 = 0x5eed_c075;

/// Resolves every bidirectional pair with one fair bit from `rng`, pairs in
/// lexicographic order; `true` keeps `i -> j` for `i < j`.
pub fn orient_with<R: Rng + ?Sized>(f: &SemiCompleteDigraph, rng: &mut R) -> Tournament {
    f.orient(|_, _| rng.random::<bool>())
}

/// A sample from `D_F` using the generator seeded with `seed`.
pub fn sample_orientation(f: &SemiCompleteDigraph, seed: u64) -> Tournament {
    orient_with(f, &mut generator(seed))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    /// `min e(S, V \ S) / |S|` over `1 <= |S| <= n/2`; infinite when `n < 2`.
    pub value: f64,
    pub cut_edges: usize,
    pub argmin_set: Vec<usize>,
    /// False when only a sample of cuts was examined; `value` is then an
    /// upper estimate of the true expansion.
    pub exact: bool,
}

impl ExpansionReport {
    fn trivial() -> Self {
        Self {
            value: f64::INFINITY,
            cut_edges: 0,
            argmin_set: Vec::new(),
            exact: true,
        }
    }
}

fn cut_size(g: &UndirectedOrderedGraph, inside: &[bool]) -> usize {
    inside
        .iter()
        .enumerate()
        .filter(|(_, &x)| x)
        .map(|(v, _)| g.neighbors(v).iter().filter(|&&w| !inside[w]).count())
        .sum()
}

/// Is `(cut_a, size_a, key_a)` a strictly better minimum than `b`? Ratios
/// are compared by cross-multiplication, then smaller sets, then `key`.
fn better(a: (usize, usize, u64), b: (usize, usize, u64)) -> bool {
    let lhs = a.0 * b.1;
    let rhs = b.0 * a.1;
    lhs < rhs || (lhs == rhs && (a.1, a.2) < (b.1, b.2))
}

fn exhaustive(g: &UndirectedOrderedGraph) -> ExpansionReport {
    let n = g.order();
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
    let mut best: Option<(usize, usize, u64)> = None;
    let (mut set, mut size, mut cut) = (0u64, 0usize, 0i64);
    // Gray code: step k flips the lowest set bit of k
    for k in 1u64..(1u64 << n) {
        let v = k.trailing_zeros() as usize;
        let inner = (nbr[v] & set).count_ones() as i64;
        if set >> v & 1 == 0 {
            set |= 1 << v;
            size += 1;
            cut += deg[v] - 2 * inner;
        } else {
            set &= !(1 << v);
            size -= 1;
            cut -= deg[v] - 2 * inner;
        }
        if size == 0 || 2 * size > n {
            continue;
        }
        let cand = (cut as usize, size, set);
        if best.is_none_or(|b| better(cand, b)) {
            best = Some(cand);
        }
    }
    let (c, s, m) = best.expect("n >= 2 has a cut");
    ExpansionReport {
        value: c as f64 / s as f64,
        cut_edges: c,
        argmin_set: (0..n).filter(|&v| m >> v & 1 == 1).collect(),
        exact: true,
    }
}

/// Minimum over singletons, breadth-first prefixes from every vertex and a
/// fixed-seed batch of random sets.
fn sampled(g: &UndirectedOrderedGraph) -> ExpansionReport {
    let n = g.order();
    let half = n / 2;
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    let mut consider = |set: &[usize]| {
        let mut inside = vec![false; n];
        for &v in set {
            inside[v] = true;
        }
        let c = cut_size(g, &inside);
        let s = set.len();
        let better_ratio = best.as_ref().is_none_or(|(bc, bs, _)| c * bs < bc * s);
        if better_ratio {
            let mut sorted = set.to_vec();
            sorted.sort_unstable();
            best = Some((c, s, sorted));
        }
    };
    for v in 0..n {
        consider(&[v]);
    }
    for root in 0..n {
        let mut seen = vec![false; n];
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() && order.len() < half {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !seen[w] && order.len() < half {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        for k in 2..=order.len() {
            consider(&order[..k]);
        }
    }
    let mut rng = generator(SAMPLED_CUT_SEED);
    let mut all: Vec<usize> = (0..n).collect();
    for _ in 0..SAMPLED_CUTS {
        let s = rng.random_range(1..=half);
        all.shuffle(&mut rng);
        consider(&all[..s]);
    }
    let (c, s, set) = best.expect("n >= 2 has a cut");
    ExpansionReport {
        value: c as f64 / s as f64,
        cut_edges: c,
        argmin_set: set,
        exact: false,
    }
}

/// Edge expansion of `g`. Complete graphs use the closed form
/// `ceil(n/2)`; up to `limits.expansion` vertices every cut is enumerated;
/// above that a sample of cuts is examined and the report is marked inexact.
pub fn expansion_exact(g: &UndirectedOrderedGraph, limits: &Limits) -> ExpansionReport {
    let n = g.order();
    if n < 2 {
        return ExpansionReport::trivial();
    }
    if g.edge_count() == n * (n - 1) / 2 {
        let s = n / 2;
        return ExpansionReport {
            value: (n - s) as f64,
            cut_edges: s * (n - s),
            argmin_set: (0..s).collect(),
            exact: true,
        };
    }
    if n <= limits.expansion.min(EXHAUSTIVE_MAX) {
        exhaustive(g)
    } else {
        sampled(g)
    }
}

/// Expansion of the graph of bidirectional pairs.
pub fn digraph_expansion(g: &SemiCompleteDigraph, limits: &Limits) -> ExpansionReport {
    expansion_exact(&g.bidi_graph(), limits)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Extraction {
    /// Vertices of the input graph kept, ascending.
    pub vertices: Vec<usize>,
    pub graph: UndirectedOrderedGraph,
    pub iterations: usize,
    /// `b * max(1, log2 m)^b` for the final size `m`.
    pub threshold: f64,
    pub expansion: ExpansionReport,
}

impl Extraction {
    /// The final expansion was computed exactly and meets the threshold.
    pub fn certified(&self) -> bool {
        self.expansion.exact && self.expansion.value >= self.threshold
    }
}

/// `b * x * max(1, log2 x)^(b+1)`.
pub fn density_threshold(x: usize, b: f64) -> f64 {
    b * x as f64 * clamped_log2(x as f64).powf(b + 1.0)
}

/// `b * max(1, log2 m)^b`.
pub fn expansion_threshold(m: usize, b: f64) -> f64 {
    b * clamped_log2(m as f64).powf(b)
}

/// Repeatedly replaces the current graph `U_i` on `m` vertices by one side
/// of a cut with fewer than `b log^b m` edges per vertex of the smaller
/// side, taking the smaller side `X` when it spans at least
/// `b x log^(b+1) x` edges and the other side when that one meets the same
/// density with `m - x`; stops once no such cut exists. `None` when neither
/// side is dense enough. The cut used is the exact minimiser when the graph
/// is small enough to enumerate, otherwise the best sampled one.
pub fn extract_expander(
    u: &UndirectedOrderedGraph,
    b: f64,
    limits: &Limits,
) -> Result<Option<Extraction>> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::invalid(format!("b must be positive, got {b}")));
    }
    let mut vertices: Vec<usize> = (0..u.order()).collect();
    let mut iterations = 0;
    loop {
        let graph = u.induced(&vertices);
        let m = vertices.len();
        let threshold = expansion_threshold(m, b);
        let expansion = expansion_exact(&graph, limits);
        if expansion.value >= threshold {
            return Ok(Some(Extraction {
                vertices,
                graph,
                iterations,
                threshold,
                expansion,
            }));
        }
        let mut inside = vec![false; m];
        for &v in &expansion.argmin_set {
            inside[v] = true;
        }
        let x = expansion.argmin_set.len();
        let side: Vec<usize> = (0..m).filter(|&v| inside[v]).collect();
        let other: Vec<usize> = (0..m).filter(|&v| !inside[v]).collect();
        let next = if graph.induced(&side).edge_count() as f64 >= density_threshold(x, b) {
            side
        } else if graph.induced(&other).edge_count() as f64 >= density_threshold(m - x, b) {
            other
        } else {
            return Ok(None);
        };
        vertices = next.into_iter().map(|v| vertices[v]).collect();
        iterations += 1;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TGapSample {
    /// Selected positions, ascending.
    pub selected: Vec<usize>,
    pub graph: UndirectedOrderedGraph,
}

/// For positions `t..=n-t+1` (1-based) in order: skip when one of the
/// previous `t - 1` positions was selected, otherwise select with
/// probability `1/t`. A random number is drawn only for eligible positions.
pub fn sample_tgap(g: &UndirectedOrderedGraph, t: usize, seed: u64) -> Result<TGapSample> {
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let n = g.order();
    let mut rng = generator(seed);
    let mut selected: Vec<usize> = Vec::new();
    // 0-based positions t-1 ..= n-t
    if n + 1 >= 2 * t {
        for i in t - 1..=n - t {
            if selected.last().is_some_and(|&s| i - s < t) {
                continue;
            }
            if rng.random_ratio(1, t as u32) {
                selected.push(i);
            }
        }
    }
    let graph = g.induced(&selected);
    Ok(TGapSample { selected, graph })
}

/// `(m - 3nt) / (e t)^2`.
pub fn tgap_bound(n: usize, m: usize, t: usize) -> f64 {
    let et = std::f64::consts::E * t as f64;
    (m as f64 - 3.0 * (n * t) as f64) / (et * et)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Event {
    NotPrime,
    Q5Member,
    Transitive,
    Regular,
    IsoCirculant,
}

impl Event {
    pub const ALL: [Event; 5] = [
        Event::NotPrime,
        Event::Q5Member,
        Event::Transitive,
        Event::Regular,
        Event::IsoCirculant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Event::NotPrime => "not_prime",
            Event::Q5Member => "q5_member",
            Event::Transitive => "transitive",
            Event::Regular => "regular",
            Event::IsoCirculant => "iso_circulant",
        }
    }

    pub fn holds(self, t: &Tournament, limits: &Limits) -> Result<bool> {
        Ok(match self {
            Event::NotPrime => !is_prime(t, limits)?,
            Event::Q5Member => q5_member(t, limits)?.is_some(),
            Event::Transitive => t.is_transitive(),
            Event::Regular => t.is_regular(),
            Event::IsoCirculant => circulant_isomorphism(t).is_some(),
        })
    }
}

impl std::str::FromStr for Event {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Event::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Event::ALL.iter().map(|e| e.name()).collect();
                Error::invalid(format!(
                    "unknown event '{s}', expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub event: Event,
    pub trials: u64,
    /// Trials evaluated before a predicate failed; equals `trials` normally.
    pub completed: u64,
    pub successes: u64,
    pub estimate: f64,
    /// `Z99 * sqrt(p (1 - p) / completed)`.
    pub half_width: f64,
    pub seed: u64,
    pub aborted: Option<String>,
}

pub fn half_width(successes: u64, trials: u64) -> f64 {
    if trials == 0 {
        return 0.0;
    }
    let p = successes as f64 / trials as f64;
    Z99 * (p * (1.0 - p) / trials as f64).sqrt()
}

/// Trial `i` orients `f` with [`trial_generator`]`(seed, i)`. Trials run in
/// parallel; counts do not depend on scheduling. If a predicate fails the
/// report covers the trials before the first failing one.
pub fn estimate_probability(
    f: &SemiCompleteDigraph,
    event: Event,
    trials: u64,
    seed: u64,
    limits: &Limits,
) -> EstimateReport {
    let outcomes: Vec<Result<bool>> = (0..trials)
        .into_par_iter()
        .map(|i| event.holds(&orient_with(f, &mut trial_generator(seed, i)), limits))
        .collect();
    let mut successes = 0;
    let mut completed = 0;
    let mut aborted = None;
    for o in outcomes {
        match o {
            Ok(hit) => {
                completed += 1;
                successes += hit as u64;
            }
            Err(e) => {
                aborted = Some(e.to_string());
                break;
            }
        }
    }
    EstimateReport {
        event,
        trials,
        completed,
        successes,
        estimate: if completed == 0 {
            0.0
        } else {
            successes as f64 / completed as f64
        },
        half_width: half_width(successes, completed),
        seed,
        aborted,
    }
}

/// Membership tests usable as the family in [`sparse_certificate_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Q5,
    Circulant,
    Transitive,
}

impl Family {
    pub fn contains(self, t: &Tournament, limits: &Limits) -> Result<bool> {
        match self {
            Family::Q5 => Event::Q5Member.holds(t, limits),
            Family::Circulant => Event::IsoCirculant.holds(t, limits),
            Family::Transitive => Event::Transitive.holds(t, limits),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    /// Vertices of the input digraph the tournament lives on.
    pub vertices: Vec<usize>,
    pub tournament: Tournament,
    pub trial: u64,
    /// A certificate that contains `H` is consistent with theory (the input
    /// was not `H`-free); only an `H`-free one would be a counterexample.
    pub h_free: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparseReport {
    pub b: f64,
    pub extraction: Option<Extraction>,
    pub trials_run: u64,
    pub prime_samples: u64,
    pub certificate: Option<Certificate>,
}

impl SparseReport {
    pub fn extraction_failed(&self) -> bool {
        self.extraction.is_none()
    }
}

/// Extract an expander from the bidirectional graph of `g`, restrict `g` to
/// it, and sample orientations until one is prime and outside `family`.
/// The first such sample is the certificate, tagged with whether it is
/// `H`-free.
pub fn sparse_certificate_search<H: Digraph + ?Sized>(
    g: &SemiCompleteDigraph,
    h: &H,
    family: Family,
    b: f64,
    trials: u64,
    seed: u64,
    limits: &Limits,
) -> Result<SparseReport> {
    let extraction = extract_expander(&g.bidi_graph(), b, limits)?;
    let mut report = SparseReport {
        b,
        extraction: None,
        trials_run: 0,
        prime_samples: 0,
        certificate: None,
    };
    let Some(ex) = extraction else {
        return Ok(report);
    };
    let sub = g.induced(&ex.vertices);
    for i in 0..trials {
        let t = orient_with(&sub, &mut trial_generator(seed, i));
        report.trials_run += 1;
        if !is_prime(&t, limits)? {
            continue;
        }
        report.prime_samples += 1;
        if family.contains(&t, limits)? {
            continue;
        }
        let h_free = contains_subdigraph(&t, h).is_none();
        report.certificate = Some(Certificate {
            vertices: ex.vertices.clone(),
            tournament: t,
            trial: i,
            h_free,
        });
        break;
    }
    report.extraction = Some(ex);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> UndirectedOrderedGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        UndirectedOrderedGraph::from_edges(n, &edges).unwrap()
    }

    fn clique(n: usize) -> UndirectedOrderedGraph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        UndirectedOrderedGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn orientation_without_bidi_is_identity() {
        let t = Tournament::u5();
        let f = SemiCompleteDigraph::from(&t);
        for seed in 0..5 {
            assert_eq!(sample_orientation(&f, seed), t);
        }
    }

    #[test]
    fn expansion_examples() {
        let lim = Limits::default();
        let k4 = expansion_exact(&clique(4), &lim);
        assert_eq!((k4.value, k4.exact), (2.0, true));
        assert_eq!(exhaustive(&clique(5)).value, 3.0);
        assert_eq!(expansion_exact(&path(3), &lim).value, 1.0);
        assert_eq!(
            expansion_exact(&UndirectedOrderedGraph::new(5), &lim).value,
            0.0
        );
        let big = expansion_exact(&path(40), &lim);
        assert!(!big.exact);
        // the middle cut of the path: 1 edge over 20 vertices
        assert!(big.value <= 0.05 + 1e-12);
    }

    #[test]
    fn argmin_realizes_value() {
        let g = path(9);
        let r = expansion_exact(&g, &Limits::default());
        let mut inside = vec![false; 9];
        r.argmin_set.iter().for_each(|&v| inside[v] = true);
        assert_eq!(cut_size(&g, &inside), r.cut_edges);
        assert_eq!(r.value, r.cut_edges as f64 / r.argmin_set.len() as f64);
    }

    #[test]
    fn extraction_of_expander_is_immediate() {
        let ex = extract_expander(&clique(10), 1.0, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!(ex.iterations, 0);
        assert_eq!(ex.vertices.len(), 10);
        assert!(ex.certified());
    }

    #[test]
    fn two_cliques_fail_the_density_rule() {
        // the zero cut splits off one K_8, which has 28 edges while the
        // process asks for 8 * log2(8)^2 = 72 on either side
        let mut edges = Vec::new();
        for base in [0, 8] {
            for i in 0..8 {
                for j in i + 1..8 {
                    edges.push((base + i, base + j));
                }
            }
        }
        let g = UndirectedOrderedGraph::from_edges(16, &edges).unwrap();
        assert!(extract_expander(&g, 1.0, &Limits::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn tgap_extremes() {
        let g = clique(7);
        let all = sample_tgap(&g, 1, 3).unwrap();
        assert_eq!(all.graph, g);
        assert!(sample_tgap(&g, 7, 3).unwrap().selected.is_empty());
        for seed in 0..50 {
            let s = sample_tgap(&path(30), 4, seed).unwrap();
            assert!(s.selected.windows(2).all(|w| w[1] - w[0] >= 4));
            assert!(s.selected.iter().all(|&v| (3..=26).contains(&v)));
        }
    }

    #[test]
    fn point_mass_estimates() {
        let f = SemiCompleteDigraph::from(&Tournament::circulant(5).unwrap());
        let lim = Limits::default();
        for e in Event::ALL {
            let r = estimate_probability(&f, e, 20, 1, &lim);
            assert!(r.estimate == 0.0 || r.estimate == 1.0);
            assert_eq!(r.half_width, 0.0);
        }
        let r = estimate_probability(&f, Event::Regular, 10, 1, &lim);
        assert_eq!(r.successes, 10);
    }

    #[test]
    fn estimate_counts_do_not_depend_on_threads() {
        let f = SemiCompleteDigraph::complete(6);
        let lim = Limits::default();
        let a = estimate_probability(&f, Event::Transitive, 300, 9, &lim);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool.install(|| estimate_probability(&f, Event::Transitive, 300, 9, &lim));
        assert_eq!(a, b);
    }

    #[test]
    fn event_names_round_trip() {
        for e in Event::ALL {
            assert_eq!(e.name().parse::<Event>().unwrap(), e);
        }
    }

    #[test]
    fn sparse_search_without_bidi_fails_extraction() {
        let g = SemiCompleteDigraph::from(&Tournament::transitive(8).unwrap());
        let r = sparse_certificate_search(
            &g,
            &Tournament::u5(),
            Family::Q5,
            1.0,
            10,
            0,
            &Limits::default(),
        )
        .unwrap();
        assert!(r.extraction_failed());
        assert!(r.certificate.is_none());
    }
}
