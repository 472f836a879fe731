//! Constructive embeddings into augmented transitive tournaments and the
//! extremal constructions used for lower bounds.

mod constructions;
mod finders;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, SemiCompleteDigraph, Tournament};
use crate::error::{Error, Result};
use crate::ordering::{back_edge_graph, UndirectedOrderedGraph, VertexOrdering};
use crate::problab::sample_tgap;
use crate::rng::derive_seed;
use crate::witness::VertexEmbedding;

pub use constructions::{
    embed_via_transitive_blowup, find_ktt, girth, high_girth_bipartite, ktt_free_bipartite,
    transitive_with_bidirectional, turan_blowup,
};
pub use finders::{
    find_crossing_pair, find_disjoint_pair_or_xh, find_nested_pair, verify_crossing_pair,
    verify_disjoint_pair, verify_nested_pair, verify_xh_copy, DisjointOrTree,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    Disjoint,
    Intersecting,
    Containment,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 3] = [
        ConfigKind::Disjoint,
        ConfigKind::Intersecting,
        ConfigKind::Containment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::Disjoint => "disjoint",
            ConfigKind::Intersecting => "intersecting",
            ConfigKind::Containment => "containment",
        }
    }

    /// The two back edges on sorted positions `p < q < r < s`, as
    /// `(later, earlier)` index pairs into `[p, q, r, s]`.
    pub fn back_edges(self) -> [(usize, usize); 2] {
        match self {
            ConfigKind::Disjoint => [(1, 0), (3, 2)],
            ConfigKind::Intersecting => [(2, 0), (3, 1)],
            ConfigKind::Containment => [(3, 0), (2, 1)],
        }
    }
}

/// Two independent back edges of an ordering. `positions` are the four
/// endpoints sorted, `p < q < r < s`; the pairing is given by `kind`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackEdgeConfig {
    pub kind: ConfigKind,
    pub positions: [usize; 4],
}

/// Which configuration the two back edges of `ord` form.
pub fn classify_two_back_edges(h: &Tournament, ord: &VertexOrdering) -> Result<BackEdgeConfig> {
    let g = back_edge_graph(h, ord)?;
    let edges = g.edges();
    if edges.len() != 2 {
        return Err(Error::BackEdgeShape(format!(
            "expected exactly 2 back edges, found {}",
            edges.len()
        )));
    }
    let [(b, a), (d, c)] = [edges[0], edges[1]];
    if g.edges_share_endpoint() {
        return Err(Error::BackEdgeShape(format!(
            "back edges ({}, {}) and ({}, {}) share an endpoint; the ordering is a star",
            a + 1,
            b + 1,
            c + 1,
            d + 1
        )));
    }
    // edges are sorted, so b < d; a is the later end of the first edge
    let (kind, positions) = if a < d {
        (ConfigKind::Disjoint, [b, a, d, c])
    } else if a < c {
        (ConfigKind::Intersecting, [b, d, a, c])
    } else {
        (ConfigKind::Containment, [b, d, c, a])
    };
    Ok(BackEdgeConfig { kind, positions })
}

/// Strictly increasing assignment of ordering positions `0..h` to host
/// positions `0..n` that sends `pins[i].0` to `pins[i].1` and fills every
/// other position with the smallest free host positions in between.
fn interleave(h: usize, n: usize, pins: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut pins = pins.to_vec();
    pins.sort_unstable();
    let mut out = vec![usize::MAX; h];
    let mut next_pos = 0usize;
    let mut next_host = 0usize;
    for &(pos, host) in pins.iter().chain(std::iter::once(&(h, n))) {
        if pos < next_pos || host < next_host {
            return None;
        }
        if host - next_host < pos - next_pos {
            return None;
        }
        for (k, p) in (next_pos..pos).enumerate() {
            out[p] = next_host + k;
        }
        if pos < h {
            out[pos] = host;
        }
        next_pos = pos + 1;
        next_host = host + 1;
    }
    Some(out)
}

/// How a two-back-edge embedding was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    /// From the configuration finder run on an `h`-gap sample.
    Gap { attempt: u32, sample_size: usize },
    /// From the finder run on the whole bidirectional graph after every gap
    /// sample failed.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBackEdgeEmbedding {
    pub witness: VertexEmbedding,
    pub config: BackEdgeConfig,
    pub route: Route,
    /// Host positions of the vertices tied to bidirectional pairs.
    pub pinned: Vec<usize>,
    /// The ordering of `H` realised increasingly in the host; differs from
    /// the input ordering on the `X_h` branch.
    pub realized_order: Vec<usize>,
}

/// The `X_{r-p+1}` branch: move `y_p` right after `y_r`. The new back edges
/// join `y_p` to `y_{p+1}, ..., y_r` except `y_q`, and `y_r` to `y_s`.
pub fn xh_reordering(ord: &VertexOrdering, cfg: &BackEdgeConfig) -> Result<VertexOrdering> {
    if cfg.kind != ConfigKind::Disjoint {
        return Err(Error::invalid(
            "the X_h reordering applies to the disjoint configuration",
        ));
    }
    let [p, _, r, _] = cfg.positions;
    let mut perm: Vec<usize> = ord.as_slice().to_vec();
    let yp = perm.remove(p);
    perm.insert(r, yp);
    VertexOrdering::new(perm)
}

/// Positions in the reordered `H` that form its `X_{r-p+1}`, as
/// `x_1, ..., x_{r-p+1}`: `y_{p+1..=r}` without `y_q`, then `y_p`, then `y_s`.
fn reordered_tree_positions(cfg: &BackEdgeConfig) -> Vec<usize> {
    let [p, q, r, s] = cfg.positions;
    // after removing y_p, original position t > p sits at t - 1; y_p sits at r
    let mut xs: Vec<usize> = (p + 1..=r).filter(|&t| t != q).map(|t| t - 1).collect();
    xs.push(r);
    xs.push(s);
    xs
}

struct Attempt<'a> {
    h: &'a Tournament,
    ord: &'a VertexOrdering,
    cfg: BackEdgeConfig,
    g: &'a SemiCompleteDigraph,
}

impl Attempt<'_> {
    /// Map from an increasing host assignment of `order` positions.
    fn realize(
        &self,
        order: &VertexOrdering,
        pins: &[(usize, usize)],
    ) -> Option<(VertexEmbedding, Vec<usize>)> {
        let hsize = self.h.order();
        let hosts = interleave(hsize, self.g.order(), pins)?;
        let mut map = vec![0; hsize];
        for (pos, &x) in hosts.iter().enumerate() {
            map[order.vertex_at(pos)] = x;
        }
        let w = VertexEmbedding::new(map);
        w.verify(self.g, self.h).ok()?;
        Some((w, order.as_slice().to_vec()))
    }

    /// Runs the configuration finder on `sub`, whose vertex `i` is host
    /// position `label[i]`.
    fn on(
        &self,
        sub: &UndirectedOrderedGraph,
        label: &[usize],
    ) -> Result<Option<(VertexEmbedding, Vec<usize>, Vec<usize>)>> {
        let k = self.h.order();
        let four = |xs: [usize; 4]| xs.map(|x| label[x]);
        let pinned_four = |hosts: [usize; 4]| -> Vec<(usize, usize)> {
            self.cfg.positions.iter().copied().zip(hosts).collect()
        };
        let out = match self.cfg.kind {
            ConfigKind::Disjoint => match find_disjoint_pair_or_xh(sub, k)? {
                None => None,
                Some(DisjointOrTree::Pair(xs)) => {
                    let pins = pinned_four(four(xs));
                    self.realize(self.ord, &pins)
                        .map(|(w, o)| (w, o, pins.iter().map(|p| p.1).collect()))
                }
                Some(DisjointOrTree::Tree(xs)) => {
                    let order = xh_reordering(self.ord, &self.cfg)?;
                    let tree_pos = reordered_tree_positions(&self.cfg);
                    let m = tree_pos.len();
                    // the last m - 2 leaves of the X_h copy, its centre and its tail
                    let hosts: Vec<usize> = xs[k - m..].iter().map(|&x| label[x]).collect();
                    let pins: Vec<(usize, usize)> = tree_pos
                        .iter()
                        .copied()
                        .zip(hosts.iter().copied())
                        .collect();
                    self.realize(&order, &pins).map(|(w, o)| (w, o, hosts))
                }
            },
            ConfigKind::Containment => find_nested_pair(sub)?.and_then(|xs| {
                let pins = pinned_four(four(xs));
                self.realize(self.ord, &pins)
                    .map(|(w, o)| (w, o, pins.iter().map(|p| p.1).collect()))
            }),
            ConfigKind::Intersecting => find_crossing_pair(sub)?.and_then(|xs| {
                let pins = pinned_four(four(xs));
                self.realize(self.ord, &pins)
                    .map(|(w, o)| (w, o, pins.iter().map(|p| p.1).collect()))
            }),
        };
        Ok(out)
    }
}

/// Embeds `H` (whose ordering `ord` has two independent back edges) into
/// `G`, a transitive tournament with added bidirectional pairs. Each
/// attempt draws an `h`-gap sample of the bidirectional graph (seed
/// derived from `seed` and the attempt number), runs the finder for the
/// configuration, and interleaves the remaining vertices of `H` between
/// the pinned ones. After `retries` failed samples the finder is run once
/// on the whole graph. Every witness is verified.
pub fn embed_two_back_edge_tournament(
    h: &Tournament,
    ord: &VertexOrdering,
    g: &SemiCompleteDigraph,
    seed: u64,
    retries: u32,
) -> Result<Option<TwoBackEdgeEmbedding>> {
    let cfg = classify_two_back_edges(h, ord)?;
    if !g.extends_transitive() {
        return Err(Error::invalid(
            "host must contain every arc i -> j (i < j) of the transitive tournament",
        ));
    }
    let k = h.order();
    let bidi = g.bidi_graph();
    let attempt = Attempt { h, ord, cfg, g };
    let done = |found: (VertexEmbedding, Vec<usize>, Vec<usize>), route| TwoBackEdgeEmbedding {
        witness: found.0,
        config: cfg,
        route,
        pinned: found.2,
        realized_order: found.1,
    };
    for a in 0..retries {
        let sample = sample_tgap(&bidi, k, derive_seed(seed, a as u64))?;
        if sample.graph.edge_count() == 0 {
            continue;
        }
        if let Some(found) = attempt.on(&sample.graph, &sample.selected)? {
            let route = Route::Gap {
                attempt: a,
                sample_size: sample.selected.len(),
            };
            return Ok(Some(done(found, route)));
        }
    }
    let label: Vec<usize> = (0..g.order()).collect();
    Ok(attempt
        .on(&bidi, &label)?
        .map(|found| done(found, Route::Direct)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `T_h` with the arcs between the given position pairs reversed.
    fn with_back_edges(h: usize, back: &[(usize, usize)]) -> Tournament {
        Tournament::from_fn(h, |i, j| !back.contains(&(j, i)))
    }

    #[test]
    fn configurations() {
        let id = VertexOrdering::identity(4);
        let c = classify_two_back_edges(&with_back_edges(4, &[(1, 0), (3, 2)]), &id).unwrap();
        assert_eq!((c.kind, c.positions), (ConfigKind::Disjoint, [0, 1, 2, 3]));
        let c = classify_two_back_edges(&with_back_edges(4, &[(2, 0), (3, 1)]), &id).unwrap();
        assert_eq!(c.kind, ConfigKind::Intersecting);
        let c = classify_two_back_edges(&with_back_edges(4, &[(3, 0), (2, 1)]), &id).unwrap();
        assert_eq!(c.kind, ConfigKind::Containment);
        let star = with_back_edges(4, &[(2, 0), (3, 0)]);
        assert!(matches!(
            classify_two_back_edges(&star, &id),
            Err(Error::BackEdgeShape(_))
        ));
        assert!(classify_two_back_edges(&Tournament::transitive(4).unwrap(), &id).is_err());
    }

    #[test]
    fn interleave_respects_pins() {
        assert_eq!(interleave(4, 10, &[(1, 5)]), Some(vec![0, 5, 6, 7]));
        assert_eq!(interleave(3, 10, &[(2, 1)]), None);
        assert_eq!(interleave(3, 3, &[(0, 1)]), None);
    }

    #[test]
    fn reordering_has_tree_back_edges() {
        // disjoint config at p=1, q=3, r=5, s=6 on 8 vertices
        let h = with_back_edges(8, &[(3, 1), (6, 5)]);
        let ord = VertexOrdering::identity(8);
        let cfg = classify_two_back_edges(&h, &ord).unwrap();
        let new = xh_reordering(&ord, &cfg).unwrap();
        let back = back_edge_graph(&h, &new).unwrap();
        let xs = reordered_tree_positions(&cfg);
        assert_eq!(xs.len(), 5);
        verify_xh_copy(&back, 5, &xs).unwrap();
        assert_eq!(back.edge_count(), 4);
    }

    #[test]
    fn planted_pairs_are_recovered() {
        let n = 40;
        let t = Tournament::transitive(n).unwrap();
        let id = VertexOrdering::identity(4);
        for kind in ConfigKind::ALL {
            let [e1, e2] = kind.back_edges();
            let h = with_back_edges(4, &[e1, e2]);
            let hosts = [8usize, 16, 24, 32];
            let planted: Vec<(usize, usize)> = [e1, e2]
                .iter()
                .map(|&(a, b)| (hosts[a], hosts[b]))
                .collect();
            let g = SemiCompleteDigraph::with_back_arcs(&t, &planted).unwrap();
            let e = embed_two_back_edge_tournament(&h, &id, &g, 3, 16)
                .unwrap()
                .unwrap();
            e.witness.verify(&g, &h).unwrap();
            let mut pinned = e.pinned.clone();
            pinned.sort_unstable();
            assert_eq!(pinned, hosts.to_vec(), "{kind:?}");
        }
    }
}
