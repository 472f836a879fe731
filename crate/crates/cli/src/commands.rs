use std::time::{Duration, Instant};

use serde_json::json;
use tourpat_core::classify::{
    bound_profile, chromatic_number, homogeneous_sets, min_feedback_edges, q5_member, Q5Witness,
};
use tourpat_core::embed::{
    classify_two_back_edges, embed_two_back_edge_tournament, embed_via_transitive_blowup,
    find_crossing_pair, find_disjoint_pair_or_xh, find_nested_pair, high_girth_bipartite,
    ktt_free_bipartite, turan_blowup, DisjointOrTree, Route,
};
use tourpat_core::problab::{
    digraph_expansion, estimate_probability, expansion_exact, extract_expander, sample_orientation,
    sample_tgap, sparse_certificate_search, Event, ExpansionReport, Family,
};
use tourpat_core::reduce::{
    figure1_matrices, find_dense_interval_pair, matrix_to_interval_digraph, matrix_to_mstar,
    minimal_p, mstar_blowup,
};
use tourpat_core::search::{
    contains_pattern, contains_subdigraph, count_copies, ex_exact, find_bidirectional_biclique,
    find_transitive_subtournament, t_general_exact, t_transitive_exact, Budget, ExtremalResult,
    ExtremalValue,
};
use tourpat_core::{io, Digraph, Error, SemiCompleteDigraph, Tournament};

use crate::report::{id_pairs, id_sets, ids, map_text, Report, RunConfig};
use crate::{
    acceptance, input, Command, Construct, Contain, Embed, Extremal, Failure, Reduce, Sample,
};

type Run = Result<(Report, i32), Failure>;

fn ok(r: Report) -> Run {
    Ok((r, 0))
}

fn seed(config: &RunConfig) -> Result<u64, Failure> {
    config
        .seed
        .ok_or_else(|| Failure::input("this command is randomized and needs an explicit --seed"))
}

fn budget(config: &RunConfig) -> Budget {
    Budget {
        max_nodes: config.max_nodes,
        deadline: config
            .timeout_secs
            .map(|s| Instant::now() + Duration::from_secs_f64(s)),
    }
}

/// `Ok(None)` for cap errors, so optional parts of a report can be skipped.
fn capped<T>(r: tourpat_core::Result<T>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn dispatch(command: &Command, config: &RunConfig) -> Run {
    match command {
        Command::Classify { g, hero } => classify(g, *hero, config),
        Command::Contain(c) => contain(c),
        Command::Extremal(e) => extremal(e, config),
        Command::Construct(c) => construct(c, config),
        Command::Reduce(r) => reduce(r),
        Command::Sample(s) => sample(s, config),
        Command::Embed(e) => embed(e, config),
        Command::Verify { suite } => verify(suite, config),
    }
}

fn classify(spec: &str, hero: Option<bool>, config: &RunConfig) -> Run {
    let t = input::tournament(spec)?;
    let lim = &config.caps;
    let bounds = bound_profile(&t, hero, lim)?;
    let p = &bounds.profile;
    let coloring = capped(chromatic_number(&t, lim))?;
    let feedback = capped(min_feedback_edges(&t, lim))?;
    let homogeneous = capped(homogeneous_sets(&t, lim))?;
    let q5 = capped(q5_member(&t, lim))?;
    let q5_reason = q5.as_ref().map(|w| match w {
        Some(Q5Witness::Circulant { .. }) => "isomorphic to C_n",
        Some(Q5Witness::Partition { .. }) => "three parts with transitive pairwise unions",
        None => "not a member",
    });
    let report = Report::new("class profile")
        .field("n", p.n)
        .field("chi", p.chi)
        .field("s", p.s)
        .field("beta", p.beta)
        .field("is_star", p.is_star)
        .field("is_forest", p.is_forest)
        .field("is_weak_forest", p.is_weak_forest)
        .field("is_prime", p.is_prime)
        .field("is_transitive", t.is_transitive())
        .field("is_regular", t.is_regular())
        .field("q5_member", q5.as_ref().map(|w| w.is_some()))
        .field("q5_reason", q5_reason)
        .field("color_classes", coloring.map(|c| id_sets(&c.classes)))
        .field("homogeneous_sets", homogeneous.map(|h| id_sets(&h)))
        .field("regimes", &bounds.regimes)
        .field("undecided", &bounds.unknown)
        .field("skipped", &p.skipped)
        .witness(feedback.map(|f| io::write_ordering(&f.vertex_ordering())));
    ok(report)
}

fn contain(c: &Contain) -> Run {
    match c {
        Contain::Digraph { g, h, count } => {
            let g = input::semi_complete(g)?;
            let h = input::tournament(h)?;
            let w = contains_subdigraph(&g, &h);
            let mut r = Report::new("copy of H in G")
                .field("contains", w.is_some())
                .field("map", w.as_ref().map(|w| ids(&w.map)));
            if *count {
                r = r.field("copies", count_copies(&g, &h));
            }
            ok(r.witness(w.map(|w| map_text(&w.map))))
        }
        Contain::Matrix { a, m } => {
            let a = input::matrix(a)?;
            let m = input::matrix(m)?;
            let w = contains_pattern(&a, &m);
            let r = Report::new("occurrence of M in A")
                .field("contains", w.is_some())
                .field("rows", w.as_ref().map(|w| ids(&w.rows)))
                .field("cols", w.as_ref().map(|w| ids(&w.cols)));
            let text = w.map(|w| format!("{}{}", map_text(&w.rows), map_text(&w.cols)));
            ok(r.witness(text))
        }
        Contain::Transitive { g, k } => {
            let g = input::semi_complete(g)?;
            let w = find_transitive_subtournament(&g, *k);
            let r = Report::new("T_k in G")
                .field("contains", w.is_some())
                .field("vertices", w.as_ref().map(|w| ids(w)));
            ok(r.witness(w.map(|w| map_text(&w))))
        }
        Contain::Biclique { g, size_a, size_b } => {
            let g = input::semi_complete(g)?;
            let w = find_bidirectional_biclique(&g, *size_a, *size_b, None);
            let r = Report::new("bidirectional K_{a,b}")
                .field("contains", w.is_some())
                .field("a", w.as_ref().map(|w| ids(&w.0)))
                .field("b", w.as_ref().map(|w| ids(&w.1)));
            ok(r)
        }
    }
}

fn extremal_report<W>(
    quantity: &str,
    n: usize,
    res: &ExtremalResult<W>,
    text: Option<String>,
) -> Run {
    let code = match res.value {
        ExtremalValue::Exact { .. } => 0,
        ExtremalValue::Bracket { .. } => 2,
    };
    let (lower, upper) = match res.value {
        ExtremalValue::Exact { value } => (value, value),
        ExtremalValue::Bracket { lower, upper } => (lower, upper),
    };
    let r = Report::new(quantity)
        .field("n", n)
        .field("complete", code == 0)
        .field("value", res.value.exact())
        .field("lower", lower)
        .field("upper", upper)
        .field("nodes_explored", res.nodes_explored)
        .witness(text);
    Ok((r, code))
}

fn extremal(e: &Extremal, config: &RunConfig) -> Run {
    let b = budget(config);
    match e {
        Extremal::TTransitive { n, h } => {
            let h = input::tournament(h)?;
            let res = t_transitive_exact(*n, &h, &config.caps, &b)?;
            let text = res
                .witness
                .as_ref()
                .map(|w| io::write_digraph(&w.digraph()));
            extremal_report("t(T_n,H)", *n, &res, text)
        }
        Extremal::TGeneral { n, h } => {
            let h = input::tournament(h)?;
            let res = t_general_exact(*n, &h, &config.caps, &b)?;
            let text = res
                .witness
                .as_ref()
                .map(|w| io::write_digraph(&w.digraph()));
            extremal_report("t(n,H)", *n, &res, text)
        }
        Extremal::Ex { n, m } => {
            let m = input::matrix(m)?;
            let res = ex_exact(*n, &m, &config.caps, &b)?;
            let text = res.witness.as_ref().map(io::write_matrix);
            extremal_report("ex(n,M)", *n, &res, text)
        }
    }
}

fn digraph_body<D: Digraph>(name: &str, g: &D) -> Report {
    Report::new(name)
        .field("n", g.order())
        .body(io::write_digraph(g))
}

fn semi_body(name: &str, g: &SemiCompleteDigraph) -> Report {
    digraph_body(name, g).field("bidirectional_pairs", g.bidirectional_count())
}

fn construct(c: &Construct, config: &RunConfig) -> Run {
    let r = match c {
        Construct::Transitive { n } => digraph_body("T_n", &Tournament::transitive(*n)?),
        Construct::Circulant { n } => digraph_body("C_n", &Tournament::circulant(*n)?),
        Construct::U5 => digraph_body("U_5", &Tournament::u5()),
        Construct::Delta { k } => digraph_body("Delta_k", &Tournament::delta(*k)?),
        Construct::Paley7 => digraph_body("P_7", &input::tournament("paley7")?),
        Construct::Complete { n } => {
            semi_body("complete digraph", &SemiCompleteDigraph::complete(*n))
        }
        Construct::Turan { n, r } => semi_body("T_n + T(n,r-1)", &turan_blowup(*n, *r)?),
        Construct::HighGirth { n, girth } => {
            let g = high_girth_bipartite(*n, *girth, seed(config)?)?;
            Report::new("bipartite graph of girth > g")
                .field("edges", g.edge_count())
                .body(io::write_ordered_graph(&g))
        }
        Construct::KttFree { n, t } => {
            let g = ktt_free_bipartite(*n, *t, seed(config)?)?;
            Report::new("K_{t,t}-free bipartite graph")
                .field("edges", g.edge_count())
                .body(io::write_ordered_graph(&g))
        }
        Construct::Figure1 { which } => {
            let (m1, m2) = figure1_matrices();
            let m = if *which == 1 { m1 } else { m2 };
            Report::new(format!("M_{which}"))
                .field("ones", m.count_ones())
                .field("acyclic", m.is_acyclic())
                .body(io::write_matrix(&m))
        }
    };
    ok(r)
}

fn reduce(r: &Reduce) -> Run {
    let r = match r {
        Reduce::Mstar { m } => {
            let s = matrix_to_mstar(&input::matrix(m)?)?;
            digraph_body("M*", &s.tournament)
                .field("k", s.k)
                .field("left", ids(&s.left().collect::<Vec<_>>()))
                .field("right", ids(&s.right().collect::<Vec<_>>()))
                .field("left_covered", s.left_covered)
                .field("right_covered", s.right_covered)
        }
        Reduce::Blowup { m, p } => {
            digraph_body("M*_p", &mstar_blowup(&input::matrix(m)?, *p)?).field("p", p)
        }
        Reduce::MinimalP { k } => Report::new("least even p for K_{k,k}")
            .field("k", k)
            .field("p", minimal_p(*k)?),
        Reduce::Interval { a } => semi_body(
            "interval digraph of A",
            &matrix_to_interval_digraph(&input::matrix(a)?)?,
        ),
        Reduce::DensePair { g, p } => {
            let g = input::semi_complete(g)?;
            let pair = find_dense_interval_pair(&g, *p)?;
            Report::new("dense interval pair")
                .field("p", p)
                .field("found", pair.is_some())
                .field("x", pair.as_ref().map(|q| [q.x.start + 1, q.x.end]))
                .field("y", pair.as_ref().map(|q| [q.y.start + 1, q.y.end]))
                .field("m", pair.as_ref().map(|q| q.x.len()))
                .field("count", pair.as_ref().map(|q| q.count))
        }
    };
    ok(r)
}

fn expansion_fields(r: Report, e: &ExpansionReport) -> Report {
    r.field(
        "expansion",
        if e.value.is_finite() {
            json!(e.value)
        } else {
            json!("inf")
        },
    )
    .field("cut_edges", e.cut_edges)
    .field("argmin_set", ids(&e.argmin_set))
    .field("exact", e.exact)
}

fn sample(s: &Sample, config: &RunConfig) -> Run {
    let lim = &config.caps;
    match s {
        Sample::Orient { f } => {
            let f = input::semi_complete(f)?;
            ok(digraph_body(
                "sample of D_F",
                &sample_orientation(&f, seed(config)?),
            ))
        }
        Sample::Estimate { f, event, trials } => {
            let f = input::semi_complete(f)?;
            let event: Event = event.parse()?;
            let r = estimate_probability(&f, event, *trials, seed(config)?, lim);
            let code = if r.aborted.is_some() { 2 } else { 0 };
            let report = Report::new(format!("P[{}] under D_F", event.name()))
                .field("event", event.name())
                .field("trials", r.trials)
                .field("completed", r.completed)
                .field("successes", r.successes)
                .field("estimate", r.estimate)
                .field("half_width_99", r.half_width)
                .field("aborted", &r.aborted);
            Ok((report, code))
        }
        Sample::Tgap { g, t } => {
            let g = input::ordered_graph(g)?;
            let s = sample_tgap(&g, *t, seed(config)?)?;
            let r = Report::new("t-gap subgraph")
                .field("t", t)
                .field("selected", ids(&s.selected))
                .field("edges", s.graph.edge_count())
                .witness(Some(io::write_ordered_graph(&s.graph)));
            ok(r)
        }
        Sample::Expansion { g, f } => {
            let e = match (g, f) {
                (Some(g), None) => expansion_exact(&input::ordered_graph(g)?, lim),
                (None, Some(f)) => digraph_expansion(&input::semi_complete(f)?, lim),
                _ => return Err(Failure::input("give exactly one of --g and --f")),
            };
            ok(expansion_fields(Report::new("edge expansion"), &e))
        }
        Sample::Extract { g, b } => {
            let g = input::ordered_graph(g)?;
            let ex = extract_expander(&g, *b, lim)?;
            let mut r = Report::new("expander extraction")
                .field("b", b)
                .field("found", ex.is_some());
            if let Some(ex) = ex {
                r = expansion_fields(r, &ex.expansion)
                    .field("vertices", ids(&ex.vertices))
                    .field("iterations", ex.iterations)
                    .field("threshold", ex.threshold)
                    .field("certified", ex.certified())
                    .witness(Some(io::write_ordered_graph(&ex.graph)));
            }
            ok(r)
        }
        Sample::Sparse {
            f,
            h,
            family,
            b,
            trials,
        } => {
            let f = input::semi_complete(f)?;
            let h = input::tournament(h)?;
            let family = match family.as_str() {
                "q5" => Family::Q5,
                "circulant" => Family::Circulant,
                "transitive" => Family::Transitive,
                other => return Err(Failure::input(format!("unknown family `{other}`"))),
            };
            let rep = sparse_certificate_search(&f, &h, family, *b, *trials, seed(config)?, lim)?;
            let c = rep.certificate.as_ref();
            let r = Report::new("prime sample outside the family")
                .field("extraction_failed", rep.extraction_failed())
                .field(
                    "expander",
                    rep.extraction.as_ref().map(|e| ids(&e.vertices)),
                )
                .field("trials_run", rep.trials_run)
                .field("prime_samples", rep.prime_samples)
                .field("certificate_found", c.is_some())
                .field("certificate_trial", c.map(|c| c.trial))
                .field("certificate_h_free", c.map(|c| c.h_free))
                .witness(c.map(|c| io::write_digraph(&c.tournament)));
            ok(r)
        }
    }
}

fn embed(e: &Embed, config: &RunConfig) -> Run {
    match e {
        Embed::Config { h, order } => {
            let h = input::tournament(h)?;
            let ord = input::ordering(order)?;
            let c = classify_two_back_edges(&h, &ord)?;
            ok(Report::new("two back-edge configuration")
                .field("kind", c.kind.name())
                .field("positions", ids(&c.positions)))
        }
        Embed::TwoBackEdge {
            h,
            order,
            g,
            retries,
        } => {
            let h = input::tournament(h)?;
            let ord = input::ordering(order)?;
            let g = input::semi_complete(g)?;
            let found = embed_two_back_edge_tournament(&h, &ord, &g, seed(config)?, *retries)?;
            let mut r = Report::new("copy of H in T_n plus bidirectional pairs")
                .field("found", found.is_some());
            if let Some(f) = found {
                let route = match f.route {
                    Route::Gap {
                        attempt,
                        sample_size,
                    } => json!({"route": "gap", "attempt": attempt, "sample_size": sample_size}),
                    Route::Direct => json!({"route": "direct"}),
                };
                r = r
                    .field("config", f.config.kind.name())
                    .field("route", route)
                    .field("map", ids(&f.witness.map))
                    .field("pinned", ids(&f.pinned))
                    .field("realized_order", ids(&f.realized_order))
                    .witness(Some(map_text(&f.witness.map)));
            }
            ok(r)
        }
        Embed::Blowup {
            g,
            h,
            classes,
            parts,
        } => {
            let g = input::semi_complete(g)?;
            let h = input::tournament(h)?;
            let w = embed_via_transitive_blowup(
                &g,
                &h,
                &input::vertex_sets(classes)?,
                &input::vertex_sets(parts)?,
            )?;
            ok(Report::new("copy of H via transitive blow-up")
                .field("map", ids(&w.map))
                .witness(Some(map_text(&w.map))))
        }
        Embed::Find { kind, g, h } => {
            let g = input::ordered_graph(g)?;
            let r = Report::new(format!("{kind} edge pair"));
            let pair_fields = |r: Report, p: Option<[usize; 4]>| {
                let edges = p.map(|[a, b, c, d]| match kind.as_str() {
                    "nested" => id_pairs(&[(a, d), (b, c)]),
                    _ => id_pairs(&[(a, c), (b, d)]),
                });
                r.field("found", p.is_some()).field("edges", edges)
            };
            let r = match kind.as_str() {
                "nested" => pair_fields(r, find_nested_pair(&g)?),
                "crossing" => pair_fields(r, find_crossing_pair(&g)?),
                "disjoint" => match find_disjoint_pair_or_xh(&g, *h)? {
                    None => r.field("found", false),
                    Some(DisjointOrTree::Pair([a, b, c, d])) => r
                        .field("found", true)
                        .field("shape", "disjoint pair")
                        .field("edges", id_pairs(&[(a, b), (c, d)])),
                    Some(DisjointOrTree::Tree(xs)) => r
                        .field("found", true)
                        .field("shape", format!("X_{h}"))
                        .field("vertices", ids(&xs)),
                },
                other => {
                    return Err(Error::InvalidInput(format!("unknown finder `{other}`")).into())
                }
            };
            ok(r)
        }
    }
}

fn verify(suite: &str, config: &RunConfig) -> Run {
    let seed = seed(config)?;
    let ids: Vec<u8> = if suite == "all" {
        acceptance::CRITERIA.iter().map(|c| c.id).collect()
    } else {
        suite
            .split(',')
            .map(|s| match s.trim().parse::<u8>() {
                Ok(id) if acceptance::CRITERIA.iter().any(|c| c.id == id) => Ok(id),
                _ => Err(Failure::input(format!("unknown criterion `{s}`"))),
            })
            .collect::<Result<_, _>>()?
    };
    let outcomes = acceptance::run_suite(&ids, seed, &config.caps);
    let all = outcomes.iter().all(|o| o.passed());
    let table: String = outcomes.iter().map(|o| o.table_lines(false)).collect();
    let rows: Vec<serde_json::Value> = outcomes.iter().map(|o| o.to_json(false)).collect();
    let r = Report::new("acceptance suite")
        .field("passed", outcomes.iter().filter(|o| o.passed()).count())
        .field("failed", outcomes.iter().filter(|o| !o.passed()).count())
        .json_field("criteria", rows)
        .body(table);
    Ok((r, if all { 0 } else { 1 }))
}
