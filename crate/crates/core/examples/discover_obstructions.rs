//! Regenerates the forbidden minors of the projective plane.
//!
//! Graphs that do not embed are reduced greedily (random edge deletions and
//! contractions, isolated vertices dropped) until every single-step minor
//! embeds. Seeds come first from random graphs and glued Kuratowski graphs,
//! then from walks near the classes already found: a found class loses an
//! edge, then random vertex splits and edge additions are applied until it
//! stops embedding, and the result is reduced again. Distinct results are
//! collected up to isomorphism, checked for minimality once more, and
//! written as `.el` files together with manifest rows.
//!
//! cargo run --release -p projlink-core --example discover_obstructions -- OUT_DIR [SEEDS [WALKS [TARGET]]]

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use projlink_core::canon::canonical_graph;
use projlink_core::embedding::is_projective_planar_by_embedding;
use projlink_core::transforms::vertex_splits;
use projlink_core::{canonical_form, named, par, CanonicalCode, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn embeds(g: &Graph) -> bool {
    is_projective_planar_by_embedding(g, u64::MAX).expect("unbounded")
}

fn drop_isolated(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

fn reduce(mut g: Graph, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut moves: Vec<(bool, (usize, usize))> =
            g.edges().into_iter().flat_map(|e| [(false, e), (true, e)]).collect();
        moves.shuffle(rng);
        let mut progressed = false;
        for (contract, e) in moves {
            let h = if contract { g.contract_edge(e) } else { g.delete_edge(e) };
            let h = drop_isolated(&h.expect("edge present"));
            if !embeds(&h) {
                g = h;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return g;
        }
    }
}

fn is_minimal(g: &Graph) -> bool {
    !embeds(g)
        && g.edges().into_iter().all(|e| {
            embeds(&g.delete_edge(e).unwrap()) && embeds(&g.contract_edge(e).unwrap())
        })
        && (0..g.vertex_count()).all(|v| g.degree(v) > 0)
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(7..=14);
    let p = rng.gen_range(0.25..0.75);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Two Kuratowski graphs sharing `shared` vertices, plus a few random edges.
fn glued(rng: &mut ChaCha8Rng) -> Graph {
    let pick = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            named::complete(5)
        } else {
            named::complete_bipartite(3, 3)
        }
    };
    let (a, b) = (pick(rng), pick(rng));
    let shared = rng.gen_range(0..=3usize).min(a.vertex_count());
    let n = a.vertex_count() + b.vertex_count() - shared;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let map_b = |v: usize| if v < shared { v } else { a.vertex_count() + v - shared };
    let mut edges: Vec<(usize, usize)> = a.edges();
    for (u, v) in b.edges() {
        edges.push((map_b(u), map_b(v)));
    }
    for _ in 0..rng.gen_range(0..4) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        let (x, y) = (perm[u], perm[v]);
        if !g.has_edge(x, y) {
            g = g.add_edge(x, y).unwrap();
        }
    }
    g
}

/// Kuratowski graphs glued along two vertices, one of the shared pair's
/// edges removed, the rest subdivided at random.
fn glued_subdivided(rng: &mut ChaCha8Rng) -> Graph {
    let mut g = glued(rng);
    for _ in 0..rng.gen_range(0..3) {
        let edges = g.edges();
        if g.vertex_count() >= 16 || edges.is_empty() {
            break;
        }
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let w = g.vertex_count();
        let mut h = Graph::empty(w + 1);
        for (a, b) in edges {
            if (a, b) != (u, v) {
                h = h.add_edge(a, b).unwrap();
            }
        }
        g = h.add_edge(u, w).unwrap().add_edge(w, v).unwrap();
    }
    g
}

fn seed_graph(i: u64) -> (Graph, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(i);
    let g = match i % 3 {
        0 => random_graph(&mut rng),
        1 => glued(&mut rng),
        _ => glued_subdivided(&mut rng),
    };
    (drop_isolated(&g), rng)
}

/// A random single-step minor of `g` that embeds, grown back by random
/// splits and edge additions until it no longer does.
fn walk(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let edges = g.edges();
    let e = edges[rng.gen_range(0..edges.len())];
    let mut h = if rng.gen_bool(0.5) { g.contract_edge(e) } else { g.delete_edge(e) }.unwrap();
    h = drop_isolated(&h);
    for _ in 0..6 {
        if rng.gen_bool(0.5) && !h.non_edges().is_empty() {
            let ne = h.non_edges();
            let (u, v) = ne[rng.gen_range(0..ne.len())];
            h = h.add_edge(u, v).unwrap();
        } else if h.vertex_count() < 14 {
            let v = rng.gen_range(0..h.vertex_count());
            let splits = vertex_splits(&h, v);
            if splits.is_empty() {
                continue;
            }
            h = splits[rng.gen_range(0..splits.len())].apply(&h).unwrap();
        }
        if !embeds(&h) {
            return Some(h);
        }
    }
    None
}

fn record(classes: &mut BTreeMap<(usize, usize, CanonicalCode), Graph>, g: Graph, label: String) {
    let code = canonical_form(&g).unwrap();
    let key = (g.vertex_count(), g.edge_count(), code);
    if !classes.contains_key(&key) {
        eprintln!("{label}: class {} ({}, {})", classes.len() + 1, key.0, key.1);
        classes.insert(key, canonical_graph(&g).unwrap());
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().expect("output directory"));
    let seeds: u64 = args.next().map(|s| s.parse().unwrap()).unwrap_or(4000);
    let walks: u64 = args.next().map(|s| s.parse().unwrap()).unwrap_or(0);
    let target: usize = args.next().map(|s| s.parse().unwrap()).unwrap_or(usize::MAX);
    let mut classes: BTreeMap<(usize, usize, CanonicalCode), Graph> = BTreeMap::new();
    let chunk = 256u64;
    let mut lo = 0;
    while lo < seeds && classes.len() < target {
        let ids: Vec<u64> = (lo..(lo + chunk).min(seeds)).collect();
        let found: Vec<Option<Graph>> = par::map(&ids, |&i| {
            let (g, mut rng) = seed_graph(i);
            if g.vertex_count() > 16 || embeds(&g) {
                return None;
            }
            Some(reduce(g, &mut rng))
        });
        for (i, g) in ids.iter().zip(found) {
            if let Some(g) = g {
                record(&mut classes, g, format!("seed {i}"));
            }
        }
        lo += chunk;
    }
    let mut lo = 0;
    while lo < walks && classes.len() < target {
        let known: Vec<Graph> = classes.values().cloned().collect();
        let ids: Vec<u64> = (lo..(lo + chunk).min(walks)).collect();
        let found: Vec<Option<Graph>> = par::map(&ids, |&i| {
            let mut rng = ChaCha8Rng::seed_from_u64(i ^ 0x5eed_0000_0000);
            let start = &known[rng.gen_range(0..known.len())];
            walk(start, &mut rng).map(|h| reduce(h, &mut rng))
        });
        for (i, g) in ids.iter().zip(found) {
            if let Some(g) = g {
                record(&mut classes, g, format!("walk {i}"));
            }
        }
        lo += chunk;
    }
    eprintln!("{} classes", classes.len());
    fs::create_dir_all(&out).unwrap();
    let mut manifest = String::new();
    for (i, ((n, m, _), g)) in classes.iter().enumerate() {
        assert!(is_minimal(g), "class {i} is not minor-minimal");
        let name = format!("rp2-obs-{:02}", i + 1);
        let file = format!("{name}.el");
        fs::write(out.join(&file), g.clone().with_name(name.clone()).to_el()).unwrap();
        manifest.push_str(&format!("{name}\tobstructions/{file}\t{n}\t{m}\n"));
    }
    print!("{manifest}");
}
