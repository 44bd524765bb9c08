use std::collections::HashMap;
use std::ops::ControlFlow;
use std::path::PathBuf;

use projlink_core::corpus::connected_graphs;
use projlink_core::embedding::{
    blocks, cycle_homology, disk_sides, enumerate_rp2_embeddings, for_each_cycle, is_nonseparating_embedding,
    is_projective_planar_by_embedding, is_separating_cycle_0, separating_0hom_cycle, sides_of_1hom_cycle,
    y_delta_embedding, EmbCycle, EmbeddingSearch, Rp2Embedding, DEFAULT_EMBEDDING_BUDGET,
};
use projlink_core::minors::is_planar;
use projlink_core::transforms::y_delta;
use projlink_core::{canon::is_isomorphic, named, Error, Graph};

/// Faces counted from scratch: orbits of (dart, orientation) flags, each
/// face appearing once per direction of travel. Also returns the total
/// face length.
fn oracle_faces(emb: &Rp2Embedding) -> (usize, usize) {
    let g = emb.graph();
    let n = g.vertex_count();
    let mut seen: HashMap<(usize, usize, i8), ()> = HashMap::new();
    let mut orbits = 0;
    let mut total = 0;
    for u in 0..n {
        for &v in emb.rotation(u) {
            for s in [1i8, -1] {
                if seen.contains_key(&(u, v, s)) {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b, mut st) = (u, v, s);
                while seen.insert((a, b, st), ()).is_none() {
                    total += 1;
                    st *= emb.signature(a, b);
                    let r = emb.rotation(b);
                    let i = r.iter().position(|&x| x == a).unwrap();
                    let d = r.len();
                    let c = if st > 0 { r[(i + 1) % d] } else { r[(i + d - 1) % d] };
                    (a, b) = (b, c);
                }
            }
        }
    }
    let isolated = (0..n).filter(|&v| g.degree(v) == 0).count();
    (orbits / 2 + isolated, total / 2)
}

fn cycles(g: &Graph) -> Vec<EmbCycle> {
    let mut out = Vec::new();
    for_each_cycle(g, usize::MAX, |c| {
        out.push(c);
        ControlFlow::<()>::Continue(())
    })
    .unwrap();
    out
}

fn planar_wheel(k: usize) -> Rp2Embedding {
    let rot = (0..k).map(|i| vec![(i + 1) % k, k, (i + k - 1) % k]).chain([(0..k).collect()]).collect();
    Rp2Embedding::with_positive_signature(named::wheel(k), rot).unwrap()
}

fn drawing(name: &str) -> Rp2Embedding {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/drawings").join(format!("{name}.emb"));
    Rp2Embedding::parse_emb(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn euler_examples() {
    let w = planar_wheel(4);
    assert_eq!(w.face_count(), 5);
    assert_eq!(w.euler_characteristic(), 2);
    let k6 = drawing("k6-rp2");
    assert_eq!(k6.face_count(), 10);
    assert_eq!(k6.euler_characteristic(), 1);
    let dot = Rp2Embedding::with_positive_signature(Graph::empty(1), vec![vec![]]).unwrap();
    assert_eq!(dot.face_count(), 1);
}

#[test]
fn k6_drawing_has_a_one_sided_triangle() {
    let k6 = drawing("k6-rp2");
    let odd = k6
        .graph()
        .triangles()
        .into_iter()
        .filter(|t| cycle_homology(&k6, &EmbCycle::new(k6.graph(), t.to_vec()).unwrap()).unwrap() == 1)
        .count();
    assert!(odd > 0);
}

#[test]
fn faces_match_the_independent_tracer() {
    for g in connected_graphs(6).unwrap() {
        for e in EmbeddingSearch::default().with_limit(40).enumerate(&g).unwrap() {
            let (f, darts) = oracle_faces(&e);
            assert_eq!(e.face_count(), f, "{e:?} {}", e.to_emb());
            assert_eq!(darts, 2 * g.edge_count());
            let lengths: usize = e.trace_faces().iter().map(|f| f.len()).sum();
            assert_eq!(lengths, 2 * g.edge_count());
            assert!([1, 2].contains(&e.euler_characteristic()));
            assert_eq!(e.euler_characteristic() == 2, e.is_planar_drawing());
        }
    }
}

#[test]
fn switching_keeps_faces_and_homology() {
    for g in [named::complete(5), named::wheel(5), named::complete_bipartite(3, 3), named::triangular_prism()] {
        let cs = cycles(&g);
        for e in enumerate_rp2_embeddings(&g, DEFAULT_EMBEDDING_BUDGET).unwrap().into_iter().take(30) {
            let base: Vec<u8> = cs.iter().map(|c| cycle_homology(&e, c).unwrap()).collect();
            for v in 0..g.vertex_count() {
                let s = e.switch_vertex(v);
                assert_eq!(s.switch_vertex(v), e);
                assert_eq!(s.face_count(), e.face_count());
                assert_eq!(s.euler_characteristic(), e.euler_characteristic());
                assert!(s.is_equivalent(&e));
                let h: Vec<u8> = cs.iter().map(|c| cycle_homology(&s, c).unwrap()).collect();
                assert_eq!(h, base);
            }
        }
    }
}

#[test]
fn switching_clears_a_negative_star() {
    let w = planar_wheel(5);
    let s = w.switch_vertex(5);
    assert_eq!(s.one_homologous_edges().len(), 5);
    assert!(s.one_homologous_edges().iter().all(|&(u, v)| u == 5 || v == 5));
    assert!(s.switch_vertex(5).one_homologous_edges().is_empty());
}

#[test]
fn disk_sides_examples() {
    let k4 = Rp2Embedding::with_positive_signature(
        named::complete(4),
        vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
    )
    .unwrap();
    let outer = EmbCycle::new(k4.graph(), vec![0, 1, 2]).unwrap();
    let s = disk_sides(&k4, &outer).unwrap();
    assert_eq!((s.a.as_slice(), s.b.as_slice()), (&[3][..], &[][..]));

    // two triangles 0 1 2 and 1 2 3 glued along 1 2
    let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let d = Rp2Embedding::with_positive_signature(diamond, vec![vec![1, 2], vec![0, 3, 2], vec![0, 1, 3], vec![1, 2]]).unwrap();
    assert!(d.is_planar_drawing());
    let s = disk_sides(&d, &EmbCycle::new(d.graph(), vec![0, 1, 2]).unwrap()).unwrap();
    assert_eq!(s.a.len() + s.b.len(), 1);
    assert!(!s.is_separating());

    // rim of a wheel with the hub inside and a pendant vertex outside
    let g = named::wheel(4).add_vertices(1).unwrap().add_edge(0, 5).unwrap();
    let mut rot: Vec<Vec<usize>> = (0..4).map(|i| vec![(i + 1) % 4, 4, (i + 3) % 4]).collect();
    rot[0].push(5);
    rot.push((0..4).collect());
    rot.push(vec![0]);
    let e = Rp2Embedding::with_positive_signature(g, rot).unwrap();
    assert!(e.is_planar_drawing());
    let rim = EmbCycle::new(e.graph(), vec![0, 1, 2, 3]).unwrap();
    let s = disk_sides(&e, &rim).unwrap();
    assert_eq!((s.a, s.b), (vec![4], vec![5]));
    assert!(is_separating_cycle_0(&e, &rim).unwrap());
    assert!(!is_nonseparating_embedding(&e).unwrap());
    assert_eq!(separating_0hom_cycle(&e, 1000).unwrap().map(|c| c.len()), Some(4));
}

#[test]
fn octahedron_face_against_coordinates() {
    // outer triangle 0 1 2, inner triangle 3 4 5 with 3 near edge 0-1,
    // 4 near 1-2 and 5 near 2-0
    let pos = [(0.0, 10.0), (-9.0, -5.0), (9.0, -5.0), (-2.0, 1.0), (0.0, -2.0), (2.0, 1.0)];
    let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)];
    let g = Graph::from_edges(6, edges).unwrap();
    assert!(is_isomorphic(&g, &named::complete_multipartite(&[2, 2, 2])));
    let rot = (0..6)
        .map(|v| {
            let (x, y): (f64, f64) = pos[v];
            let mut nb: Vec<usize> = g.neighbors(v).collect();
            nb.sort_by(|&a, &b| {
                let ta = (pos[a].1 - y).atan2(pos[a].0 - x);
                let tb = (pos[b].1 - y).atan2(pos[b].0 - x);
                ta.partial_cmp(&tb).unwrap()
            });
            nb
        })
        .collect();
    let e = Rp2Embedding::with_positive_signature(g, rot).unwrap();
    assert_eq!(e.face_count(), 8);
    let inside = |p: (f64, f64), tri: [usize; 3]| {
        let s = |a: (f64, f64), b: (f64, f64)| (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
        let [a, b, c] = tri.map(|i| pos[i]);
        let d = [s(a, b), s(b, c), s(c, a)];
        d.iter().all(|&x| x > 0.0) || d.iter().all(|&x| x < 0.0)
    };
    for tri in [[0, 1, 2], [3, 4, 5], [0, 1, 3], [1, 2, 4]] {
        let c = EmbCycle::new(e.graph(), tri.to_vec()).unwrap();
        let s = disk_sides(&e, &c).unwrap();
        let off: Vec<usize> = (0..6).filter(|v| !tri.contains(v)).collect();
        let (ins, outs): (Vec<usize>, Vec<usize>) = off.iter().partition(|&&v| inside(pos[v], tri));
        let mut got = [s.a.clone(), s.b.clone()];
        got.sort();
        let mut want = [ins, outs];
        want.sort();
        assert_eq!(got, want, "triangle {tri:?}");
    }
}

#[test]
fn one_homologous_sides() {
    let e = drawing("separating-1hom");
    let c = EmbCycle::new(e.graph(), vec![0, 1, 4]).unwrap();
    assert_eq!(cycle_homology(&e, &c).unwrap(), 1);
    assert!(sides_of_1hom_cycle(&e, &c).unwrap().is_separating());

    // a one-sided cycle through every vertex has nothing off it
    let c5 = named::cycle(5);
    let rot = (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect();
    let m = Rp2Embedding::new(c5, rot, &[(0, 1)]).unwrap();
    let all = EmbCycle::new(m.graph(), (0..5).collect()).unwrap();
    let s = sides_of_1hom_cycle(&m, &all).unwrap();
    assert!(s.a.is_empty() && s.b.is_empty());

    // triangle crossing the boundary once, with one pendant vertex
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
    let e = Rp2Embedding::new(g, vec![vec![1, 3, 2], vec![2, 0], vec![0, 1], vec![0]], &[(1, 2)]).unwrap();
    let t = EmbCycle::new(e.graph(), vec![0, 1, 2]).unwrap();
    let s = sides_of_1hom_cycle(&e, &t).unwrap();
    assert!(!s.is_separating());
    assert!(matches!(disk_sides(&e, &t), Err(Error::HomologyMismatch { expected: 0, found: 1 })));
}

#[test]
fn emb_format_round_trip_and_errors() {
    for name in ["k6-rp2", "star-case", "triangle-case", "neither-case", "separating-1hom", "cycle6-positive"] {
        let e = drawing(name);
        assert_eq!(Rp2Embedding::parse_emb(&e.to_emb()).unwrap(), e);
    }
    assert!(matches!(Rp2Embedding::parse_emb("3 3\nr 0: 1 2\nr 1: 0 2\nr 2: 0\n"), Err(Error::MalformedRotation(_))));
    assert!(matches!(Rp2Embedding::parse_emb("2 1\nr 0: 1\nr 1: 0\nbogus\n"), Err(Error::Parse { line: 4, .. })));
    let k7 = named::complete(7);
    let rot = (0..7).map(|v| (0..7).filter(|&w| w != v).collect()).collect();
    assert!(matches!(Rp2Embedding::with_positive_signature(k7, rot), Err(Error::MalformedRotation(_))));
}

#[test]
fn enumeration_examples() {
    let k4 = enumerate_rp2_embeddings(&named::complete(4), DEFAULT_EMBEDDING_BUDGET).unwrap();
    assert!(k4.iter().any(|e| e.is_planar_drawing()));
    let k5 = enumerate_rp2_embeddings(&named::complete(5), DEFAULT_EMBEDDING_BUDGET).unwrap();
    assert!(!k5.is_empty() && k5.iter().all(|e| e.euler_characteristic() == 1));
    let normal: Vec<Rp2Embedding> = k5.iter().map(Rp2Embedding::normalized).collect();
    for (i, a) in normal.iter().enumerate() {
        assert!(normal[i + 1..].iter().all(|b| b != a));
    }
    let c11 = named::complete(5).disjoint_union(&named::complete_bipartite(3, 3)).unwrap();
    assert!(!is_projective_planar_by_embedding(&c11, DEFAULT_EMBEDDING_BUDGET).unwrap());
    assert!(matches!(
        EmbeddingSearch::default().with_budget(10).enumerate(&named::complete(6)),
        Err(Error::ResourceLimit { .. })
    ));
}

#[test]
fn blocks_partition_the_edges() {
    for g in connected_graphs(6).unwrap() {
        let bs = blocks(&g);
        let mut covered = 0;
        for &m in &bs {
            let inner = g.edges().into_iter().filter(|&(u, v)| m >> u & 1 == 1 && m >> v & 1 == 1).count();
            covered += inner;
        }
        assert_eq!(covered, g.edge_count(), "{g:?}");
    }
}

/// Euler genus is at most one, and planar exactly when a drawing with
/// Euler characteristic two exists.
#[test]
fn planar_graphs_have_plane_drawings() {
    for g in connected_graphs(6).unwrap() {
        let all = enumerate_rp2_embeddings(&g, DEFAULT_EMBEDDING_BUDGET).unwrap();
        assert_eq!(all.iter().any(Rp2Embedding::is_planar_drawing), is_planar(&g), "{g:?}");
    }
}

#[test]
fn y_delta_surgery_examples() {
    let star = Rp2Embedding::with_positive_signature(named::star(3), vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
    let t = y_delta_embedding(&star, 0).unwrap();
    assert!(is_isomorphic(t.graph(), &named::complete(3)));
    assert!(t.is_planar_drawing());
    let w = planar_wheel(3);
    let k3 = y_delta_embedding(&w, 0).unwrap();
    assert!(is_isomorphic(k3.graph(), &y_delta(w.graph(), 0).unwrap()));
    let p = named::triangular_prism();
    for e in enumerate_rp2_embeddings(&p, DEFAULT_EMBEDDING_BUDGET).unwrap() {
        let h = y_delta_embedding(&e, 0).unwrap();
        assert!(is_isomorphic(h.graph(), &y_delta(&p, 0).unwrap()));
        assert!(h.euler_genus() <= e.euler_genus());
        assert_eq!(h.euler_characteristic(), e.euler_characteristic());
    }
}

#[test]
fn y_delta_keeps_nonseparating_drawings_on_small_graphs() {
    let mut checked = 0;
    for g in connected_graphs(6).unwrap() {
        let cubic: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 3).collect();
        if cubic.is_empty() {
            continue;
        }
        for e in enumerate_rp2_embeddings(&g, DEFAULT_EMBEDDING_BUDGET).unwrap() {
            if !is_nonseparating_embedding(&e).unwrap() {
                continue;
            }
            for &v in &cubic {
                let h = y_delta_embedding(&e, v).unwrap();
                assert!(is_nonseparating_embedding(&h).unwrap(), "{e:?} at {v}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
