use std::collections::HashSet;

use projlink_core::canon::{canonical_form, is_isomorphic};
use projlink_core::corpus::connected_graphs;
use projlink_core::transforms::{
    delta_y, dy_closure, dy_closure_limited, enumerate_edge_additions, enumerate_vertex_splits,
    vertex_splits, y_delta, y_delta_traced, Triangle,
};
use projlink_core::{named, Error, Graph};

#[test]
fn delta_y_examples() {
    let k4 = named::complete(4);
    let h = delta_y(&k4, Triangle::new(&k4, 0, 1, 2).unwrap()).unwrap();
    assert!(is_isomorphic(&h, &named::complete_bipartite(2, 3)));
    for adjacent in [true, false] {
        let g = named::k7_minus_two_edges(adjacent);
        for [a, b, c] in g.triangles() {
            let h = delta_y(&g, Triangle::new(&g, a, b, c).unwrap()).unwrap();
            assert_eq!((h.vertex_count(), h.edge_count()), (8, 19));
        }
    }
    assert!(matches!(Triangle::new(&named::cycle(4), 0, 1, 2), Err(Error::NotATriangle(_))));
}

#[test]
fn y_delta_examples() {
    assert!(is_isomorphic(&y_delta(&named::star(3), 0).unwrap(), &named::complete(3)));
    assert!(matches!(y_delta(&named::complete(5), 0), Err(Error::DegreeNotThree { .. })));
    let k4 = named::complete(4);
    let traced = y_delta_traced(&k4, 0).unwrap();
    assert_eq!(traced.collapsed, 3);
    assert!(is_isomorphic(&traced.graph, &named::complete(3)));
}

#[test]
fn c11_marked_exchange_makes_the_k33_part_planar() {
    let c11 = named::complete(5).disjoint_union(&named::complete_bipartite(3, 3)).unwrap();
    let after = y_delta(&c11, 5).unwrap();
    assert_eq!((after.vertex_count(), after.edge_count()), (10, 19));
    let b = after.induced(&(5..10).collect::<Vec<_>>());
    assert!(is_isomorphic(&b, &named::complete(5).delete_edge((0, 1)).unwrap()));
}

/// Round trip on every triangle of every connected graph with at most 7 vertices.
#[test]
fn delta_y_then_y_delta_round_trips() {
    let mut checked = 0;
    for g in connected_graphs(7).unwrap() {
        for [a, b, c] in g.triangles() {
            let t = Triangle::new(&g, a, b, c).unwrap();
            let h = delta_y(&g, t).unwrap();
            let back = y_delta(&h, h.vertex_count() - 1).unwrap();
            assert!(is_isomorphic(&back, &g), "{g:?} at {a},{b},{c}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn closure_examples() {
    let fam = dy_closure(&named::complete(6)).unwrap();
    assert_eq!(fam.len(), 7);
    assert!(fam.iter().all(|g| g.edge_count() == 15));
    let k44e: Vec<&Graph> = fam.iter().filter(|g| (g.vertex_count(), g.edge_count()) == (8, 15)).collect();
    assert_eq!(k44e.iter().filter(|g| g.is_bipartite()).count(), 1);
    assert!(fam.iter().any(|g| is_isomorphic(g, &named::petersen())));
    assert!(fam.iter().any(|g| is_isomorphic(g, &named::complete_multipartite(&[3, 3, 1]))));
    assert!(fam.iter().any(|g| is_isomorphic(g, &named::k44_minus_e())));

    let tri = dy_closure(&named::complete(3)).unwrap();
    assert_eq!(tri.len(), 2);
    assert!(tri.iter().any(|g| is_isomorphic(g, &named::star(3))));
    assert!(matches!(dy_closure_limited(&named::complete(6), 3), Err(Error::ResourceLimit { .. })));

    let codes: Vec<_> = fam.iter().map(|g| canonical_form(g).unwrap()).collect();
    let mut sorted = codes.clone();
    sorted.sort();
    assert_eq!(codes, sorted);
}

#[test]
fn edge_addition_examples() {
    assert!(enumerate_edge_additions(&named::complete(6)).unwrap().is_empty());
    assert_eq!(enumerate_edge_additions(&named::cycle(4)).unwrap().len(), 1);
    let p10 = enumerate_edge_additions(&named::petersen()).unwrap();
    // Every non-edge joins two vertices at distance two, and those pairs form one orbit.
    assert_eq!(p10.len(), 1);
    let again = enumerate_edge_additions(&named::petersen()).unwrap();
    let key = |v: &[Graph]| v.iter().map(|g| (g.name().map(str::to_owned), g.edges())).collect::<Vec<_>>();
    assert_eq!(key(&again), key(&p10));
}

#[test]
fn vertex_split_examples() {
    for g in enumerate_vertex_splits(&named::complete(6)).unwrap() {
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 16));
    }
    let k331 = named::complete_multipartite(&[3, 3, 1]);
    let apex = (0..7).find(|&v| k331.degree(v) == 6).unwrap();
    let side: Vec<usize> = (0..7).filter(|&v| v != apex && (v == 0 || !k331.has_edge(0, v))).collect();
    assert_eq!(side.len(), 3);
    let split = vertex_splits(&k331, apex)
        .into_iter()
        .find(|s| {
            let mut moved = s.moved.clone();
            moved.sort_unstable();
            let mut kept = s.kept.clone();
            kept.sort_unstable();
            moved == side || kept == side
        })
        .unwrap();
    let k44 = split.apply(&k331).unwrap();
    assert!(is_isomorphic(&k44, &named::complete_bipartite(4, 4)));
    let splits = enumerate_vertex_splits(&k331).unwrap();
    assert!(splits.iter().any(|g| is_isomorphic(g, &named::complete_bipartite(4, 4))));
}

/// Splitting a degree-3 vertex leaves a vertex of degree at most two whose
/// suppression gives back the original graph.
#[test]
fn degree_three_splits_are_homeomorphic() {
    let p = named::petersen();
    for s in vertex_splits(&p, 0) {
        let h = s.apply(&p).unwrap();
        let low = if s.moved.len() == 1 { h.vertex_count() - 1 } else { 0 };
        assert_eq!(h.degree(low), 2);
        let back = h.contract_edge(projlink_core::edge(0, h.vertex_count() - 1)).unwrap();
        assert!(is_isomorphic(&back, &p));
    }
}

#[test]
fn splits_contract_back() {
    for g in [named::complete(6), named::petersen(), named::complete_multipartite(&[3, 3, 1])] {
        let base = canonical_form(&g).unwrap();
        for v in 0..g.vertex_count() {
            for s in vertex_splits(&g, v) {
                let h = s.apply(&g).unwrap();
                assert_eq!(h.edge_count(), g.edge_count() + 1);
                let back = h.contract_edge((v, h.vertex_count() - 1)).unwrap();
                assert_eq!(canonical_form(&back).unwrap(), base);
            }
        }
        let reps = enumerate_vertex_splits(&g).unwrap();
        let codes: HashSet<_> = reps.iter().map(|h| canonical_form(h).unwrap()).collect();
        assert_eq!(codes.len(), reps.len());
    }
}
