//! Constructors for the standard graphs that appear throughout the searches.

use crate::graph::{Edge, Graph};

fn build(n: usize, edges: impl IntoIterator<Item = Edge>, name: String) -> Graph {
    Graph::from_edges(n, edges).expect("named graph is simple").with_name(name)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    build(n, edges, format!("K{n}"))
}

/// `n` isolated vertices; `edgeless(2)` is the complement of `K_2`.
pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n).with_name(format!("K{n}-bar"))
}

/// Complete multipartite graph with the given part sizes, parts numbered consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    let n = part_of.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    let label: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    build(n, edges, format!("K{}", label.join(",")))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// `K_{4,4}` minus the edge between vertex 3 and vertex 7.
pub fn k44_minus_e() -> Graph {
    let g = complete_bipartite(4, 4);
    g.delete_edge((3, 7)).unwrap().with_name("K4,4-e")
}

/// `K_7` minus two edges: `{0,1},{0,2}` when adjacent, `{0,1},{2,3}` otherwise.
pub fn k7_minus_two_edges(adjacent: bool) -> Graph {
    let (e, f) = if adjacent { ((0, 1), (0, 2)) } else { ((0, 1), (2, 3)) };
    let g = complete(7).delete_edge(e).unwrap().delete_edge(f).unwrap();
    g.with_name(if adjacent { "K7-2e(adjacent)" } else { "K7-2e(nonadjacent)" })
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    build(n, (0..n).map(|i| crate::graph::edge(i, (i + 1) % n)), format!("C{n}"))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)), format!("P{n}"))
}

/// Star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    build(k + 1, (1..=k).map(|i| (0, i)), format!("K1,{k}"))
}

/// Wheel with `k` rim vertices `0..k` and hub `k`.
pub fn wheel(k: usize) -> Graph {
    assert!(k >= 3);
    let rim = (0..k).map(|i| crate::graph::edge(i, (i + 1) % k));
    let spokes = (0..k).map(|i| (i, k));
    build(k + 1, rim.chain(spokes), format!("W{k}"))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(crate::graph::edge(i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push(crate::graph::edge(5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges, "P10".into())
}

/// Two triangles `0,1,2` and `3,4,5` joined by paths with the given numbers
/// of interior vertices. All zeros gives the triangular prism.
pub fn elongated_prism(interior: [usize; 3]) -> Graph {
    let n = 6 + interior.iter().sum::<usize>();
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    let mut next = 6;
    for (i, &k) in interior.iter().enumerate() {
        let mut prev = i;
        for _ in 0..k {
            edges.push((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
        edges.push((prev.min(3 + i), prev.max(3 + i)));
    }
    build(n, edges, format!("prism{interior:?}"))
}

pub fn triangular_prism() -> Graph {
    elongated_prism([0, 0, 0]).with_name("prism")
}
