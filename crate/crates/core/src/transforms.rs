//! Δ-Y and Y-Δ exchanges, vertex splits, edge additions and joins, with
//! isomorphism-deduplicated closures and enumerations.

use std::collections::{BTreeMap, HashSet};

use crate::canon::{canonical_form, canonical_labeling, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::par;

/// Default cap on the number of isomorphism classes a closure may reach.
pub const DEFAULT_CLOSURE_LIMIT: usize = 100_000;

/// Three pairwise adjacent vertices, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([usize; 3]);

impl Triangle {
    pub fn new(g: &Graph, a: usize, b: usize, c: usize) -> Result<Self> {
        let mut t = [a, b, c];
        t.sort_unstable();
        let ok = t[0] != t[1]
            && t[1] != t[2]
            && t[2] < g.vertex_count()
            && g.has_edge(t[0], t[1])
            && g.has_edge(t[1], t[2])
            && g.has_edge(t[0], t[2]);
        if ok {
            Ok(Triangle(t))
        } else {
            Err(Error::NotATriangle([a, b, c]))
        }
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }
}

/// Removes the triangle's edges and joins a new last vertex to its corners.
pub fn delta_y(g: &Graph, t: Triangle) -> Result<Graph> {
    let [a, b, c] = t.0;
    let t = Triangle::new(g, a, b, c)?;
    let [a, b, c] = t.0;
    let mut h = g.add_vertices(1)?;
    let y = g.vertex_count();
    for (u, v) in [(a, b), (b, c), (a, c)] {
        h.erase_edge(u, v);
    }
    for u in [a, b, c] {
        h.insert_edge(u, y);
    }
    Ok(h)
}

/// Result of a Y-Δ exchange together with how many of the new triangle
/// edges were already present and therefore collapsed.
#[derive(Clone, Debug)]
pub struct YDelta {
    pub graph: Graph,
    pub collapsed: usize,
}

/// Y-Δ exchange with provenance. The removed vertex's index is compacted
/// away, so vertices above `v` shift down by one.
pub fn y_delta_traced(g: &Graph, v: usize) -> Result<YDelta> {
    if v >= g.vertex_count() {
        return Err(Error::VertexNotPresent(v));
    }
    let nb: Vec<usize> = g.neighbors(v).collect();
    if nb.len() != 3 {
        return Err(Error::DegreeNotThree { vertex: v, degree: nb.len() });
    }
    let mut h = g.clone();
    let mut collapsed = 0;
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        if h.has_edge(nb[i], nb[j]) {
            collapsed += 1;
        } else {
            h.insert_edge(nb[i], nb[j]);
        }
    }
    let graph = h.delete_vertex(v)?;
    Ok(YDelta { graph, collapsed })
}

/// Replaces the degree-3 vertex `v` by a triangle on its neighbours.
pub fn y_delta(g: &Graph, v: usize) -> Result<Graph> {
    Ok(y_delta_traced(g, v)?.graph)
}

/// Every graph reachable from `g` by exchanges in either direction, one
/// canonical representative per isomorphism class, sorted by canonical code.
pub fn dy_closure(g: &Graph) -> Result<Vec<Graph>> {
    dy_closure_limited(g, DEFAULT_CLOSURE_LIMIT)
}

pub fn dy_closure_limited(g: &Graph, limit: usize) -> Result<Vec<Graph>> {
    let (code, _) = canonical_labeling(g)?;
    let mut found: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    found.insert(code, code.to_graph());
    let mut frontier = vec![code.to_graph()];
    while !frontier.is_empty() {
        let produced = par::try_map(&frontier, exchange_neighbours)?;
        let mut next = Vec::new();
        for (code, h) in produced.into_iter().flatten() {
            if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(code) {
                slot.insert(h.clone());
                next.push(h);
                if found.len() > limit {
                    return Err(Error::ResourceLimit { what: "exchange closure", budget: limit as u64 });
                }
            }
        }
        next.sort_by_cached_key(|h| canonical_form(h).expect("checked"));
        frontier = next;
    }
    Ok(found.into_values().collect())
}

fn exchange_neighbours(g: &Graph) -> Result<Vec<(CanonicalCode, Graph)>> {
    let mut out = Vec::new();
    if g.vertex_count() < MAX_VERTICES {
        for [a, b, c] in g.triangles() {
            let h = delta_y(g, Triangle([a, b, c]))?;
            let code = canonical_form(&h)?;
            out.push((code, code.to_graph()));
        }
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) == 3 {
            let h = y_delta(g, v)?;
            let code = canonical_form(&h)?;
            out.push((code, code.to_graph()));
        }
    }
    Ok(out)
}

fn label(g: &Graph) -> &str {
    g.name().unwrap_or("G")
}

/// One representative of `g + e` per isomorphism class, in order of the
/// first non-edge producing it.
pub fn enumerate_edge_additions(g: &Graph) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (u, v) in g.non_edges() {
        let h = g.add_edge(u, v)?;
        if seen.insert(canonical_form(&h)?) {
            out.push(h.with_name(format!("{}+{{{u},{v}}}", label(g))));
        }
    }
    Ok(out)
}

/// Partition of the edges at `vertex`: the `moved` neighbours go to a new
/// vertex adjacent to `vertex`, the rest stay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSplit {
    pub vertex: usize,
    pub kept: Vec<usize>,
    pub moved: Vec<usize>,
}

impl VertexSplit {
    /// The new vertex takes the last index.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let v = self.vertex;
        if v >= g.vertex_count() {
            return Err(Error::VertexNotPresent(v));
        }
        let mut all: Vec<usize> = self.kept.iter().chain(&self.moved).copied().collect();
        all.sort_unstable();
        let before = all.len();
        all.dedup();
        if before != all.len() || all != g.neighbors(v).collect::<Vec<_>>() {
            return Err(Error::PreconditionViolated("split must partition the incident edges"));
        }
        let mut h = g.add_vertices(1)?;
        let w = g.vertex_count();
        for &x in &self.moved {
            h.erase_edge(v, x);
            h.insert_edge(w, x);
        }
        h.insert_edge(v, w);
        Ok(h)
    }
}

/// All splits with a nonempty moved side whose kept side contains the
/// vertex's lowest neighbour.
pub fn vertex_splits(g: &Graph, v: usize) -> Vec<VertexSplit> {
    let nb: Vec<usize> = g.neighbors(v).collect();
    if nb.is_empty() {
        return Vec::new();
    }
    let rest = &nb[1..];
    (1u32..1 << rest.len())
        .map(|sub| {
            let mut kept = vec![nb[0]];
            let mut moved = Vec::new();
            for (i, &x) in rest.iter().enumerate() {
                if sub >> i & 1 == 1 {
                    moved.push(x);
                } else {
                    kept.push(x);
                }
            }
            VertexSplit { vertex: v, kept, moved }
        })
        .collect()
}

/// One representative per isomorphism class over all splits of all vertices.
pub fn enumerate_vertex_splits(g: &Graph) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        for s in vertex_splits(g, v) {
            let h = s.apply(g)?;
            if seen.insert(canonical_form(&h)?) {
                let moved: Vec<String> = s.moved.iter().map(|x| x.to_string()).collect();
                out.push(h.with_name(format!("{}/split{v}:{}", label(g), moved.join(","))));
            }
        }
    }
    Ok(out)
}

/// Disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut j = g.disjoint_union(h)?;
    let n = g.vertex_count();
    for u in 0..n {
        for v in 0..h.vertex_count() {
            j.insert_edge(u, n + v);
        }
    }
    Ok(j)
}

/// Vertices adjacent to all three corners, other than the corners.
pub fn common_neighbours(g: &Graph, t: Triangle) -> u32 {
    let [a, b, c] = t.0;
    g.neighbor_mask(a) & g.neighbor_mask(b) & g.neighbor_mask(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::named;

    #[test]
    fn delta_y_on_k4() {
        let k4 = named::complete(4);
        let t = Triangle::new(&k4, 0, 1, 2).unwrap();
        let h = delta_y(&k4, t).unwrap();
        assert!(is_isomorphic(&h, &named::complete_bipartite(2, 3)));
        assert!(matches!(Triangle::new(&named::cycle(4), 0, 1, 2), Err(Error::NotATriangle(_))));
    }

    #[test]
    fn y_delta_on_star() {
        let r = y_delta_traced(&named::star(3), 0).unwrap();
        assert!(is_isomorphic(&r.graph, &named::complete(3)));
        assert_eq!(r.collapsed, 0);
        assert!(matches!(y_delta(&named::complete(5), 0), Err(Error::DegreeNotThree { .. })));
        let w = y_delta_traced(&named::complete(4), 0).unwrap();
        assert_eq!(w.collapsed, 3);
        assert_eq!(w.graph.edge_count(), 3);
    }

    #[test]
    fn closures() {
        let k3 = dy_closure(&named::complete(3)).unwrap();
        assert_eq!(k3.len(), 2);
        let k6 = dy_closure(&named::complete(6)).unwrap();
        assert_eq!(k6.len(), 7);
        assert!(matches!(
            dy_closure_limited(&named::complete(6), 3),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn additions_and_splits() {
        assert!(enumerate_edge_additions(&named::complete(6)).unwrap().is_empty());
        assert_eq!(enumerate_edge_additions(&named::cycle(4)).unwrap().len(), 1);
        for h in enumerate_vertex_splits(&named::complete(6)).unwrap() {
            assert_eq!((h.vertex_count(), h.edge_count()), (7, 16));
        }
    }

    #[test]
    fn joins() {
        let c4 = join(&named::edgeless(2), &named::edgeless(2)).unwrap();
        assert!(is_isomorphic(&c4, &named::cycle(4)));
        let j = join(&named::cycle(5), &named::edgeless(2)).unwrap();
        assert_eq!((j.vertex_count(), j.edge_count()), (7, 15));
    }
}
