//! Simple undirected graphs on at most 32 vertices, stored as adjacency
//! bitmasks, plus the minor primitives (deletion and contraction) and the
//! `.el` edge-list text format.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Hard vertex limit of the bitmask representation.
pub const MAX_VERTICES: usize = 32;

/// An unordered vertex pair, always stored with the smaller index first.
pub type Edge = (usize, usize);

/// Normalizes a pair so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. No loops, no parallel edges.
///
/// Equality and hashing ignore the optional name.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
    name: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { n, adj: vec![0; n], name: None }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge { vertices: n, limit: MAX_VERTICES });
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v, "loop"));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v, "endpoint out of range"));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v, "parallel edge"));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks. Masks are symmetrized and loops dropped.
    pub(crate) fn from_masks(adj: Vec<u32>) -> Self {
        let n = adj.len();
        let mut g = Graph::empty(n);
        for (u, &mask) in adj.iter().enumerate() {
            for v in bits(mask) {
                if v != u && v < n {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn erase_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge(u, v, "not a valid vertex pair"));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v, "parallel edge"));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Appends `k` isolated vertices.
    pub fn add_vertices(&self, k: usize) -> Result<Graph> {
        let n = self.n + k;
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge { vertices: n, limit: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Ok(Graph { n, adj, name: None })
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = e;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let mut g = self.clone();
        g.name = None;
        g.erase_edge(u, v);
        Ok(g)
    }

    /// Removes `v` and its incident edges; higher indices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexNotPresent(v));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        Ok(self.induced(&keep))
    }

    /// Merges the endpoints of `e`. The merged vertex keeps the smaller
    /// index, the larger index is removed and later indices shift down.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = edge(e.0, e.1);
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        Ok(self.merge_vertices(u, v))
    }

    /// Identifies `u < v` regardless of adjacency, dropping loops and parallels.
    pub(crate) fn merge_vertices(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u < v);
        let mut adj = self.adj.clone();
        let nv = adj[v] & !(1 << u);
        adj[u] = (adj[u] | nv) & !(1 << u) & !(1 << v);
        for w in bits(nv) {
            adj[w] |= 1 << u;
        }
        let mut g = Graph { n: self.n, adj, name: None };
        g.erase_edge(u, v);
        g.remove_index(v)
    }

    /// Drops vertex `v`, which must already be isolated after the caller's edits
    /// or whose edges are simply discarded, and compacts indices.
    fn remove_index(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &x) in keep.iter().enumerate() {
            pos[x] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &x) in keep.iter().enumerate() {
            for y in bits(self.adj[x]) {
                let j = pos[y];
                if j != usize::MAX && i < j {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g.name = self.name.clone();
        g
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.add_vertices(other.n)?;
        for (u, v) in other.edges() {
            g.insert_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj, name: None }
    }

    /// Components of the subgraph induced by `within`, ordered by smallest vertex.
    pub fn components_within(&self, within: u32) -> Vec<u32> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.reach(left.trailing_zeros() as usize, within);
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s, self.full_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub(crate) fn full_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Vertices reachable from `s` inside `within`.
    pub(crate) fn reach(&self, s: usize, within: u32) -> u32 {
        let mut comp = 1u32 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & within & !comp;
            comp |= new;
            frontier |= new;
        }
        comp
    }

    /// Whether the vertex set `mask` induces a connected subgraph (empty is not).
    pub fn is_connected_set(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let s = mask.trailing_zeros() as usize;
        self.reach(s, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(self.full_mask())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in bits(self.adj[a] & self.adj[b]) {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Parses the `.el` edge-list format.
    pub fn parse_el(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse { line: i + 1, msg: format!("not an integer: {s:?}") })
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (n, fields.as_slice()) {
                (None, [count]) => n = Some(parse(count)?),
                (None, _) => {
                    return Err(Error::Parse { line: i + 1, msg: "expected vertex count".into() })
                }
                (Some(n), [a, b]) => {
                    let (u, v) = (parse(a)?, parse(b)?);
                    if u >= v || v >= n {
                        return Err(Error::Parse {
                            line: i + 1,
                            msg: format!("edge {u} {v} violates 0 <= u < v < {n}"),
                        });
                    }
                    edges.push((u, v));
                }
                (Some(_), _) => {
                    return Err(Error::Parse { line: i + 1, msg: "expected \"u v\"".into() })
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })?;
        Graph::from_edges(n, edges).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
    }

    /// Writes the `.el` format with edges in lexicographic order.
    pub fn to_el(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            s.push_str(&format!("# {name}\n"));
        }
        s.push_str(&format!("{}\n", self.n));
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name} ")?;
        }
        write!(f, "n={} {:?}", self.n, self.edges())
    }
}

/// Iterates set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn contract_triangle_and_k4() {
        let k3 = named::complete(3);
        for e in k3.edges() {
            assert_eq!(k3.contract_edge(e).unwrap(), named::complete(2));
        }
        let k4 = named::complete(4);
        for e in k4.edges() {
            assert_eq!(k4.contract_edge(e).unwrap(), named::complete(3));
        }
    }

    #[test]
    fn contract_c4_gives_triangle() {
        let c4 = named::cycle(4);
        let g = c4.contract_edge((0, 1)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn contraction_keeps_smaller_index() {
        // path 0-1-2-3, contract {1,2}: merged vertex is 1, old 3 becomes 2
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let g = p.contract_edge((2, 1)).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn deletions() {
        let k6 = named::complete(6);
        for v in 0..6 {
            assert_eq!(k6.delete_vertex(v).unwrap(), named::complete(5));
        }
        let k4 = named::complete(4);
        let g = k4.delete_edge((1, 3)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 5));
        assert!(matches!(k4.delete_edge((0, 0)), Err(Error::EdgeNotPresent(0, 0))));
        assert!(matches!(k4.delete_vertex(4), Err(Error::VertexNotPresent(4))));
        assert!(matches!(
            g.contract_edge((1, 3)),
            Err(Error::EdgeNotPresent(1, 3))
        ));
    }

    #[test]
    fn k44_minus_e_vertex_deletion() {
        // independent construction: parts {0..4} and {4..8}, drop {3,7}
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 4..8 {
                if (a, b) != (3, 7) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(8, edges).unwrap();
        assert_eq!(g.degree(3), 3);
        let h = g.delete_vertex(3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (7, 12));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn el_format() {
        let text = "# a comment\n4\n0 1\n# inner\n1 2\n2 3\n";
        let g = Graph::parse_el(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.to_el(), "4\n0 1\n1 2\n2 3\n");
        assert!(Graph::parse_el("3\n2 1\n").is_err());
        assert!(Graph::parse_el("3\n0 3\n").is_err());
        assert!(Graph::parse_el("0 1\n").is_err());
        assert!(Graph::parse_el("").is_err());
    }

    #[test]
    fn triangles_and_bipartite() {
        assert_eq!(named::complete(4).triangles().len(), 4);
        assert!(named::complete_bipartite(3, 3).is_bipartite());
        assert!(!named::cycle(5).is_bipartite());
    }
}
