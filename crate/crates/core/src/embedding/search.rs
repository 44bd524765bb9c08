//! Exhaustive enumeration of drawings by edge insertion.
//!
//! Starting from isolated vertices, edges are inserted one at a time. An
//! edge joining two components may enter any corner at either end and is
//! made positive by switching. An edge inside a component must join two
//! corners of one face: with one sign it splits the face, with the other it
//! adds a crosscap. Each step picks the remaining edge with the fewest
//! placements and backtracks as soon as some edge has none.

use std::collections::BTreeMap;

use super::{euler_genus_raw, trace_raw, Rp2Embedding};
use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

/// Default node budget for one enumeration.
pub const DEFAULT_EMBEDDING_BUDGET: u64 = 50_000_000;

/// Search parameters.
#[derive(Clone, Debug)]
pub struct EmbeddingSearch {
    pub budget: u64,
    pub max_genus: u8,
    pub limit: Option<usize>,
}

impl Default for EmbeddingSearch {
    fn default() -> Self {
        EmbeddingSearch { budget: DEFAULT_EMBEDDING_BUDGET, max_genus: 1, limit: None }
    }
}

type Key = (Vec<Vec<usize>>, Vec<u32>);

struct Run<'a> {
    g: &'a Graph,
    rot: Vec<Vec<usize>>,
    neg: Vec<u32>,
    adj: Vec<u32>,
    remaining: Vec<Edge>,
    nodes: u64,
    opts: &'a EmbeddingSearch,
    found: BTreeMap<Key, Rp2Embedding>,
}

#[derive(Clone, Copy)]
struct Placement {
    su: usize,
    sv: usize,
    negative: bool,
    adds_genus: bool,
}

impl EmbeddingSearch {
    pub fn planar() -> Self {
        EmbeddingSearch { max_genus: 0, ..Self::default() }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    /// All drawings of `g` with Euler genus at most `max_genus`, one per
    /// switching class, in canonical order.
    pub fn enumerate(&self, g: &Graph) -> Result<Vec<Rp2Embedding>> {
        let n = g.vertex_count();
        let mut run = Run {
            g,
            rot: vec![Vec::new(); n],
            neg: vec![0; n],
            adj: vec![0; n],
            remaining: g.edges(),
            nodes: 0,
            opts: self,
            found: BTreeMap::new(),
        };
        run.search(None)?;
        Ok(run.found.into_values().collect())
    }

    pub fn exists(&self, g: &Graph) -> Result<bool> {
        Ok(!self.clone().with_limit(1).enumerate(g)?.is_empty())
    }
}

fn partial_graph(adj: &[u32]) -> Graph {
    Graph::from_masks(adj.to_vec())
}

impl Run<'_> {
    fn limit_reached(&self) -> bool {
        self.opts.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn search(&mut self, expected_genus: Option<i64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.opts.budget {
            return Err(Error::ResourceLimit { what: "embedding search", budget: self.opts.budget });
        }
        let n = self.g.vertex_count();
        let fm = trace_raw(n, &self.rot, &self.neg);
        let partial = partial_graph(&self.adj);
        let genus = euler_genus_raw(&partial, &fm);
        if let Some(e) = expected_genus {
            debug_assert_eq!(genus, e, "placement rule disagrees with face tracing");
        }
        if self.remaining.is_empty() {
            let emb = Rp2Embedding::from_parts(self.g.clone(), self.rot.clone(), self.neg.clone()).normalized();
            let key = (emb.rot.clone(), emb.neg.clone());
            self.found.entry(key).or_insert(emb);
            return Ok(());
        }
        let mut state: Vec<Vec<i8>> = (0..n).map(|v| vec![0; self.rot[v].len().max(1)]).collect();
        for f in &fm.faces {
            for &(c, s) in &f.corners {
                state[c.vertex][c.slot] = s;
            }
        }
        let comp_of = {
            let mut c = vec![0usize; n];
            for (i, m) in partial.component_masks().into_iter().enumerate() {
                for v in bits(m) {
                    c[v] = i;
                }
            }
            c
        };
        let mut best: Option<(usize, Vec<Placement>)> = None;
        for (idx, &(u, v)) in self.remaining.iter().enumerate() {
            let mut opts = Vec::new();
            let (du, dv) = (self.rot[u].len().max(1), self.rot[v].len().max(1));
            if comp_of[u] != comp_of[v] {
                for su in 0..du {
                    for sv in 0..dv {
                        opts.push(Placement { su, sv, negative: false, adds_genus: false });
                    }
                }
            } else {
                for su in 0..du {
                    for sv in 0..dv {
                        if fm.corner_face[u][su] != fm.corner_face[v][sv] {
                            continue;
                        }
                        let split_negative = state[u][su] * state[v][sv] < 0;
                        opts.push(Placement { su, sv, negative: split_negative, adds_genus: false });
                        if genus < self.opts.max_genus as i64 {
                            opts.push(Placement { su, sv, negative: !split_negative, adds_genus: true });
                        }
                    }
                }
            }
            if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
                let empty = opts.is_empty();
                best = Some((idx, opts));
                if empty {
                    return Ok(());
                }
            }
        }
        let (idx, options) = best.expect("remaining is nonempty");
        let (u, v) = self.remaining.swap_remove(idx);
        for p in options {
            let iu = insert_at(&mut self.rot[u], p.su, v);
            let iv = insert_at(&mut self.rot[v], p.sv, u);
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            if p.negative {
                self.neg[u] |= 1 << v;
                self.neg[v] |= 1 << u;
            }
            let r = self.search(Some(genus + p.adds_genus as i64));
            self.rot[u].remove(iu);
            self.rot[v].remove(iv);
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.neg[u] &= !(1 << v);
            self.neg[v] &= !(1 << u);
            r?;
            if self.limit_reached() {
                break;
            }
        }
        self.remaining.push((u, v));
        let last = self.remaining.len() - 1;
        self.remaining.swap(idx, last);
        Ok(())
    }
}

fn insert_at(list: &mut Vec<usize>, slot: usize, x: usize) -> usize {
    let at = if list.is_empty() { 0 } else { slot + 1 };
    list.insert(at, x);
    at
}

/// All drawings of `g` in the projective plane up to switching, each with
/// signs normalized on a spanning forest.
pub fn enumerate_rp2_embeddings(g: &Graph, budget: u64) -> Result<Vec<Rp2Embedding>> {
    EmbeddingSearch::default().with_budget(budget).enumerate(g)
}

/// Vertex masks of the 2-connected blocks and bridges of `g`.
pub fn blocks(g: &Graph) -> Vec<u32> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<u32>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for w in self.g.neighbors(u) {
                if self.disc[w] == 0 {
                    self.stack.push((u, w));
                    self.visit(w, Some(u));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut mask = 0u32;
                        while let Some((a, b)) = self.stack.pop() {
                            mask |= 1 << a | 1 << b;
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.out.push(mask);
                    }
                } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.vertex_count();
    let mut d = Dfs { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for s in 0..n {
        if d.disc[s] == 0 {
            d.visit(s, None);
        }
    }
    d.out.sort_unstable_by_key(|m| m.trailing_zeros());
    d.out
}

/// Projective planarity decided by embedding search rather than by
/// forbidden minors: Euler genus is additive over blocks, so at most one
/// block may be nonplanar and that block must itself embed.
pub fn is_projective_planar_by_embedding(g: &Graph, budget: u64) -> Result<bool> {
    let mut nonplanar = Vec::new();
    for mask in blocks(g) {
        let keep: Vec<usize> = bits(mask).collect();
        let b = g.induced(&keep);
        if b.edge_count() <= 8 || b.vertex_count() <= 4 {
            continue;
        }
        if !EmbeddingSearch::planar().with_budget(budget).exists(&b)? {
            nonplanar.push(b);
            if nonplanar.len() > 1 {
                return Ok(false);
            }
        }
    }
    match nonplanar.pop() {
        None => Ok(true),
        Some(b) => EmbeddingSearch::default().with_budget(budget).exists(&b),
    }
}
