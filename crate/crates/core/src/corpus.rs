//! Exhaustive small-graph generation, one graph per isomorphism class.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph, CanonicalCode};
use crate::error::Result;
use crate::graph::Graph;

/// Every graph on exactly `n` vertices up to isomorphism, grown one edge at
/// a time and deduplicated by canonical code. Ordered by edge count, then code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let empty = Graph::empty(n);
    level.insert(canonical_form(&empty)?, empty);
    let mut out: Vec<Graph> = Vec::new();
    while !level.is_empty() {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for (u, v) in g.non_edges() {
                let h = g.add_edge(u, v)?;
                let code = canonical_form(&h)?;
                if !next.contains_key(&code) {
                    next.insert(code, canonical_graph(&h)?);
                }
            }
        }
        out.extend(std::mem::replace(&mut level, next).into_values());
    }
    Ok(out)
}

/// Connected graphs with `1..=max_n` vertices, smallest first.
pub fn connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_graphs(n)?.into_iter().filter(Graph::is_connected));
    }
    Ok(out)
}
