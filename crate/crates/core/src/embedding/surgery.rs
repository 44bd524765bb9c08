//! Local surgery on drawings.

use super::Rp2Embedding;
use crate::error::{Error, Result};
use crate::graph::bits;
use crate::transforms;

/// Y-Δ exchange performed inside a small disk around `v`.
///
/// The neighbours of `v` are switched until every edge at `v` is positive.
/// At each neighbour `a` the slot of the edge `a v` is replaced by the edge
/// to the next neighbour of `v` after `a`, followed by the edge to the one
/// before it, all positive. Edges that already exist are kept as they are.
pub fn y_delta_embedding(emb: &Rp2Embedding, v: usize) -> Result<Rp2Embedding> {
    let g = emb.graph();
    if v >= g.vertex_count() {
        return Err(Error::VertexNotPresent(v));
    }
    if g.degree(v) != 3 {
        return Err(Error::DegreeNotThree { vertex: v, degree: g.degree(v) });
    }
    let mut e = emb.clone();
    for a in bits(g.neighbor_mask(v)) {
        if e.signature(v, a) < 0 {
            e = e.switch_vertex(a);
        }
    }
    let ring = e.rotation(v).to_vec();
    let mut rot = e.rotations().to_vec();
    let mut neg = e.negative_masks().to_vec();
    for i in 0..3 {
        let a = ring[i];
        let next = ring[(i + 1) % 3];
        let prev = ring[(i + 2) % 3];
        let r = &mut rot[a];
        let at = r.iter().position(|&x| x == v).expect("edge to v");
        let mut fresh = Vec::new();
        for b in [next, prev] {
            if !g.has_edge(a, b) {
                fresh.push(b);
            }
        }
        r.splice(at..=at, fresh);
    }
    rot[v].clear();
    for a in ring {
        neg[a] &= !(1 << v);
    }
    let h = transforms::y_delta(g, v)?;
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let rot: Vec<Vec<usize>> = rot
        .into_iter()
        .enumerate()
        .filter(|&(x, _)| x != v)
        .map(|(_, r)| r.into_iter().map(shift).collect())
        .collect();
    let neg: Vec<u32> = neg
        .into_iter()
        .enumerate()
        .filter(|&(x, _)| x != v)
        .map(|(_, m)| bits(m).fold(0u32, |acc, w| acc | 1 << shift(w)))
        .collect();
    let out = Rp2Embedding::from_parts(h, rot, neg);
    debug_assert!(out.euler_genus() <= emb.euler_genus());
    Ok(out)
}
